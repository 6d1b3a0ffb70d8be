#include "cylroman/matrix_io.hpp"

#include <fstream>
#include <limits>

namespace cylroman {
namespace {

template <typename U>
void put_le(std::uint8_t* out, U v) {
    for (std::size_t i = 0; i < sizeof(U); ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

template <typename U>
U get_le(std::span<const std::uint8_t> in, std::size_t at) {
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(in[at + i]) << (8 * i);
    return v;
}

}  // namespace

std::vector<std::uint8_t> encode_matrix(const TropMatrixI& a) {
    const std::uint64_t dim = a.dim();
    std::vector<std::uint8_t> out(kTrpmHeaderBytes + 4 * dim * dim);
    out[0] = 'T';
    out[1] = 'R';
    out[2] = 'P';
    out[3] = 'M';
    put_le(out.data() + 4, kTrpmVersion);
    put_le(out.data() + 8, dim);
    const std::int32_t* p = a.data();
    for (std::uint64_t i = 0; i < dim * dim; ++i)
        put_le(out.data() + kTrpmHeaderBytes + 4 * i, static_cast<std::uint32_t>(p[i]));
    return out;
}

TropMatrixI decode_matrix(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4) throw FormatError("truncated magic", bytes.size());
    if (bytes[0] != 'T' || bytes[1] != 'R' || bytes[2] != 'P' || bytes[3] != 'M')
        throw FormatError("bad magic, expected \"TRPM\"", 0);
    if (bytes.size() < 8) throw FormatError("truncated version", bytes.size());
    const auto version = get_le<std::uint32_t>(bytes, 4);
    if (version != kTrpmVersion) throw FormatError("unsupported version " + std::to_string(version), 4);
    if (bytes.size() < kTrpmHeaderBytes) throw FormatError("truncated dimension", bytes.size());
    const auto dim = get_le<std::uint64_t>(bytes, 8);
    if (dim == 0) throw FormatError("dimension must be positive", 8);
    // dim^2 * 4 must not overflow and must match the payload exactly.
    if (dim > (std::uint64_t{1} << 30)) throw FormatError("dimension " + std::to_string(dim) + " too large", 8);
    const std::uint64_t payload = 4 * dim * dim;
    if (bytes.size() - kTrpmHeaderBytes < payload)
        throw FormatError("truncated payload: expected " + std::to_string(payload) + " bytes", bytes.size());
    if (bytes.size() - kTrpmHeaderBytes > payload)
        throw FormatError("trailing bytes after payload", kTrpmHeaderBytes + payload);

    TropMatrixI a(static_cast<std::size_t>(dim));
    std::int32_t* p = a.data();
    for (std::uint64_t i = 0; i < dim * dim; ++i)
        p[i] = static_cast<std::int32_t>(get_le<std::uint32_t>(bytes, kTrpmHeaderBytes + 4 * i));
    return a;
}

void write_matrix(const TropMatrixI& a, const std::filesystem::path& path) {
    const auto bytes = encode_matrix(a);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

TropMatrixI read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return decode_matrix(bytes);
}

std::uint64_t content_hash(const TropMatrixI& a) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto byte : encode_matrix(a)) h = (h ^ byte) * 0x100000001b3ull;
    return h;
}

}  // namespace cylroman
