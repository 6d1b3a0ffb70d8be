#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include <gtest/gtest.h>

#include "cylroman/errors.hpp"
#include "cylroman/matrix_io.hpp"

using namespace cylroman;

namespace {

TropMatrixI random_matrix(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> val(-1000000, 1000000);
    TropMatrixI m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (rng() % 4 != 0) m.set(i, j, Tropical(val(rng)));
    return m;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cylroman_io_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(MatrixIo, RoundTripInMemory) {
    std::mt19937 rng(4);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_matrix(rng, 1 + rng() % 12);
        EXPECT_EQ(decode_matrix(encode_matrix(a)), a);
    }
}

TEST(MatrixIo, RoundTripThroughFile) {
    std::mt19937 rng(8);
    const auto a = random_matrix(rng, 10);
    const auto path = temp_file("rt.trpm");
    write_matrix(a, path);
    EXPECT_EQ(std::filesystem::file_size(path), kTrpmHeaderBytes + 4 * 100);
    EXPECT_EQ(read_matrix(path), a);
    std::filesystem::remove(path);
}

TEST(MatrixIo, HeaderLayout) {
    const TropMatrixI a{{-1, std::nullopt}, {0, 2}};
    const auto bytes = encode_matrix(a);
    ASSERT_EQ(bytes.size(), 32u);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "TRPM");
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[8], 2);
    // -1 little-endian, then the infinity sentinel 0x7fffffff.
    EXPECT_EQ(bytes[16], 0xff);
    EXPECT_EQ(bytes[20], 0xff);
    EXPECT_EQ(bytes[23], 0x7f);
}

TEST(MatrixIo, SingleInfiniteEntry) {
    const TropMatrixI a(1);
    const auto back = decode_matrix(encode_matrix(a));
    EXPECT_TRUE(back(0, 0).is_infinite());
}

TEST(MatrixIo, WrongMagic) {
    auto bytes = encode_matrix(TropMatrixI::identity(3));
    bytes[0] = 'X';
    try {
        decode_matrix(bytes);
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.offset(), 0u);
    }
}

TEST(MatrixIo, MalformedHeaders) {
    auto bytes = encode_matrix(TropMatrixI::identity(3));
    auto bad_version = bytes;
    bad_version[4] = 9;
    EXPECT_THROW(decode_matrix(bad_version), FormatError);

    auto zero_dim = bytes;
    for (int i = 8; i < 16; ++i) zero_dim[static_cast<std::size_t>(i)] = 0;
    EXPECT_THROW(decode_matrix(zero_dim), FormatError);

    EXPECT_THROW(decode_matrix(std::span(bytes).first(2)), FormatError);
    EXPECT_THROW(decode_matrix(std::span(bytes).first(10)), FormatError);
}

TEST(MatrixIo, TruncatedPayloadReportsOffset) {
    const auto bytes = encode_matrix(TropMatrixI::identity(3));
    try {
        decode_matrix(std::span(bytes).first(bytes.size() - 3));
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.offset(), bytes.size() - 3);
    }
    auto longer = bytes;
    longer.push_back(0);
    EXPECT_THROW(decode_matrix(longer), FormatError);
}

TEST(MatrixIo, MissingFileIsIoError) {
    EXPECT_THROW(read_matrix(temp_file("does_not_exist.trpm")), IoError);
}

TEST(MatrixIo, ContentHashSeesEveryEntry) {
    auto a = TropMatrixI::identity(4);
    const auto h = content_hash(a);
    a.set(3, 2, Tropical(1));
    EXPECT_NE(content_hash(a), h);
}
