#include "cylroman/power.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cylroman/errors.hpp"
#include "cylroman/matrix_io.hpp"

namespace cylroman {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

nlohmann::json manifest_json(const CacheKey& key) {
    return {{"format", "cylroman-power-cache"},
            {"version", 1},
            {"m", key.m},
            {"variant", key.variant},
            {"dim", key.dim},
            {"matrix_hash", hex64(key.matrix_hash)}};
}

}  // namespace

PowerStats& PowerStats::operator+=(const PowerStats& o) {
    products += o.products;
    cache_hits += o.cache_hits;
    stored += o.stored;
    kernel_seconds += o.kernel_seconds;
    serialize_seconds += o.serialize_seconds;
    io_seconds += o.io_seconds;
    return *this;
}

bool PowerSink::contains(int) const { return false; }

TropMatrixI PowerSink::load(int k, PowerStats&) const {
    throw std::logic_error("power " + std::to_string(k) + " is not available from this sink");
}

bool MemoryPowerStore::contains(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < powers_.size() && powers_[k].has_value();
}

TropMatrixI MemoryPowerStore::load(int k, PowerStats& stats) const {
    if (!contains(k)) return PowerSink::load(k, stats);
    return *powers_[k];
}

void MemoryPowerStore::store(int k, const TropMatrixI& power, PowerStats& stats) {
    if (k < 0) throw std::invalid_argument("negative power index");
    if (static_cast<std::size_t>(k) >= powers_.size()) powers_.resize(static_cast<std::size_t>(k) + 1);
    powers_[k] = power;
    ++stats.stored;
}

DiskPowerCache::DiskPowerCache(std::filesystem::path dir, CacheKey key) : dir_(std::move(dir)), key_(std::move(key)) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());

    const auto manifest = dir_ / manifest_name();
    const auto wanted = manifest_json(key_);
    bool matches = false;
    if (fs::exists(manifest)) {
        std::ifstream in(manifest);
        const auto found = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
        matches = !found.is_discarded() && found == wanted;
    }
    if (matches) return;

    invalidated_ = fs::exists(manifest);
    for (const auto& entry : fs::directory_iterator(dir_)) {
        const auto name = entry.path().filename().string();
        if (name.starts_with("A_pow_") && entry.path().extension() == ".trpm") fs::remove(entry.path());
    }
    std::ofstream out(manifest, std::ios::trunc);
    out << wanted.dump(2) << '\n';
    if (!out) throw IoError("cannot write cache manifest " + manifest.string());
}

std::filesystem::path DiskPowerCache::path_for(int k) const { return dir_ / ("A_pow_" + std::to_string(k) + ".trpm"); }

bool DiskPowerCache::contains(int k) const { return std::filesystem::exists(path_for(k)); }

TropMatrixI DiskPowerCache::load(int k, PowerStats& stats) const {
    const auto path = path_for(k);
    auto t0 = Clock::now();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open cached power " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    stats.io_seconds += seconds_since(t0);

    t0 = Clock::now();
    auto m = decode_matrix(bytes);
    stats.serialize_seconds += seconds_since(t0);
    if (m.dim() != key_.dim) throw FormatError("cached power has dimension " + std::to_string(m.dim()), 8);
    return m;
}

void DiskPowerCache::store(int k, const TropMatrixI& power, PowerStats& stats) {
    auto t0 = Clock::now();
    const auto bytes = encode_matrix(power);
    stats.serialize_seconds += seconds_since(t0);

    t0 = Clock::now();
    // Write to a temporary name first so a crash never leaves a truncated
    // A_pow_k.trpm that a later run would trust.
    const auto final_path = path_for(k);
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) throw IoError("cannot finalize " + final_path.string() + ": " + ec.message());
    stats.io_seconds += seconds_since(t0);
    ++stats.stored;
}

PowerStats power_sequence(const TropMatrixI& a, int max_power, PowerSink& sink, const PowerObserver& observer,
                          unsigned threads) {
    if (max_power < 1) throw std::invalid_argument("power_sequence: max power must be >= 1");
    PowerStats stats;
    TropMatrixI prev;
    for (int k = 1; k <= max_power; ++k) {
        TropMatrixI cur;
        if (sink.contains(k)) {
            cur = sink.load(k, stats);
            ++stats.cache_hits;
        } else {
            if (k == 1) {
                cur = a;
            } else {
                const auto t0 = Clock::now();
                cur = trop_mul(a, prev, threads);
                stats.kernel_seconds += seconds_since(t0);
                ++stats.products;
            }
            sink.store(k, cur, stats);
        }
        if (observer) observer(k, cur);
        prev = std::move(cur);
    }
    return stats;
}

TropMatrixI trop_pow(const TropMatrixI& a, int n, unsigned threads, PowerStats* stats) {
    if (n < 1) throw std::invalid_argument("trop_pow: exponent must be >= 1");
    PowerStats local;
    const auto timed_mul = [&](const TropMatrixI& x, const TropMatrixI& y) {
        const auto t0 = Clock::now();
        auto r = trop_mul(x, y, threads);
        local.kernel_seconds += seconds_since(t0);
        ++local.products;
        return r;
    };
    std::optional<TropMatrixI> result;
    TropMatrixI base = a;
    for (unsigned e = static_cast<unsigned>(n);;) {
        if (e & 1u) result = result ? timed_mul(*result, base) : base;
        e >>= 1;
        if (e == 0) break;
        base = timed_mul(base, base);
    }
    if (stats) *stats += local;
    return *result;
}

}  // namespace cylroman
