#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cylroman/tropical.hpp"

namespace cylroman {

/// Work and time spent producing a power sequence, split into compute,
/// (de)serialization and storage.
struct PowerStats {
    std::size_t products = 0;
    std::size_t cache_hits = 0;
    std::size_t stored = 0;
    double kernel_seconds = 0;
    double serialize_seconds = 0;
    double io_seconds = 0;

    PowerStats& operator+=(const PowerStats& o);
};

/// Destination for A^k as the sequence is produced. A sink may also already
/// hold some powers (a warm cache), in which case they are loaded instead of
/// recomputed.
class PowerSink {
public:
    virtual ~PowerSink() = default;
    virtual bool contains(int k) const;
    virtual TropMatrixI load(int k, PowerStats& stats) const;
    virtual void store(int k, const TropMatrixI& power, PowerStats& stats) = 0;
};

/// Discards everything.
class NullSink final : public PowerSink {
public:
    void store(int, const TropMatrixI&, PowerStats&) override {}
};

class MemoryPowerStore final : public PowerSink {
public:
    bool contains(int k) const override;
    TropMatrixI load(int k, PowerStats& stats) const override;
    void store(int k, const TropMatrixI& power, PowerStats& stats) override;

private:
    std::vector<std::optional<TropMatrixI>> powers_;
};

/// Identifies which matrix a cache directory belongs to.
struct CacheKey {
    int m = 0;
    std::string variant;
    std::size_t dim = 0;
    std::uint64_t matrix_hash = 0;

    bool operator==(const CacheKey&) const = default;
};

/// One TRPM file per power (A_pow_{k}.trpm) plus manifest.json. A manifest
/// that does not match the key invalidates every cached power.
class DiskPowerCache final : public PowerSink {
public:
    DiskPowerCache(std::filesystem::path dir, CacheKey key);

    bool contains(int k) const override;
    TropMatrixI load(int k, PowerStats& stats) const override;
    void store(int k, const TropMatrixI& power, PowerStats& stats) override;

    std::filesystem::path path_for(int k) const;
    const std::filesystem::path& dir() const { return dir_; }
    bool invalidated() const { return invalidated_; }

    static std::string manifest_name() { return "manifest.json"; }

private:
    std::filesystem::path dir_;
    CacheKey key_;
    bool invalidated_ = false;
};

using PowerObserver = std::function<void(int k, const TropMatrixI& power)>;

/// Produces A^1 .. A^K in order with A^k = A (x) A^{k-1}. Each power is
/// handed to the sink before the next product starts, so an I/O failure at
/// step k leaves powers 1..k-1 intact.
PowerStats power_sequence(const TropMatrixI& a, int max_power, PowerSink& sink, const PowerObserver& observer = {},
                          unsigned threads = 0);

/// A^n by repeated squaring, for single-n queries.
TropMatrixI trop_pow(const TropMatrixI& a, int n, unsigned threads = 0, PowerStats* stats = nullptr);

}  // namespace cylroman
