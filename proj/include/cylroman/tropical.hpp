#pragma once

// Dense (min,+) linear algebra over the integer tropical semiring
// (Z u {inf}, min, +, inf, 0).
//
// Infinity is stored in-band as the largest representable Scalar so that a
// matrix is a plain flat array that can be written to disk bit-exactly.
// Every operation that adds weights treats the sentinel as absorbing and
// throws std::overflow_error instead of wrapping.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace cylroman {

template <std::signed_integral Scalar>
class TropicalValue {
public:
    static constexpr Scalar kSentinel = std::numeric_limits<Scalar>::max();

    constexpr TropicalValue() = default;  // infinity
    constexpr explicit TropicalValue(Scalar w) : raw_(w) {
        if (w == kSentinel) throw std::overflow_error("finite weight collides with the infinity sentinel");
    }

    static constexpr TropicalValue infinity() { return TropicalValue{}; }
    static constexpr TropicalValue from_raw(Scalar raw) {
        TropicalValue v;
        v.raw_ = raw;
        return v;
    }

    constexpr bool is_infinite() const { return raw_ == kSentinel; }
    constexpr bool is_finite() const { return raw_ != kSentinel; }
    constexpr Scalar raw() const { return raw_; }
    constexpr Scalar weight() const {
        if (is_infinite()) throw std::logic_error("weight() of tropical infinity");
        return raw_;
    }

    constexpr bool operator==(const TropicalValue&) const = default;

    std::string to_string() const { return is_infinite() ? std::string("inf") : std::to_string(raw_); }

private:
    Scalar raw_ = kSentinel;
};

using Tropical = TropicalValue<std::int32_t>;

// Tropical "multiplication": ordinary addition, infinity absorbing, checked.
template <std::signed_integral Scalar>
constexpr Scalar checked_add(Scalar x, Scalar y) {
    constexpr Scalar inf = TropicalValue<Scalar>::kSentinel;
    if (x == inf || y == inf) return inf;
    Scalar out{};
    if (__builtin_add_overflow(x, y, &out) || out == inf)
        throw std::overflow_error("tropical weight overflow: " + std::to_string(x) + " + " + std::to_string(y));
    return out;
}

template <std::signed_integral Scalar>
constexpr TropicalValue<Scalar> operator+(TropicalValue<Scalar> x, TropicalValue<Scalar> y) {
    return TropicalValue<Scalar>::from_raw(checked_add(x.raw(), y.raw()));
}

// Tropical "addition".
template <std::signed_integral Scalar>
constexpr TropicalValue<Scalar> tmin(TropicalValue<Scalar> x, TropicalValue<Scalar> y) {
    return TropicalValue<Scalar>::from_raw(std::min(x.raw(), y.raw()));
}

/// Square dense matrix over the tropical semiring, row-major.
template <std::signed_integral Scalar>
class TropMatrix {
public:
    using Value = TropicalValue<Scalar>;
    using Storage = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    static constexpr Scalar kInf = Value::kSentinel;

    TropMatrix() = default;

    /// All-infinity matrix of the given dimension.
    explicit TropMatrix(std::size_t dim) : data_(Storage::Constant(to_index(dim), to_index(dim), kInf)) {
        if (dim == 0) throw std::invalid_argument("TropMatrix dimension must be positive");
    }

    explicit TropMatrix(Storage raw) : data_(std::move(raw)) {
        if (data_.rows() != data_.cols() || data_.rows() == 0)
            throw std::invalid_argument("TropMatrix must be square and non-empty");
    }

    /// Row literal helper; use std::nullopt for infinity.
    TropMatrix(std::initializer_list<std::initializer_list<std::optional<Scalar>>> rows)
        : TropMatrix(rows.size()) {
        Eigen::Index i = 0;
        for (const auto& row : rows) {
            if (row.size() != rows.size()) throw std::invalid_argument("TropMatrix literal must be square");
            Eigen::Index j = 0;
            for (const auto& v : row) data_(i, j++) = v ? Value(*v).raw() : kInf;
            ++i;
        }
    }

    static TropMatrix identity(std::size_t dim) {
        TropMatrix m(dim);
        m.data_.diagonal().setZero();
        return m;
    }

    std::size_t dim() const { return static_cast<std::size_t>(data_.rows()); }
    bool empty() const { return data_.size() == 0; }

    Value operator()(std::size_t i, std::size_t j) const {
        return Value::from_raw(data_(to_index(i), to_index(j)));
    }
    void set(std::size_t i, std::size_t j, Value v) { data_(to_index(i), to_index(j)) = v.raw(); }

    const Storage& raw() const { return data_; }
    Storage& raw() { return data_; }
    const Scalar* data() const { return data_.data(); }
    Scalar* data() { return data_.data(); }

    std::size_t infinity_count() const { return static_cast<std::size_t>((data_.array() == kInf).count()); }

    bool operator==(const TropMatrix& o) const {
        return data_.rows() == o.data_.rows() && data_.cols() == o.data_.cols() && data_ == o.data_;
    }

private:
    static Eigen::Index to_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

    Storage data_;
};

using TropMatrixI = TropMatrix<std::int32_t>;

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Runs body(row_begin, row_end) over disjoint row blocks.
template <typename Body>
void parallel_rows(std::size_t rows, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
    if (threads == 1) {
        body(std::size_t{0}, rows);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (rows + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(rows, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
}

template <std::signed_integral Scalar>
struct FiniteRange {
    Scalar lo = std::numeric_limits<Scalar>::max();
    Scalar hi = std::numeric_limits<Scalar>::min();
    bool any = false;
};

template <std::signed_integral Scalar>
FiniteRange<Scalar> finite_range(const TropMatrix<Scalar>& m) {
    FiniteRange<Scalar> r;
    const Scalar* p = m.data();
    const std::size_t n = m.dim() * m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == TropMatrix<Scalar>::kInf) continue;
        r.any = true;
        r.lo = std::min(r.lo, p[i]);
        r.hi = std::max(r.hi, p[i]);
    }
    return r;
}

// Fast path. Finite magnitudes are at most max/8, infinity on the right
// operand is remapped to max/2, so every partial sum stays representable and
// anything above max/4 is known to involve an infinite term.
template <std::signed_integral Scalar>
void mul_headroom(const TropMatrix<Scalar>& a, const TropMatrix<Scalar>& b, TropMatrix<Scalar>& c,
                  unsigned threads) {
    constexpr Scalar inf = TropMatrix<Scalar>::kInf;
    constexpr Scalar big = std::numeric_limits<Scalar>::max() / 2;
    constexpr Scalar cutoff = std::numeric_limits<Scalar>::max() / 4;
    constexpr std::size_t kBlockK = 128;
    constexpr std::size_t kBlockJ = 1024;

    const std::size_t n = a.dim();
    std::vector<Scalar> bb(b.data(), b.data() + n * n);
    for (auto& v : bb) v = v == inf ? big : v;

    Scalar* out = c.data();
    std::fill(out, out + n * n, big);
    const Scalar* pa = a.data();
    const Scalar* pb = bb.data();

    parallel_rows(n, threads, [&](std::size_t r0, std::size_t r1) {
        for (std::size_t j0 = 0; j0 < n; j0 += kBlockJ) {
            const std::size_t j1 = std::min(n, j0 + kBlockJ);
            for (std::size_t k0 = 0; k0 < n; k0 += kBlockK) {
                const std::size_t k1 = std::min(n, k0 + kBlockK);
                for (std::size_t i = r0; i < r1; ++i) {
                    Scalar* crow = out + i * n;
                    const Scalar* arow = pa + i * n;
                    for (std::size_t k = k0; k < k1; ++k) {
                        const Scalar aik = arow[k];
                        if (aik == inf) continue;
                        const Scalar* brow = pb + k * n;
                        for (std::size_t j = j0; j < j1; ++j) crow[j] = std::min(crow[j], Scalar(aik + brow[j]));
                    }
                }
            }
        }
        for (std::size_t i = r0 * n; i < r1 * n; ++i)
            if (out[i] > cutoff) out[i] = inf;
    });
}

// Slow path for operands outside the fast-path headroom; every add is checked.
template <std::signed_integral Scalar>
void mul_checked(const TropMatrix<Scalar>& a, const TropMatrix<Scalar>& b, TropMatrix<Scalar>& c,
                 unsigned threads) {
    constexpr Scalar inf = TropMatrix<Scalar>::kInf;
    const std::size_t n = a.dim();
    Scalar* out = c.data();
    const Scalar* pa = a.data();
    const Scalar* pb = b.data();
    parallel_rows(n, threads, [&](std::size_t r0, std::size_t r1) {
        for (std::size_t i = r0; i < r1; ++i) {
            Scalar* crow = out + i * n;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar aik = pa[i * n + k];
                if (aik == inf) continue;
                const Scalar* brow = pb + k * n;
                for (std::size_t j = 0; j < n; ++j) {
                    if (brow[j] == inf) continue;
                    crow[j] = std::min(crow[j], checked_add(aik, brow[j]));
                }
            }
        }
    });
}

}  // namespace detail

/// C(i,j) = min_k A(i,k) + B(k,j). Rows of C are split across `threads`
/// workers (0 = hardware concurrency); the result does not depend on it.
template <std::signed_integral Scalar>
TropMatrix<Scalar> trop_mul(const TropMatrix<Scalar>& a, const TropMatrix<Scalar>& b, unsigned threads = 0) {
    if (a.dim() != b.dim() || a.empty())
        throw std::invalid_argument("trop_mul: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    TropMatrix<Scalar> c(a.dim());
    const auto ra = detail::finite_range(a);
    const auto rb = detail::finite_range(b);
    if (!ra.any || !rb.any) return c;

    constexpr Scalar headroom = std::numeric_limits<Scalar>::max() / 8;
    const auto fits = [](const detail::FiniteRange<Scalar>& r) { return r.lo >= -headroom && r.hi <= headroom; };
    threads = detail::resolve_threads(threads);
    if (fits(ra) && fits(rb))
        detail::mul_headroom(a, b, c, threads);
    else
        detail::mul_checked(a, b, c, threads);
    return c;
}

/// (alpha (x) A)(i,j) = alpha + A(i,j).
template <std::signed_integral Scalar>
TropMatrix<Scalar> trop_scalar(TropicalValue<Scalar> alpha, const TropMatrix<Scalar>& a) {
    if (alpha.is_infinite()) return TropMatrix<Scalar>(a.dim());
    const Scalar s = alpha.raw();
    return TropMatrix<Scalar>(a.raw().unaryExpr([s](Scalar x) { return checked_add(s, x); }).eval());
}

/// Returns beta when P = beta (x) Q entrywise with matching infinity
/// positions and at least one finite entry; std::nullopt otherwise.
template <std::signed_integral Scalar>
std::optional<TropicalValue<Scalar>> shift_difference(const TropMatrix<Scalar>& p, const TropMatrix<Scalar>& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("shift_difference: dimension mismatch");
    constexpr Scalar inf = TropMatrix<Scalar>::kInf;
    const std::size_t n = p.dim() * p.dim();
    const Scalar* a = p.data();
    const Scalar* b = q.data();
    std::optional<std::int64_t> beta;
    for (std::size_t i = 0; i < n; ++i) {
        const bool ia = a[i] == inf;
        const bool ib = b[i] == inf;
        if (ia != ib) return std::nullopt;
        if (ia) continue;
        const std::int64_t d = std::int64_t{a[i]} - std::int64_t{b[i]};
        if (!beta) {
            beta = d;
        } else if (*beta != d) {
            return std::nullopt;
        }
    }
    if (!beta || *beta >= inf || *beta < std::numeric_limits<Scalar>::min()) return std::nullopt;
    return TropicalValue<Scalar>(static_cast<Scalar>(*beta));
}

/// min_p A(p,p); infinity when the whole diagonal is infinite.
template <std::signed_integral Scalar>
TropicalValue<Scalar> min_diagonal(const TropMatrix<Scalar>& a) {
    if (a.empty()) return TropicalValue<Scalar>::infinity();
    return TropicalValue<Scalar>::from_raw(a.raw().diagonal().minCoeff());
}

/// 64-bit fingerprint of a matrix modulo uniform shifts: two matrices with
/// shift_difference(P, Q) engaged always share a fingerprint. Returns
/// nullopt for all-infinity matrices, which have no determined shift.
template <std::signed_integral Scalar>
std::optional<std::uint64_t> shift_fingerprint(const TropMatrix<Scalar>& a) {
    constexpr Scalar inf = TropMatrix<Scalar>::kInf;
    const std::size_t n = a.dim() * a.dim();
    const Scalar* p = a.data();
    std::size_t first = 0;
    while (first < n && p[first] == inf) ++first;
    if (first == n) return std::nullopt;
    const std::int64_t base = p[first];
    std::uint64_t h = 0xcbf29ce484222325ull ^ a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t v = p[i] == inf ? 0x9e3779b97f4a7c15ull
                                            : static_cast<std::uint64_t>(std::int64_t{p[i]} - base);
        h = (h ^ v) * 0x100000001b3ull;
    }
    return h;
}

}  // namespace cylroman
