#include "cylroman/transfer.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "cylroman/errors.hpp"

namespace cylroman {

bool TransitionRules::row_allows(Letter q, Letter p, bool vertical_a, int row) const {
    using enum Letter;
    const bool relaxed_last_row = variant == Variant::Border && row == m - 1;
    switch (q) {
        case a:
            return p == a || p == c;
        case b:
            return (p == c && vertical_a) || p == d;
        case c:
            return p == a || p == b || (p == c && vertical_a) || p == d;
        case d:
            if (relaxed_last_row) return p == a || p == b || (p == c && vertical_a) || p == d;
            return p == a;
    }
    return false;
}

bool can_follow(const ColumnWord& q, const ColumnWord& p, const TransitionRules& rules) {
    if (q.size() != p.size() || q.size() != rules.m)
        throw std::invalid_argument("can_follow: word lengths " + std::to_string(q.size()) + "/" +
                                    std::to_string(p.size()) + " do not match m=" + std::to_string(rules.m));
    const int m = rules.m;
    for (int i = 0; i < m; ++i) {
        const bool vertical_a = (i > 0 && p[i - 1] == Letter::a) || (i + 1 < m && p[i + 1] == Letter::a);
        if (!rules.row_allows(q[i], p[i], vertical_a, i)) return false;
    }
    return true;
}

int newly_dominated(const ColumnWord& q, const ColumnWord& p) {
    if (q.size() != kBorderWordLength || p.size() != kBorderWordLength)
        throw std::invalid_argument("newly_dominated: words must have length 4");
    if (!can_follow(q, p, TransitionRules::border()))
        throw std::invalid_argument("newly_dominated: " + p.to_string() + " cannot follow " + q.to_string());
    using enum Letter;
    int nd = 0;
    for (int i = 0; i < kBorderWordLength; ++i) {
        const Letter qi = q[i];
        const Letter pi = p[i];
        if (qi == a && pi == a) {
            nd += 1;  // right-hand neighbour
        } else if (qi == b && pi == c) {
            nd += 1;
        } else if (qi == c && pi == a) {
            nd += 2;  // itself and right-hand neighbour
        } else if ((qi == c || qi == d) && (pi == b || pi == c)) {
            nd += 1;
        } else if (qi == d && pi == a) {
            nd += 3;  // left, itself, right
        }
    }
    if (p[kBorderWordLength - 1] == a) nd += 1;  // row 5, just outside the block
    return nd;
}

Tropical arc_label(const ColumnWord& q, const ColumnWord& p, const ArcLabeler& labeler) {
    const auto rules = labeler.variant == Variant::Standard ? TransitionRules::standard(q.size())
                                                             : TransitionRules::border();
    if (!can_follow(q, p, rules))
        throw std::invalid_argument("arc_label: " + p.to_string() + " cannot follow " + q.to_string());
    const auto counts = letter_counts(p);
    if (labeler.variant == Variant::Standard) return Tropical(2 * counts.a + counts.b);
    return Tropical(10 * counts.a + 5 * counts.b - 2 * newly_dominated(q, p));
}

std::uint64_t count_correct_words(int m) {
    if (m < 1) return 0;
    // ending[l] = number of correct words of the current length ending in letter l.
    std::array<std::uint64_t, 4> ending{1, 1, 1, 1};
    for (int len = 2; len <= m; ++len) {
        std::array<std::uint64_t, 4> next{};
        for (int prev = 0; prev < 4; ++prev)
            for (int cur = 0; cur < 4; ++cur)
                if (!is_forbidden_pair(static_cast<Letter>(prev), static_cast<Letter>(cur))) next[cur] += ending[prev];
        ending = next;
    }
    return ending[0] + ending[1] + ending[2] + ending[3];
}

std::uint64_t estimate_matrix_bytes(std::uint64_t dim) { return dim * dim * sizeof(std::int32_t); }

namespace {

std::string human_bytes(std::uint64_t b) {
    const char* units[] = {"B", "KiB", "MiB", "GiB", "TiB"};
    double v = static_cast<double>(b);
    int u = 0;
    while (v >= 1024 && u < 4) {
        v /= 1024;
        ++u;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f %s", v, units[u]);
    return buf;
}

}  // namespace

TransferSystem build_transfer_matrix(int m, Variant variant, const BuildOptions& options) {
    const int length = variant == Variant::Border ? kBorderWordLength : m;
    if (variant == Variant::Standard && m < kMinSupportedM)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
    const std::uint64_t dim = count_correct_words(length);
    const std::uint64_t bytes = estimate_matrix_bytes(dim);
    if (variant == Variant::Standard && m > kMaxSupportedM)
        throw CapacityError("m=" + std::to_string(m) + " is beyond the supported range [2, 11]; A(G) would be " +
                                std::to_string(dim) + "x" + std::to_string(dim) + " (~" + human_bytes(bytes) + ")",
                            bytes);
    if (bytes > options.memory_budget_bytes)
        throw CapacityError("A(G) for m=" + std::to_string(length) + " is " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " (~" + human_bytes(bytes) + "), over the memory budget of " +
                                human_bytes(options.memory_budget_bytes),
                            bytes);

    auto words = generate_words(length, variant);
    const auto rules = variant == Variant::Standard ? TransitionRules::standard(m) : TransitionRules::border();
    const ArcLabeler labeler{variant};
    TropMatrixI a(words.size());
    const std::size_t n = words.size();
    detail::parallel_rows(n, detail::resolve_threads(options.threads), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (can_follow(words[i], words[j], rules)) a.set(i, j, arc_label(words[i], words[j], labeler));
    });
    return {std::move(words), std::move(a)};
}

}  // namespace cylroman
