#include "cylroman/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cylroman/errors.hpp"

namespace cylroman::oracle {

CylinderGraph::CylinderGraph(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 3) throw std::invalid_argument("CylinderGraph needs m >= 1 and n >= 3");
    adjacency_.resize(static_cast<std::size_t>(m * n));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            auto& adj = adjacency_[static_cast<std::size_t>(index(r, c))];
            adj.push_back(index(r, (c + n - 1) % n));
            adj.push_back(index(r, (c + 1) % n));
            if (r > 0) adj.push_back(index(r - 1, c));
            if (r + 1 < m) adj.push_back(index(r + 1, c));
        }
    }
}

int RomanFunction::weight() const { return std::accumulate(values.begin(), values.end(), 0); }

std::string RomanFunction::to_grid() const {
    std::string out;
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) out.push_back(static_cast<char>('0' + at(r, c)));
        out.push_back('\n');
    }
    return out;
}

RomanFunction RomanFunction::from_grid(std::string_view text) {
    RomanFunction f;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (f.m == 0) f.n = static_cast<int>(line.size());
        if (static_cast<int>(line.size()) != f.n) throw std::invalid_argument("ragged RomanFunction grid");
        for (char ch : line) {
            if (ch < '0' || ch > '2') throw std::invalid_argument("grid characters must be 0, 1 or 2");
            f.values.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        ++f.m;
    }
    if (f.m == 0) throw std::invalid_argument("empty RomanFunction grid");
    return f;
}

bool validate_rdf(const CylinderGraph& g, const RomanFunction& f) {
    if (f.m != g.m() || f.n != g.n() || static_cast<int>(f.values.size()) != g.vertex_count())
        throw std::invalid_argument("RomanFunction does not cover the graph's vertices");
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto fv = f.values[static_cast<std::size_t>(v)];
        if (fv > 2) throw std::invalid_argument("RomanFunction values must be in {0,1,2}");
        if (fv != 0) continue;
        const auto& nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](int w) { return f.values[static_cast<std::size_t>(w)] == 2; }))
            return false;
    }
    return true;
}

namespace {

enum class Objective { RomanWeight, BorderLoss };

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Enumerates every {0,1,2} assignment of an explicit graph. For the border
// loss the last row need not be dominated.
int exhaustive(int m, int n, Objective objective) {
    if (m * n > kExhaustiveMaxVertices)
        throw CapacityError("exhaustive oracle limited to " + std::to_string(kExhaustiveMaxVertices) +
                            " vertices, P_" + std::to_string(m) + " x C_" + std::to_string(n) + " has " +
                            std::to_string(m * n));
    const CylinderGraph g(m, n);
    const int vcount = g.vertex_count();
    std::vector<std::uint8_t> val(static_cast<std::size_t>(vcount), 0);
    int best = kInf;
    int weight = 0;
    for (;;) {
        bool ok = true;
        int dominated = 0;
        for (int v = 0; v < vcount && ok; ++v) {
            bool dom = val[static_cast<std::size_t>(v)] != 0;
            for (int w : g.neighbors(v)) dom = dom || val[static_cast<std::size_t>(w)] == 2;
            const bool must = objective == Objective::RomanWeight || v / n < m - 1;
            if (!dom && must) ok = false;
            dominated += dom;
        }
        if (ok) {
            int score = weight;
            if (objective == Objective::BorderLoss) {
                int below = 0;
                for (int c = 0; c < n; ++c) below += val[static_cast<std::size_t>(g.index(m - 1, c))] == 2;
                score = 5 * weight - 2 * (dominated + below);
            }
            best = std::min(best, score);
        }
        // Odometer increment.
        int i = 0;
        while (i < vcount && val[static_cast<std::size_t>(i)] == 2) {
            val[static_cast<std::size_t>(i)] = 0;
            weight -= 2;
            ++i;
        }
        if (i == vcount) break;
        ++val[static_cast<std::size_t>(i)];
        ++weight;
    }
    return best;
}

// Column DP. State = (values of the current column, mask of its vertices not
// yet dominated by themselves, the previous column or the column itself).
// The next column must cover that mask (row m-1 excepted for the border
// loss). A closed walk of length n from any fixed start state is a cyclic
// assignment; the answer is the minimum over start states.
int column_dp(int m, int n, Objective objective) {
    if (m < 1 || m > kDpMaxRows || n < 3 || n > kDpMaxColumns)
        throw CapacityError("column-DP oracle supports 1 <= m <= " + std::to_string(kDpMaxRows) + " and 3 <= n <= " +
                            std::to_string(kDpMaxColumns));
    int ncols = 1;
    for (int i = 0; i < m; ++i) ncols *= 3;
    std::vector<std::array<int, kDpMaxRows>> digits(static_cast<std::size_t>(ncols));
    std::vector<unsigned> twos(static_cast<std::size_t>(ncols), 0);
    std::vector<int> sum(static_cast<std::size_t>(ncols), 0);
    for (int code = 0; code < ncols; ++code) {
        int x = code;
        for (int r = 0; r < m; ++r) {
            const int d = x % 3;
            x /= 3;
            digits[code][r] = d;
            sum[code] += d;
            if (d == 2) twos[code] |= 1u << r;
        }
    }
    const auto undominated = [&](int prev, int cur) {
        unsigned mask = 0;
        for (int r = 0; r < m; ++r) {
            if (digits[cur][r] != 0) continue;
            if (twos[prev] >> r & 1u) continue;
            if (r > 0 && digits[cur][r - 1] == 2) continue;
            if (r + 1 < m && digits[cur][r + 1] == 2) continue;
            mask |= 1u << r;
        }
        return mask;
    };
    const unsigned mandatory = objective == Objective::RomanWeight ? (1u << m) - 1 : (1u << (m - 1)) - 1;

    const int masks = 1 << m;
    std::vector<int> id(static_cast<std::size_t>(ncols * masks), -1);
    std::vector<std::pair<int, unsigned>> states;
    for (int p = 0; p < ncols; ++p)
        for (int x = 0; x < ncols; ++x) {
            const unsigned mk = undominated(p, x);
            auto& slot = id[static_cast<std::size_t>(x * masks + static_cast<int>(mk))];
            if (slot < 0) {
                slot = static_cast<int>(states.size());
                states.emplace_back(x, mk);
            }
        }

    struct Arc {
        int to;
        int cost;
    };
    std::vector<std::vector<Arc>> arcs(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto [x, mk] = states[s];
        for (int y = 0; y < ncols; ++y) {
            if ((mk & mandatory & ~twos[y]) != 0) continue;
            const unsigned my = undominated(x, y);
            const int to = id[static_cast<std::size_t>(y * masks + static_cast<int>(my))];
            int cost = sum[y];
            if (objective == Objective::BorderLoss) {
                const int newly_prev = std::popcount(mk & twos[y]);
                const int in_column = m - std::popcount(my);
                const int below = (twos[y] >> (m - 1)) & 1u;
                cost = 5 * sum[y] - 2 * (newly_prev + in_column + below);
            }
            arcs[s].push_back({to, cost});
        }
    }

    int best = kInf;
    std::vector<int> dist(states.size()), next(states.size());
    for (std::size_t start = 0; start < states.size(); ++start) {
        std::fill(dist.begin(), dist.end(), kInf);
        dist[start] = 0;
        for (int step = 0; step < n; ++step) {
            std::fill(next.begin(), next.end(), kInf);
            for (std::size_t s = 0; s < states.size(); ++s) {
                if (dist[s] == kInf) continue;
                for (const auto& arc : arcs[s])
                    next[static_cast<std::size_t>(arc.to)] = std::min(next[static_cast<std::size_t>(arc.to)], dist[s] + arc.cost);
            }
            std::swap(dist, next);
        }
        best = std::min(best, dist[start]);
    }
    return best;
}

// DP down the path. State = (values of the current cycle row, mask of its
// vertices not dominated by itself or the row above). The next row must
// cover that mask; the last row must leave nothing undominated.
int row_dp(int m, int n) {
    if (m < 1 || m > kRowDpMaxRows || n < 3 || n > kRowDpMaxColumns)
        throw CapacityError("row-DP oracle supports 1 <= m <= " + std::to_string(kRowDpMaxRows) + " and 3 <= n <= " +
                            std::to_string(kRowDpMaxColumns));
    int nrows = 1;
    for (int i = 0; i < n; ++i) nrows *= 3;
    std::vector<unsigned> twos(static_cast<std::size_t>(nrows), 0), zeros(static_cast<std::size_t>(nrows), 0);
    std::vector<int> sum(static_cast<std::size_t>(nrows), 0);
    for (int code = 0; code < nrows; ++code) {
        int x = code;
        for (int c = 0; c < n; ++c) {
            const int d = x % 3;
            x /= 3;
            sum[code] += d;
            if (d == 2) twos[code] |= 1u << c;
            if (d == 0) zeros[code] |= 1u << c;
        }
    }
    const unsigned full = (1u << n) - 1;
    const auto rotl = [&](unsigned v) { return ((v << 1) | (v >> (n - 1))) & full; };
    const auto rotr = [&](unsigned v) { return ((v >> 1) | (v << (n - 1))) & full; };
    const auto undominated = [&](unsigned above_twos, int cur) {
        const unsigned t = twos[cur];
        return zeros[cur] & ~above_twos & ~rotl(t) & ~rotr(t);
    };

    const std::size_t masks = std::size_t{1} << n;
    std::vector<int> dist(static_cast<std::size_t>(nrows) * masks, kInf), next(dist.size());
    for (int y = 0; y < nrows; ++y) {
        auto& slot = dist[static_cast<std::size_t>(y) * masks + undominated(0, y)];
        slot = std::min(slot, sum[y]);
    }
    for (int r = 1; r < m; ++r) {
        std::fill(next.begin(), next.end(), kInf);
        for (int x = 0; x < nrows; ++x)
            for (std::size_t mk = 0; mk < masks; ++mk) {
                const int d = dist[static_cast<std::size_t>(x) * masks + mk];
                if (d == kInf) continue;
                for (int y = 0; y < nrows; ++y) {
                    if ((mk & ~twos[y]) != 0) continue;
                    auto& slot = next[static_cast<std::size_t>(y) * masks + undominated(twos[x], y)];
                    slot = std::min(slot, d + sum[y]);
                }
            }
        std::swap(dist, next);
    }
    int best = kInf;
    for (int y = 0; y < nrows; ++y) best = std::min(best, dist[static_cast<std::size_t>(y) * masks]);
    return best;
}

}  // namespace

int brute_force_gamma_R(int m, int n, OracleMode mode) {
    if (m < 1 || n < 3) throw std::invalid_argument("brute_force_gamma_R needs m >= 1 and n >= 3");
    switch (mode) {
        case OracleMode::Exhaustive:
            return exhaustive(m, n, Objective::RomanWeight);
        case OracleMode::ColumnDP:
            return column_dp(m, n, Objective::RomanWeight);
        case OracleMode::RowDP:
            return row_dp(m, n);
    }
    throw std::invalid_argument("unknown oracle mode");
}

int twice_min_border_loss(int n, OracleMode mode) {
    if (n < 3) throw std::invalid_argument("twice_min_border_loss needs n >= 3");
    if (mode == OracleMode::RowDP) throw std::invalid_argument("twice_min_border_loss has no row-DP mode");
    return mode == OracleMode::Exhaustive ? exhaustive(4, n, Objective::BorderLoss)
                                          : column_dp(4, n, Objective::BorderLoss);
}

RomanFunction diagonal_pattern(int m, int n) {
    if (n % 5 != 0) throw std::invalid_argument("diagonal_pattern needs n = 0 (mod 5), got n=" + std::to_string(n));
    if (m < 4 || n < 5) throw std::invalid_argument("diagonal_pattern needs m >= 4 and n >= 5");
    RomanFunction f{m, n, std::vector<std::uint8_t>(static_cast<std::size_t>(m * n), 0)};
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if ((2 * r + c) % 5 == 0) f.values[static_cast<std::size_t>(r * n + c)] = 2;
    // Cells whose dominator would sit in the missing row above or below.
    const CylinderGraph g(m, n);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& fv = f.values[static_cast<std::size_t>(v)];
        if (fv != 0) continue;
        const auto& nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](int w) { return f.values[static_cast<std::size_t>(w)] == 2; }))
            fv = 1;
    }
    return f;
}

}  // namespace cylroman::oracle
