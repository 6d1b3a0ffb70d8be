#pragma once

// Ground truth that does not go through column words or transfer matrices:
// explicit cylinder graphs, direct Roman-domination checks, exhaustive and
// column-DP minimisation over raw {0,1,2} assignments.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cylroman::oracle {

/// P_m x C_n. Vertex (row, col) has index row * n + col; rows are the path,
/// columns wrap around.
class CylinderGraph {
public:
    CylinderGraph(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int vertex_count() const { return m_ * n_; }
    int index(int row, int col) const { return row * n_ + col; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

private:
    int m_;
    int n_;
    std::vector<std::vector<int>> adjacency_;
};

struct RomanFunction {
    int m = 0;
    int n = 0;
    std::vector<std::uint8_t> values;  // row-major, each in {0,1,2}

    int at(int row, int col) const { return values[static_cast<std::size_t>(row * n + col)]; }
    int weight() const;

    /// One row per line, characters 0/1/2, columns in cycle order.
    std::string to_grid() const;
    static RomanFunction from_grid(std::string_view text);
};

/// Every 0-vertex has a neighbour valued 2.
bool validate_rdf(const CylinderGraph& g, const RomanFunction& f);

enum class OracleMode { Exhaustive, ColumnDP, RowDP };

inline constexpr int kExhaustiveMaxVertices = 16;
inline constexpr int kDpMaxRows = 4;
inline constexpr int kDpMaxColumns = 30;
inline constexpr int kRowDpMaxColumns = 7;
inline constexpr int kRowDpMaxRows = 40;

/// Minimum RDF weight on P_m x C_n. Exhaustive enumerates all 3^{mn}
/// assignments (mn <= 16); ColumnDP walks columns with the exact set of
/// still-undominated vertices as state (m <= 4, n <= 30); RowDP walks
/// down the path with one whole cycle row as state (n <= 7, m <= 40).
/// Throws CapacityError outside those limits.
int brute_force_gamma_R(int m, int n, OracleMode mode = OracleMode::Exhaustive);

/// min over g of 5 g(P_4 x C_n) - 2 |D(g)| where g need not dominate row 4
/// and |D(g)| also counts row-5 vertices below a 2 in row 4. This is the
/// quantity the border transfer matrix computes, obtained here without it.
int twice_min_border_loss(int n, OracleMode mode = OracleMode::ColumnDP);

/// 2 on the cells (2 row + col) = 0 (mod 5), 1 on the boundary-row cells
/// that pattern leaves undominated, 0 elsewhere. Weight 2(m+1)n/5.
/// Requires m >= 4, n >= 5 and n = 0 (mod 5).
RomanFunction diagonal_pattern(int m, int n);

}  // namespace cylroman::oracle
