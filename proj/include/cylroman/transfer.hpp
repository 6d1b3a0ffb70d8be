#pragma once

#include <cstdint>

#include "cylroman/tropical.hpp"
#include "cylroman/words.hpp"

namespace cylroman {

/// The "p can follow q" relation between consecutive columns.
///
/// Row i of p is checked against row i of q, looking one row up and down in
/// p for a vertical 2. The border variant relaxes only row 4: a d there may
/// stay undominated, so q4 = d admits everything q4 = c admits.
struct TransitionRules {
    Variant variant = Variant::Standard;
    int m = 0;

    static TransitionRules standard(int m) { return {Variant::Standard, m}; }
    static TransitionRules border() { return {Variant::Border, kBorderWordLength}; }

    /// Row-local predicate. vertical_a: p has an 'a' directly above or below row i.
    bool row_allows(Letter q, Letter p, bool vertical_a, int row) const;
};

bool can_follow(const ColumnWord& q, const ColumnWord& p, const TransitionRules& rules);

/// Vertices first dominated when column p follows column q in the border
/// block, including the row-5 vertex below an 'a' in row 4. Range 0..13.
int newly_dominated(const ColumnWord& q, const ColumnWord& p);

struct ArcLabeler {
    Variant variant = Variant::Standard;
};

/// Standard: 2 p(a) + p(b), the weight of column p.
/// Border: 10 p(a) + 5 p(b) - 2 nd(q,p), twice the loss contributed by p.
Tropical arc_label(const ColumnWord& q, const ColumnWord& p, const ArcLabeler& labeler);

inline constexpr int kMinSupportedM = 2;
inline constexpr int kMaxSupportedM = 11;
inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;

struct BuildOptions {
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
    unsigned threads = 0;
};

/// Number of correct words of length m, counted without generating them.
std::uint64_t count_correct_words(int m);

/// dim^2 * 4 bytes, the footprint of one dense int32 matrix.
std::uint64_t estimate_matrix_bytes(std::uint64_t dim);

struct TransferSystem {
    WordTable words;
    TropMatrixI matrix;
};

/// A(G)[q][p] = arc_label(q,p) if p can follow q, infinity otherwise; rows
/// and columns in WordTable order. Border ignores m's usual meaning and
/// always uses the 97 words of length 4.
/// Throws CapacityError when m is outside [2, 11] or the matrix would exceed
/// the memory budget.
TransferSystem build_transfer_matrix(int m, Variant variant = Variant::Standard, const BuildOptions& options = {});

}  // namespace cylroman
