#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cylroman/power.hpp"
#include "cylroman/transfer.hpp"
#include "cylroman/tropical.hpp"

namespace cylroman {

inline constexpr int kDefaultMaxPower = 50;

/// A^{n0+alpha} = beta (x) A^{n0}, searched over powers 1..max_power.
struct RecurrenceResult {
    bool found = false;
    int n0 = 0;
    int alpha = 0;
    std::int32_t beta = 0;
    int max_power = 0;
    /// Largest n with A^{n'+alpha} = beta (x) A^{n'} confirmed for every
    /// n0 <= n' <= n; equals max_power - alpha when the shift persists.
    int shift_confirmed_through = 0;
    /// diagonal_minima[k] = min_p (A^k)_pp for 1 <= k <= max_power; [0] unused.
    std::vector<Tropical> diagonal_minima;
    PowerStats stats;
};

/// Computes A^1..A^K through `sink` (an in-memory store when null) and
/// returns the shift with the smallest alpha, ties broken by smallest n0.
/// Candidate pairs are screened by shift_fingerprint and confirmed with
/// shift_difference on the stored powers, so the sink must retain them.
RecurrenceResult find_recurrence(const TropMatrixI& a, int max_power = kDefaultMaxPower, PowerSink* sink = nullptr,
                                 unsigned threads = 0);

struct SolverOptions {
    unsigned threads = 0;
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
};

/// gamma_R(P_m x C_n) as the minimum diagonal entry of A(G)^n.
int roman_number(int m, int n, const SolverOptions& options = {});

/// gamma_R(P_m x C_n) for every 3 <= n <= n_max from one pass of powers;
/// result[n] is the value, entries below 3 are unused.
std::vector<int> roman_numbers(int m, int n_max, const SolverOptions& options = {});

/// Exact solution of gamma(n + alpha) - gamma(n) = beta for n >= n0, with
/// boundary values gamma(3 .. n0+alpha-1) taken from the powers themselves.
class RomanFormula {
public:
    RomanFormula(int m, int n0, int alpha, std::int32_t beta, std::map<int, int> base);

    int m() const { return m_; }
    int n_min() const { return 3; }
    int n0() const { return n0_; }
    int alpha() const { return alpha_; }
    std::int32_t beta() const { return beta_; }
    const std::map<int, int>& base() const { return base_; }

    /// Valid for every n >= 3.
    int evaluate(int n) const;

    /// gamma(n) = ceil(beta n / alpha) + offset[n mod alpha] for n >= n0;
    /// exceptions hold the base values below n0 that do not fit that form.
    const std::vector<int>& residue_offsets() const { return offsets_; }
    const std::map<int, int>& exceptions() const { return exceptions_; }
    int evaluate_ceiling_form(int n) const;

    /// True when the ceiling form agrees with evaluate() on [3, 200].
    bool ceiling_form_verified() const { return verified_; }

    /// e.g. "ceil(16n/5) if n = 0 (mod 5); ceil(16n/5) + 1 otherwise".
    std::string render() const;

private:
    int m_;
    int n0_;
    int alpha_;
    std::int32_t beta_;
    std::map<int, int> base_;
    std::vector<int> offsets_;
    std::map<int, int> exceptions_;
    bool verified_ = false;
};

inline constexpr int kCeilingCheckLimit = 200;

/// Needs rec.found. Uses rec.diagonal_minima when they reach n0+alpha-1,
/// otherwise recomputes the boundary values.
RomanFormula solve_formula(int m, const RecurrenceResult& rec, const SolverOptions& options = {});

/// ceil(2(m+1)n/5), a lower bound on gamma_R(P_m x C_n) for m, n >= 10.
std::int64_t lower_bound(std::int64_t m, std::int64_t n);

struct LossRow {
    int n = 0;
    Tropical twice_min_loss;  // min over almost-RDFs g of 5 g(P_4 x C_n) - 2 |D(g)|
    bool equals_n = false;
};

struct LossReport {
    std::vector<LossRow> rows;
    RecurrenceResult recurrence;
    bool all_equal_n = false;
};

/// Border transfer matrix: minimum diagonals of its powers for n in
/// [n_lo, n_hi], compared with n, plus the recurrence over
/// max(max_power, n_hi) powers.
LossReport verify_loss_lemma(int n_lo, int n_hi, int max_power = kDefaultMaxPower, unsigned threads = 0);

}  // namespace cylroman
