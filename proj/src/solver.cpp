#include "cylroman/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cylroman {

RecurrenceResult find_recurrence(const TropMatrixI& a, int max_power, PowerSink* sink, unsigned threads) {
    if (max_power < 2) throw std::invalid_argument("find_recurrence: max power must be >= 2");
    MemoryPowerStore memory;
    PowerSink& store = sink ? *sink : memory;

    RecurrenceResult result;
    result.max_power = max_power;
    result.diagonal_minima.assign(static_cast<std::size_t>(max_power) + 1, Tropical::infinity());
    std::vector<std::optional<std::uint64_t>> fingerprints(static_cast<std::size_t>(max_power) + 1);

    result.stats = power_sequence(
        a, max_power, store,
        [&](int k, const TropMatrixI& power) {
            result.diagonal_minima[k] = min_diagonal(power);
            fingerprints[k] = shift_fingerprint(power);
        },
        threads);

    for (int alpha = 1; alpha < max_power; ++alpha) {
        for (int n0 = 1; n0 + alpha <= max_power; ++n0) {
            const auto& lo = fingerprints[n0];
            const auto& hi = fingerprints[n0 + alpha];
            if (!lo || !hi || *lo != *hi) continue;
            if (!store.contains(n0) || !store.contains(n0 + alpha))
                throw std::logic_error("find_recurrence: sink does not retain powers");
            const auto beta = shift_difference(store.load(n0 + alpha, result.stats), store.load(n0, result.stats));
            if (!beta) continue;  // fingerprint collision
            result.found = true;
            result.n0 = n0;
            result.alpha = alpha;
            result.beta = beta->weight();
            result.shift_confirmed_through = n0;
            for (int n = n0 + 1; n + alpha <= max_power; ++n) {
                if (fingerprints[n] != fingerprints[n + alpha]) break;
                const auto later = shift_difference(store.load(n + alpha, result.stats), store.load(n, result.stats));
                if (!later || *later != *beta) break;
                result.shift_confirmed_through = n;
            }
            return result;
        }
    }
    return result;
}

namespace {

void require_n(int n) {
    if (n < 3) throw std::invalid_argument("C_n needs n >= 3, got n=" + std::to_string(n));
}

int finite_or_throw(Tropical v, int n) {
    if (v.is_infinite()) throw std::logic_error("no closed walk of length " + std::to_string(n));
    return v.weight();
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    // den > 0
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

}  // namespace

int roman_number(int m, int n, const SolverOptions& options) {
    require_n(n);
    const auto sys = build_transfer_matrix(m, Variant::Standard, {options.memory_budget_bytes, options.threads});
    return finite_or_throw(min_diagonal(trop_pow(sys.matrix, n, options.threads)), n);
}

std::vector<int> roman_numbers(int m, int n_max, const SolverOptions& options) {
    require_n(n_max);
    const auto sys = build_transfer_matrix(m, Variant::Standard, {options.memory_budget_bytes, options.threads});
    std::vector<int> out(static_cast<std::size_t>(n_max) + 1, 0);
    NullSink sink;
    power_sequence(
        sys.matrix, n_max, sink,
        [&](int k, const TropMatrixI& power) {
            if (k >= 3) out[k] = finite_or_throw(min_diagonal(power), k);
        },
        options.threads);
    return out;
}

RomanFormula::RomanFormula(int m, int n0, int alpha, std::int32_t beta, std::map<int, int> base)
    : m_(m), n0_(n0), alpha_(alpha), beta_(beta), base_(std::move(base)) {
    if (alpha_ < 1 || n0_ < 1) throw std::invalid_argument("RomanFormula: need alpha >= 1 and n0 >= 1");
    for (int n = 3; n < std::max(n0_, 3) + alpha_; ++n)
        if (!base_.contains(n)) throw std::invalid_argument("RomanFormula: missing base value for n=" + std::to_string(n));

    offsets_.assign(static_cast<std::size_t>(alpha_), 0);
    for (int n = std::max(n0_, 3); n < std::max(n0_, 3) + alpha_; ++n)
        offsets_[static_cast<std::size_t>(n % alpha_)] =
            base_.at(n) - static_cast<int>(ceil_div(std::int64_t{beta_} * n, alpha_));
    for (int n = 3; n < n0_; ++n) {
        const int regular =
            static_cast<int>(ceil_div(std::int64_t{beta_} * n, alpha_)) + offsets_[static_cast<std::size_t>(n % alpha_)];
        if (base_.at(n) != regular) exceptions_[n] = base_.at(n);
    }
    verified_ = true;
    for (int n = 3; n <= kCeilingCheckLimit; ++n)
        if (evaluate_ceiling_form(n) != evaluate(n)) verified_ = false;
}

int RomanFormula::evaluate(int n) const {
    require_n(n);
    if (const auto it = base_.find(n); it != base_.end()) return it->second;
    // Step back along the residue class to the boundary block [n0, n0+alpha).
    const int start = std::max(n0_, 3);
    const int steps = (n - start) / alpha_;
    const int rep = n - steps * alpha_;
    return base_.at(rep) + steps * beta_;
}

int RomanFormula::evaluate_ceiling_form(int n) const {
    require_n(n);
    if (const auto it = exceptions_.find(n); it != exceptions_.end()) return it->second;
    return static_cast<int>(ceil_div(std::int64_t{beta_} * n, alpha_)) + offsets_[static_cast<std::size_t>(n % alpha_)];
}

std::string RomanFormula::render() const {
    const int g = std::gcd(beta_, alpha_);
    const int num = beta_ / g;
    const int den = alpha_ / g;
    std::ostringstream base_term;
    const std::string numerator = num == 1 ? "n" : std::to_string(num) + "n";
    if (den == 1)
        base_term << numerator;
    else
        base_term << "ceil(" << numerator << "/" << den << ")";
    const auto term = [&](int offset) {
        std::ostringstream os;
        os << base_term.str();
        if (offset > 0) os << " + " << offset;
        if (offset < 0) os << " - " << -offset;
        return os.str();
    };

    // Group residues by offset; the largest group becomes "otherwise".
    std::map<int, std::vector<int>> by_offset;
    for (int r = 0; r < alpha_; ++r) by_offset[offsets_[static_cast<std::size_t>(r)]].push_back(r);
    const auto widest = std::max_element(by_offset.begin(), by_offset.end(),
                                         [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });

    std::ostringstream os;
    bool first = true;
    for (const auto& [offset, residues] : by_offset) {
        if (by_offset.size() > 1 && offset == widest->first) continue;
        if (!first) os << "; ";
        first = false;
        os << term(offset) << " if n = ";
        for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
        os << " (mod " << alpha_ << ")";
    }
    if (!first) os << "; ";
    os << term(widest->first) << (by_offset.size() > 1 ? " otherwise" : "");
    for (const auto& [n, v] : exceptions_) os << "; except n=" << n << ": " << v;
    return os.str();
}

RomanFormula solve_formula(int m, const RecurrenceResult& rec, const SolverOptions& options) {
    if (!rec.found) throw std::invalid_argument("solve_formula: recurrence not found");
    const int last = std::max(rec.n0, 3) + rec.alpha - 1;
    std::map<int, int> base;
    if (static_cast<int>(rec.diagonal_minima.size()) > last) {
        for (int n = 3; n <= last; ++n) base[n] = finite_or_throw(rec.diagonal_minima[n], n);
    } else {
        const auto values = roman_numbers(m, last, options);
        for (int n = 3; n <= last; ++n) base[n] = values[n];
    }
    return RomanFormula(m, rec.n0, rec.alpha, rec.beta, std::move(base));
}

std::int64_t lower_bound(std::int64_t m, std::int64_t n) { return ceil_div(2 * (m + 1) * n, 5); }

LossReport verify_loss_lemma(int n_lo, int n_hi, int max_power, unsigned threads) {
    if (n_lo < 10 || n_hi < n_lo) throw std::invalid_argument("verify_loss_lemma: need 10 <= n_lo <= n_hi");
    const auto sys = build_transfer_matrix(kBorderWordLength, Variant::Border, {kDefaultMemoryBudget, threads});
    LossReport report;
    report.recurrence = find_recurrence(sys.matrix, std::max(max_power, n_hi), nullptr, threads);
    report.all_equal_n = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto v = report.recurrence.diagonal_minima[n];
        const bool eq = v.is_finite() && v.weight() == n;
        report.rows.push_back({n, v, eq});
        report.all_equal_n = report.all_equal_n && eq;
    }
    return report;
}

}  // namespace cylroman
