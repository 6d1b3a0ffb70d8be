#include "cylroman/report.hpp"

#include <cstdio>
#include <sstream>

namespace cylroman::report {

using nlohmann::json;

namespace {

json tropical_json(Tropical v) { return v.is_finite() ? json(v.weight()) : json(nullptr); }

}  // namespace

json timing_json(const PowerStats& s) {
    return {{"kernel_s", s.kernel_seconds}, {"serialize_s", s.serialize_seconds}, {"io_s", s.io_seconds}};
}

json counters_json(const PowerStats& s) {
    return {{"products", s.products}, {"cache_hits", s.cache_hits}, {"stored", s.stored}};
}

json recurrence_json(int m, Variant variant, const RecurrenceResult& rec) {
    json j = {{"m", m}, {"variant", std::string(to_string(variant))}, {"max_power", rec.max_power},
              {"found", rec.found}};
    if (rec.found) {
        j["n0"] = rec.n0;
        j["alpha"] = rec.alpha;
        j["beta"] = rec.beta;
        j["shift_confirmed_through"] = rec.shift_confirmed_through;
    }
    json diag = json::array();
    for (std::size_t k = 1; k < rec.diagonal_minima.size(); ++k) diag.push_back(tropical_json(rec.diagonal_minima[k]));
    j["diagonal_minima"] = diag;
    j["counters"] = counters_json(rec.stats);
    j["timing"] = timing_json(rec.stats);
    return j;
}

std::string recurrence_text(int m, Variant variant, const RecurrenceResult& rec) {
    std::ostringstream os;
    os << "m=" << m << " variant=" << to_string(variant) << " K=" << rec.max_power << '\n';
    if (rec.found) {
        os << "n0=" << rec.n0 << " alpha=" << rec.alpha << " beta=" << rec.beta << '\n';
        os << "A^(n+" << rec.alpha << ") = " << rec.beta << " (x) A^n confirmed for " << rec.n0
           << " <= n <= " << rec.shift_confirmed_through << '\n';
    } else {
        os << "recurrence not found\n";
    }
    return os.str();
}

json formula_json(const RomanFormula& f, const RecurrenceResult& rec) {
    json base = json::object();
    for (const auto& [n, v] : f.base()) base[std::to_string(n)] = v;
    json exceptions = json::object();
    for (const auto& [n, v] : f.exceptions()) exceptions[std::to_string(n)] = v;
    return {{"m", f.m()},
            {"n0", f.n0()},
            {"alpha", f.alpha()},
            {"beta", f.beta()},
            {"base", base},
            {"formula", f.render()},
            {"residue_offsets", f.residue_offsets()},
            {"exceptions", exceptions},
            {"verification",
             {{"ceiling_form_verified", f.ceiling_form_verified()},
              {"ceiling_checked_through", kCeilingCheckLimit},
              {"shift_confirmed_through", rec.shift_confirmed_through},
              {"max_power", rec.max_power}}},
            {"counters", counters_json(rec.stats)},
            {"timing", timing_json(rec.stats)}};
}

std::string formula_text(const RomanFormula& f) {
    std::ostringstream os;
    os << "gamma_R(P_" << f.m() << " x C_n) = " << f.render() << '\n';
    os << "recurrence: gamma(n+" << f.alpha() << ") - gamma(n) = " << f.beta() << " for n >= " << f.n0() << '\n';
    os << "ceiling form " << (f.ceiling_form_verified() ? "verified" : "NOT verified") << " for 3 <= n <= "
       << kCeilingCheckLimit << '\n';
    return os.str();
}

json loss_json(const LossReport& r, int n_lo, int n_hi) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n}, {"twice_min_loss", tropical_json(row.twice_min_loss)}, {"equals_n", row.equals_n}});
    return {{"n_from", n_lo},
            {"n_to", n_hi},
            {"rows", rows},
            {"all_equal_n", r.all_equal_n},
            {"recurrence", recurrence_json(kBorderWordLength, Variant::Border, r.recurrence)}};
}

std::string loss_text(const LossReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows)
        os << "n=" << row.n << "  2L_a(n)=" << row.twice_min_loss.to_string() << "  "
           << (row.equals_n ? "= n" : "!= n") << '\n';
    if (r.recurrence.found)
        os << "border recurrence: n0=" << r.recurrence.n0 << " alpha=" << r.recurrence.alpha
           << " beta=" << r.recurrence.beta << '\n';
    else
        os << "border recurrence not found\n";
    return os.str();
}

std::string profile_text(const PowerStats& s) {
    const double total = s.kernel_seconds + s.serialize_seconds + s.io_seconds;
    const auto pct = [&](double x) { return total > 0 ? 100.0 * x / total : 0.0; };
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "products=%zu cache_hits=%zu stored=%zu\n"
                  "kernel     %9.3f s (%5.1f%%)\n"
                  "serialize  %9.3f s (%5.1f%%)\n"
                  "storage    %9.3f s (%5.1f%%)\n",
                  s.products, s.cache_hits, s.stored, s.kernel_seconds, pct(s.kernel_seconds), s.serialize_seconds,
                  pct(s.serialize_seconds), s.io_seconds, pct(s.io_seconds));
    return buf;
}

}  // namespace cylroman::report
