#pragma once

// Machine-readable (JSON) and plain-text renderings of solver results. The
// JSON field layout is documented in README.md; everything except the
// "timing" object is deterministic for a given input.

#include <string>

#include <json.hpp>

#include "cylroman/power.hpp"
#include "cylroman/solver.hpp"
#include "cylroman/words.hpp"

namespace cylroman::report {

nlohmann::json timing_json(const PowerStats& stats);
nlohmann::json counters_json(const PowerStats& stats);

nlohmann::json recurrence_json(int m, Variant variant, const RecurrenceResult& rec);
std::string recurrence_text(int m, Variant variant, const RecurrenceResult& rec);

nlohmann::json formula_json(const RomanFormula& f, const RecurrenceResult& rec);
std::string formula_text(const RomanFormula& f);

nlohmann::json loss_json(const LossReport& r, int n_lo, int n_hi);
std::string loss_text(const LossReport& r);

/// Compute / serialize / store split, one line each with share of total.
std::string profile_text(const PowerStats& stats);

}  // namespace cylroman::report
