// cylroman: Roman domination of cylinders P_m x C_n via (min,+) matrix powers.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cylroman/errors.hpp"
#include "cylroman/matrix_io.hpp"
#include "cylroman/oracle.hpp"
#include "cylroman/power.hpp"
#include "cylroman/report.hpp"
#include "cylroman/solver.hpp"
#include "cylroman/transfer.hpp"
#include "cylroman/words.hpp"

namespace {

using namespace cylroman;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 2, kCapacity = 3, kIo = 4, kNotFound = 5 };

struct RunConfig {
    int m = 0;
    int n = 0;
    int max_power = kDefaultMaxPower;
    std::string variant = "standard";
    std::string cache_dir;
    unsigned threads = 0;
    std::string format = "text";
    bool list = false;
    std::string out;
    int n_from = 10;
    int n_to = 30;
    std::uint64_t memory_budget_mib = kDefaultMemoryBudget >> 20;
    std::string mode = "all";

    bool machine() const { return format == "machine"; }
    Variant parsed_variant() const { return parse_variant(variant); }
    BuildOptions build_options() const { return {memory_budget_mib << 20, threads}; }
    SolverOptions solver_options() const { return {threads, memory_budget_mib << 20}; }
};

void emit(const RunConfig& cfg, const json& machine, const std::string& text) {
    if (cfg.machine())
        std::cout << machine.dump(2) << '\n';
    else
        std::cout << text;
}

std::unique_ptr<DiskPowerCache> open_cache(const RunConfig& cfg, const TransferSystem& sys) {
    if (cfg.cache_dir.empty()) return nullptr;
    const CacheKey key{sys.words.m(), std::string(to_string(sys.words.variant())), sys.matrix.dim(),
                       content_hash(sys.matrix)};
    return std::make_unique<DiskPowerCache>(cfg.cache_dir, key);
}

int cmd_words(const RunConfig& cfg) {
    const auto table = generate_words(cfg.m, cfg.parsed_variant());
    if (cfg.machine()) {
        json j = {{"m", table.m()}, {"variant", std::string(to_string(table.variant()))}, {"count", table.size()}};
        if (cfg.list) {
            json words = json::array();
            for (const auto& w : table.words()) words.push_back(w.to_string());
            j["words"] = words;
        }
        std::cout << j.dump(2) << '\n';
    } else if (cfg.list) {
        write_word_list(table, std::cout);
        std::cerr << "# " << table.size() << " correct words of length " << table.m() << '\n';
    } else {
        std::cout << "count: " << table.size() << '\n';
    }
    return kOk;
}

int cmd_matrix(const RunConfig& cfg) {
    const auto sys = build_transfer_matrix(cfg.m, cfg.parsed_variant(), cfg.build_options());
    const std::size_t arcs = sys.matrix.dim() * sys.matrix.dim() - sys.matrix.infinity_count();
    json j = {{"m", sys.words.m()},
              {"variant", std::string(to_string(sys.words.variant()))},
              {"dim", sys.matrix.dim()},
              {"arcs", arcs},
              {"estimated_bytes", estimate_matrix_bytes(sys.matrix.dim())}};
    std::ostringstream text;
    text << "A(G): " << sys.matrix.dim() << "x" << sys.matrix.dim() << ", " << arcs << " arcs\n";
    if (!cfg.out.empty()) {
        write_matrix(sys.matrix, cfg.out);
        const std::string words_path = cfg.out + ".words";
        std::ofstream w(words_path);
        write_word_list(sys.words, w);
        if (!w) throw IoError("cannot write " + words_path);
        j["out"] = cfg.out;
        j["words_out"] = words_path;
        text << "wrote " << cfg.out << " and " << words_path << '\n';
    }
    emit(cfg, j, text.str());
    return kOk;
}

int cmd_gamma(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const int value = roman_number(cfg.m, cfg.n, cfg.solver_options());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json j = {{"m", cfg.m}, {"n", cfg.n}, {"gamma_R", value}, {"timing", {{"total_s", secs}}}};
    emit(cfg, j, "gamma_R(P_" + std::to_string(cfg.m) + " x C_" + std::to_string(cfg.n) + ") = " +
                     std::to_string(value) + "\n");
    return kOk;
}

int cmd_power(const RunConfig& cfg) {
    const auto sys = build_transfer_matrix(cfg.m, cfg.parsed_variant(), cfg.build_options());
    auto cache = open_cache(cfg, sys);
    NullSink null_sink;
    PowerSink& sink = cache ? static_cast<PowerSink&>(*cache) : null_sink;
    json diag = json::array();
    TropMatrixI last;
    const auto stats = power_sequence(
        sys.matrix, cfg.max_power, sink,
        [&](int k, const TropMatrixI& p) {
            const auto d = min_diagonal(p);
            diag.push_back(d.is_finite() ? json(d.weight()) : json(nullptr));
            if (k == cfg.max_power) last = p;
        },
        cfg.threads);
    if (!cfg.out.empty()) write_matrix(last, cfg.out);
    json j = {{"m", sys.words.m()},
              {"variant", std::string(to_string(sys.words.variant()))},
              {"max_power", cfg.max_power},
              {"diagonal_minima", diag},
              {"counters", report::counters_json(stats)},
              {"timing", report::timing_json(stats)}};
    std::ostringstream text;
    for (std::size_t k = 0; k < diag.size(); ++k)
        text << "k=" << k + 1 << " min diag=" << (diag[k].is_null() ? "inf" : diag[k].dump()) << '\n';
    text << report::profile_text(stats);
    emit(cfg, j, text.str());
    return kOk;
}

RecurrenceResult run_recurrence(const RunConfig& cfg, Variant variant, int m) {
    const auto sys = build_transfer_matrix(m, variant, cfg.build_options());
    auto cache = open_cache(cfg, sys);
    return find_recurrence(sys.matrix, cfg.max_power, cache.get(), cfg.threads);
}

int cmd_recurrence(const RunConfig& cfg) {
    const auto variant = cfg.parsed_variant();
    const int m = variant == Variant::Border ? kBorderWordLength : cfg.m;
    const auto rec = run_recurrence(cfg, variant, m);
    emit(cfg, report::recurrence_json(m, variant, rec),
         report::recurrence_text(m, variant, rec) + report::profile_text(rec.stats));
    return rec.found ? kOk : kNotFound;
}

int cmd_formula(const RunConfig& cfg) {
    const auto rec = run_recurrence(cfg, Variant::Standard, cfg.m);
    if (!rec.found) {
        emit(cfg, report::recurrence_json(cfg.m, Variant::Standard, rec),
             report::recurrence_text(cfg.m, Variant::Standard, rec));
        return kNotFound;
    }
    const auto f = solve_formula(cfg.m, rec, cfg.solver_options());
    auto j = report::formula_json(f, rec);
    std::string text = report::formula_text(f);
    if (cfg.n >= 3) {
        j["evaluate"] = {{"n", cfg.n}, {"gamma_R", f.evaluate(cfg.n)}};
        text += "gamma_R(P_" + std::to_string(cfg.m) + " x C_" + std::to_string(cfg.n) +
                ") = " + std::to_string(f.evaluate(cfg.n)) + "\n";
    }
    emit(cfg, j, text);
    return kOk;
}

int cmd_bound(const RunConfig& cfg) {
    if (cfg.m < 1 || cfg.n < 3) throw std::invalid_argument("bound needs m >= 1 and n >= 3");
    const auto lb = lower_bound(cfg.m, cfg.n);
    const bool bound_applies = cfg.m >= 10 && cfg.n >= 10;
    const bool exact = cfg.m >= 4 && cfg.n % 5 == 0;
    std::string note = exact ? "exact (n = 0 mod 5)" : bound_applies ? "lower bound (m, n >= 10)" : "not covered by the bound";
    json j = {{"m", cfg.m}, {"n", cfg.n}, {"lower_bound", lb}, {"bound_applies", bound_applies}, {"exact", exact}};
    emit(cfg, j, "ceil(2(m+1)n/5) = " + std::to_string(lb) + "  [" + note + "]\n");
    return kOk;
}

int cmd_loss_verify(const RunConfig& cfg) {
    const auto r = verify_loss_lemma(cfg.n_from, cfg.n_to, cfg.max_power, cfg.threads);
    emit(cfg, report::loss_json(r, cfg.n_from, cfg.n_to), report::loss_text(r));
    return kOk;
}

int cmd_oracle(const RunConfig& cfg) {
    const bool all = cfg.mode == "all";
    const bool want_exhaustive = all || cfg.mode == "exhaustive";
    const bool want_dp = all || cfg.mode == "dp";
    const bool want_row = all || cfg.mode == "row";
    json j = {{"m", cfg.m}, {"n", cfg.n}};
    std::ostringstream text;
    std::optional<int> reference;
    bool agree = true;
    const auto record = [&](const char* key, int v) {
        j[key] = v;
        text << key << ": " << v << '\n';
        if (reference && *reference != v) agree = false;
        if (!reference) reference = v;
    };
    if (want_exhaustive && cfg.m * cfg.n <= oracle::kExhaustiveMaxVertices)
        record("exhaustive", oracle::brute_force_gamma_R(cfg.m, cfg.n, oracle::OracleMode::Exhaustive));
    if (want_dp && cfg.m <= oracle::kDpMaxRows && cfg.n <= oracle::kDpMaxColumns)
        record("column_dp", oracle::brute_force_gamma_R(cfg.m, cfg.n, oracle::OracleMode::ColumnDP));
    if (want_row && cfg.m <= oracle::kRowDpMaxRows && cfg.n <= oracle::kRowDpMaxColumns)
        record("row_dp", oracle::brute_force_gamma_R(cfg.m, cfg.n, oracle::OracleMode::RowDP));
    if (!reference)
        throw CapacityError("P_" + std::to_string(cfg.m) + " x C_" + std::to_string(cfg.n) +
                            " is beyond every oracle mode");
    if (cfg.m >= 2) record("transfer_matrix", roman_number(cfg.m, cfg.n, cfg.solver_options()));
    j["agree"] = agree;
    text << (agree ? "all methods agree\n" : "METHODS DISAGREE\n");
    if (cfg.m >= 4 && cfg.n >= 5 && cfg.n % 5 == 0) {
        const auto f = oracle::diagonal_pattern(cfg.m, cfg.n);
        const bool valid = oracle::validate_rdf(oracle::CylinderGraph(cfg.m, cfg.n), f);
        j["certificate"] = {{"weight", f.weight()}, {"valid", valid}};
        text << "diagonal certificate: weight " << f.weight() << (valid ? ", valid" : ", INVALID") << '\n';
        if (!cfg.out.empty()) {
            std::ofstream o(cfg.out);
            o << f.to_grid();
            if (!o) throw IoError("cannot write " + cfg.out);
        }
    }
    emit(cfg, j, text.str());
    return agree ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Roman domination number of cylinders P_m x C_n via (min,+) matrix powers"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--memory-budget-mib", cfg.memory_budget_mib, "refuse matrices larger than this");
    };
    const auto m_opt = [&](CLI::App* sub, int min_m) {
        sub->add_option("--m", cfg.m, "rows (path length)")->required()->check(CLI::Range(min_m, 64));
    };
    const auto n_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--n", cfg.n, "columns (cycle length)")->check(CLI::Range(3, 1000000));
        if (required) o->required();
    };
    const auto variant_opt = [&](CLI::App* sub) {
        sub->add_option("--variant", cfg.variant, "transition rules")->check(CLI::IsMember({"standard", "border"}));
    };
    const auto k_opt = [&](CLI::App* sub) {
        sub->add_option("--max-power", cfg.max_power, "largest power K")->check(CLI::Range(2, 100000));
    };

    auto* words = app.add_subcommand("words", "count or list the correct words of length m");
    m_opt(words, 2);
    variant_opt(words);
    words->add_flag("--list", cfg.list, "print every word");
    common(words);

    auto* matrix = app.add_subcommand("matrix", "build A(G) and optionally write it as TRPM");
    m_opt(matrix, 2);
    variant_opt(matrix);
    matrix->add_option("--out", cfg.out, "TRPM output path (word list goes to <out>.words)");
    common(matrix);

    auto* gamma = app.add_subcommand("gamma", "gamma_R(P_m x C_n) for fixed m, n");
    m_opt(gamma, 2);
    n_opt(gamma, true);
    common(gamma);

    auto* power = app.add_subcommand("power", "compute A^1..A^K, optionally into a disk cache");
    m_opt(power, 2);
    variant_opt(power);
    k_opt(power);
    power->add_option("--cache-dir", cfg.cache_dir, "directory for A_pow_k.trpm files");
    power->add_option("--out", cfg.out, "write A^K as TRPM");
    common(power);

    auto* recurrence = app.add_subcommand("recurrence", "search A^(n0+alpha) = beta (x) A^n0");
    m_opt(recurrence, 2);
    variant_opt(recurrence);
    k_opt(recurrence);
    recurrence->add_option("--cache-dir", cfg.cache_dir, "directory for A_pow_k.trpm files");
    common(recurrence);

    auto* formula = app.add_subcommand("formula", "closed formula for gamma_R(P_m x C_n), m fixed");
    m_opt(formula, 2);
    n_opt(formula, false);
    k_opt(formula);
    formula->add_option("--cache-dir", cfg.cache_dir, "directory for A_pow_k.trpm files");
    common(formula);

    auto* bound = app.add_subcommand("bound", "lower bound ceil(2(m+1)n/5)");
    m_opt(bound, 1);
    n_opt(bound, true);
    common(bound);

    auto* loss = app.add_subcommand("loss-verify", "border-block loss: 2L_a(n) against n, plus its recurrence");
    loss->add_option("--from", cfg.n_from, "first n")->check(CLI::Range(10, 100000));
    loss->add_option("--to", cfg.n_to, "last n")->check(CLI::Range(10, 100000));
    k_opt(loss);
    common(loss);

    auto* orc = app.add_subcommand("oracle", "independent gamma_R by enumeration / column DP");
    m_opt(orc, 1);
    n_opt(orc, true);
    orc->add_option("--mode", cfg.mode, "which oracle")->check(CLI::IsMember({"exhaustive", "dp", "row", "all"}));
    orc->add_option("--out", cfg.out, "write the diagonal certificate grid (n = 0 mod 5)");
    common(orc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*words) return cmd_words(cfg);
        if (*matrix) return cmd_matrix(cfg);
        if (*gamma) return cmd_gamma(cfg);
        if (*power) return cmd_power(cfg);
        if (*recurrence) return cmd_recurrence(cfg);
        if (*formula) return cmd_formula(cfg);
        if (*bound) return cmd_bound(cfg);
        if (*loss) return cmd_loss_verify(cfg);
        if (*orc) return cmd_oracle(cfg);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
