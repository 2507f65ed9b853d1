// scrollcalc: exact invariants of threefold scrolls over Hirzebruch surfaces,
// with range scans, a worked-example auditor and a splitting-type
// specialization query.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrollcalc/report.hpp"

namespace {

using namespace scrollcalc;

std::vector<std::string> admissibility_violations(const ScrollConfig& cfg) {
    auto weak = admissible_weak(cfg);
    std::vector<std::string> labels = weak.violated;
    for (const auto& u : weak.undetermined) labels.push_back(u + " (undetermined)");
    if (!(i128(cfg.b) - cfg.e < cfg.k)) labels.push_back("b-e<k");
    if (!(i128(cfg.k) < i128(2) * cfg.b - i128(4) * cfg.e)) labels.push_back("k<2b-4e");
    return labels;
}

// exit 2 printing the violated labels when cfg is not strictly admissible
int require_strict_or_report(const ScrollConfig& cfg) {
    if (admissible_strict(cfg)) return 0;
    for (const auto& label : admissibility_violations(cfg))
        std::cerr << label << " violated\n";
    return 2;
}

int run_analyze(const ScrollConfig& cfg, const std::string& format, bool audit_mode) {
    if (int rc = require_strict_or_report(cfg)) return rc;
    auto report = build_analysis(cfg, audit_mode);
    if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << to_text(report);
    return report.core.consistent ? 0 : 1;
}

int run_scan(i64 e, i64 b_min, i64 b_max, const std::string& out,
             const std::string& format, unsigned jobs) {
    auto rows = scan_rows(e, b_min, b_max, jobs);
    std::string payload = format == "json-lines" ? scan_json_lines(rows) : scan_tsv(rows);
    if (out == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file || !(file << payload) || !file.flush()) {
        std::cerr << "error: cannot write " << out << "\n";
        return 1;
    }
    return 0;
}

int run_audit(const std::string& format) {
    auto findings = audit_examples();
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : findings)
            arr.push_back({{"example_id", f.example_id},
                           {"checked_claim", f.checked_claim},
                           {"paper_value", f.paper_value},
                           {"computed_value", f.computed_value},
                           {"verdict", to_string(f.verdict)}});
        nlohmann::json j{{"schema", kJsonSchema}, {"findings", arr}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& f : findings) {
            std::cout << "example " << f.example_id << " | " << f.checked_claim
                      << " | printed " << f.paper_value << " | computed "
                      << f.computed_value << " | " << to_string(f.verdict) << "\n";
        }
    }
    for (const auto& f : findings)
        if (f.example_id == 1 && f.verdict != AuditFinding::Verdict::match) return 1;
    return 0;
}

int run_specialize(const std::string& from_text, const std::string& to_text_arg) {
    SplittingType from = SplittingType::parse(from_text);
    SplittingType to = SplittingType::parse(to_text_arg);
    if (specializes(from, to)) {
        std::cout << "true\n";
        return 0;
    }
    std::cout << "false";
    if (from.rank() != to.rank()) {
        std::cout << " (rank mismatch " << from.rank() << " != " << to.rank() << ")";
    } else if (from.degree() != to.degree()) {
        std::cout << " (degree mismatch " << from.degree() << " != " << to.degree()
                  << ")";
    } else {
        auto [lo, hi] = active_twist_window(from, to);
        for (i64 t = lo; t <= hi; ++t) {
            i64 hf = splitting_cohomology(from, t).h0;
            i64 ht = splitting_cohomology(to, t).h0;
            if (hf > ht) {
                std::cout << " (first violated twist " << t << ": h0 " << hf << " > "
                          << ht << ")";
                break;
            }
        }
    }
    std::cout << "\n";
    return 3;
}

int run_hilbert(const ScrollConfig& cfg, const std::vector<i64>& evals,
                const std::string& format) {
    if (int rc = require_strict_or_report(cfg)) return rc;
    auto poly = hilbert_polynomial(cfg);
    if (format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int i = 0; i <= 3; ++i) coeffs.push_back(poly.coeff(i).str());
        nlohmann::json values = nlohmann::json::array();
        for (i64 m : evals) values.push_back({{"m", m}, {"value", poly.eval_int(m)}});
        nlohmann::json j{{"schema", kJsonSchema},
                         {"cfg", to_json(cfg)},
                         {"coefficients", coeffs},
                         {"values", values}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "P(T) = " << poly.str() << "\n";
        for (i64 m : evals)
            std::cout << "P(" << m << ") = " << poly.eval_int(m) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of threefold scrolls over Hirzebruch surfaces"};
    app.require_subcommand(1);

    i64 e = 2, b = 0, k = 0, b_min = 0, b_max = 0;
    std::string format = "text", scan_format = "tsv", out = "-";
    std::string from_text, to_text_arg;
    std::vector<i64> evals;
    bool audit_mode = false;
    unsigned jobs = 1;

    auto* analyze = app.add_subcommand("analyze", "full report for one configuration");
    analyze->add_option("--e", e, "Hirzebruch index (>= 2)")->required();
    analyze->add_option("--b", b, "c1 fiber coefficient b")->required();
    analyze->add_option("--k", k, "second Chern number k")->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--audit-mode", audit_mode,
                      "flag discrepancies against the worked-example values");

    auto* scan = app.add_subcommand("scan", "all admissible configurations in a range");
    scan->add_option("--e", e)->required();
    scan->add_option("--b-min", b_min)->required();
    scan->add_option("--b-max", b_max)->required();
    scan->add_option("--out", out, "output path, - for stdout");
    scan->add_option("--format", scan_format)
        ->check(CLI::IsMember({"tsv", "json-lines"}));
    scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* audit = app.add_subcommand("audit-examples",
                                     "reproduce or flag the three worked examples");
    audit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* specialize =
        app.add_subcommand("specialize", "is --to a flat specialization of --from?");
    specialize->add_option("--from", from_text, "splitting type, e.g. 5,5,5,3,3")
        ->required();
    specialize->add_option("--to", to_text_arg, "splitting type, e.g. 7,5,4,3,2")
        ->required();

    auto* hilbert =
        app.add_subcommand("hilbert-poly", "Hilbert polynomial with exact coefficients");
    hilbert->add_option("--e", e)->required();
    hilbert->add_option("--b", b)->required();
    hilbert->add_option("--k", k)->required();
    hilbert->add_option("--eval", evals, "evaluate P at these integers");
    hilbert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(ScrollConfig(e, b, k), format, audit_mode);
        if (scan->parsed()) return run_scan(e, b_min, b_max, out, scan_format, jobs);
        if (audit->parsed()) return run_audit(format);
        if (specialize->parsed()) return run_specialize(from_text, to_text_arg);
        if (hilbert->parsed()) return run_hilbert(ScrollConfig(e, b, k), evals, format);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
