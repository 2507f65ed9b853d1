#ifndef SCROLLCALC_REPORT_HPP
#define SCROLLCALC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "scrollcalc/degeneration.hpp"

namespace scrollcalc {

inline constexpr const char* kJsonSchema = "scrollcalc/1";

/// Everything cmd_analyze emits for one configuration: the component report
/// plus the extension classes, spans, eps-side data and the certificate.
struct AnalysisReport {
    ComponentReport core;
    BundlePair pair;
    ABCohomology ab;
    i64 h0_E = 0;
    i64 dim_ext1 = 0;
    HilbertPolynomial hilbert;
    EpsilonConfig eps;
    BundlePair eps_pair;
    SpecializationCertificate certificate;
};

/// audit_mode additionally diffs computed values against the printed values
/// of the three worked examples (when cfg is one of them) and records any
/// discrepancy as a "paper-discrepancy: ..." flag; computed values are never
/// altered.
AnalysisReport build_analysis(const ScrollConfig& cfg, bool audit_mode);

nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const ScrollConfig& cfg);
nlohmann::json to_json(const SpecializationCertificate& cert,
                       const ScrollConfig& cfg, const EpsilonConfig& ec);
nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

/// One verdict of the worked-example auditor.
struct AuditFinding {
    enum class Verdict { match, mismatch, paper_internal_inconsistency };

    int example_id = 0;  // 1, 2 or 3
    std::string checked_claim;
    std::string paper_value;
    std::string computed_value;
    Verdict verdict = Verdict::match;
};

std::string to_string(AuditFinding::Verdict v);

/// Re-runs the three worked examples (2,11,11), (3,15,15), (4,18,18) and
/// compares every audited printed value with the computed one.
std::vector<AuditFinding> audit_examples();

/// One range-scan output row.
struct ScanRow {
    ScrollConfig cfg;
    ScrollInvariants inv;
    i64 dim_ext1 = 0;
    i64 h0_end_generic = 0;
    i64 dim_component = 0;
    CodimScrollLocus codim;
    bool dominates = false;
};

/// All admissible rows for e with b in [b_min, b_max], ordered
/// lexicographically in (b, k).  Rows are independent pure computations;
/// `jobs` > 1 splits them across threads, output order is unaffected.
std::vector<ScanRow> scan_rows(i64 e, i64 b_min, i64 b_max, unsigned jobs = 1);

std::string scan_tsv(const std::vector<ScanRow>& rows);
std::string scan_json_lines(const std::vector<ScanRow>& rows);

}  // namespace scrollcalc

#endif
