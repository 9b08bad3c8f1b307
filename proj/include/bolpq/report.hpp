#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bolpq/classify.hpp"

namespace bolpq {

/// Human-readable report. The header records t and omega because gamma
/// representatives depend on that choice while the counts do not.
std::string report_to_text(const ClassificationReport& report);

/// Machine-readable report with the same fields; gamma values are "a+b*w", w = sqrt(t).
nlohmann::json report_to_json(const ClassificationReport& report);

/// Columns: p, iso_count, isotop_count, remark_formula, nr_lower_bound, difference.
/// The last two are empty unless q = 3.
std::string count_rows_to_csv(const std::vector<CountRow>& rows);
std::string count_rows_to_text(const std::vector<CountRow>& rows);

std::string summary_to_text(const VerificationSummary& summary);

/// Parses "A,B" as A + B sqrt(t) with integers reduced mod p (B defaults to 0).
/// Throws InvalidInput on malformed text.
Fp2Element parse_gamma(const std::string& text, const Fp2Field& field);

}  // namespace bolpq
