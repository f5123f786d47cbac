#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quotsing/invariants.hpp"
#include "quotsing/jordanred.hpp"
#include "quotsing/scan.hpp"
#include "quotsing/toriclat.hpp"

namespace quotsing {

using Json = nlohmann::ordered_json;

/// [num, den]; components become decimal strings once they leave int64.
Json to_json(const BigRational& q);
/// Accepts [num, den], an integer, or a string "p" / "p/q".
BigRational rational_from_json(const Json& j);

/// {"m": int, "coeffs": [[num, den], ...]}.
Json to_json(const CyclotomicNumber& a);
CyclotomicNumber cyclotomic_from_json(const Json& j);

Json to_json(const GroupElement& g);
Json to_json(const EigenExponents& e);
Json to_json(const SingularityReport& r);
Json to_json(const ToricGorensteinReport& r);
Json to_json(const DivisibilityReport& r);
Json to_json(const ScanRow& row);
Json to_json(const std::vector<IndexCell>& table);

/// Rationals print as "p/q" (or "p" when integral).
std::string to_text(const SingularityReport& r);
std::string to_text(const ToricGorensteinReport& r, std::size_t n);
std::string to_text(const DivisibilityReport& r);
std::string to_text(const std::vector<IndexCell>& table);

std::string csv_header();
std::string to_csv(const std::vector<ScanRow>& rows);
ScanRow row_from_csv(std::string_view line);
std::vector<ScanRow> rows_from_csv(std::string_view text);
ScanRow row_from_json(const Json& j);

}  // namespace quotsing
