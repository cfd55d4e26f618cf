#pragma once

// JSON and CSV wire forms. Integers that fit in 64 bits are emitted as JSON
// numbers; wider values are emitted as decimal strings.

#include <string>

#include "json.hpp"
#include "serp/ed1.hpp"
#include "serp/ed2.hpp"
#include "serp/progression.hpp"
#include "serp/reference_tables.hpp"
#include "serp/solution.hpp"

namespace serp {

nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const Rational& v);
nlohmann::json to_json(const Solution& s);
/// {"P","gamma","c","u","v","A","B","C"}
nlohmann::json to_json(const Ed1Witness& w);
/// {"P","delta","b","c","r","s","A","g","bprime","cprime","alpha","dprime","m","canonical"}
nlohmann::json to_json(const NormalizedEd2& n);
nlohmann::json to_json(const ScanReport& r, bool per_prime);
nlohmann::json to_json(const GrowthFit& f);
nlohmann::json to_json(const ErrataEntry& e);

/// Header of the table-compatible CSV form.
std::string solution_csv_header();
/// One CSV line; two-multiple columns are filled when `ed2` is given.
std::string solution_csv_row(std::size_t index, const Solution& s, const NormalizedEd2* ed2);

}  // namespace serp
