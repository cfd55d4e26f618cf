#pragma once

// Reference two-multiple tables, transcribed as printed, and an audit that
// recomputes every row from the oracle and the constructive searches.
//
// Known inconsistencies are kept in a registry next to the transcription so
// the audit can confirm it finds exactly those and nothing else.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "serp/ed2.hpp"

namespace serp {

using RowValues = std::map<std::string, Integer>;

struct PrintedRow {
    int row = 0;  // 1-based, as numbered in the source table
    RowValues values;
};

struct ReferenceTable {
    std::string id;
    std::string caption;
    Integer P;
    std::vector<std::string> columns;
    std::vector<PrintedRow> rows;
};

struct KnownErratum {
    std::string table_id;
    std::uint64_t P;
    int row;
    std::vector<std::string> columns;  // printed columns that disagree with the recomputation
};

const std::vector<ReferenceTable>& reference_tables();
const std::vector<KnownErratum>& known_errata();

/// Primes with an auditable table: 31, 41, 73, 97, 2521, 3511.
std::vector<std::uint64_t> table_primes();
std::optional<ReferenceTable> reference_table_for(std::uint64_t P);

/// All column values implied by a two-multiple witness.
RowValues row_values(const NormalizedEd2& n);

struct ErrataEntry {
    std::string table_id;
    Integer P;
    int row = 0;
    RowValues printed;
    std::optional<RowValues> recomputed;
    std::string anchor;  // how the recomputed witness was located
    std::vector<std::string> mismatched;
    std::optional<bool> xy_identity;  // X*Y = 5*alpha*P*d'^2 + 1 on printed values
    bool canonical = false;           // recomputed witness passes normalization
    bool backtest = false;
    std::string convolution;  // outcome of the ED2 -> ED1 transfer on the recomputed witness
    bool known_erratum = false;
    bool match() const { return recomputed.has_value() && mismatched.empty(); }
};

std::vector<ErrataEntry> audit_table(const ReferenceTable& table);

}  // namespace serp
