#include "serp/reference_tables.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "serp/bridge.hpp"
#include "serp/oracle.hpp"

namespace serp {

namespace {

const std::vector<std::string> kWideColumns = {"alpha", "bprime", "cprime", "g", "b", "c", "delta",
                                               "X",     "Y",      "N",      "A", "B", "C", "dprime"};
const std::vector<std::string> kNarrowColumns = {"A", "B", "C", "b", "c", "delta", "alpha", "dprime"};

PrintedRow make_row(int row, const std::vector<std::string>& columns, std::initializer_list<const char*> values) {
    PrintedRow out;
    out.row = row;
    auto it = values.begin();
    for (const auto& col : columns) out.values[col] = Integer(*it++);
    return out;
}

std::vector<ReferenceTable> build_tables() {
    std::vector<ReferenceTable> t;

    t.push_back({"ed2-73", "Two-multiple decompositions for P = 73", 73, kNarrowColumns, {}});
    t.back().rows = {
        make_row(1, kNarrowColumns, {"15", "584", "8760", "8", "120", "64", "1", "8"}),
        make_row(2, kNarrowColumns, {"15", "657", "3285", "9", "45", "27", "3", "3"}),
        make_row(3, kNarrowColumns, {"15", "730", "2190", "10", "30", "20", "5", "2"}),
        make_row(4, kNarrowColumns, {"15", "876", "1460", "12", "20", "16", "1", "4"}),
    };

    t.push_back({"ed2-examples", "Two-multiple examples for coefficient 5", 97, kNarrowColumns, {}});
    t.back().rows = {make_row(2, kNarrowColumns, {"22", "194", "1067", "2", "11", "1", "1", "1"})};

    t.push_back({"results", "Results with X*Y = 5*alpha*P*d'^2 + 1 check", 31, kWideColumns, {}});
    t.back().rows = {
        make_row(1, kWideColumns, {"1", "1", "8", "1", "1", "8", "1", "4", "39", "156", "8", "31", "248", "1"}),
        make_row(2, kWideColumns, {"1", "1", "7", "2", "2", "14", "4", "9", "69", "621", "7", "62", "434", "2"}),
    };

    t.push_back({"results", "Results with X*Y = 5*alpha*P*d'^2 + 1 check", 41, kWideColumns, {}});
    t.back().rows = {
        make_row(1, kWideColumns, {"3", "1", "3", "3", "3", "9", "9", "14", "44", "616", "616", "123", "369", "1"}),
    };

    t.push_back({"results", "Results with X*Y = 5*alpha*P*d'^2 + 1 check", 2521, kWideColumns, {}});
    t.back().rows = {
        make_row(1, kWideColumns,
                 {"5", "193", "2", "10", "1930", "20", "49", "9649", "99", "955251", "788", "486", "50420", "7"}),
        make_row(2, kWideColumns,
                 {"9", "183", "11", "25", "4575", "275", "50", "22874", "1374", "31413876", "251", "277310", "289915",
                  "5"}),
        make_row(3, kWideColumns,
                 {"3", "2", "87", "3", "6", "261", "3", "29", "1304", "37816", "522", "15126", "657981", "1"}),
        make_row(4, kWideColumns,
                 {"3", "2", "85", "9", "18", "765", "27", "89", "3824", "340336", "510", "45378", "1928565", "3"}),
        make_row(5, kWideColumns,
                 {"15", "39", "1", "13", "39", "39", "507", "194", "2534", "491596", "507", "98319", "1278147", "13"}),
    };

    // Printed without a d' column (alpha = d' = 1 throughout).
    const std::vector<std::string> cols3511(kWideColumns.begin(), kWideColumns.end() - 1);
    t.push_back({"solutions-3511", "Solutions for P = 3511 with alpha = 1, d' = 1", 3511, cols3511, {}});
    t.back().rows = {
        make_row(1, cols3511, {"1", "1", "878", "1", "1", "878", "1", "4", "4389", "17556", "878", "3511", "3082658"}),
        make_row(2, cols3511, {"1", "3", "251", "1", "3", "251", "1", "14", "1254", "17556", "753", "10533", "881261"}),
        make_row(3, cols3511, {"1", "4", "185", "1", "4", "185", "1", "19", "924", "17556", "740", "14044", "649535"}),
        make_row(4, cols3511, {"1", "9", "80", "1", "9", "80", "1", "44", "399", "17556", "720", "31599", "280880"}),
        make_row(5, cols3511, {"1", "17", "42", "1", "17", "42", "1", "84", "209", "17556", "714", "59687", "147462"}),
        make_row(6, cols3511, {"1", "23", "31", "1", "23", "31", "1", "114", "154", "17556", "713", "80753", "108841"}),
    };
    return t;
}

bool in_oracle(const std::set<std::pair<Integer, Integer>>& ed2_pairs, const Ed2Witness& w) {
    return ed2_pairs.count({w.b, w.c}) > 0;
}

// (b, c) candidates a printed row points at, in order of trust.
std::vector<std::pair<std::string, std::pair<Integer, Integer>>> anchors(const Integer& P, const RowValues& v) {
    std::vector<std::pair<std::string, std::pair<Integer, Integer>>> out;
    auto has = [&](const char* k) { return v.count(k) > 0; };
    if (has("B") && has("C") && divides(P, v.at("B")) && divides(P, v.at("C")))
        out.push_back({"B/P, C/P", {v.at("B") / P, v.at("C") / P}});
    if (has("b") && has("c")) out.push_back({"b, c", {v.at("b"), v.at("c")}});
    if (has("X") && has("Y")) {
        const Integer x1 = v.at("X") + 1, y1 = v.at("Y") + 1;
        if (divides(5, x1) && divides(5, y1)) out.push_back({"X, Y", {x1 / 5, y1 / 5}});
    }
    return out;
}

std::string convolution_outcome(const Ed2Witness& w) {
    auto res = convolve_ed2_to_ed1(w);
    if (auto* failed = std::get_if<PreconditionFailed>(&res)) return "PreconditionFailed: " + failed->reason;
    return "Mapped";
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = build_tables();
    return tables;
}

const std::vector<KnownErratum>& known_errata() {
    static const std::vector<KnownErratum> errata = {
        {"results", 41, 1, {"A", "delta"}},
        {"results", 2521, 1, {"A", "B", "C", "N", "X", "Y", "alpha", "b", "bprime", "c", "cprime", "delta", "dprime", "g"}},
        {"results", 2521, 2, {"A", "N", "X", "Y", "alpha", "b", "bprime", "c", "cprime", "delta", "g"}},
        {"results", 2521, 5, {"alpha", "bprime", "c", "cprime", "delta", "dprime", "g"}},
    };
    return errata;
}

std::vector<std::uint64_t> table_primes() { return {31, 41, 73, 97, 2521, 3511}; }

std::optional<ReferenceTable> reference_table_for(std::uint64_t P) {
    const std::string preferred = P == 97 ? "ed2-examples" : "";
    for (const auto& t : reference_tables()) {
        if (t.P != from_u64(P)) continue;
        if (!preferred.empty() && t.id != preferred) continue;
        return t;
    }
    return std::nullopt;
}

RowValues row_values(const NormalizedEd2& n) {
    const Ed2Witness& w = n.w;
    return {
        {"alpha", n.alpha}, {"bprime", n.bprime}, {"cprime", n.cprime}, {"g", n.g},
        {"b", w.b},         {"c", w.c},           {"delta", w.delta},   {"X", w.r},
        {"Y", w.s},         {"N", w.r * w.s},     {"A", w.A},           {"B", w.b * w.P},
        {"C", w.c * w.P},   {"dprime", n.dprime},
    };
}

std::vector<ErrataEntry> audit_table(const ReferenceTable& table) {
    const Integer& P = table.P;
    std::set<std::pair<Integer, Integer>> oracle_pairs;
    for (const auto& s : enumerate_all_solutions(P, true).solutions)
        if (s.cls == SolutionClass::ED2) oracle_pairs.insert({s.B / P, s.C / P});

    std::vector<ErrataEntry> entries;
    std::vector<std::optional<Ed2Witness>> found;
    for (const auto& row : table.rows) {
        ErrataEntry e;
        e.table_id = table.id;
        e.P = P;
        e.row = row.row;
        e.printed = row.values;
        const auto& v = row.values;
        if (v.count("X") && v.count("Y") && v.count("alpha") && v.count("dprime"))
            e.xy_identity = v.at("X") * v.at("Y") == 5 * v.at("alpha") * P * v.at("dprime") * v.at("dprime") + 1;

        std::optional<Ed2Witness> w;
        for (const auto& [how, bc] : anchors(P, v)) {
            auto cand = ed2_from_pair(P, bc.first, bc.second);
            if (cand && !ed2_violation(*cand) && in_oracle(oracle_pairs, *cand)) {
                w = std::move(cand);
                e.anchor = how;
                break;
            }
        }
        found.push_back(w);
        entries.push_back(std::move(e));
    }

    // A row no anchor resolves takes the oracle witness no other row claimed,
    // provided that pairing is unambiguous.
    std::vector<std::size_t> unresolved;
    auto unclaimed = oracle_pairs;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i])
            unclaimed.erase({found[i]->b, found[i]->c});
        else
            unresolved.push_back(i);
    }
    if (unresolved.size() == 1 && unclaimed.size() == 1) {
        const auto& [b, c] = *unclaimed.begin();
        found[unresolved[0]] = ed2_from_pair(P, b, c);
        entries[unresolved[0]].anchor = "unclaimed oracle witness";
    }

    for (std::size_t i = 0; i < entries.size(); ++i) {
        ErrataEntry& e = entries[i];
        if (!found[i]) {
            e.anchor = "none";
            e.mismatched.assign(table.columns.begin(), table.columns.end());
        } else {
            const NormalizedEd2 n = ed2_normalize(*found[i]);
            e.canonical = n.canonical;
            e.backtest = ed2_backtest(n, P);
            e.convolution = convolution_outcome(n.w);
            RowValues all = row_values(n);
            RowValues rec;
            for (const auto& col : table.columns) {
                rec[col] = all.at(col);
                if (e.printed.at(col) != rec[col]) e.mismatched.push_back(col);
            }
            std::sort(e.mismatched.begin(), e.mismatched.end());
            e.recomputed = std::move(rec);
        }
        for (const auto& k : known_errata())
            if (k.table_id == e.table_id && from_u64(k.P) == P && k.row == e.row) e.known_erratum = true;
    }
    return entries;
}

}  // namespace serp
