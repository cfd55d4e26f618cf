#include "serp/serialize.hpp"

#include <sstream>

namespace serp {

using nlohmann::json;

json to_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    if (fits_u64(v)) return json(to_u64(v));
    return json(v.get_str());
}

json to_json(const Rational& v) { return json(v.str()); }

json to_json(const Solution& s) {
    return json{{"P", to_json(s.P)},   {"A", to_json(s.A)},         {"B", to_json(s.B)},
                {"C", to_json(s.C)},   {"class", to_string(s.cls)}, {"strict", s.strict}};
}

json to_json(const Ed1Witness& w) {
    const Integer A = (w.u + w.c) / w.gamma;
    const Integer B = (w.v + w.c) / w.gamma;
    return json{{"P", to_json(w.P)}, {"gamma", to_json(w.gamma)}, {"c", to_json(w.c)},
                {"u", to_json(w.u)}, {"v", to_json(w.v)},         {"A", to_json(A)},
                {"B", to_json(B)},   {"C", to_json(w.c * w.P)}};
}

json to_json(const NormalizedEd2& n) {
    return json{{"P", to_json(n.w.P)},         {"delta", to_json(n.w.delta)},   {"b", to_json(n.w.b)},
                {"c", to_json(n.w.c)},         {"r", to_json(n.w.r)},           {"s", to_json(n.w.s)},
                {"A", to_json(n.w.A)},         {"g", to_json(n.g)},             {"bprime", to_json(n.bprime)},
                {"cprime", to_json(n.cprime)}, {"alpha", to_json(n.alpha)},     {"dprime", to_json(n.dprime)},
                {"m", to_json(n.m)},           {"canonical", n.canonical}};
}

json to_json(const ScanReport& r, bool per_prime) {
    json classes = json::array();
    for (const auto& c : r.classes) {
        classes.push_back({{"delta", c.cls.delta},
                           {"r", c.cls.r},
                           {"modulus", c.cls.modulus},
                           {"residue", c.cls.residue},
                           {"primes_found", c.primes_found},
                           {"first_prime", c.first_prime ? json(*c.first_prime) : json(nullptr)},
                           {"exceptional", c.exceptional},
                           {"li_deviation", c.li_deviation}});
    }
    json out{{"x", r.x},
             {"R", r.R},
             {"delta", r.delta},
             {"population", r.population},
             {"total_by_prime", r.total_by_prime},
             {"total_by_class", r.total_by_class},
             {"average", r.average ? to_json(*r.average) : json(nullptr)},
             {"average_approx", r.average ? json(r.average->approx()) : json(nullptr)},
             {"phi_sum", to_json(r.phi_sum)},
             {"phi_sum_approx", r.phi_sum.approx()},
             {"exceptional", r.exceptional},
             {"classes", classes},
             {"li_method", "offset Li(x) = li(x) - li(2), li by its ln-power series"}};
    json per_r = json::object();
    for (const auto& [rr, n] : r.per_r_counts()) per_r[std::to_string(rr)] = n;
    out["per_r_counts"] = per_r;
    if (per_prime) {
        json np = json::object();
        for (const auto& [p, n] : r.n_of_p) np[std::to_string(p)] = n;
        out["n_of_p"] = np;
    }
    return out;
}

json to_json(const GrowthFit& f) {
    json rows = json::array();
    for (std::size_t i = 0; i < f.R.size(); ++i) {
        json row{{"R", f.R[i]}, {"mean", to_json(f.mean[i])}, {"mean_approx", f.mean[i].approx()}};
        if (i < f.residuals.size()) row["residual"] = f.residuals[i];
        rows.push_back(row);
    }
    return json{{"x", f.x}, {"delta", f.delta}, {"fitted_constant", f.slope}, {"intercept", f.intercept}, {"rows", rows}};
}

namespace {

json values_json(const RowValues& v) {
    json out = json::object();
    for (const auto& [k, x] : v) out[k] = to_json(x);
    return out;
}

}  // namespace

json to_json(const ErrataEntry& e) {
    json out{{"table", e.table_id},
             {"P", to_json(e.P)},
             {"row", e.row},
             {"status", e.match() ? "Match" : "Mismatch"},
             {"printed", values_json(e.printed)},
             {"recomputed", e.recomputed ? values_json(*e.recomputed) : json(nullptr)},
             {"anchor", e.anchor},
             {"mismatched", e.mismatched},
             {"canonical", e.canonical},
             {"backtest", e.backtest},
             {"convolution", e.convolution},
             {"known_erratum", e.known_erratum}};
    out["xy_identity"] = e.xy_identity ? json(*e.xy_identity) : json(nullptr);
    return out;
}

std::string solution_csv_header() { return "#,alpha,bprime,cprime,g,b,c,delta,X,Y,N,A,B,C,dprime,class,strict"; }

std::string solution_csv_row(std::size_t index, const Solution& s, const NormalizedEd2* ed2) {
    std::ostringstream os;
    os << index << ',';
    if (ed2) {
        const auto& w = ed2->w;
        os << ed2->alpha << ',' << ed2->bprime << ',' << ed2->cprime << ',' << ed2->g << ',' << w.b << ',' << w.c << ','
           << w.delta << ',' << w.r << ',' << w.s << ',' << w.r * w.s << ',';
    } else {
        os << ",,,,,,,,,,";
    }
    os << s.A << ',' << s.B << ',' << s.C << ',';
    if (ed2) os << ed2->dprime;
    os << ',' << to_string(s.cls) << ',' << (s.strict ? "true" : "false");
    return os.str();
}

}  // namespace serp
