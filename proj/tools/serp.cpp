#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "serp/bridge.hpp"
#include "serp/ed1.hpp"
#include "serp/ed2.hpp"
#include "serp/explicit_residues.hpp"
#include "serp/lattice.hpp"
#include "serp/oracle.hpp"
#include "serp/prime_sieve.hpp"
#include "serp/progression.hpp"
#include "serp/reference_tables.hpp"
#include "serp/serialize.hpp"

using nlohmann::json;
using namespace serp;

namespace {

enum Exit { kOk = 0, kNoSolution = 1, kUsage = 2, kInvariant = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Table };

Format resolve_format(const std::string& f) {
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    if (f == "table") return Format::Table;
    return isatty(fileno(stdout)) ? Format::Table : Format::Json;
}

Integer parse_integer(const std::string& s, const char* what) {
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
    return v;
}

Integer parse_prime(const std::string& s) {
    const Integer P = parse_integer(s, "P");
    if (P < 2) throw UsageError("P must be a prime >= 2");
    if (!is_prime(P)) throw UsageError("P = " + s + " is not prime; pass a prime");
    return P;
}

// Flag, then environment, then the built-in default.
Integer resolve_bound(const std::string& flag, const char* env, const Integer& fallback) {
    if (!flag.empty()) return parse_integer(flag, "bound");
    if (const char* e = std::getenv(env); e && *e) return parse_integer(e, env);
    return fallback;
}

// Aligned text table.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const {
        std::vector<std::size_t> w(header_.size(), 0);
        auto widen = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
        };
        widen(header_);
        for (const auto& r : rows_) widen(r);
        auto line = [&](const std::vector<std::string>& r) {
            std::string out;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out += "  ";
                out += r[i];
                if (i + 1 < r.size()) out.append(w[i] - r[i].size(), ' ');
            }
            os << out << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string str(const Integer& v) { return v.get_str(); }

// A solution with the witness that produced it, if any.
struct Found {
    Solution sol;
    std::optional<NormalizedEd2> ed2;
    std::optional<Ed1Witness> ed1;
};

// Last gate before anything reaches stdout.
void recheck(const Solution& s) {
    if (!verify_solution(s.P, s.A, s.B, s.C))
        throw Error(Errc::InvalidSolution, "refusing to print unverified triple for P = " + str(s.P));
}

json found_json(const Found& f) {
    json j = to_json(f.sol);
    if (f.ed2) j["witness"] = to_json(*f.ed2);
    if (f.ed1) j["witness"] = to_json(*f.ed1);
    return j;
}

std::string witness_summary(const Found& f) {
    if (f.ed2) return "delta=" + str(f.ed2->w.delta) + " b=" + str(f.ed2->w.b) + " c=" + str(f.ed2->w.c);
    if (f.ed1) return "gamma=" + str(f.ed1->gamma) + " c=" + str(f.ed1->c) + " u=" + str(f.ed1->u);
    return "";
}

void emit_found(const std::vector<Found>& all, Format fmt) {
    for (const auto& f : all) recheck(f.sol);
    if (fmt == Format::Json) {
        for (const auto& f : all) std::cout << found_json(f).dump() << '\n';
    } else if (fmt == Format::Csv) {
        std::cout << solution_csv_header() << '\n';
        for (std::size_t i = 0; i < all.size(); ++i)
            std::cout << solution_csv_row(i + 1, all[i].sol, all[i].ed2 ? &*all[i].ed2 : nullptr) << '\n';
    } else {
        TextTable t({"#", "P", "A", "B", "C", "class", "strict", "witness"});
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto& s = all[i].sol;
            t.add({std::to_string(i + 1), str(s.P), str(s.A), str(s.B), str(s.C), to_string(s.cls),
                   s.strict ? "yes" : "no", witness_summary(all[i])});
        }
        t.print(std::cout);
    }
}

struct DecomposeOpts {
    std::string method = "auto";
    bool all = false;
    bool weak = false;
    std::string gamma_max, delta_max;
};

Found strictify(Found f, bool weak) {
    if (!weak && !f.sol.strict) {
        f.sol = repair_distinct(f.sol);
        // The rewrite changes B or C, so the original witness no longer applies.
        f.ed1.reset();
        f.ed2.reset();
    }
    return f;
}

std::vector<Found> run_ed2(const Integer& P, const Integer& delta_max, bool all) {
    std::vector<Found> out;
    for (const auto& w : ed2_search(P, delta_max)) {
        out.push_back({ed2_reconstruct(w), ed2_normalize(w), std::nullopt});
        if (!all) break;
    }
    return out;
}

std::vector<Found> run_ed1(const Integer& P, const Integer& gamma_max, bool all) {
    std::vector<Found> out;
    for (const auto& w : ed1_search(P, gamma_max)) {
        out.push_back({ed1_reconstruct(w), std::nullopt, w});
        if (!all) break;
    }
    return out;
}

std::vector<Found> decompose(const Integer& P, const DecomposeOpts& o) {
    const Integer gmax = resolve_bound(o.gamma_max, "SERP_GAMMA_MAX", default_gamma_max(P));
    const Integer dmax = resolve_bound(o.delta_max, "SERP_DELTA_MAX", default_delta_max(P));
    const unsigned long res = mpz_fdiv_ui(P.get_mpz_t(), 5);
    std::vector<Found> out;

    std::string method = o.method;
    if (method == "auto") {
        if (res == 0 || P == 2) {
            // P = 5 and P = 2 have no closed form; the oracle range is tiny.
            for (const auto& s : enumerate_all_solutions(P, !o.weak).solutions) {
                out.push_back({s, std::nullopt, std::nullopt});
                if (!o.all) break;
            }
            return out;
        }
        method = res == 1 ? "ed2+ed1" : "explicit";
    }
    if (method == "explicit") {
        if (res == 0 || res == 1)
            throw UsageError("--method explicit needs P mod 5 in {2, 3, 4}; P mod 5 = " + std::to_string(res));
        out.push_back({decompose_explicit(P), std::nullopt, std::nullopt});
    } else {
        if (res != 1) throw UsageError("--method " + o.method + " needs P = 1 (mod 5)");
        if (method != "ed1") out = run_ed2(P, dmax, o.all);
        if (method == "ed1" || (method == "ed2+ed1" && (o.all || out.empty()))) {
            auto e1 = run_ed1(P, gmax, o.all);
            out.insert(out.end(), e1.begin(), e1.end());
        }
        if (!o.all && out.size() > 1) out.resize(1);
    }
    for (auto& f : out) f = strictify(std::move(f), o.weak);
    if (o.all)
        std::stable_sort(out.begin(), out.end(), [](const Found& a, const Found& b) {
            return std::tie(a.sol.A, a.sol.B, a.sol.C) < std::tie(b.sol.A, b.sol.B, b.sol.C);
        });
    return out;
}

void check_method(const std::string& m) {
    if (m != "auto" && m != "explicit" && m != "ed1" && m != "ed2")
        throw UsageError("--method must be one of auto, explicit, ed1, ed2");
}

int cmd_decompose(const std::string& p, const DecomposeOpts& o, Format fmt) {
    check_method(o.method);
    const Integer P = parse_prime(p);
    const auto found = decompose(P, o);
    if (found.empty()) {
        std::cerr << "no solution for P = " << P
                  << (mpz_fdiv_ui(P.get_mpz_t(), 5) == 1 ? " within bounds; raise --gamma-max or --delta-max\n"
                                                           : " with distinct denominators; try --weak\n");
        return kNoSolution;
    }
    emit_found(found, fmt);
    return kOk;
}

int cmd_verify(const std::vector<std::string>& args, Format fmt) {
    const Integer P = parse_integer(args[0], "P");
    const Integer A = parse_integer(args[1], "A"), B = parse_integer(args[2], "B"), C = parse_integer(args[3], "C");
    if (P < 1 || A < 1 || B < 1 || C < 1) throw UsageError("P, A, B, C must be positive");
    const bool ok = verify_solution(P, A, B, C);
    json j{{"P", to_json(P)}, {"A", to_json(A)}, {"B", to_json(B)}, {"C", to_json(C)}, {"valid", ok}};
    if (ok) {
        const Solution s = make_solution(P, A, B, C, SolutionClass::Explicit);
        j["strict"] = s.strict;
        if (is_prime(P) && P > 5) {
            const auto mc = classify_solution(s);
            j["multiples"] = mc.count;
            j["class"] = mc.count == 0 ? "Explicit" : to_string(multiplicity_class(s));
        }
    }
    if (fmt == Format::Table) {
        std::cout << "5/" << P << " = 1/" << A << " + 1/" << B << " + 1/" << C << (ok ? "  holds" : "  fails");
        if (j.contains("class")) std::cout << "  class " << j["class"].get<std::string>();
        std::cout << '\n';
    } else if (fmt == Format::Csv) {
        std::cout << "P,A,B,C,valid\n" << P << ',' << A << ',' << B << ',' << C << ',' << (ok ? "true" : "false") << '\n';
    } else {
        std::cout << j.dump() << '\n';
    }
    return ok ? kOk : kNoSolution;
}

int cmd_scan(const std::string& from, const std::string& to, const DecomposeOpts& o, Format fmt) {
    check_method(o.method);
    const Integer lo = parse_integer(from, "--from"), hi = parse_integer(to, "--to");
    if (!fits_u64(hi) || hi < lo) throw UsageError("--to must be >= --from and fit in 64 bits");
    std::vector<Found> found;
    std::vector<std::uint64_t> missing;
    for (std::uint64_t p : primes_up_to(to_u64(hi))) {
        if (from_u64(p) < lo) continue;
        DecomposeOpts one = o;
        one.all = false;
        const Integer P = from_u64(p);
        const unsigned long res = p % 5;
        if (o.method == "explicit" && (res == 0 || res == 1)) continue;
        if ((o.method == "ed1" || o.method == "ed2") && res != 1) continue;
        auto f = decompose(P, one);
        if (f.empty())
            missing.push_back(p);
        else
            found.push_back(f.front());
    }
    emit_found(found, fmt);
    for (auto p : missing) std::cerr << "no solution for P = " << p << " within bounds\n";
    return missing.empty() ? kOk : kNoSolution;
}

int cmd_sieve(std::uint64_t delta, std::uint64_t rmax, std::uint64_t xmax, Format fmt) {
    if (delta == 0) throw UsageError("--delta must be positive");
    const ScanReport r = average_local_params(xmax, rmax, delta);
    if (fmt == Format::Csv) {
        std::cout << classes_csv(r.classes);
    } else if (fmt == Format::Json) {
        for (const auto& c : r.classes) {
            json j{{"delta", c.cls.delta},       {"r", c.cls.r},
                   {"modulus", c.cls.modulus},   {"residue", c.cls.residue},
                   {"primes_found", c.primes_found}, {"exceptional", c.exceptional},
                   {"first_prime", c.first_prime ? json(*c.first_prime) : json(nullptr)}};
            std::cout << j.dump() << '\n';
        }
    } else {
        TextTable t({"r", "class", "primes", "first", "exceptional"});
        for (const auto& c : r.classes)
            t.add({std::to_string(c.cls.r),
                   std::to_string(c.cls.residue) + " mod " + std::to_string(c.cls.modulus),
                   std::to_string(c.primes_found), c.first_prime ? std::to_string(*c.first_prime) : "-",
                   c.exceptional ? "yes" : "no"});
        t.print(std::cout);
    }
    return kOk;
}

int cmd_stats(std::uint64_t x, std::uint64_t rmax, std::uint64_t delta, const std::vector<std::uint64_t>& fit,
              bool per_prime, Format fmt) {
    if (delta == 0) throw UsageError("--delta must be positive");
    const ScanReport r = average_local_params(x, rmax, delta);
    if (r.total_by_prime != r.total_by_class)
        throw Error(Errc::Inconsistent, "double counting: sum over P differs from sum over classes");
    std::optional<GrowthFit> g;
    if (!fit.empty()) g = fit_average_growth(x, delta, fit);
    if (fmt == Format::Table) {
        std::cout << "x = " << x << ", R = " << rmax << ", delta = " << delta << '\n'
                  << "primes P = 1 (mod 5): " << r.population << '\n'
                  << "sum N(P) = " << r.total_by_prime << " = sum of class counts " << r.total_by_class << '\n'
                  << "average N = " << (r.average ? r.average->str() : "undefined") << '\n'
                  << "sum 1/phi(5r) = " << r.phi_sum.str() << '\n'
                  << "exceptional r: " << r.exceptional.size() << '\n';
        if (g) {
            TextTable t({"R", "mean", "residual"});
            for (std::size_t i = 0; i < g->R.size(); ++i) {
                std::ostringstream res;
                res << (i < g->residuals.size() ? g->residuals[i] : 0.0);
                t.add({std::to_string(g->R[i]), std::to_string(g->mean[i].approx()), res.str()});
            }
            t.print(std::cout);
            std::cout << "fitted constant " << g->slope << ", intercept " << g->intercept << '\n';
        }
    } else if (fmt == Format::Csv) {
        std::cout << "x,R,delta,population,total,average,phi_sum,exceptional\n"
                  << x << ',' << rmax << ',' << delta << ',' << r.population << ',' << r.total_by_prime << ','
                  << (r.average ? r.average->str() : "") << ',' << r.phi_sum.str() << ',' << r.exceptional.size()
                  << '\n';
        if (g) {
            std::cout << "R,mean\n";
            for (std::size_t i = 0; i < g->R.size(); ++i) std::cout << g->R[i] << ',' << g->mean[i].str() << '\n';
        }
    } else {
        json j = to_json(r, per_prime);
        if (g) j["growth"] = to_json(*g);
        std::cout << j.dump() << '\n';
    }
    return kOk;
}

std::string values_str(const RowValues& v, const std::vector<std::string>& cols) {
    std::string out;
    for (const auto& c : cols) {
        if (!v.count(c)) continue;
        if (!out.empty()) out += ' ';
        out += c + "=" + str(v.at(c));
    }
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return out;
}

int cmd_table(std::uint64_t P, bool check, Format fmt) {
    const auto table = reference_table_for(P);
    if (!table) throw UsageError("no reference table for P = " + std::to_string(P) + "; choose 31, 41, 73, 97, 2521 or 3511");
    if (!check) {
        if (fmt == Format::Json) {
            for (const auto& row : table->rows) {
                json j{{"table", table->id}, {"P", P}, {"row", row.row}};
                for (const auto& [k, v] : row.values) j[k] = to_json(v);
                std::cout << j.dump() << '\n';
            }
        } else {
            std::vector<std::string> head{"#"};
            head.insert(head.end(), table->columns.begin(), table->columns.end());
            if (fmt == Format::Csv) {
                std::cout << join(head) << '\n';
                for (const auto& row : table->rows) {
                    std::cout << row.row;
                    for (const auto& c : table->columns) std::cout << ',' << row.values.at(c);
                    std::cout << '\n';
                }
            } else {
                TextTable t(head);
                for (const auto& row : table->rows) {
                    std::vector<std::string> cells{std::to_string(row.row)};
                    for (const auto& c : table->columns) cells.push_back(str(row.values.at(c)));
                    t.add(cells);
                }
                t.print(std::cout);
            }
        }
        return kOk;
    }

    const auto entries = audit_table(*table);
    // Exit 3 when the audit disagrees with the errata registry.
    bool consistent = true;
    for (const auto& e : entries) {
        if (e.match() == e.known_erratum) consistent = false;
        if (e.known_erratum)
            for (const auto& k : known_errata())
                if (k.table_id == e.table_id && from_u64(k.P) == e.P && k.row == e.row && k.columns != e.mismatched)
                    consistent = false;
    }

    if (fmt == Format::Json) {
        for (const auto& e : entries) std::cout << to_json(e).dump() << '\n';
    } else if (fmt == Format::Csv) {
        std::cout << "table,P,row,status,anchor,mismatched,canonical,backtest,convolution,known_erratum\n";
        for (const auto& e : entries)
            std::cout << e.table_id << ',' << e.P << ',' << e.row << ',' << (e.match() ? "Match" : "Mismatch") << ",\""
                      << e.anchor << "\",\"" << join(e.mismatched) << "\"," << e.canonical << ',' << e.backtest
                      << ",\"" << e.convolution << "\"," << e.known_erratum << '\n';
    } else {
        TextTable t({"row", "status", "anchor", "mismatched", "recomputed", "bridge"});
        for (const auto& e : entries)
            t.add({std::to_string(e.row), e.match() ? "Match" : "Mismatch", e.anchor, join(e.mismatched),
                   e.recomputed ? values_str(*e.recomputed, {"b", "c", "delta", "alpha", "dprime", "A"}) : "-",
                   e.convolution});
        t.print(std::cout);
        for (const auto& e : entries)
            if (e.xy_identity)
                std::cout << "row " << e.row << ": printed X*Y = 5*alpha*P*d'^2 + 1 "
                          << (*e.xy_identity ? "holds" : "fails") << '\n';
    }
    if (!consistent) {
        std::cerr << "audit disagrees with the errata registry\n";
        return kInvariant;
    }
    return kOk;
}

int cmd_density(const std::vector<std::uint64_t>& basis, const std::vector<std::int64_t>& shift,
                const std::vector<std::uint64_t>& sides, Format fmt) {
    if (basis.size() != 3 || shift.size() != 2) throw UsageError("--basis takes a,b,d and --shift takes x0,y0");
    const SublatticeClass cls(basis[0], basis[1], basis[2], shift[0], shift[1]);
    std::vector<DensityRow> rows;
    for (auto T : sides) rows.push_back(density_row(cls, T));
    if (fmt == Format::Csv) {
        std::cout << density_csv(rows);
    } else if (fmt == Format::Json) {
        for (const auto& r : rows)
            std::cout << json{{"class", cls.describe()}, {"M", r.M}, {"T", r.T}, {"count", r.count},
                              {"expected", to_json(r.expected)}, {"deviation", to_json(r.deviation)}}
                             .dump()
                      << '\n';
    } else {
        std::cout << cls.describe() << '\n';
        TextTable t({"M", "T", "count", "T^2/M", "deviation"});
        for (const auto& r : rows)
            t.add({std::to_string(r.M), std::to_string(r.T), std::to_string(r.count), r.expected.str(),
                   r.deviation.str()});
        t.print(std::cout);
    }
    return kOk;
}

int cmd_oracle(const std::string& p, bool weak, Format fmt) {
    const Integer P = parse_prime(p);
    std::vector<Found> all;
    for (const auto& s : enumerate_all_solutions(P, !weak).solutions) all.push_back({s, std::nullopt, std::nullopt});
    if (all.empty()) return kNoSolution;
    emit_found(all, fmt);
    return kOk;
}

int exit_for(Errc c) {
    switch (c) {
        case Errc::KernelViolation:
        case Errc::InvalidSolution:
        case Errc::ClassificationViolation:
        case Errc::Inconsistent:
        case Errc::IrreparableCollision:
            return kInvariant;
        case Errc::ParityViolation:
        case Errc::DeltaFilterFailed:
            return kNoSolution;
        default:
            return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serp: decompositions 5/P = 1/A + 1/B + 1/C"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format;
    app.add_option("--format", format, "json, csv or table (default: table on a terminal, json otherwise)")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    std::string p_arg;
    DecomposeOpts dopt;
    auto* dec = app.add_subcommand("decompose", "find a decomposition for a prime P");
    dec->add_option("P", p_arg, "prime")->required();
    dec->add_option("--method", dopt.method, "auto, explicit, ed1 or ed2");
    dec->add_flag("--all", dopt.all, "every witness within the bounds");
    dec->add_option("--gamma-max", dopt.gamma_max, "ED1 bound (env SERP_GAMMA_MAX)");
    dec->add_option("--delta-max", dopt.delta_max, "ED2 bound (env SERP_DELTA_MAX)");
    dec->add_flag("--weak", dopt.weak, "allow repeated denominators");

    std::vector<std::string> vargs;
    auto* ver = app.add_subcommand("verify", "check 5/P = 1/A + 1/B + 1/C exactly");
    ver->add_option("values", vargs, "P A B C")->required()->expected(4);

    std::string from, to;
    DecomposeOpts sopt;
    auto* scan = app.add_subcommand("scan", "one decomposition per prime in a range");
    scan->add_option("--from", from)->required();
    scan->add_option("--to", to)->required();
    scan->add_option("--method", sopt.method, "auto, explicit, ed1 or ed2");
    scan->add_option("--gamma-max", sopt.gamma_max);
    scan->add_option("--delta-max", sopt.delta_max);
    scan->add_flag("--weak", sopt.weak);

    std::uint64_t delta = 1, rmax = 0, xmax = 0;
    auto* sieve = app.add_subcommand("sieve", "progression classes and the primes they hold");
    sieve->add_option("--delta", delta)->required();
    sieve->add_option("--rmax", rmax)->required();
    sieve->add_option("--xmax", xmax)->required();

    std::uint64_t sx = 0, srmax = 0, sdelta = 1;
    std::vector<std::uint64_t> fit;
    bool per_prime = false;
    auto* stats = app.add_subcommand("stats", "average number of local parameters");
    stats->add_option("--x", sx)->required();
    stats->add_option("--rmax", srmax)->required();
    stats->add_option("--delta", sdelta)->required();
    stats->add_option("--fit", fit, "R values for the growth fit")->delimiter(',');
    stats->add_flag("--per-prime", per_prime, "include N(P) for every prime (json)");

    std::uint64_t tp = 0;
    bool check = false;
    auto* table = app.add_subcommand("table", "print or audit a reference table");
    table->add_option("P", tp)->required()->check(CLI::IsMember({31, 41, 73, 97, 2521, 3511}));
    table->add_flag("--check", check, "recompute every row and report mismatches");

    std::vector<std::uint64_t> basis, sides{100, 1000, 10000};
    std::vector<std::int64_t> shift{0, 0};
    auto* dens = app.add_subcommand("density", "count a sublattice class in [1, T]^2");
    dens->add_option("--basis", basis, "a,b,d")->required()->delimiter(',');
    dens->add_option("--shift", shift, "x0,y0")->delimiter(',');
    dens->add_option("--T", sides, "box sides")->delimiter(',');

    std::string op;
    bool oweak = false;
    auto* orac = app.add_subcommand("oracle", "brute-force every decomposition");
    orac->add_option("P", op)->required();
    orac->add_flag("--weak", oweak, "include repeated denominators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "run 'serp --help' or 'serp <command> --help' for usage\n";
        return kUsage;
    }

    const Format fmt = resolve_format(format);
    try {
        if (*dec) return cmd_decompose(p_arg, dopt, fmt);
        if (*ver) return cmd_verify(vargs, fmt);
        if (*scan) return cmd_scan(from, to, sopt, fmt);
        if (*sieve) return cmd_sieve(delta, rmax, xmax, fmt);
        if (*stats) return cmd_stats(sx, srmax, sdelta, fit, per_prime, fmt);
        if (*table) return cmd_table(tp, check, fmt);
        if (*dens) return cmd_density(basis, shift, sides, fmt);
        if (*orac) return cmd_oracle(op, oweak, fmt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e.code());
    }
    return kUsage;
}
