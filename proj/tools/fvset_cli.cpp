// fvset command-line front end: membership queries, enumeration, figure
// data, strip censuses, verification suites and construction arithmetic.
//
// Exit codes: 0 member / success, 1 non-member / failed check, 2 unknown,
// 64 usage error, 74 I/O error.

#include "fvset/constructions.hpp"
#include "fvset/figure.hpp"
#include "fvset/gtheorem.hpp"
#include "fvset/sets.hpp"
#include "fvset/striplab.hpp"
#include "fvset/verify.hpp"
#include "fvset/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using fvset::Integer;
using fvset::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& s) {
    if (s.empty()) throw UsageError("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw UsageError("not an integer: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    return Rational(parse_integer(s.substr(0, slash)), den);
}

std::vector<Integer> parse_integers(const std::vector<std::string>& args) {
    std::vector<Integer> out;
    for (const auto& a : args) out.push_back(parse_integer(a));
    return out;
}

std::vector<Integer> parse_csv_vector(const std::string& s) {
    std::vector<Integer> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
    if (out.empty()) throw UsageError("empty vector '" + s + "'");
    return out;
}

json json_vector(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(fvset::json_integer(x));
    return a;
}

int exit_for(fvset::Status s) {
    switch (s) {
        case fvset::Status::member: return kExitMember;
        case fvset::Status::non_member: return kExitNonMember;
        case fvset::Status::unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

// -- member -------------------------------------------------------------------

const std::map<std::string, std::size_t>& set_arity() {
    static const std::map<std::string, std::size_t> a{
        {"f3", 3}, {"f3cs", 3}, {"f3s", 3}, {"f4s", 4},        {"f5s", 5},         {"pi4_12", 2},
        {"A", 2},  {"g23", 2},  {"pi3_0_cub", 1}, {"pi4_0_2s2s", 1}, {"pi_0_facets", 2},
    };
    return a;
}

fvset::Verdict evaluate(const std::string& set, const std::vector<Integer>& p, int d) {
    using namespace fvset;
    if (set == "f3") return member_F3(FVector(p));
    if (set == "f3cs") return member_F3cs(FVector(p));
    if (set == "f3s") return member_F3s(FVector(p));
    if (set == "f4s") return member_F4s(FVector(p));
    if (set == "f5s") return member_F5s(FVector(p));
    if (set == "pi4_12") return member_Pi4_12(p[0], p[1]);
    if (set == "A") return member_A(p[0], p[1]);
    if (set == "g23") return member_G23(p[0], p[1]);
    if (set == "pi3_0_cub") return member_Pi3_0_cub(p[0]);
    if (set == "pi4_0_2s2s") return member_Pi4_0_2s2s(p[0]);
    if (set == "pi_0_facets") return member_Pi_0_facets_even_d(d, p[0], p[1]);
    throw UsageError("unknown set '" + set + "'");
}

void check_arity(const std::string& set, std::size_t n) {
    auto it = set_arity().find(set);
    if (it == set_arity().end()) throw UsageError("unknown set '" + set + "'");
    if (it->second != n)
        throw UsageError("set '" + set + "' takes " + std::to_string(it->second) + " coordinates, got " +
                         std::to_string(n));
}

int cmd_member(const std::string& set, const std::vector<std::string>& raw, int d) {
    check_arity(set, raw.size());
    auto p = parse_integers(raw);
    if (set == "pi_0_facets" && d == 0) throw UsageError("pi_0_facets requires --d");
    // counts of f-vectors are nonnegative by construction
    if (set.rfind("f", 0) == 0)
        for (const auto& v : p)
            if (v < 0) throw UsageError("face counts must be nonnegative");
    fvset::Verdict v = evaluate(set, p, d);
    json out;
    out["set"] = set;
    out["point"] = json_vector(p);
    out["status"] = std::string(fvset::to_string(v.status));
    out["reason"] = v.reason;
    out["witness"] = json_vector(v.witness);
    std::cout << out.dump() << '\n';
    return exit_for(v.status);
}

// -- enumerate ----------------------------------------------------------------

int cmd_enumerate(const std::string& set, const Integer& max, int d) {
    using namespace fvset;
    if (max < 0) throw UsageError("--max must be nonnegative");
    std::ostream& os = std::cout;
    auto emit = [&](std::initializer_list<Integer> v) {
        bool first = true;
        for (const auto& x : v) {
            os << (first ? "" : ",") << x;
            first = false;
        }
        os << '\n';
    };
    if (set == "f3" || set == "f3cs") {
        os << "f0,f1,f2\n";
        for (Integer f0 = 0; f0 <= max; ++f0)
            for (Integer f2 = 0; f2 <= max; ++f2) {
                if (f0 + f2 < 2) continue;
                FVector v({f0, f0 + f2 - 2, f2});
                if ((set == "f3" ? member_F3(v) : member_F3cs(v)).is_member()) emit({f0, f0 + f2 - 2, f2});
            }
    } else if (set == "f3s") {
        os << "f0,f1,f2\n";
        for (Integer n = 4; n <= max; ++n) emit({n, 3 * n - 6, 2 * n - 4});
    } else if (set == "f4s" || set == "f5s") {
        const int dim = set == "f4s" ? 4 : 5;
        os << (dim == 4 ? "f0,f1,f2,f3\n" : "f0,f1,f2,f3,f4\n");
        for (Integer f0 = 0; f0 <= max; ++f0)
            for (Integer f1 = 0; 2 * f1 <= f0 * (f0 - 1); ++f1) {
                std::vector<Integer> f = dim == 4
                    ? std::vector<Integer>{f0, f1, -2 * f0 + 2 * f1, -f0 + f1}
                    : std::vector<Integer>{f0, f1, -10 * f0 + 4 * f1 + 20, -15 * f0 + 5 * f1 + 30, -6 * f0 + 2 * f1 + 12};
                if (std::any_of(f.begin(), f.end(), [](const Integer& x) { return x < 0; })) continue;
                FVector v(f);
                if (!(dim == 4 ? member_F4s(v) : member_F5s(v)).is_member()) continue;
                for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
                os << '\n';
            }
    } else if (set == "pi4_12" || set == "A" || set == "g23" || set == "pi_0_facets") {
        if (set == "pi_0_facets" && d == 0) throw UsageError("pi_0_facets requires --d");
        os << (set == "pi4_12" ? "f1,f2\n" : set == "A" ? "x,y\n" : set == "g23" ? "g2,g3\n" : "n,m\n");
        const Integer start = set == "pi_0_facets" ? Integer(d + 1) : Integer(0);
        for (Integer u = start; u <= max; ++u)
            for (Integer v = start; v <= max; ++v)
                if (evaluate(set, {u, v}, d).is_member()) emit({u, v});
    } else if (set == "pi3_0_cub" || set == "pi4_0_2s2s") {
        os << "n\n";
        for (Integer n = 0; n <= max; ++n)
            if (evaluate(set, {n}, d).is_member()) emit({n});
    } else {
        throw UsageError("unknown set '" + set + "'");
    }
    return 0;
}

// -- figure -------------------------------------------------------------------

int cmd_figure(const std::string& fig, const std::string& x_max_raw, const std::string& format,
               const std::string& out_path) {
    auto id = fvset::parse_figure_id(fig);
    if (!id) throw UsageError("unknown figure '" + fig + "' (expected pi4_12, set_A or g23)");
    Integer x_max = parse_integer(x_max_raw);
    if (x_max < 1) throw UsageError("x_max must be at least 1");
    if (format != "csv" && format != "json") throw UsageError("format must be csv or json");
    auto ds = fvset::make_figure(*id, x_max, fvset::shard_count());

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "fvset: cannot write '" << out_path << "'\n";
            return kExitIo;
        }
        os = &file;
    }
    if (format == "csv") fvset::write_csv(*os, ds);
    else fvset::write_json(*os, ds);
    os->flush();
    if (!*os) {
        std::cerr << "fvset: write failed for '" << out_path << "'\n";
        return kExitIo;
    }
    return 0;
}

// -- strip-census -------------------------------------------------------------

json census_json(const fvset::StripCensus& c, bool points) {
    json j;
    j["in_count"] = c.in_count;
    j["out_count"] = c.out_count;
    if (points) {
        json arr = json::array();
        for (const auto& p : c.points) {
            json row;
            row["x"] = fvset::json_integer(p.point.x);
            row["y"] = fvset::json_integer(p.point.y);
            row["status"] = std::string(fvset::to_string(p.status));
            if (p.parameter) row["parameter"] = p.parameter->str();
            row["on_lower"] = p.on_lower;
            row["on_upper"] = p.on_upper;
            arr.push_back(std::move(row));
        }
        j["points"] = std::move(arr);
    }
    return j;
}

int cmd_strip_census(const std::string& family, const std::string& lo, const std::string& hi,
                     const std::string& x_max, bool points, const std::string& column_k) {
    json out;
    if (!column_k.empty()) {
        Integer k = parse_integer(column_k);
        if (k < 2) throw UsageError("--column-k must be at least 2");
        auto [a, b] = fvset::g23_column_census(k);
        out["k"] = fvset::json_integer(k);
        out["column"] = census_json(a, points);
        out["column_plus_one"] = census_json(b, points);
        std::cout << out.dump(1) << '\n';
        return 0;
    }
    fvset::StripSpec spec;
    fvset::StripTarget target;
    if (family == "A") {
        spec.family = fvset::StripFamily::A;
        target = fvset::StripTarget::A;
    } else if (family == "G23") {
        spec.family = fvset::StripFamily::G23;
        target = fvset::StripTarget::G23;
    } else {
        throw UsageError("--family must be A or G23");
    }
    spec.lo = parse_rational(lo);
    spec.hi = parse_rational(hi);
    spec.x_max = parse_integer(x_max);
    auto c = fvset::strip_census(spec, target, points, fvset::shard_count());
    out["family"] = family;
    out["lo"] = spec.lo.str();
    out["hi"] = spec.hi.str();
    out["x_max"] = fvset::json_integer(spec.x_max);
    const json body = census_json(c, points);
    for (const auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(1) << '\n';
    return 0;
}

// -- verify -------------------------------------------------------------------

int cmd_verify(const std::string& suite, const fvset::VerifyBudget& budget) {
    const auto& names = fvset::verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
    bool ok = true;
    for (const auto& r : fvset::run_verify_suite(suite, budget)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
        if (!r.passed) std::cout << " counterexample: " << r.counterexample;
        std::cout << '\n';
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

// -- construct ----------------------------------------------------------------

int cmd_construct(const std::string& op, const std::vector<std::string>& vectors, const std::string& mode) {
    using namespace fvset;
    std::vector<ExtendedFVector> in;
    for (const auto& v : vectors) in.emplace_back(parse_csv_vector(v));
    const std::size_t need = op == "connected-sum" ? 2 : 1;
    if (in.size() != need) throw UsageError("'" + op + "' takes " + std::to_string(need) + " f-vector(s)");

    json out;
    out["op"] = op;
    json inputs = json::array();
    for (const auto& v : in) inputs.push_back(json_vector(v.interior()));
    out["inputs"] = std::move(inputs);

    if (op == "middle-face") {
        auto c = middle_face_construction(in[0]);
        const Integer p = prime_power_base(c.i + 2);
        auto report = [&](const ExtendedFVector& v) {
            json j;
            j["f"] = json_vector(v.interior());
            j["f_i"] = json_integer(v.at(c.i));
            j["euler"] = v.euler_holds();
            if (p != 0) j["coprime_to_p"] = gcd(v.at(c.i), p) == 1;
            return j;
        };
        out["i"] = c.i;
        out["p"] = json_integer(p);
        out["facet_to_facet"] = report(c.facet_to_facet);
        out["facet_to_vertex"] = report(c.facet_to_vertex);
        std::cout << out.dump() << '\n';
        return 0;
    }

    ExtendedFVector result = [&] {
        if (op == "dual") return dual(in[0]);
        if (op == "pyramid") return pyramid(in[0]);
        if (op == "bipyramid") return bipyramid(in[0]);
        if (op == "prism") return prism(in[0]);
        if (op == "connected-sum") {
            if (mode != "facet" && mode != "vertex") throw UsageError("--mode must be facet or vertex");
            return connected_sum(in[0], in[1], mode == "facet" ? GluingMode::facet_to_facet : GluingMode::facet_to_vertex);
        }
        throw UsageError("unknown construction '" + op + "'");
    }();
    out["result"] = json_vector(result.interior());
    out["euler"] = result.euler_holds();
    std::cout << out.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fvset: exact membership tests and strip experiments for f-vector sets"};
    app.set_version_flag("--version", fvset::kVersion);
    app.require_subcommand(1);

    std::string set_id, op, figure, x_max, format = "csv", out_path = "-", suite;
    std::vector<std::string> point, vectors;
    int d = 0;
    std::string enum_max;

    auto* member = app.add_subcommand("member", "Decide membership of a point in a set");
    member->add_option("set", set_id,
                       "f3 f3cs f3s f4s f5s pi4_12 A g23 pi3_0_cub pi4_0_2s2s pi_0_facets")->required();
    member->add_option("point", point, "Coordinates")->required();
    member->add_option("--d", d, "Dimension (pi_0_facets)");
    member->footer("Prints {set, point, status, reason, witness}. Exit 0 member, 1 non-member, 2 unknown.");

    auto* enumerate = app.add_subcommand("enumerate", "List members of a set within a bound (CSV)");
    enumerate->add_option("set", set_id, "Set identifier (as for member)")->required();
    enumerate->add_option("--max", enum_max, "Coordinate bound")->required();
    enumerate->add_option("--d", d, "Dimension (pi_0_facets)");

    auto* fig = app.add_subcommand("figure", "Write a classification grid");
    fig->add_option("figure", figure, "pi4_12 | set_A | g23")->required();
    fig->add_option("x_max", x_max, "Grid bound for both coordinates")->required();
    fig->add_option("--format", format, "csv | json");
    fig->add_option("--out", out_path, "Output path (default stdout)");
    fig->footer(
        "CSV columns:\n"
        "  pi4_12: f1,f2,status,reason\n"
        "  set_A:  x,y,status\n"
        "  g23:    g2,g3,status,strip (on_gamma0 | on_gamma1 | on_both | inside | outside)\n"
        "JSON: {\"meta\": {...}, \"rows\": [...]}. FVSET_SHARDS sets the sweep shard count.");

    std::string family, lo = "0", hi = "1", xmax = "0", column_k;
    bool points = false;
    auto* census = app.add_subcommand("strip-census", "Count lattice points of a substrip by membership");
    census->add_option("--family", family, "A | G23");
    census->add_option("--lo", lo, "Substrip start (rational, e.g. 1/5)");
    census->add_option("--hi", hi, "Substrip end (rational)");
    census->add_option("--xmax", xmax, "Sweep bound on the first coordinate");
    census->add_option("--column-k", column_k, "G23 columns C(k,2) and C(k,2)+1 instead of a sweep");
    census->add_flag("--points", points, "Include the classified points");

    fvset::VerifyBudget budget;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "lemma43 | strips | g23_columns | roundtrip | euler | all")->required();
    verify->add_option("--max", budget.lemma43_max, "lemma43: coordinate bound");
    verify->add_option("--nmax", budget.strip_nmax, "strips: generator index bound");
    verify->add_option("--kmax", budget.kmax, "g23_columns: column index bound");
    verify->add_option("--tight-kmax", budget.tight_kmax, "g23_columns: tight point bound");
    verify->add_option("--monotone-max", budget.monotone_max, "g23_columns: monotonicity range");
    verify->add_option("--dmax", budget.dmax, "roundtrip: largest dimension");
    verify->add_option("--samples", budget.samples, "roundtrip/euler: random samples");
    verify->add_option("--cone-f0-max", budget.cone_f0_max, "roundtrip: f0 bound for the d=4,5 cones");
    verify->add_option("--seed", budget.seed, "Random seed");

    std::string mode = "facet";
    auto* construct = app.add_subcommand("construct", "Face counts of a construction");
    construct->add_option("op", op, "dual | pyramid | bipyramid | prism | connected-sum | middle-face")->required();
    construct->add_option("vectors", vectors, "Comma-separated f-vectors, e.g. 4,6,4")->required();
    construct->add_option("--mode", mode, "connected-sum gluing: facet | vertex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*member) return cmd_member(set_id, point, d);
        if (*enumerate) return cmd_enumerate(set_id, parse_integer(enum_max), d);
        if (*fig) return cmd_figure(figure, x_max, format, out_path);
        if (*census) return cmd_strip_census(family, lo, hi, xmax, points, column_k);
        if (*verify) return cmd_verify(suite, budget);
        if (*construct) return cmd_construct(op, vectors, mode);
    } catch (const UsageError& e) {
        std::cerr << "fvset: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "fvset: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fvset: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
