#pragma once

/**
 * @file verify.hpp
 * @brief Invariant suites runnable from the command line.
 *
 * Every suite returns one PropertyResult per property, with the first
 * counterexample found when a property fails.
 */

#include "fvset/constructions.hpp"
#include "fvset/gtheorem.hpp"
#include "fvset/sets.hpp"
#include "fvset/striplab.hpp"

#include <array>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fvset {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string counterexample;
    std::string detail;
};

struct VerifyBudget {
    long lemma43_max = 1500;    // lemma43: 0 <= x, y <= max
    long strip_nmax = 100;      // strips: generator indices 1..nmax
    long kmax = 200;            // g23_columns: 2 <= k <= kmax
    long tight_kmax = 10'000;   // g23_columns: tight points up to k
    long monotone_max = 100'000;  // g23_columns: partial3 monotone on [0, max]
    int dmax = 12;              // roundtrip: 4 <= d <= dmax
    int samples = 500;          // roundtrip / euler: random samples
    long cone_f0_max = 60;      // roundtrip: d = 4, 5 cone comparison
    std::uint64_t seed = 20181018;
};

namespace detail {

template <typename... Ts>
std::string fmt_point(const Ts&... v) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    ((os << (first ? "" : ", ") << v, first = false), ...);
    os << ")";
    return os.str();
}

inline std::string fmt_vec(const std::vector<Integer>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

inline PropertyResult fail(std::string name, std::string cex) { return {std::move(name), false, std::move(cex), {}}; }

}  // namespace detail

// -- lemma43 ------------------------------------------------------------------

inline std::vector<PropertyResult> verify_lemma43(const VerifyBudget& b) {
    PropertyResult r{"ceiling and surd forms agree on [0," + std::to_string(b.lemma43_max) + "]^2", true, {}, {}};
    for (long x = 0; x <= b.lemma43_max && r.passed; ++x) {
        for (long y = 0; y <= b.lemma43_max; ++y) {
            auto c = lemma43_equivalent(x, y);
            if (c.cond1 != c.cond2) {
                r = detail::fail(r.name, detail::fmt_point(x, y));
                break;
            }
        }
    }
    return {r};
}

// -- strips -------------------------------------------------------------------

/// The rationals r0 = p/q exercised by the strip suites.
inline constexpr std::array<std::pair<int, int>, 4> strip_ratios{{{0, 1}, {1, 4}, {1, 3}, {2, 5}}};

inline std::vector<PropertyResult> verify_strips(const VerifyBudget& b) {
    std::vector<PropertyResult> out;

    PropertyResult sound{"generator points land on the correct side of A", true, {}, {}};
    PropertyResult exact{"generator points sit on their advertised curves", true, {}, {}};
    for (auto [p, q] : strip_ratios) {
        for (long n = 1; n <= b.strip_nmax; ++n) {
            auto in = seq_in_A(p, q, n);
            auto outp = seq_out_A(p, q, n);
            if (sound.passed && (!member_A(in.x, in.y).is_member() || member_A(outp.x, outp.y).is_member()))
                sound = detail::fail(sound.name, detail::fmt_point(p, q, n));
            if (exact.passed && (r_of_point(in.x, in.y) != seq_in_r(p, q, n) ||
                                 r_of_point(outp.x, outp.y) != seq_out_r(p, q, n)))
                exact = detail::fail(exact.name, detail::fmt_point(p, q, n));
        }
    }
    out.push_back(sound);
    out.push_back(exact);

    PropertyResult conv{"|r1(n) - p/q| strictly decreasing for n >= 5 (p > 0), zero for p = 0", true, {}, {}};
    for (auto [p, q] : strip_ratios) {
        const Rational r0(p, q);
        for (long n = 5; n < b.strip_nmax && conv.passed; ++n) {
            Surd d0 = abs(seq_in_r(p, q, n) - r0);
            Surd d1 = abs(seq_in_r(p, q, n + 1) - r0);
            bool ok = p == 0 ? (d0.sign() == 0 && d1.sign() == 0) : (d1 < d0);
            if (!ok) conv = detail::fail(conv.name, detail::fmt_point(p, q, n));
        }
        if (conv.passed && b.strip_nmax >= 100 && !(abs(seq_in_r(p, q, 100) - r0) < Surd(Rational(1, 100))))
            conv = detail::fail(conv.name, detail::fmt_point(p, q, 100));
    }
    out.push_back(conv);

    // r0 = 1/4 sits inside J = [1/5, 3/10]; sweep every column the generators reach
    StripSpec spec{StripFamily::A, Rational(1, 5), Rational(3, 10), 0};
    for (long n = 1; n <= b.strip_nmax; ++n) {
        spec.x_max = std::max(spec.x_max, seq_in_A(1, 4, n).x);
        spec.x_max = std::max(spec.x_max, seq_out_A(1, 4, n).x);
    }
    auto census = strip_census(spec, StripTarget::A, false, shard_count());
    PropertyResult osc{"substrip [1/5, 3/10] holds >= 50 members and >= 50 non-members", true, {}, {}};
    std::ostringstream det;
    det << "x_max=" << spec.x_max << " in=" << census.in_count << " out=" << census.out_count;
    osc.detail = det.str();
    if (census.in_count < 50 || census.out_count < 50) osc = detail::fail(osc.name, osc.detail);
    out.push_back(osc);
    return out;
}

// -- g23_columns --------------------------------------------------------------

inline std::size_t interior_size(const StripCensus& c) {
    std::size_t n = 0;
    for (const auto& p : c.points) n += p.interior();
    return n;
}

inline std::vector<PropertyResult> verify_g23_columns(const VerifyBudget& b) {
    std::vector<PropertyResult> out;

    PropertyResult tight{"partial3(C(k+1,3)) = C(k,2) for 2 <= k <= " + std::to_string(b.tight_kmax), true, {}, {}};
    for (long k = 2; k <= b.tight_kmax; ++k)
        if (partial3(binomial(k + 1, 3)) != binomial(k, 2)) {
            tight = detail::fail(tight.name, "k=" + std::to_string(k));
            break;
        }
    out.push_back(tight);

    PropertyResult mono{"partial3 nondecreasing on [0, " + std::to_string(b.monotone_max) + "]", true, {}, {}};
    Integer prev = 0;
    for (long m = 0; m <= b.monotone_max; ++m) {
        Integer cur = partial3(m);
        if (cur < prev) {
            mono = detail::fail(mono.name, "m=" + std::to_string(m));
            break;
        }
        prev = cur;
    }
    out.push_back(mono);

    PropertyResult claim{"interior of column C(k,2) all members, of C(k,2)+1 all non-members", true, {}, {}};
    PropertyResult sizes{"interior column sizes nondecreasing in k", true, {}, {}};
    std::size_t prev_a = 0, prev_b = 0, last_a = 0, last_b = 0;
    for (long k = 2; k <= b.kmax; ++k) {
        auto [col_a, col_b] = g23_column_census(k);
        for (const auto& p : col_a.points)
            if (claim.passed && p.interior() && p.status != Status::member)
                claim = detail::fail(claim.name, detail::fmt_point(p.point.x, p.point.y));
        for (const auto& p : col_b.points)
            if (claim.passed && p.interior() && p.status != Status::non_member)
                claim = detail::fail(claim.name, detail::fmt_point(p.point.x, p.point.y));
        last_a = interior_size(col_a);
        last_b = interior_size(col_b);
        if (sizes.passed && (last_a < prev_a || last_b < prev_b)) sizes = detail::fail(sizes.name, "k=" + std::to_string(k));
        prev_a = last_a;
        prev_b = last_b;
    }
    out.push_back(claim);
    sizes.detail = "sizes at k=" + std::to_string(b.kmax) + ": " + std::to_string(last_a) + ", " + std::to_string(last_b);
    out.push_back(sizes);

    if (b.kmax >= 200) {
        PropertyResult grow{"interior column sizes exceed 10 by k = 200", true, {}, sizes.detail};
        auto [a, c] = g23_column_census(200);
        if (interior_size(a) <= 10 || interior_size(c) <= 10) grow = detail::fail(grow.name, sizes.detail);
        out.push_back(grow);
    }
    return out;
}

// -- roundtrip ----------------------------------------------------------------

/// f_from_g image of the d = 4 or d = 5 g-theorem cone with f0 <= f0_max.
inline std::set<std::vector<Integer>> gcone_image(int d, long f0_max) {
    std::set<std::vector<Integer>> img;
    for (long g1 = 0; g1 + d + 1 <= f0_max; ++g1) {
        Integer cap = binomial(g1 + 1, 2);
        for (Integer g2 = 0; g2 <= cap; ++g2) img.insert(f_from_g(GVector{d, {1, g1, g2}}).counts());
    }
    return img;
}

/// Members of the explicit simplicial 4-/5-polytope sets with f0 <= f0_max.
inline std::set<std::vector<Integer>> explicit_simplicial_set(int d, long f0_max) {
    std::set<std::vector<Integer>> s;
    for (long f0 = 0; f0 <= f0_max; ++f0) {
        for (long f1 = 0; 2 * f1 <= f0 * (f0 - 1); ++f1) {
            std::vector<Integer> f;
            if (d == 4) f = {f0, f1, Integer(-2 * f0 + 2 * f1), Integer(-f0 + f1)};
            else f = {f0, f1, Integer(-10 * f0 + 4 * f1 + 20), Integer(-15 * f0 + 5 * f1 + 30), Integer(-6 * f0 + 2 * f1 + 12)};
            bool nonneg = std::all_of(f.begin(), f.end(), [](const Integer& v) { return v >= 0; });
            if (!nonneg) continue;
            FVector v(f);
            if ((d == 4 ? member_F4s(v) : member_F5s(v)).is_member()) s.insert(f);
        }
    }
    return s;
}

inline std::vector<PropertyResult> verify_roundtrip(const VerifyBudget& b) {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(b.seed);
    PropertyResult rt{"g_from_f(f_from_g(g)) = g for d in [4," + std::to_string(b.dmax) + "]", true, {}, {}};
    for (int d = 4; d <= b.dmax && rt.passed; ++d) {
        std::uniform_int_distribution<long> dist(0, 40);
        for (int s = 0; s < b.samples; ++s) {
            GVector g{d, {1}};
            for (int k = 1; k <= d / 2; ++k) g.g.emplace_back(dist(rng));
            if (!(g_from_f(f_from_g(g)) == g)) {
                rt = detail::fail(rt.name, "d=" + std::to_string(d) + " g=" + detail::fmt_vec(g.g));
                break;
            }
        }
    }
    out.push_back(rt);

    for (int d : {4, 5}) {
        PropertyResult cone{"d=" + std::to_string(d) + " g-cone image equals the explicit simplicial set (f0 <= " +
                                std::to_string(b.cone_f0_max) + ")",
                            true, {}, {}};
        auto a = gcone_image(d, b.cone_f0_max);
        auto e = explicit_simplicial_set(d, b.cone_f0_max);
        cone.detail = std::to_string(a.size()) + " vectors";
        if (a != e) {
            std::vector<Integer> diff;
            for (const auto& v : a)
                if (!e.count(v)) {
                    diff = v;
                    break;
                }
            if (diff.empty())
                for (const auto& v : e)
                    if (!a.count(v)) {
                        diff = v;
                        break;
                    }
            cone = detail::fail(cone.name, detail::fmt_vec(diff));
        }
        out.push_back(cone);
    }
    return out;
}

// -- euler (constructions) ----------------------------------------------------

/// Random Euler-valid extended f-vector of dimension <= max_dim, built from a
/// simplex or cube by random constructions.
inline ExtendedFVector random_construction(std::mt19937_64& rng, int max_dim = 8) {
    std::uniform_int_distribution<int> start(1, 3);
    ExtendedFVector v = (rng() % 2) ? simplex(start(rng)) : cube(start(rng));
    std::uniform_int_distribution<int> op(0, 4);
    int steps = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int s = 0; s < steps; ++s) {
        int o = op(rng);
        if (v.dim() >= max_dim && o != 3 && o != 4) o = 3;
        switch (o) {
            case 0: v = pyramid(v); break;
            case 1: v = bipyramid(v); break;
            case 2: v = prism(v); break;
            case 3: v = dual(v); break;
            case 4: v = connected_sum(v, simplex(v.dim())); break;
        }
    }
    return v;
}

inline std::vector<PropertyResult> verify_euler(const VerifyBudget& b) {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(b.seed);
    PropertyResult euler{"constructions preserve Euler's relation", true, {}, {}};
    PropertyResult invol{"dual(dual(v)) = v", true, {}, {}};
    PropertyResult pb{"dual(prism(v)) = bipyramid(dual(v))", true, {}, {}};
    for (int s = 0; s < std::max(b.samples, 1000); ++s) {
        ExtendedFVector v = random_construction(rng, 7);
        ExtendedFVector w = random_construction(rng, 7);
        std::vector<ExtendedFVector> outs{dual(v), pyramid(v), bipyramid(v), prism(v)};
        if (w.dim() == v.dim()) {
            outs.push_back(connected_sum(v, w, GluingMode::facet_to_facet));
            if (v.dim() >= 2) outs.push_back(connected_sum(v, w, GluingMode::facet_to_vertex));
        }
        if (euler.passed && !v.euler_holds()) euler = detail::fail(euler.name, detail::fmt_vec(v.interior()));
        for (const auto& o : outs)
            if (euler.passed && !o.euler_holds()) euler = detail::fail(euler.name, detail::fmt_vec(v.interior()));
        if (invol.passed && !(dual(dual(v)) == v)) invol = detail::fail(invol.name, detail::fmt_vec(v.interior()));
        if (pb.passed && !(dual(prism(v)) == bipyramid(dual(v)))) pb = detail::fail(pb.name, detail::fmt_vec(v.interior()));
    }
    out.push_back(euler);
    out.push_back(invol);
    out.push_back(pb);

    PropertyResult pyr{"pyramids over 3-polytopes (f0 <= 30) give admissible (f1, f2) pairs", true, {}, {}};
    for (long f0 = 4; f0 <= 30 && pyr.passed; ++f0) {
        for (long f2 = 4; f2 <= 2 * f0 - 4; ++f2) {
            FVector v{f0, f0 + f2 - 2, f2};
            if (!member_F3(v).is_member()) continue;
            auto p = pyramid(ExtendedFVector(v));
            if (!member_Pi4_12(p.at(1), p.at(2)).is_member()) {
                pyr = detail::fail(pyr.name, detail::fmt_vec(v.counts()));
                break;
            }
        }
    }
    out.push_back(pyr);

    PropertyResult cyc{"cyclic_facets(4, n) = n(n-3)/2 for 5 <= n <= 1000", true, {}, {}};
    for (long n = 5; n <= 1000; ++n)
        if (cyclic_facets(4, n) != Integer(n * (n - 3) / 2)) {
            cyc = detail::fail(cyc.name, "n=" + std::to_string(n));
            break;
        }
    out.push_back(cyc);
    return out;
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"lemma43", "strips", "g23_columns", "roundtrip", "euler", "all"};
    return names;
}

/// Runs a named suite; throws std::invalid_argument for an unknown name.
inline std::vector<PropertyResult> run_verify_suite(const std::string& suite, const VerifyBudget& b) {
    if (suite == "lemma43") return verify_lemma43(b);
    if (suite == "strips") return verify_strips(b);
    if (suite == "g23_columns") return verify_g23_columns(b);
    if (suite == "roundtrip") return verify_roundtrip(b);
    if (suite == "euler") return verify_euler(b);
    if (suite == "all") {
        std::vector<PropertyResult> all;
        for (const auto& name : {"lemma43", "strips", "g23_columns", "roundtrip", "euler"}) {
            auto part = run_verify_suite(name, b);
            for (auto& p : part) p.name = std::string(name) + ": " + p.name;
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace fvset
