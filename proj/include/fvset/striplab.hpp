#pragma once

/**
 * @file striplab.hpp
 * @brief Lattice-point censuses in strips of translated algebraic curves.
 *
 * Two curve families are built in:
 *
 *   A-family:   gamma_r : y = x/2 + sqrt(x + 9/4) + 3/2 + r,  r in [0, 1]
 *   G23-family: gamma_t = gamma_0 + t*(1, 1),                 t in [0, 1]
 *               gamma_0 : g3 = g2/2 + (g2/3) sqrt(2 g2 + 1/4)
 *
 * A census walks every lattice point between the curves of a substrip and
 * classifies it with the matching membership predicate. Strip inclusion is
 * decided with exact surd comparisons; boundary points count as inside.
 */

#include "fvset/core.hpp"
#include "fvset/gtheorem.hpp"
#include "fvset/parallel.hpp"
#include "fvset/sets.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fvset {

struct LatticePoint {
    Integer x;
    Integer y;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// -- A-family -----------------------------------------------------------------

/// Strip parameter y - x/2 - 3/2 - sqrt(x + 9/4) of (x, y) relative to the A-family.
inline Surd r_of_point(const Integer& x, const Integer& y) {
    if (x < 0 || y < 0) throw std::domain_error("r_of_point: coordinates must be nonnegative");
    return Surd(Rational(2 * y - x - 3, 2), -1, Rational(4 * x + 9, 4));
}

/// i + 1/2 - sqrt((i + 1/2)^2 - 2j)
inline Surd half_offset_surd(const Integer& i, const Integer& j) {
    Rational half_i = Rational(2 * i + 1, 2);
    return Surd(half_i, -1, half_i * half_i - 2 * j);
}

namespace detail {
inline void require_ratio_below_half(const Integer& p, const Integer& q) {
    if (q < 1) throw std::domain_error("denominator q must be positive");
    if (p < 0) throw std::domain_error("numerator p must be nonnegative");
    if (2 * p >= q) throw std::domain_error("p/q must lie in [0, 1/2)");
}
}  // namespace detail

/// Point of A on gamma_{r1(n)}, r1(n) -> p/q: (nq(nq+1) - 2np - 2, nq(nq+3)/2 - np + 1).
inline LatticePoint seq_in_A(const Integer& p, const Integer& q, const Integer& n) {
    detail::require_ratio_below_half(p, q);
    if (n < 1) throw std::domain_error("seq_in_A: n must be positive");
    const Integer i = n * q;
    const Integer j = n * p;
    return {i * (i + 1) - 2 * j - 2, i * (i + 3) / 2 - j + 1};
}

/// Strip parameter of seq_in_A(p, q, n): i + 1/2 - sqrt((i+1/2)^2 - 2j), i = nq, j = np.
inline Surd seq_in_r(const Integer& p, const Integer& q, const Integer& n) {
    detail::require_ratio_below_half(p, q);
    return half_offset_surd(n * q, n * p);
}

/// Point outside A with odd x on gamma_{r2(n)}: (4n^2q^2 + 4nq - 4np - 1, 2n^2q^2 + 4nq - 2np + 2).
inline LatticePoint seq_out_A(const Integer& p, const Integer& q, const Integer& n) {
    detail::require_ratio_below_half(p, q);
    if (n < 1) throw std::domain_error("seq_out_A: n must be positive");
    const Integer nq = n * q;
    const Integer np = n * p;
    return {4 * nq * nq + 4 * nq - 4 * np - 1, 2 * nq * nq + 4 * nq - 2 * np + 2};
}

/// Strip parameter of seq_out_A(p, q, n): i' + 1 - sqrt(i'^2 + 2i' - 2j' + 5/4), i' = 2nq, j' = 2np.
inline Surd seq_out_r(const Integer& p, const Integer& q, const Integer& n) {
    detail::require_ratio_below_half(p, q);
    const Integer i = 2 * n * q;
    const Integer j = 2 * n * p;
    return Surd(Rational(i + 1), -1, Rational(4 * (i * i + 2 * i - 2 * j) + 5, 4));
}

struct Lemma43Result {
    bool cond1 = false;  // ceiling form of the bound defining A
    bool cond2 = false;  // surd form: above gamma_{1/2}, or on a gamma_r with r = i+1/2-sqrt((i+1/2)^2-2j)
};

/**
 * Evaluates both sides of the ceiling/surd equivalence at (x, y).
 *
 * cond2's existential over (i, j) is searched for i in [1, y]. For each i the
 * only possible j is read off from sqrt((i+1/2)^2 - 2j) = i + 1/2 - r, and
 * the candidate is confirmed with surd_cmp. Since that square root lies in
 * [i - 1/2, i + 1/2] whenever 0 <= j <= i, no candidate exists unless
 * r is in [0, 1].
 */
inline Lemma43Result lemma43_equivalent(const Integer& x, const Integer& y) {
    if (x < 0 || y < 0) throw std::domain_error("lemma43_equivalent: coordinates must be nonnegative");
    Lemma43Result out;
    out.cond1 = satisfies_A_bound(x, y);

    const Integer t = 2 * y - x - 4;  // y >= x/2 + sqrt(x + 9/4) + 2  <=>  t >= sqrt(4x + 9)
    if (t >= 0 && t * t >= 4 * x + 9) {
        out.cond2 = true;
        return out;
    }
    const Surd r = r_of_point(x, y);
    if (r.sign() < 0 || surd_cmp(r, Surd(1)) == std::strong_ordering::greater) return out;

    for (Integer i = 1; i <= y; ++i) {
        const Rational half_i = Rational(2 * i + 1, 2);
        const Surd root = Surd(half_i) - r;  // must equal sqrt((i+1/2)^2 - 2j) >= 0
        // root^2 is rational only if root is rational or has zero rational part
        if (!root.is_rational() && root.rational_part() != 0) continue;
        if (root.sign() < 0) continue;
        const Surd sq = root * root;
        if (!sq.is_rational()) continue;
        const Rational two_j = half_i * half_i - sq.rational_part();
        if (boost::multiprecision::denominator(two_j) != 1) continue;
        const Integer tj = boost::multiprecision::numerator(two_j);
        if (tj % 2 != 0) continue;
        const Integer j = tj / 2;
        if (j < 0 || j > i) continue;
        if (surd_cmp(r, half_offset_surd(i, j)) == std::strong_ordering::equal) {
            out.cond2 = true;
            break;
        }
    }
    return out;
}

// -- G23-family ---------------------------------------------------------------

/// gamma_0(u) = u/2 + (u/3) sqrt(2u + 1/4), u >= -1/8.
inline Surd gamma0(const Rational& u) {
    return Surd(u / 2, u / 3, 2 * u + Rational(1, 4));
}

/// Height of gamma_t over column g2: gamma_0(g2 - t) + t.
inline Surd gamma_t(const Rational& g2, const Rational& t) { return gamma0(g2 - t) + t; }

/// gamma_1(g2) = gamma_0(g2 - 1) + 1, defined for g2 >= 1.
inline Surd gamma1(const Integer& g2) {
    if (g2 < 1) throw std::domain_error("gamma1: needs g2 >= 1");
    return gamma_t(Rational(g2), 1);
}

enum class StripPosition { outside, inside, on_gamma0, on_gamma1, on_both };

inline std::string_view to_string(StripPosition p) {
    switch (p) {
        case StripPosition::outside: return "outside";
        case StripPosition::inside: return "inside";
        case StripPosition::on_gamma0: return "on_gamma0";
        case StripPosition::on_gamma1: return "on_gamma1";
        case StripPosition::on_both: return "on_both";
    }
    return "outside";
}

/// Position of (g2, g3) relative to the closed strip gamma_1(g2) <= g3 <= gamma_0(g2).
inline StripPosition g23_strip_position(const Integer& g2, const Integer& g3) {
    if (g2 < 0) return StripPosition::outside;
    const auto c0 = surd_cmp(Surd(g3), gamma0(Rational(g2)));
    if (g2 == 0) return c0 == std::strong_ordering::equal ? StripPosition::on_gamma0 : StripPosition::outside;
    const auto c1 = surd_cmp(Surd(g3), gamma1(g2));
    const bool on0 = c0 == std::strong_ordering::equal;
    const bool on1 = c1 == std::strong_ordering::equal;
    if (on0 && on1) return StripPosition::on_both;
    if (on0) return StripPosition::on_gamma0;
    if (on1) return StripPosition::on_gamma1;
    if (c0 == std::strong_ordering::less && c1 == std::strong_ordering::greater) return StripPosition::inside;
    return StripPosition::outside;
}

// -- censuses -----------------------------------------------------------------

enum class StripFamily { A, G23 };

struct StripSpec {
    StripFamily family = StripFamily::A;
    Rational lo = 0;  // substrip J = [lo, hi] within [0, 1]
    Rational hi = 1;
    Integer x_max = 0;

    void validate() const {
        if (lo < 0 || hi > 1) throw std::domain_error("StripSpec: substrip must lie in [0, 1]");
        if (!(lo < hi)) throw std::domain_error("StripSpec: substrip must have positive length");
        if (x_max < 0) throw std::domain_error("StripSpec: x_max must be nonnegative");
    }
};

struct CensusPoint {
    LatticePoint point;
    Status status = Status::unknown;
    std::optional<Surd> parameter;  // exact strip parameter where it is a surd (A-family)
    bool on_lower = false;          // on the lower bounding curve of the (sub)strip
    bool on_upper = false;          // on the upper bounding curve

    bool interior() const { return !on_lower && !on_upper; }
};

struct StripCensus {
    std::uint64_t in_count = 0;   // members of the target set
    std::uint64_t out_count = 0;  // non-members
    std::vector<CensusPoint> points;

    void add(CensusPoint p, bool keep) {
        (p.status == Status::member ? in_count : out_count) += 1;
        if (keep) points.push_back(std::move(p));
    }
    void merge(StripCensus&& other) {
        in_count += other.in_count;
        out_count += other.out_count;
        points.insert(points.end(), std::make_move_iterator(other.points.begin()),
                      std::make_move_iterator(other.points.end()));
    }
};

namespace detail {

/// Sign of (2(y - t) - x - 3) - sqrt(4x + 9), i.e. of r_of_point(x, y) - t, in integers.
inline int strip_offset_sign(const Integer& x, const Integer& y, const Rational& t) {
    const Integer& a = boost::multiprecision::numerator(t);
    const Integer& b = boost::multiprecision::denominator(t);
    const Integer lhs = 2 * (y * b - a) - (x + 3) * b;  // b * (2(y - t) - x - 3)
    if (lhs < 0) return -1;
    const Integer l2 = lhs * lhs, r2 = (4 * x + 9) * b * b;
    return l2 < r2 ? -1 : (l2 > r2 ? 1 : 0);
}

inline void census_A_columns(const StripSpec& spec, const Integer& x_lo, const Integer& x_hi, bool keep,
                             StripCensus& out) {
    const Integer lo_floor = fvset::floor(spec.lo), hi_ceil = fvset::ceil(spec.hi);
    for (Integer x = x_lo; x <= x_hi; ++x) {
        // sqrt(4x+9) lies in [s, s+1), so candidate rows form a short window
        const Integer s = isqrt(4 * x + 9);
        const Integer y_first = fvset::floor_div(x + 3 + s, 2) + lo_floor;
        const Integer y_last = fvset::floor_div(x + 3 + s + 1, 2) + hi_ceil + 1;
        for (Integer y = y_first < 0 ? Integer(0) : y_first; y <= y_last; ++y) {
            const int below = strip_offset_sign(x, y, spec.lo);
            if (below < 0) continue;
            const int above = strip_offset_sign(x, y, spec.hi);
            if (above > 0) break;
            CensusPoint cp;
            cp.point = {x, y};
            if (keep) cp.parameter = r_of_point(x, y);
            cp.on_lower = below == 0;
            cp.on_upper = above == 0;
            cp.status = member_A(x, y).status;
            out.add(std::move(cp), keep);
        }
    }
}

inline void census_G23_columns(const StripSpec& spec, const Integer& x_lo, const Integer& x_hi, bool keep,
                               StripCensus& out) {
    // phi(t) = gamma_0(g2 - t) + t - g3 is strictly decreasing in t once
    // g2 - t >= 1, so t in [lo, hi] <=> gamma_t(g2, hi) <= g3 <= gamma_t(g2, lo).
    for (Integer g2 = x_lo < 2 ? Integer(2) : x_lo; g2 <= x_hi; ++g2) {
        const Surd upper = gamma_t(Rational(g2), spec.lo);
        const Surd lower = gamma_t(Rational(g2), spec.hi);
        for (Integer g3 = lower.ceil(), g3_end = upper.floor(); g3 <= g3_end; ++g3) {
            CensusPoint cp;
            cp.point = {g2, g3};
            cp.on_lower = surd_cmp(Surd(g3), lower) == std::strong_ordering::equal;
            cp.on_upper = surd_cmp(Surd(g3), upper) == std::strong_ordering::equal;
            cp.status = member_G23(g2, g3).status;
            out.add(std::move(cp), keep);
        }
    }
}

}  // namespace detail

enum class StripTarget { A, G23 };

/**
 * Enumerates lattice points of the substrip with first coordinate in
 * [0, spec.x_max] and classifies them by the target set. The G23 sweep starts
 * at g2 = 2: at g2 = 1 the translates gamma_0 and gamma_1 meet in (1, 1).
 */
inline StripCensus strip_census(const StripSpec& spec, StripTarget target, bool keep_points = false,
                                unsigned shards = 1) {
    spec.validate();
    const bool matches = (spec.family == StripFamily::A && target == StripTarget::A) ||
                         (spec.family == StripFamily::G23 && target == StripTarget::G23);
    if (!matches) throw std::domain_error("strip_census: target does not match the curve family");

    auto parts = sharded<StripCensus>(
        Integer(0), spec.x_max, shards, [&](const Integer& lo, const Integer& hi, StripCensus& out) {
            if (spec.family == StripFamily::A) detail::census_A_columns(spec, lo, hi, keep_points, out);
            else detail::census_G23_columns(spec, lo, hi, keep_points, out);
        });
    StripCensus total;
    for (auto& p : parts) total.merge(std::move(p));
    return total;
}

/// One column of the G23 strip: all g3 with gamma_1(g2) <= g3 <= gamma_0(g2).
inline StripCensus g23_column(const Integer& g2) {
    if (g2 < 1) throw std::domain_error("g23_column: needs g2 >= 1");
    const Surd upper = gamma0(Rational(g2));
    const Surd lower = gamma1(g2);
    StripCensus out;
    for (Integer g3 = lower.ceil(), end = upper.floor(); g3 <= end; ++g3) {
        CensusPoint cp;
        cp.point = {g2, g3};
        cp.on_lower = surd_cmp(Surd(g3), lower) == std::strong_ordering::equal;
        cp.on_upper = surd_cmp(Surd(g3), upper) == std::strong_ordering::equal;
        cp.status = member_G23(g2, g3).status;
        out.add(std::move(cp), true);
    }
    return out;
}

/// Columns g2 = C(k, 2) and g2 = C(k, 2) + 1 of the G23 strip, k >= 2.
inline std::pair<StripCensus, StripCensus> g23_column_census(const Integer& k) {
    if (k < 2) throw std::domain_error("g23_column_census: needs k >= 2");
    const Integer g2 = binomial(k, 2);
    return {g23_column(g2), g23_column(g2 + 1)};
}

/// Number of membership switches along a sequence of classified points.
inline std::size_t alternation_count(const std::vector<CensusPoint>& pts) {
    std::size_t switches = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].status != pts[i - 1].status) ++switches;
    return switches;
}

}  // namespace fvset
