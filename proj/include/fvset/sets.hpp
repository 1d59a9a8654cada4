#pragma once

/**
 * @file sets.hpp
 * @brief Membership predicates for explicitly characterized f-vector sets.
 *
 * Each predicate validates dimension first (std::domain_error on mismatch)
 * and then reports the first violated condition as the verdict reason.
 */

#include "fvset/constructions.hpp"
#include "fvset/core.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace fvset {

// -- 3-polytopes --------------------------------------------------------------

inline Verdict member_F3(const FVector& v) {
    require_dimension(v, 3);
    const Integer &f0 = v[0], &f1 = v[1], &f2 = v[2];
    if (f0 - f1 + f2 != 2) return Verdict::non_member("euler-relation");
    if (f2 > 2 * f0 - 4) return Verdict::non_member("f2-upper-bound");
    if (f0 > 2 * f2 - 4) return Verdict::non_member("f0-upper-bound");
    return Verdict::member();
}

/// Centrally symmetric 3-polytopes.
inline Verdict member_F3cs(const FVector& v) {
    require_dimension(v, 3);
    const Integer &f0 = v[0], &f1 = v[1], &f2 = v[2];
    if (f0 % 2 != 0 || f1 % 2 != 0 || f2 % 2 != 0) return Verdict::non_member("parity");
    if (f0 - f1 + f2 != 2) return Verdict::non_member("euler-relation");
    if (f2 > 2 * f0 - 4) return Verdict::non_member("f2-upper-bound");
    if (f0 > 2 * f2 - 4) return Verdict::non_member("f0-upper-bound");
    if (f0 + f2 < 14) return Verdict::non_member("f0-plus-f2-lower-bound");
    return Verdict::member();
}

/// Simplicial 3-polytopes: (n, 3n-6, 2n-4), n >= 4. Witness is n.
inline Verdict member_F3s(const FVector& v) {
    require_dimension(v, 3);
    const Integer& n = v[0];
    if (v[1] != 3 * n - 6) return Verdict::non_member("f1-relation");
    if (v[2] != 2 * n - 4) return Verdict::non_member("f2-relation");
    if (n < 4) return Verdict::non_member("f0-lower-bound");
    return Verdict::member("satisfied", {n});
}

// -- simplicial 4- and 5-polytopes --------------------------------------------

inline Verdict member_F4s(const FVector& v) {
    require_dimension(v, 4);
    const Integer &f0 = v[0], &f1 = v[1];
    if (v[2] != -2 * f0 + 2 * f1) return Verdict::non_member("f2-relation");
    if (v[3] != -f0 + f1) return Verdict::non_member("f3-relation");
    if (f0 < 5) return Verdict::non_member("f0-lower-bound");
    if (f1 < 4 * f0 - 10) return Verdict::non_member("f1-lower-bound");
    if (2 * f1 > f0 * (f0 - 1)) return Verdict::non_member("f1-upper-bound");
    return Verdict::member();
}

inline Verdict member_F5s(const FVector& v) {
    require_dimension(v, 5);
    const Integer &f0 = v[0], &f1 = v[1];
    if (v[2] != -10 * f0 + 4 * f1 + 20) return Verdict::non_member("f2-relation");
    if (v[3] != -15 * f0 + 5 * f1 + 30) return Verdict::non_member("f3-relation");
    if (v[4] != -6 * f0 + 2 * f1 + 12) return Verdict::non_member("f4-relation");
    if (f0 < 6) return Verdict::non_member("f0-lower-bound");
    if (f1 < 5 * f0 - 15) return Verdict::non_member("f1-lower-bound");
    if (2 * f1 > f0 * (f0 - 1)) return Verdict::non_member("f1-upper-bound");
    return Verdict::member();
}

// -- (f1, f2) pairs of 4-polytopes --------------------------------------------

/// The 13 exceptional (f1, f2) pairs with f1 >= f2.
inline constexpr std::array<std::pair<int, int>, 13> exceptional_pairs{{
    {12, 12}, {14, 13}, {14, 14}, {15, 15}, {16, 15}, {17, 16}, {18, 16},
    {18, 18}, {20, 17}, {21, 19}, {23, 20}, {24, 20}, {26, 21},
}};

/// (f1, f2) or its mirror is one of the exceptional pairs.
inline bool is_exceptional_pair(const Integer& f1, const Integer& f2) {
    const auto& hi = f1 >= f2 ? f1 : f2;
    const auto& lo = f1 >= f2 ? f2 : f1;
    return std::any_of(exceptional_pairs.begin(), exceptional_pairs.end(),
                       [&](const auto& p) { return hi == p.first && lo == p.second; });
}

/// 2y >= x + 2*ceil(sqrt(x + 9/4) + 1/2) + 2, the defining inequality of A.
inline bool satisfies_A_bound(const Integer& x, const Integer& y) {
    return 2 * y >= x + 2 * ceil_half_sqrt(x) + 2;
}

/// y = x/2 + sqrt(x + 13/4) + 2, decided as (2y - x - 4)^2 = 4x + 13 with 2y - x - 4 >= 0.
inline bool on_forbidden_parabola(const Integer& x, const Integer& y) {
    const Integer t = 2 * y - x - 4;
    return t >= 0 && t * t == 4 * x + 13;
}

inline Verdict member_A(const Integer& x, const Integer& y) {
    if (x < 0) return Verdict::non_member("x-negative");
    if (y < 0) return Verdict::non_member("y-negative");
    if (!satisfies_A_bound(x, y)) return Verdict::non_member("below-lower-bound");
    return Verdict::member();
}

inline Verdict member_Pi4_12(const Integer& f1, const Integer& f2) {
    if (f1 < f2) return member_Pi4_12(f2, f1);  // duality
    if (f2 < 0) return Verdict::non_member("negative-count");
    if (!satisfies_A_bound(f1, f2)) return Verdict::non_member("below-lower-bound");
    if (on_forbidden_parabola(f1, f2)) return Verdict::non_member("forbidden-parabola");
    if (is_exceptional_pair(f1, f2)) return Verdict::non_member("exceptional-pair");
    return Verdict::member();
}

// -- single face numbers -----------------------------------------------------

/// Returns p if n = p^s for a prime p and s >= 1, otherwise 0.
inline Integer prime_power_base(Integer n) {
    if (n < 2) return 0;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1 ? p : Integer(0);
        }
    }
    return n;
}

/// Period G(2i+1, i) of the realizable i-face numbers of (2i+1)-polytopes.
inline Integer G_middle(const Integer& i) {
    if (i < 1) throw std::domain_error("G_middle: need i >= 1");
    Integer p = prime_power_base(i + 2);
    return p == 0 ? Integer(1) : p;
}

/// Period G(2i, i-1): 2 when i + 2 is a power of two, else 1.
inline Integer G_even(const Integer& i) {
    if (i < 1) throw std::domain_error("G_even: need i >= 1");
    return prime_power_base(i + 2) == 2 ? Integer(2) : Integer(1);
}

/// Vertex numbers of cubical 3-polytopes: {8} and n >= 10.
inline Verdict member_Pi3_0_cub(const Integer& n) {
    if (n == 8 || n >= 10) return Verdict::member();
    return Verdict::non_member(n == 9 ? "gap" : "below-minimum");
}

/**
 * Vertex numbers of cubical d-polytopes for even d >= 4. Odd counts are
 * impossible; even counts at or above `threshold` are realizable. Below the
 * threshold the answer is unknown since the true start of the realizable
 * range is not pinned down.
 */
inline Verdict member_Pi_0_cub_even_d(int d, const Integer& n, const Integer& threshold) {
    if (d < 4 || d % 2 != 0) throw std::domain_error("member_Pi_0_cub_even_d: d must be even and >= 4");
    if (n % 2 != 0) return Verdict::non_member("parity");
    if (n >= threshold) return Verdict::member("above-threshold");
    return Verdict::unknown("threshold-unknown");
}

/// Vertex numbers of 2-simplicial 2-simple 4-polytopes: {5} and n >= 9.
inline Verdict member_Pi4_0_2s2s(const Integer& n) {
    if (n == 5 || n >= 9) return Verdict::member();
    return Verdict::non_member(n < 5 ? "below-minimum" : "gap");
}

/// Threshold C(3d+1, floor(d/2)) above which vertex/facet pairs are characterized.
inline Integer facets_pair_threshold(int d) { return binomial(3 * d + 1, d / 2); }

/// (vertices, facets) = (n, m) pairs of d-polytopes, d even.
inline Verdict member_Pi_0_facets_even_d(int d, const Integer& n, const Integer& m) {
    if (d < 4 || d % 2 != 0) throw std::domain_error("member_Pi_0_facets_even_d: d must be even and >= 4");
    if (n < d + 1 || m < d + 1) throw std::domain_error("member_Pi_0_facets_even_d: need n, m >= d + 1");
    if (n + m < facets_pair_threshold(d)) return Verdict::unknown("threshold-unknown");
    if (m > cyclic_facets(d, n)) return Verdict::non_member("facets-exceed-cyclic");
    if (n > cyclic_facets(d, m)) return Verdict::non_member("vertices-exceed-cyclic");
    return Verdict::member();
}

}  // namespace fvset
