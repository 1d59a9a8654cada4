#pragma once

/**
 * @file gtheorem.hpp
 * @brief g-vectors of simplicial polytopes and Macaulay's boundary operator.
 *
 * The g <-> f transforms run through the h-vector: g -> h by partial sums and
 * the Dehn-Sommerville symmetry h_i = h_{d-i}, then h -> f by the triangular
 * binomial transform f_{j-1} = sum_i C(d-i, j-i) h_i. Both steps are
 * unimodular, so every transform here is exact over the integers.
 */

#include "fvset/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace fvset {

/// (g_0, ..., g_{floor(d/2)}) of a d-dimensional simplicial polytope.
struct GVector {
    int d = 0;
    std::vector<Integer> g;

    friend bool operator==(const GVector&, const GVector&) = default;
};

/// g_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i+1, d-k+1) f_{i-1}, with f_{-1} = 1.
inline GVector g_from_f(const FVector& v) {
    const int d = v.dim();
    GVector out{d, std::vector<Integer>(static_cast<std::size_t>(d / 2 + 1))};
    for (int k = 0; k <= d / 2; ++k) {
        Integer sum = 0;
        for (int i = 0; i <= k; ++i) {
            Integer term = binomial(d - i + 1, d - k + 1) * v.extended(i - 1);
            if ((k - i) % 2 == 0) sum += term;
            else sum -= term;
        }
        out.g[k] = sum;
    }
    return out;
}

/// Full symmetric h-vector (h_0, ..., h_d) determined by g.
inline std::vector<Integer> h_from_g(const GVector& gv) {
    const int d = gv.d;
    if (d < 1) throw std::domain_error("h_from_g: dimension must be positive");
    if (static_cast<int>(gv.g.size()) != d / 2 + 1) throw std::domain_error("h_from_g: need floor(d/2)+1 entries");
    std::vector<Integer> h(static_cast<std::size_t>(d + 1));
    Integer run = 0;
    for (int k = 0; k <= d / 2; ++k) {
        run += gv.g[k];
        h[k] = run;
        h[d - k] = run;
    }
    return h;
}

/// Inverse of g_from_f. Throws std::domain_error if g_0 != 1 or the
/// resulting counts are negative.
inline FVector f_from_g(const GVector& gv) {
    if (gv.g.empty() || gv.g[0] != 1) throw std::domain_error("f_from_g: g_0 must be 1");
    const int d = gv.d;
    const auto h = h_from_g(gv);
    std::vector<Integer> f(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
        Integer sum = 0;
        for (int i = 0; i <= j; ++i) sum += binomial(d - i, j - i) * h[i];
        f[j - 1] = sum;
    }
    return FVector(std::move(f));
}

// -- canonical binomial expansions -------------------------------------------

/// m = sum over terms of C(top, bottom), tops strictly decreasing, bottoms k, k-1, ...
struct BinomialDecomposition {
    int k = 0;
    std::vector<std::pair<Integer, int>> terms;  // (n_j, j), j = k down to i

    Integer value() const {
        Integer sum = 0;
        for (const auto& [n, j] : terms) sum += binomial(n, j);
        return sum;
    }
};

/// Largest n with C(n, j) <= m, for m >= 1 and j >= 1.
inline Integer largest_binomial_top(const Integer& m, int j) {
    if (m < Integer(1'000'000'000'000'000LL) && j <= 20) {
        // (j! m)^{1/j} + j is close above the answer; the floating value only
        // seeds the search, every step below is exact
        double est = std::pow(m.convert_to<double>() * std::tgamma(j + 1.0), 1.0 / j) + j;
        Integer n = Integer(static_cast<long long>(est));
        if (n < j) n = j;
        while (binomial(n, j) > m) --n;
        while (binomial(n + 1, j) <= m) ++n;
        return n;
    }
    Integer lo = j;  // C(lo, j) <= m
    Integer hi = 2 * j;
    while (binomial(hi, j) <= m) hi *= 2;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (binomial(mid, j) <= m) lo = mid;
        else hi = mid;
    }
    return lo;
}

/// Greedy k-th Macaulay expansion. m = 0 yields no terms.
inline BinomialDecomposition canonical_decomposition(const Integer& m, int k) {
    if (m < 0) throw std::domain_error("canonical_decomposition: negative argument");
    if (k < 1) throw std::domain_error("canonical_decomposition: k must be positive");
    BinomialDecomposition out{k, {}};
    Integer rest = m;
    for (int j = k; j >= 1 && rest > 0; --j) {
        Integer n = largest_binomial_top(rest, j);
        rest -= binomial(n, j);
        out.terms.emplace_back(std::move(n), j);
    }
    return out;
}

/// Macaulay lower operator: sum of C(n_j - 1, j - 1) over the k-th expansion of m.
inline Integer macaulay_boundary(const Integer& m, int k) {
    Integer sum = 0;
    for (const auto& [n, j] : canonical_decomposition(m, k).terms) sum += binomial(n - 1, j - 1);
    return sum;
}

/// Macaulay upper operator m^<k>: sum of C(n_j + 1, j + 1).
inline Integer macaulay_upper(const Integer& m, int k) {
    Integer sum = 0;
    for (const auto& [n, j] : canonical_decomposition(m, k).terms) sum += binomial(n + 1, j + 1);
    return sum;
}

inline Integer partial3(const Integer& g3) { return macaulay_boundary(g3, 3); }

/// (g2, g3) projection of g-vectors of simplicial d-polytopes, d >= 6.
inline Verdict member_G23(const Integer& g2, const Integer& g3) {
    if (g2 < 0) return Verdict::non_member("g2-negative");
    if (g3 < 0) return Verdict::non_member("g3-negative");
    if (partial3(g3) > g2) return Verdict::non_member("boundary-exceeds-g2");
    return Verdict::member();
}

/**
 * Simplicial d-polytope f-vectors for d <= 5, decided on the g-vector:
 * Dehn-Sommerville (f is the image of its own g-vector), g_1 >= 0 and, for
 * d >= 4, 0 <= g_2 <= C(g_1 + 1, 2).
 */
inline Verdict member_simplicial_low_dim(const FVector& v) {
    const int d = v.dim();
    if (d > 5) throw std::domain_error("member_simplicial_low_dim: only d <= 5 is supported");
    const GVector gv = g_from_f(v);
    if (d == 1) return v[0] == 2 ? Verdict::member() : Verdict::non_member("f0-relation");
    if (gv.g[1] < 0) return Verdict::non_member("g1-negative");
    if (d >= 4 && gv.g[2] < 0) return Verdict::non_member("g2-negative");
    // nonnegative g gives a positive h, so the reconstruction cannot throw
    if (!(f_from_g(gv) == v)) return Verdict::non_member("dehn-sommerville");
    if (d >= 4 && gv.g[2] > binomial(gv.g[1] + 1, 2)) return Verdict::non_member("g2-exceeds-macaulay-bound");
    return Verdict::member();
}

}  // namespace fvset
