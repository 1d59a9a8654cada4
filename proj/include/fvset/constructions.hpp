#pragma once

/**
 * @file constructions.hpp
 * @brief Face-count arithmetic of standard polytope constructions.
 *
 * Counts are carried in the extended convention f_{-1} = f_d = 1 (empty
 * face and the polytope itself), which makes the pyramid, bipyramid and
 * prism rules uniform in the index.
 */

#include "fvset/core.hpp"

#include <vector>

namespace fvset {

class ExtendedFVector {
public:
    /// Interior counts f_0, ..., f_{d-1}; all must be positive.
    explicit ExtendedFVector(std::vector<Integer> interior) : f_(std::move(interior)) {
        if (f_.empty()) throw std::domain_error("ExtendedFVector: dimension must be positive");
        for (const auto& v : f_)
            if (v <= 0) throw std::domain_error("ExtendedFVector: face counts must be positive");
    }
    ExtendedFVector(std::initializer_list<long long> interior)
        : ExtendedFVector(std::vector<Integer>(interior.begin(), interior.end())) {}
    explicit ExtendedFVector(const FVector& v) : ExtendedFVector(v.counts()) {}

    int dim() const { return static_cast<int>(f_.size()); }

    /// f_i for -1 <= i <= d.
    Integer at(int i) const {
        if (i == -1 || i == dim()) return 1;
        if (i < -1 || i > dim()) throw std::out_of_range("ExtendedFVector: index out of range");
        return f_[static_cast<std::size_t>(i)];
    }
    const std::vector<Integer>& interior() const { return f_; }
    FVector to_fvector() const { return FVector(f_); }

    /// sum_{i<d} (-1)^i f_i == 1 - (-1)^d
    bool euler_holds() const {
        Integer sum = 0;
        for (int i = 0; i < dim(); ++i) sum += (i % 2 == 0) ? f_[i] : Integer(-f_[i]);
        return sum == (dim() % 2 == 0 ? 0 : 2);
    }

    friend bool operator==(const ExtendedFVector&, const ExtendedFVector&) = default;

private:
    std::vector<Integer> f_;
};

inline ExtendedFVector dual(const ExtendedFVector& v) {
    std::vector<Integer> f(v.interior().rbegin(), v.interior().rend());
    return ExtendedFVector(std::move(f));
}

inline ExtendedFVector pyramid(const ExtendedFVector& v) {
    const int d = v.dim();
    std::vector<Integer> f(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) f[i] = v.at(i) + v.at(i - 1);
    return ExtendedFVector(std::move(f));
}

inline ExtendedFVector bipyramid(const ExtendedFVector& v) {
    const int d = v.dim();
    std::vector<Integer> f(static_cast<std::size_t>(d + 1));
    for (int i = 0; i < d; ++i) f[i] = v.at(i) + 2 * v.at(i - 1);
    f[d] = 2 * v.at(d - 1);
    return ExtendedFVector(std::move(f));
}

inline ExtendedFVector prism(const ExtendedFVector& v) {
    const int d = v.dim();
    std::vector<Integer> f(static_cast<std::size_t>(d + 1));
    f[0] = 2 * v.at(0);
    for (int i = 1; i < d; ++i) f[i] = 2 * v.at(i) + v.at(i - 1);
    f[d] = v.at(d - 1) + 2;
    return ExtendedFVector(std::move(f));
}

enum class GluingMode {
    /// Two simplex facets identified: the shared (d-1)-simplex is counted once
    /// and both glued facets disappear.
    facet_to_facet,
    /// A simplex facet of the first polytope glued onto a simple vertex of the
    /// second (the vertex is cut off first). Middle face counts add exactly:
    /// f_0 loses one vertex and f_{d-1} loses one facet.
    facet_to_vertex,
};

inline ExtendedFVector connected_sum(const ExtendedFVector& p, const ExtendedFVector& q,
                                     GluingMode mode = GluingMode::facet_to_facet) {
    if (p.dim() != q.dim()) throw std::domain_error("connected_sum: dimension mismatch");
    const int d = p.dim();
    std::vector<Integer> f(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) f[k] = p.at(k) + q.at(k);
    if (mode == GluingMode::facet_to_facet) {
        for (int k = 0; k <= d - 2; ++k) f[k] -= binomial(d, k + 1);
        f[d - 1] -= 2;
    } else {
        if (d == 1) throw std::domain_error("connected_sum: facet_to_vertex needs d >= 2");
        f[0] -= 1;
        f[d - 1] -= 1;
    }
    return ExtendedFVector(std::move(f));
}

/// Facet count of the cyclic d-polytope with n vertices, d even.
inline Integer cyclic_facets(int d, const Integer& n) {
    if (d <= 0 || d % 2 != 0) throw std::domain_error("cyclic_facets: d must be even and positive");
    if (n < d + 1) throw std::domain_error("cyclic_facets: need n >= d + 1");
    const long m = d / 2;
    return binomial(n - m, m) + binomial(n - m - 1, m - 1);
}

/// Vertex count 2^{d+1} - 2^{d-k} of the elementary cubical d-polytope C^d_k, 0 <= k < d.
inline Integer elementary_cubical_vertices(int d, int k) {
    if (d < 1 || k < 0 || k >= d) throw std::domain_error("elementary_cubical_vertices: need 0 <= k < d");
    return (Integer(1) << (d + 1)) - (Integer(1) << (d - k));
}

/// Result of gluing P2 = pyramid(R*) with i+1 copies of P1 = prism(R).
struct MiddleFaceConstruction {
    int i = 0;
    ExtendedFVector facet_to_facet;
    ExtendedFVector facet_to_vertex;
};

/**
 * For a simple 2i-polytope R, builds the (2i+1)-dimensional
 * (..((P2 # P1) # P1) .. ) # P1 with i+1 copies of P1 in both gluing modes.
 * Used to probe whether f_i of the result is coprime to a prime p with
 * i + 2 = p^s.
 */
inline MiddleFaceConstruction middle_face_construction(const ExtendedFVector& r) {
    if (r.dim() < 2 || r.dim() % 2 != 0) throw std::domain_error("middle_face_construction: R must have even dimension >= 2");
    const int i = r.dim() / 2;
    const ExtendedFVector p1 = prism(r);
    const ExtendedFVector p2 = pyramid(dual(r));
    ExtendedFVector a = p2;
    ExtendedFVector b = p2;
    for (int c = 0; c < i + 1; ++c) {
        a = connected_sum(a, p1, GluingMode::facet_to_facet);
        b = connected_sum(b, p1, GluingMode::facet_to_vertex);
    }
    return {i, std::move(a), std::move(b)};
}

inline ExtendedFVector simplex(int d) {
    if (d < 1) throw std::domain_error("simplex: dimension must be positive");
    std::vector<Integer> f(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) f[i] = binomial(d + 1, i + 1);
    return ExtendedFVector(std::move(f));
}

inline ExtendedFVector cube(int d) {
    if (d < 1) throw std::domain_error("cube: dimension must be positive");
    ExtendedFVector v{2};
    for (int i = 1; i < d; ++i) v = prism(v);
    return v;
}

}  // namespace fvset
