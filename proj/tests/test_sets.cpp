#include "fvset/gtheorem.hpp"
#include "fvset/sets.hpp"

#include <gtest/gtest.h>

using namespace fvset;

namespace {
void expect_verdict(const Verdict& v, Status s, const std::string& reason = {}) {
    EXPECT_EQ(v.status, s) << v.reason;
    if (!reason.empty()) EXPECT_EQ(v.reason, reason);
}
}  // namespace

TEST(F3, Examples) {
    expect_verdict(member_F3({4, 6, 4}), Status::member);
    expect_verdict(member_F3({7, 11, 6}), Status::member);
    expect_verdict(member_F3({5, 10, 7}), Status::non_member, "f2-upper-bound");
    expect_verdict(member_F3({5, 10, 6}), Status::non_member, "euler-relation");
    EXPECT_THROW(member_F3({5, 10, 10, 5}), std::domain_error);
}

TEST(F3cs, Examples) {
    expect_verdict(member_F3cs({8, 12, 6}), Status::member);
    expect_verdict(member_F3cs({6, 12, 8}), Status::member);
    // all entries of the simplex are even; it fails the size bound
    expect_verdict(member_F3cs({4, 6, 4}), Status::non_member, "f0-plus-f2-lower-bound");
    expect_verdict(member_F3cs({5, 9, 6}), Status::non_member, "parity");
}

TEST(F3s, Examples) {
    auto v = member_F3s({4, 6, 4});
    expect_verdict(v, Status::member);
    EXPECT_EQ(v.witness, std::vector<Integer>{4});
    EXPECT_EQ(member_F3s({5, 9, 6}).witness, std::vector<Integer>{5});
    expect_verdict(member_F3s({5, 8, 5}), Status::non_member, "f1-relation");
}

TEST(F4s, Examples) {
    expect_verdict(member_F4s({5, 10, 10, 5}), Status::member);
    expect_verdict(member_F4s({6, 15, 18, 9}), Status::member);
    expect_verdict(member_F4s({6, 13, 14, 7}), Status::non_member, "f1-lower-bound");
}

TEST(F5s, Examples) {
    expect_verdict(member_F5s({6, 15, 20, 15, 6}), Status::member);
    expect_verdict(member_F5s({7, 21, 35, 30, 12}), Status::non_member, "f2-relation");
    expect_verdict(member_F5s({7, 20, 30, 25, 10}), Status::member);
}

TEST(F3, SubsetsOfF3) {
    for (long f0 = 0; f0 <= 40; ++f0)
        for (long f2 = 0; f2 <= 40; ++f2) {
            if (f0 + f2 < 2) continue;
            FVector v{f0, f0 + f2 - 2, f2};
            if (member_F3cs(v).is_member()) ASSERT_TRUE(member_F3(v).is_member()) << f0 << "," << f2;
            if (member_F3s(v).is_member()) ASSERT_TRUE(member_F3(v).is_member()) << f0 << "," << f2;
        }
}

TEST(F3, SimplicialSetMatchesLowDimG) {
    for (long f0 = 0; f0 <= 40; ++f0)
        for (long f1 = 0; f1 <= 120; ++f1)
            for (long f2 = 0; f2 <= 80; f2 += 1) {
                FVector v{f0, f1, f2};
                ASSERT_EQ(member_F3s(v).is_member(), member_simplicial_low_dim(v).is_member() && f0 >= 4)
                    << f0 << "," << f1 << "," << f2;
            }
}

TEST(F4s, MatchesGTheoremPredicate) {
    for (long f0 = 0; f0 <= 30; ++f0)
        for (long f1 = 0; f1 <= 435; ++f1)
            for (long df : {0L, 1L}) {
                long f2 = -2 * f0 + 2 * f1 + df, f3 = -f0 + f1;
                if (f2 < 0 || f3 < 0) continue;
                FVector v{f0, f1, f2, f3};
                ASSERT_EQ(member_F4s(v).is_member(), member_simplicial_low_dim(v).is_member() && f0 >= 5)
                    << f0 << "," << f1 << "," << df;
            }
}

TEST(F5s, MatchesGTheoremPredicate) {
    for (long f0 = 0; f0 <= 30; ++f0)
        for (long f1 = 0; f1 <= 435; ++f1) {
            long f2 = -10 * f0 + 4 * f1 + 20, f3 = -15 * f0 + 5 * f1 + 30, f4 = -6 * f0 + 2 * f1 + 12;
            if (f2 < 0 || f3 < 0 || f4 < 0) continue;
            FVector v{f0, f1, f2, f3, f4};
            ASSERT_EQ(member_F5s(v).is_member(), member_simplicial_low_dim(v).is_member() && f0 >= 6)
                << f0 << "," << f1;
        }
}

TEST(Pi4_12, Examples) {
    expect_verdict(member_Pi4_12(12, 12), Status::non_member, "exceptional-pair");
    expect_verdict(member_Pi4_12(10, 10), Status::member);
    expect_verdict(member_Pi4_12(27, 21), Status::non_member, "forbidden-parabola");
    expect_verdict(member_Pi4_12(28, 21), Status::member);
    expect_verdict(member_Pi4_12(21, 27), Status::non_member, "forbidden-parabola");
}

TEST(Pi4_12, ExceptionalList) {
    ASSERT_EQ(exceptional_pairs.size(), 13u);
    for (auto [a, b] : exceptional_pairs) {
        EXPECT_TRUE(satisfies_A_bound(a, b)) << a << "," << b;
        EXPECT_FALSE(on_forbidden_parabola(a, b)) << a << "," << b;
        expect_verdict(member_Pi4_12(a, b), Status::non_member, "exceptional-pair");
        expect_verdict(member_Pi4_12(b, a), Status::non_member, "exceptional-pair");
    }
}

TEST(Pi4_12, DualitySymmetric) {
    for (long a = 0; a <= 80; ++a)
        for (long b = 0; b <= 80; ++b) {
            auto u = member_Pi4_12(a, b), v = member_Pi4_12(b, a);
            ASSERT_EQ(u.status, v.status) << a << "," << b;
            ASSERT_EQ(u.reason, v.reason) << a << "," << b;
        }
}

TEST(Pi4_12, MembersLieInA) {
    for (long a = 0; a <= 120; ++a)
        for (long b = 0; b <= a; ++b) {
            if (!member_Pi4_12(a, b).is_member()) continue;
            ASSERT_TRUE(member_A(a, b).is_member()) << a << "," << b;
        }
}

TEST(Pi4_12, ParabolaHitsAreExact) {
    // (2y - x - 4)^2 = 4x + 13 with t = 2y - x - 4 odd: x = (t^2 - 13)/4, y = (x + t + 4)/2
    int hits = 0;
    for (long t = 5; t <= 301; t += 2) {
        long x = (t * t - 13) / 4;
        if ((t * t - 13) % 4 != 0 || (x + t + 4) % 2 != 0) continue;
        long y = (x + t + 4) / 2;
        if (x < y) continue;  // mirrored by duality
        ASSERT_TRUE(on_forbidden_parabola(x, y));
        expect_verdict(member_Pi4_12(x, y), Status::non_member, "forbidden-parabola");
        ++hits;
    }
    EXPECT_GT(hits, 50);
}

TEST(A, Examples) {
    expect_verdict(member_A(0, 3), Status::member);
    expect_verdict(member_A(0, 2), Status::non_member, "below-lower-bound");
    expect_verdict(member_A(4, 6), Status::member);
    expect_verdict(member_A(7, 8), Status::non_member);
    expect_verdict(member_A(-1, 8), Status::non_member, "x-negative");
}

TEST(A, UpwardClosedInY) {
    for (long x = 0; x <= 300; ++x) {
        bool seen = false;
        for (long y = 0; y <= 400; ++y) {
            bool in = member_A(x, y).is_member();
            ASSERT_TRUE(!seen || in) << x << "," << y;
            seen = seen || in;
        }
    }
}

TEST(SingleFaceNumbers, Periods) {
    EXPECT_EQ(G_middle(2), 2);
    EXPECT_EQ(G_middle(3), 5);
    EXPECT_EQ(G_middle(4), 1);
    EXPECT_EQ(G_middle(7), 3);  // 9 = 3^2
    EXPECT_EQ(G_even(2), 2);
    EXPECT_EQ(G_even(6), 2);
    EXPECT_EQ(G_even(3), 1);
    EXPECT_EQ(prime_power_base(1), 0);
    EXPECT_EQ(prime_power_base(12), 0);
    EXPECT_EQ(prime_power_base(125), 5);
}

TEST(SingleFaceNumbers, VertexCounts) {
    expect_verdict(member_Pi3_0_cub(8), Status::member);
    expect_verdict(member_Pi3_0_cub(9), Status::non_member, "gap");
    expect_verdict(member_Pi3_0_cub(10), Status::member);
    expect_verdict(member_Pi3_0_cub(7), Status::non_member);
    expect_verdict(member_Pi4_0_2s2s(7), Status::non_member, "gap");
    expect_verdict(member_Pi4_0_2s2s(5), Status::member);
    expect_verdict(member_Pi4_0_2s2s(9), Status::member);
    expect_verdict(member_Pi4_0_2s2s(4), Status::non_member);
}

TEST(SingleFaceNumbers, CubicalEvenDimension) {
    expect_verdict(member_Pi_0_cub_even_d(4, 17, 20), Status::non_member, "parity");
    expect_verdict(member_Pi_0_cub_even_d(4, 22, 20), Status::member);
    expect_verdict(member_Pi_0_cub_even_d(4, 18, 20), Status::unknown, "threshold-unknown");
    EXPECT_THROW(member_Pi_0_cub_even_d(5, 18, 20), std::domain_error);
}

TEST(VertexFacetPairs, Examples) {
    EXPECT_EQ(facets_pair_threshold(6), 969);
    EXPECT_EQ(facets_pair_threshold(4), 78);
    expect_verdict(member_Pi_0_facets_even_d(4, 500, 500), Status::member);
    EXPECT_THROW(member_Pi_0_facets_even_d(4, 1000, 3), std::domain_error);
    EXPECT_THROW(member_Pi_0_facets_even_d(5, 100, 100), std::domain_error);
    expect_verdict(member_Pi_0_facets_even_d(4, 6, 6), Status::unknown, "threshold-unknown");
    expect_verdict(member_Pi_0_facets_even_d(4, 10, 100), Status::non_member, "facets-exceed-cyclic");
    expect_verdict(member_Pi_0_facets_even_d(4, 100, 10), Status::non_member, "vertices-exceed-cyclic");
    expect_verdict(member_Pi_0_facets_even_d(4, 70, 8), Status::non_member, "vertices-exceed-cyclic");
}

TEST(VertexFacetPairs, SymmetricUnderDuality) {
    for (long n = 5; n <= 120; ++n)
        for (long m = 5; m <= 120; ++m)
            ASSERT_EQ(member_Pi_0_facets_even_d(4, n, m).status, member_Pi_0_facets_even_d(4, m, n).status);
}
