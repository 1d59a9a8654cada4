// Acceptance gate: one PASS/FAIL line per criterion, with wall-clock limits.
// Usage: fvset_acceptance <path-to-fvset-cli>

#include "fvset/fvset.hpp"
#include "fvset/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace fvset;

namespace {

int failures = 0;

/// Runs `check`; it returns an empty string on success or a failure note.
void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<std::string()>& check) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    try {
        note = check();
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (note.empty() && secs >= limit_s) note = "exceeded time limit";
    const bool ok = note.empty();
    failures += !ok;
    std::printf("%s %s %s [%.2fs, limit %.0fs]%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs, limit_s,
                ok ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

std::string capture(const std::string& cmd, int& code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return out;
    }
    char buf[1 << 14];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string pt(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: fvset_acceptance <fvset-cli>\n";
        return 64;
    }
    const std::string cli = argv[1];

    criterion("AC1", "exceptional pairs rejected, (10,10) and (28,21) accepted", 1, [] {
        if (exceptional_pairs.size() != 13) return std::string("list size ") + std::to_string(exceptional_pairs.size());
        for (auto [a, b] : exceptional_pairs) {
            auto v = member_Pi4_12(a, b);
            if (v.status != Status::non_member || v.reason != "exceptional-pair") return pt(a, b) + " -> " + v.reason;
        }
        if (!member_Pi4_12(10, 10).is_member()) return std::string("(10,10) rejected");
        if (!member_Pi4_12(28, 21).is_member()) return std::string("(28,21) rejected");
        return std::string();
    });

    criterion("AC2", "(27,21) rejected on the forbidden parabola", 1, [] {
        if ((2 * 21 - 27 - 4) * (2 * 21 - 27 - 4) != 4 * 27 + 13 || 4 * 27 + 13 != 121) return std::string("identity");
        auto v = member_Pi4_12(27, 21);
        if (v.status != Status::non_member || v.reason != "forbidden-parabola") return "reason " + v.reason;
        return std::string();
    });

    criterion("AC3", "ceiling and surd conditions agree on [0,1500]^2", 60, [] {
        for (long x = 0; x <= 1500; ++x)
            for (long y = 0; y <= 1500; ++y) {
                auto c = lemma43_equivalent(x, y);
                if (c.cond1 != c.cond2) return pt(x, y);
            }
        return std::string();
    });

    criterion("AC4", "generator soundness for r0 in {0,1/4,1/3,2/5}, n <= 100; oscillation in [1/5,3/10]", 30, [] {
        for (auto [p, q] : strip_ratios)
            for (long n = 1; n <= 100; ++n) {
                auto in = seq_in_A(p, q, n);
                auto out = seq_out_A(p, q, n);
                if (!member_A(in.x, in.y).is_member()) return "in " + pt(p, q) + " n=" + std::to_string(n);
                if (member_A(out.x, out.y).is_member()) return "out " + pt(p, q) + " n=" + std::to_string(n);
            }
        StripSpec spec{StripFamily::A, Rational(1, 5), Rational(3, 10), 0};
        for (long n = 1; n <= 100; ++n) spec.x_max = std::max({spec.x_max, seq_in_A(1, 4, n).x, seq_out_A(1, 4, n).x});
        auto c = strip_census(spec, StripTarget::A, false, shard_count());
        std::ostringstream os;
        os << "x_max=" << spec.x_max << " in=" << c.in_count << " out=" << c.out_count;
        std::printf("     %s\n", os.str().c_str());
        return (c.in_count >= 50 && c.out_count >= 50) ? std::string() : os.str();
    });

    criterion("AC5", "partial3 tight on C(k+1,3) for k <= 10^4, nondecreasing on [0,10^5]", 30, [] {
        for (long k = 2; k <= 10000; ++k)
            if (partial3(binomial(k + 1, 3)) != binomial(k, 2)) return "k=" + std::to_string(k);
        Integer prev = 0;
        for (long m = 0; m <= 100000; ++m) {
            Integer cur = partial3(m);
            if (cur < prev) return "m=" + std::to_string(m);
            prev = cur;
        }
        return std::string();
    });

    criterion("AC6", "G23 column claim for 2 <= k <= 200, sizes nondecreasing and > 10 at k = 200", 60, [] {
        std::size_t prev_a = 0, prev_b = 0, a_size = 0, b_size = 0;
        for (long k = 2; k <= 200; ++k) {
            auto [a, b] = g23_column_census(k);
            a_size = b_size = 0;
            for (const auto& p : a.points)
                if (p.interior()) {
                    ++a_size;
                    if (p.status != Status::member) return "k=" + std::to_string(k) + " member expected";
                }
            for (const auto& p : b.points)
                if (p.interior()) {
                    ++b_size;
                    if (p.status != Status::non_member) return "k=" + std::to_string(k) + " non-member expected";
                }
            if (a_size < prev_a || b_size < prev_b) return "size drop at k=" + std::to_string(k);
            prev_a = a_size;
            prev_b = b_size;
        }
        std::printf("     interior sizes at k=200: %zu, %zu\n", a_size, b_size);
        return (a_size > 10 && b_size > 10) ? std::string() : std::string("sizes too small");
    });

    criterion("AC7", "g/f round trip for d in 4..12 (500 each); d=4,5 cones match explicit sets, f0 <= 60", 30, [] {
        std::mt19937_64 rng(20181018);
        std::uniform_int_distribution<long> entry(0, 40);
        for (int d = 4; d <= 12; ++d)
            for (int s = 0; s < 500; ++s) {
                GVector g{d, {1}};
                for (int k = 1; k <= d / 2; ++k) g.g.emplace_back(entry(rng));
                if (!(g_from_f(f_from_g(g)) == g)) return "d=" + std::to_string(d);
            }
        for (int d : {4, 5})
            if (gcone_image(d, 60) != explicit_simplicial_set(d, 60)) return "cone d=" + std::to_string(d);
        return std::string();
    });

    criterion("AC8", "pyramids over F3 (f0 <= 30) in Pi4_12; Euler, duality identities on 1000 random inputs", 30, [] {
        for (long f0 = 4; f0 <= 30; ++f0)
            for (long f2 = 4; f2 <= 2 * f0 - 4; ++f2) {
                FVector f{f0, f0 + f2 - 2, f2};
                if (!member_F3(f).is_member()) continue;
                auto p = pyramid(ExtendedFVector(f));
                if (!member_Pi4_12(p.at(1), p.at(2)).is_member()) return "pyramid over " + pt(f0, f2);
            }
        std::mt19937_64 rng(20181018);
        for (int s = 0; s < 1000; ++s) {
            auto v = random_construction(rng, 8);
            auto w = random_construction(rng, 8);
            std::vector<ExtendedFVector> outs{v, dual(v), pyramid(v), bipyramid(v), prism(v)};
            if (v.dim() == w.dim()) {
                outs.push_back(connected_sum(v, w));
                if (v.dim() >= 2) outs.push_back(connected_sum(v, w, GluingMode::facet_to_vertex));
            }
            for (const auto& o : outs)
                if (!o.euler_holds()) return "euler at sample " + std::to_string(s);
            if (!(dual(dual(v)) == v)) return "involution at sample " + std::to_string(s);
            if (!(dual(prism(v)) == bipyramid(dual(v)))) return "prism/bipyramid at sample " + std::to_string(s);
        }
        return std::string();
    });

    criterion("AC9", "figure CSVs byte-identical across runs with spot rows present", 10, [&] {
        struct Case {
            std::string args;
            std::vector<std::string> rows;
        };
        const std::vector<Case> cases{
            {"figure set_A 20", {"0,3,member", "0,2,non_member"}},
            {"figure pi4_12 30", {"26,21,non_member,exceptional-pair"}},
            {"figure g23 50", {"6,10,member,on_gamma0"}},
        };
        for (const auto& c : cases) {
            int c1 = 0, c2 = 0;
            std::string a = capture(cli + " " + c.args + " --format csv", c1);
            std::string b = capture(cli + " " + c.args + " --format csv", c2);
            if (c1 != 0 || c2 != 0) return c.args + ": exit " + std::to_string(c1);
            if (a != b) return c.args + ": outputs differ";
            for (const auto& row : c.rows)
                if (a.find("\n" + row + "\n") == std::string::npos) return c.args + ": missing " + row;
        }
        return std::string();
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
