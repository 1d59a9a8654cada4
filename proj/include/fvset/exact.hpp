#pragma once

/**
 * @file exact.hpp
 * @brief Exact integer, rational and quadratic-surd arithmetic.
 *
 * Every membership decision in fvset goes through this header. Values of
 * the form a + b*sqrt(c) with rational a, b and a squarefree integer c are
 * compared by sign analysis and squaring only, so no floating point is
 * involved in any decision path.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fvset {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the square root. Throws std::domain_error for n < 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

/// Binomial coefficient with the convention C(n, k) = 0 whenever n < k
/// (including negative n) and C(n, 0) = 1.
inline Integer binomial(const Integer& n, long k) {
    if (k < 0) throw std::domain_error("binomial: negative k");
    if (k == 0) return 1;
    if (n < k) return 0;
    // symmetric reduction keeps the loop short for k close to n
    if (Integer(2 * static_cast<long long>(k)) > n) {
        Integer kk = n - k;
        if (kk < k) k = kk.convert_to<long>();
    }
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Least m with (2m - 1)^2 >= 4x + 9, i.e. ceil(sqrt(x + 9/4) + 1/2).
inline Integer ceil_half_sqrt(const Integer& x) {
    if (x < 0) throw std::domain_error("ceil_half_sqrt: negative argument");
    const Integer n = 4 * x + 9;
    const Integer s = isqrt(n);
    if (s * s == n) return (s + 1) / 2;  // n odd, so s odd
    // need the least odd integer >= s + 1
    return (s % 2 == 0) ? (s + 2) / 2 : (s + 3) / 2;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Integer ceil(const Rational& r) { return -floor(-r); }

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

namespace detail {

/// Splits n >= 0 into square * squarefree: n = s^2 * c.
template <typename Int>
std::pair<Int, Int> split_square_factor(Int m) {
    Int s = 1;
    Int c = 1;
    if (m == 0) return {0, 0};
    auto strip = [&](const Int& p) {
        Int p2 = p * p;
        while (m % p2 == 0) {
            m /= p2;
            s *= p;
        }
        if (m % p == 0) {
            m /= p;
            c *= p;
        }
    };
    strip(Int(2));
    // Once p^3 > m, what remains has at most two prime factors, all >= p.
    for (Int p = 3; p * p * p <= m; p += 2) strip(p);
    if (m > 1) {
        Int r;
        if constexpr (std::is_integral_v<Int>) {
            r = static_cast<Int>(isqrt(Integer(m)).template convert_to<std::uint64_t>());
        } else {
            r = isqrt(m);
        }
        if (r * r == m) {
            s *= r;
        } else {
            c *= m;
        }
    }
    return {s, c};
}

}  // namespace detail

/// n = s^2 * c with c squarefree; returns {s, c}. split_square_factor(0) = {0, 0}.
inline std::pair<Integer, Integer> split_square_factor(const Integer& n) {
    if (n < 0) throw std::domain_error("split_square_factor: negative argument");
    if (n <= Integer(std::numeric_limits<std::uint64_t>::max() / 4)) {
        auto [s, c] = detail::split_square_factor<std::uint64_t>(n.convert_to<std::uint64_t>());
        return {Integer(s), Integer(c)};
    }
    return detail::split_square_factor<Integer>(n);
}

/**
 * Exact real number a + b*sqrt(c).
 *
 * Normalized form: c is squarefree and c > 1 whenever b != 0; a rational
 * value is stored with b = 0 and c = 0. Perfect-square radicands collapse
 * into the rational part during construction, so two Surds compare equal
 * field-by-field exactly when they denote the same real.
 */
class Surd {
public:
    Surd() : a_(0), b_(0), c_(0) {}
    Surd(const Rational& a) : a_(a), b_(0), c_(0) {}  // NOLINT(implicit)
    Surd(const Integer& a) : a_(a), b_(0), c_(0) {}   // NOLINT(implicit)
    Surd(long long a) : a_(a), b_(0), c_(0) {}         // NOLINT(implicit)

    /// a + b*sqrt(radicand); radicand may be any nonnegative rational.
    Surd(const Rational& a, const Rational& b, const Rational& radicand) : a_(a), b_(0), c_(0) {
        if (radicand < 0) throw std::domain_error("Surd: negative radicand");
        if (b == 0 || radicand == 0) return;
        // sqrt(P/Q) = sqrt(P*Q) / Q
        const Integer& p = boost::multiprecision::numerator(radicand);
        const Integer& q = boost::multiprecision::denominator(radicand);
        auto [s, c] = split_square_factor(p * q);
        Rational coeff = b * Rational(s, q);
        if (c == 1) {
            a_ += coeff;
        } else {
            b_ = std::move(coeff);
            c_ = std::move(c);
        }
    }

    static Surd sqrt(const Rational& radicand) { return Surd(0, 1, radicand); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coefficient() const { return b_; }
    const Integer& radicand() const { return c_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // opposite signs: the larger square wins; never equal since c is not a square
        Rational a2 = a_ * a_;
        Rational b2c = b_ * b_ * Rational(c_);
        return a2 > b2c ? sa : sb;
    }

    Surd operator-() const {
        Surd r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    Surd& operator+=(const Rational& r) {
        a_ += r;
        return *this;
    }
    Surd& operator-=(const Rational& r) {
        a_ -= r;
        return *this;
    }
    Surd& operator*=(const Rational& r) {
        if (r == 0) return *this = Surd();
        a_ *= r;
        b_ *= r;
        return *this;
    }

    /// Sum of surds over the same radicand (or where one side is rational).
    friend Surd operator+(const Surd& s, const Surd& t) {
        if (t.is_rational()) return Surd(s) += t.a_;
        if (s.is_rational()) return Surd(t) += s.a_;
        if (s.c_ != t.c_) throw std::domain_error("Surd: sum of distinct radicands");
        Surd r;
        r.a_ = s.a_ + t.a_;
        r.b_ = s.b_ + t.b_;
        r.c_ = r.b_ == 0 ? Integer(0) : s.c_;
        return r;
    }
    friend Surd operator-(const Surd& s, const Surd& t) { return s + (-t); }

    friend Surd operator*(const Surd& s, const Surd& t) {
        if (t.is_rational()) return Surd(s) *= t.a_;
        if (s.is_rational()) return Surd(t) *= s.a_;
        if (s.c_ != t.c_) throw std::domain_error("Surd: product of distinct radicands");
        Surd r;
        r.a_ = s.a_ * t.a_ + s.b_ * t.b_ * Rational(s.c_);
        r.b_ = s.a_ * t.b_ + s.b_ * t.a_;
        r.c_ = r.b_ == 0 ? Integer(0) : s.c_;
        return r;
    }

    friend Surd operator+(Surd s, const Rational& r) { return s += r; }
    friend Surd operator-(Surd s, const Rational& r) { return s -= r; }
    friend Surd operator*(Surd s, const Rational& r) { return s *= r; }

    friend bool operator==(const Surd& s, const Surd& t) {
        return s.a_ == t.a_ && s.b_ == t.b_ && s.c_ == t.c_;
    }

    friend std::strong_ordering operator<=>(const Surd& s, const Surd& t);

    /// Greatest integer <= value.
    Integer floor() const;
    /// Least integer >= value.
    Integer ceil() const { return -(-*this).floor(); }

    /// Display-only approximation.
    double approx() const {
        return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(c_.convert_to<double>());
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Surd& s) {
        if (s.is_rational()) return os << s.a_;
        if (s.a_ != 0) os << s.a_ << (s.b_ > 0 ? " + " : " - ");
        else if (s.b_ < 0) os << "-";
        Rational mag = s.b_ < 0 ? Rational(-s.b_) : s.b_;
        if (mag != 1) os << mag << "*";
        return os << "sqrt(" << s.c_ << ")";
    }

private:
    Rational a_;
    Rational b_;
    Integer c_;
};

/// Exact ordering of the reals denoted by two normalized surds.
inline std::strong_ordering surd_cmp(const Surd& s, const Surd& t) {
    int sg;
    if (s.is_rational() || t.is_rational() || s.radicand() == t.radicand()) {
        sg = (s - t).sign();
    } else {
        // (a1 - a2) + b1*sqrt(c1) - b2*sqrt(c2): split as P + Q, Q = -b2*sqrt(c2)
        Surd p(s.rational_part() - t.rational_part(), s.radical_coefficient(), Rational(s.radicand()));
        Surd q(0, -t.radical_coefficient(), Rational(t.radicand()));
        int sp = p.sign();
        int sq = q.sign();
        if (sp == 0) {
            sg = sq;
        } else if (sp == sq) {
            sg = sp;
        } else {
            // compare |P| with |Q| through P^2 (same radicand c1) and Q^2 (rational)
            Rational q2 = t.radical_coefficient() * t.radical_coefficient() * Rational(t.radicand());
            int c = (p * p - Surd(q2)).sign();
            sg = c > 0 ? sp : (c < 0 ? sq : 0);
        }
    }
    if (sg < 0) return std::strong_ordering::less;
    if (sg > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const Surd& s, const Surd& t) { return surd_cmp(s, t); }

inline Integer Surd::floor() const {
    if (is_rational()) return fvset::floor(a_);
    // |b|*sqrt(c) = sqrt(b^2 c); estimate within 2 of the true value, then fix up exactly
    Rational b2c = b_ * b_ * Rational(c_);
    Integer w = isqrt(fvset::floor(b2c));
    Integer e = fvset::floor(a_) + (b_ > 0 ? w : Integer(-w));
    while (surd_cmp(Surd(e), *this) == std::strong_ordering::greater) --e;
    while (surd_cmp(Surd(Integer(e + 1)), *this) != std::strong_ordering::greater) ++e;
    return e;
}

inline Surd abs(const Surd& s) { return s.sign() < 0 ? -s : s; }

}  // namespace fvset
