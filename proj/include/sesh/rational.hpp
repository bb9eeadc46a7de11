#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace sesh {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in lowest terms with positive denominator.
// All arithmetic is exact; there is no implicit conversion from floating point.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0)
            v_.assign(boost::multiprecision::cpp_rational(-num, -den));
        else
            v_.assign(boost::multiprecision::cpp_rational(num, den));
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return numerator(v_); }
    Int den() const { return denominator(v_); }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator(v_) == 1; }

    Rational operator-() const { return Rational(cpp_rat(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Largest integer <= value.
    Int floor() const {
        Int q = numerator(v_) / denominator(v_);
        if (v_.sign() < 0 && q * denominator(v_) != numerator(v_)) --q;
        return q;
    }
    Int ceil() const { return -(-*this).floor(); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Integer exponents; 0^negative is rejected.
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw std::domain_error("Rational: zero to negative power");
        Rational base = e < 0 ? Rational(den(), num()) : *this;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                     : static_cast<unsigned long long>(e);
        Rational acc(1);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

private:
    using cpp_rat = boost::multiprecision::cpp_rational;
    explicit Rational(cpp_rat v) : v_(std::move(v)) {}
    cpp_rat v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Smallest integer strictly greater than x.
inline Int least_integer_greater(const Rational& x) { return x.floor() + 1; }

// Floor of the non-negative square root.
Int isqrt_floor(const Int& n);

// Floor of the non-negative n-th root.
Int iroot_floor(const Int& a, unsigned n);

// Exact binomial coefficient; k > n yields 0.
Int binomial(const Int& n, const Int& k);

// Writes d = s^2 * f with f squarefree; returns {s, f}. Square factors are
// found by trial division up to 1e5 plus square/cube checks on the cofactor,
// which covers every radicand these formulas produce.
std::pair<Int, Int> squarefree_decompose(const Int& d);

// Accepts "p", "p/q" and decimal literals like "13.7" or "-0.25".
Rational parse_rational(const std::string& text);

// Truncates toward zero at `frac_digits` fractional digits.
std::string decimal_truncate(const Rational& x, unsigned frac_digits);

// Truncates toward zero keeping `sig_digits` significant digits.
std::string decimal_truncate_sig(const Rational& x, unsigned sig_digits);

} // namespace sesh
