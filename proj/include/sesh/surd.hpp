#pragma once

#include "sesh/interval.hpp"
#include "sesh/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sesh {

// Two quadratic surds over different radicands do not close under + or *;
// operations that would need a common field signal this instead of rounding.
struct MixedRadicand : std::domain_error {
    MixedRadicand() : std::domain_error("QuadExt: mixed radicands are not closed; use interval forms") {}
};

// Element p + q*sqrt(d) of a real quadratic extension. Canonical form: d is
// squarefree and nonnegative, d == 0 exactly when q == 0, so equality of
// values is equality of representations.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), d_(0) {}
    QuadExt(const Rational& r) : p_(r), q_(0), d_(0) {}
    QuadExt(long long n) : p_(n), q_(0), d_(0) {}
    QuadExt(Rational p, Rational q, Int d);

    const Rational& rational_part() const { return p_; }
    const Rational& surd_coefficient() const { return q_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return q_.is_zero(); }
    const Rational& rational_value() const {
        if (!is_rational()) throw std::domain_error("QuadExt: irrational value");
        return p_;
    }

    // Exact sign by case analysis on the signs of p, q and p^2 vs q^2 d.
    int sign() const;
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }
    QuadExt conjugate() const { return QuadExt(p_, -q_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
    }

    // Enclosure of the value with width at most `width`.
    RationalInterval enclosure(const Rational& width) const;

    // Largest integer <= value, decided exactly.
    Int floor() const;

    std::string str() const;

private:
    Rational p_, q_;
    Int d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

inline int quad_sign(const QuadExt& x) { return x.sign(); }

// Total order across different radicands: canonical forms make equality
// syntactic, and a nonzero difference has its sign pinned by refining
// enclosures until they separate.
int quad_compare_mixed(const QuadExt& x, const QuadExt& y);

inline bool quad_less(const QuadExt& x, const QuadExt& y) { return quad_compare_mixed(x, y) < 0; }

QuadExt quad_min(const QuadExt& x, const QuadExt& y);
QuadExt quad_max(const QuadExt& x, const QuadExt& y);

// Formal Q-linear combination of sqrt(d) over distinct squarefree radicands
// (radicand 1 carries the rational part). Closed under + and *, with an
// exact sign: square roots of distinct squarefree integers are linearly
// independent over Q, so the combination vanishes only when every
// coefficient does, and otherwise interval refinement terminates.
class SurdTerms {
public:
    SurdTerms() = default;
    SurdTerms(const QuadExt& x);

    void add(const Rational& coef, const Int& squarefree_radicand);
    SurdTerms& operator+=(const SurdTerms& o);
    friend SurdTerms operator+(SurdTerms a, const SurdTerms& b) { return a += b; }
    friend SurdTerms operator*(const SurdTerms& a, const SurdTerms& b);

    int sign() const;
    bool is_zero() const;

    // The value as a QuadExt when at most one irrational radicand remains.
    bool to_quadext(QuadExt& out) const;

    RationalInterval enclosure(const Rational& width) const;

private:
    // Sorted by radicand; no zero coefficients; radicands squarefree.
    std::vector<std::pair<Int, Rational>> terms_;
};

// Exact floor of x scaled by 10^frac_digits, then truncated toward zero.
std::string decimal_truncate(const QuadExt& x, unsigned frac_digits);
std::string decimal_truncate_sig(const QuadExt& x, unsigned sig_digits);

} // namespace sesh
