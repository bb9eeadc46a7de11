#pragma once

#include "sesh/rational.hpp"

#include <iosfwd>
#include <string>

namespace sesh {

// Closed interval [lo, hi] certified to contain the represented real number.
// Endpoints only ever move outward, so every derived interval stays a valid
// enclosure.
class RationalInterval {
public:
    RationalInterval() : lo_(0), hi_(0) {}
    explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
    RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw std::domain_error("RationalInterval: hi < lo");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    // Sign when provable from the enclosure: -1, 0 (only for the point
    // interval at zero) or +1; returns false when the interval straddles zero.
    bool certified_sign(int& out) const {
        if (lo_.sign() > 0) { out = 1; return true; }
        if (hi_.sign() < 0) { out = -1; return true; }
        if (lo_.is_zero() && hi_.is_zero()) { out = 0; return true; }
        return false;
    }

    RationalInterval operator-() const { return {-hi_, -lo_}; }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return a + (-b);
    }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        Rational c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
        return {min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4))};
    }
    friend RationalInterval operator*(const Rational& s, const RationalInterval& a) {
        return s.sign() >= 0 ? RationalInterval{s * a.lo_, s * a.hi_}
                             : RationalInterval{s * a.hi_, s * a.lo_};
    }
    friend RationalInterval operator+(const Rational& s, const RationalInterval& a) {
        return {s + a.lo_, s + a.hi_};
    }

    // True when every point of a is strictly below every point of b.
    friend bool certainly_less(const RationalInterval& a, const RationalInterval& b) {
        return a.hi_ < b.lo_;
    }

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

private:
    Rational lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv);

// Enclosure of sqrt(x) for x >= 0 with width at most `width` (width > 0).
RationalInterval sqrt_interval(const Rational& x, const Rational& width);

// Enclosure of x^(1/n) for x >= 0, n >= 1, with width at most `width`.
RationalInterval nth_root_interval(const Rational& x, unsigned n, const Rational& width);

// Reciprocal of an interval that provably excludes zero.
RationalInterval reciprocal(const RationalInterval& a);

} // namespace sesh
