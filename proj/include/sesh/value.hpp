#pragma once

#include "sesh/interval.hpp"
#include "sesh/rational.hpp"
#include "sesh/surd.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace sesh {

// A real number held exactly (rational or quadratic surd) or as a certified
// enclosure when exactness is out of reach.
class ExactOrInterval {
public:
    ExactOrInterval() : v_(QuadExt()) {}
    ExactOrInterval(const Rational& r) : v_(QuadExt(r)) {}
    ExactOrInterval(const QuadExt& s) : v_(s) {}
    ExactOrInterval(const RationalInterval& iv) : v_(iv) {}

    bool exact() const { return std::holds_alternative<QuadExt>(v_); }
    bool is_rational() const { return exact() && surd().is_rational(); }

    const QuadExt& surd() const { return std::get<QuadExt>(v_); }
    const Rational& rational_value() const { return surd().rational_value(); }
    const RationalInterval& interval() const { return std::get<RationalInterval>(v_); }

    RationalInterval enclosure(const Rational& width) const {
        return exact() ? surd().enclosure(width) : interval();
    }

    std::string str() const { return exact() ? surd().str() : interval().str(); }

private:
    std::variant<QuadExt, RationalInterval> v_;
};

std::ostream& operator<<(std::ostream& os, const ExactOrInterval& v);

// x^(1/n) for x >= 0: exact rational when x is a perfect n-th power, an
// exact surd when n == 2, otherwise an enclosure of width <= precision.
ExactOrInterval nth_root(const Rational& x, unsigned n, const Rational& precision);

// Default enclosure width used when no precision is supplied.
Rational default_precision();

} // namespace sesh
