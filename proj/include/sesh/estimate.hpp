#pragma once

#include "sesh/curve.hpp"
#include "sesh/value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sesh {

// Exact-or-interval value extended by the two infinite sentinels: -inf is the
// generic tangent-bundle value on general-type varieties, +inf the convention
// for a point met by no catalog curve.
class ExtValue {
public:
    static ExtValue pos_inf();
    static ExtValue neg_inf();
    ExtValue(Rational v) : v_(std::move(v)) {}
    ExtValue(QuadExt v) : v_(std::move(v)) {}
    ExtValue(ExactOrInterval v) : v_(std::move(v)) {}

    bool is_pos_inf() const { return inf_ > 0; }
    bool is_neg_inf() const { return inf_ < 0; }
    bool is_finite() const { return inf_ == 0; }
    const ExactOrInterval& finite() const;

    // True when the sign of the value is determined; infinities always are.
    bool certified_sign(int& s) const;
    std::string str() const;

    friend bool operator==(const ExtValue&, const ExtValue&);

private:
    ExtValue(int inf, ExactOrInterval v) : inf_(inf), v_(std::move(v)) {}
    int inf_ = 0;
    ExactOrInterval v_{Rational(0)};
};

// One curve through the point: the multiplicity of the point on the curve and
// the pullback of the restricted bundle to the curve normalization.
struct CurveRestriction {
    std::string curve_label;
    Int mult_x;
    CurveBundle restricted;
};

struct SeshadriEstimate {
    ExtValue upper;                 // inf over the supplied curves
    bool catalog_complete = false;  // when asserted, upper is the exact value
    std::optional<Rational> lower;  // from lower-bound combinators, if any
};

enum class VarietyKind {
    ProjectiveSpace,
    HomogeneousNonPn,
    GeneralTypeOrPsefCanonical,
    CalabiYauLike,
};

struct KnownVariety {
    VarietyKind kind;
    unsigned dim = 0;  // required (>= 1) only for ProjectiveSpace
};

// Tangent-bundle catalog entry: either the exact value or a one-sided bound.
struct KnownEntry {
    enum class Quality { Exact, UpperBound } quality;
    ExtValue value;
};

enum class Verdict { Ample, NotAmple, Unknown };

SeshadriEstimate estimate_from_catalog(const std::vector<CurveRestriction>& restrictions,
                                       bool complete);

// Splitting degrees of the bundle restricted to each torus-invariant line
// through the fixed point; the bundle is assumed nef there.
long long toric_seshadri(const std::vector<std::vector<long long>>& invariant_line_splittings);

ExactOrInterval segre_upper_bound(const Rational& s_n_dual, unsigned n, unsigned r,
                                  const Int& mult_x,
                                  const Rational& precision = default_precision());

Rational det_upper_bound(const Rational& eps_det, const Int& r);

// One tensor factor of a lower bound: `weight` is the symmetric-power
// exponent or twist coefficient scaling this factor's contribution.
struct BoundPart {
    std::string label;
    Rational weight;
    Rational bound;
};

Rational combine_lower_bounds(const std::vector<BoundPart>& parts);

Verdict ampleness_verdict(const std::vector<SeshadriEstimate>& point_estimates);

KnownEntry known_value(const KnownVariety& v);

std::string verdict_name(Verdict v);

} // namespace sesh
