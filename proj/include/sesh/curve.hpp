#pragma once

#include "sesh/rational.hpp"

#include <vector>

namespace sesh {

// One semistable graded quotient, asserted by the caller: only its (rank,
// degree) slope data enters any computation. Torsion is omitted from piece
// lists (its slope is conventionally infinite and never attains a minimum).
struct SemistablePiece {
    Int rank;
    Rational degree;

    Rational slope() const { return degree / Rational(rank); }
    friend bool operator==(const SemistablePiece&, const SemistablePiece&) = default;
};

// Formal direct sum of semistable pieces with a rational twist that shifts
// every slope uniformly.
class CurveBundle {
public:
    CurveBundle(std::vector<SemistablePiece> pieces, Rational twist = Rational(0));

    const std::vector<SemistablePiece>& pieces() const { return pieces_; }
    const Rational& twist() const { return twist_; }
    Int total_rank() const;
    Rational total_degree() const;  // includes the twist contribution

    friend bool operator==(const CurveBundle&, const CurveBundle&) = default;

private:
    std::vector<SemistablePiece> pieces_;
    Rational twist_;
};

// Concave polygon of cumulative (rank, degree) vertices starting at (0, 0);
// segment slopes strictly decrease left to right.
struct HNPolygon {
    std::vector<std::pair<Int, Rational>> vertices;

    Rational mu_max() const;
    Rational mu_min() const;
    bool concave() const;
};

HNPolygon hn_polygon(const CurveBundle& b);

Rational mu_min(const CurveBundle& b);
Rational mu_max(const CurveBundle& b);
// Characteristic-zero model: the normalized minimal slope coincides with the
// plain one (there is no Frobenius to iterate).
inline Rational mu_bar_min(const CurveBundle& b) { return mu_min(b); }

// The bundle is the pullback of the restriction to the curve normalization;
// mult_x is the multiplicity of the point on the curve.
Rational seshadri_on_curve(const CurveBundle& b, const Int& mult_x);

CurveBundle tensor(const CurveBundle& a, const CurveBundle& b);
CurveBundle sym(const CurveBundle& b, unsigned m);
CurveBundle direct_sum(const CurveBundle& a, const CurveBundle& b);
CurveBundle dual(const CurveBundle& b);
CurveBundle det(const CurveBundle& b);
CurveBundle twist(const CurveBundle& b, const Rational& t);

bool is_nef(const CurveBundle& b);
bool is_ample(const CurveBundle& b);

} // namespace sesh
