#pragma once

#include "sesh/surd.hpp"
#include "sesh/value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sesh {

// Genus of the curve whose self-product carries the classes; the analysis of
// the span <f1, f2, delta> needs g >= 2.
class Genus {
public:
    explicit Genus(long long g);
    long long value() const { return g_; }

private:
    long long g_;
};

// a*f1 + b*f2 + c*delta in the span of the two fiber classes and the diagonal.
struct CxCClass {
    QuadExt a, b, c;
    friend bool operator==(const CxCClass&, const CxCClass&) = default;
};

CxCClass fiber1_class();
CxCClass fiber2_class();
CxCClass delta_class();
// (g-1)(f1+f2) + delta: the pullback of a principal polarization, nef for
// every curve of genus g.
CxCClass theta_class(const Genus& g);

enum class Generality { Arbitrary = 0, General = 1, VeryGeneral = 2 };
std::string generality_name(Generality x);

enum class NefVerdict { Nef, NotNef, Unknown };
std::string nef_verdict_name(NefVerdict v);

struct PairingViolation {
    std::string pairing;  // "D.f1", "D.f2", "D.delta", or "D.D"
    ExactOrInterval value;
};

struct WeightedGenerator {
    CxCClass cls;
    std::string family;
    QuadExt weight;
};

// Nef: scale * sum(weight_i * cls_i) == class, weights and scale nonnegative.
// NotNef: `violation` holds a pairing with strictly negative exact value.
struct NefCertificate {
    NefVerdict verdict = NefVerdict::Unknown;
    Generality generality = Generality::Arbitrary;
    std::string family;
    std::vector<WeightedGenerator> combination;
    QuadExt scale = QuadExt(Rational(1));
    std::optional<PairingViolation> violation;
};

struct FamilyClass {
    CxCClass cls;
    NefCertificate cert;
};

// Intersection form: f1.f1 = f2.f2 = 0, f1.f2 = f1.delta = f2.delta = 1,
// delta.delta = 2-2g. Exact whenever the coefficients stay in one quadratic
// field; a certified enclosure otherwise.
ExactOrInterval intersect(const CxCClass& d1, const CxCClass& d2, const Genus& g);
ExactOrInterval self_intersection(const CxCClass& d, const Genus& g);

// Checks D.f1 >= 0, D.f2 >= 0, D.delta >= 0, D.D >= 0 in that order and
// reports the first failure; nullopt means all pass.
std::optional<PairingViolation> necessary_conditions(const CxCClass& d, const Genus& g);

QuadExt vojta_b(const Genus& g, const QuadExt& a);
QuadExt vojta_a(const Genus& g, const QuadExt& b);

FamilyClass kouvidakis_class(const Genus& g);
FamilyClass integral_family_class(const Genus& g, long long d);
std::vector<FamilyClass> sporadic_family(const Genus& g);

// a*f1 + (1 + g/(a-1))*f2 - delta: conjecturally nef, zero self-intersection.
CxCClass conjecture_class(const Genus& g, const QuadExt& a);

struct SamplingParams {
    // Sample count along each continuous nef family (b in (1, 2]).
    unsigned curve_samples = 64;
    // Query points whose tangency touch points are added to generator_set.
    std::vector<std::pair<QuadExt, QuadExt>> focus;
};

struct TaggedClass {
    CxCClass cls;
    std::string family;
    Generality generality;
};

std::vector<TaggedClass> generator_set(const Genus& g, Generality max_generality,
                                       const SamplingParams& params = {});

NefCertificate certify_nef(const CxCClass& d, const Genus& g, Generality max_generality,
                           const SamplingParams& params = {});

// Tangent line from an external point to the curve a(b) = g/(b-1) + (b-1)(g-1) + 1.
struct TangencyRecord {
    QuadExt point_a, point_b;  // the given external point
    QuadExt touch_a, touch_b;  // point of tangency, b in (1, 2]
    QuadExt slope;             // da/db of the tangent line

    QuadExt a_at(const QuadExt& b) const;  // line through point and touch
};

TangencyRecord tangent_from_point(const Genus& g, const QuadExt& pa, const QuadExt& pb);

Rational slope_R(const Genus& g, const Rational& a, long long n);
Rational slope_R_limit(const Genus& g, const Rational& a);

struct RegionCell {
    Rational a, b;
    NefVerdict verdict;
};

// Verdict grid for classes a*f1 + b*f2 - delta over the given rectangle.
std::vector<RegionCell> region_sample(const Genus& g, const Rational& a_lo,
                                      const Rational& a_hi, const Rational& b_lo,
                                      const Rational& b_hi, const Rational& step,
                                      Generality max_generality);

} // namespace sesh
