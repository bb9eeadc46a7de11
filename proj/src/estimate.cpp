#include "sesh/estimate.hpp"

#include <stdexcept>

namespace sesh {

ExtValue ExtValue::pos_inf() { return ExtValue(+1, ExactOrInterval(Rational(0))); }
ExtValue ExtValue::neg_inf() { return ExtValue(-1, ExactOrInterval(Rational(0))); }

const ExactOrInterval& ExtValue::finite() const {
    if (inf_ != 0) throw std::domain_error("ExtValue: infinite");
    return v_;
}

bool ExtValue::certified_sign(int& s) const {
    if (inf_ != 0) {
        s = inf_;
        return true;
    }
    if (v_.exact()) {
        s = v_.surd().sign();
        return true;
    }
    return v_.interval().certified_sign(s);
}

std::string ExtValue::str() const {
    if (inf_ > 0) return "inf";
    if (inf_ < 0) return "-inf";
    return v_.str();
}

bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.inf_ != b.inf_) return false;
    if (a.inf_ != 0) return true;
    if (a.v_.exact() != b.v_.exact()) return false;
    if (a.v_.exact()) return a.v_.surd() == b.v_.surd();
    return a.v_.interval().lo() == b.v_.interval().lo() &&
           a.v_.interval().hi() == b.v_.interval().hi();
}

SeshadriEstimate estimate_from_catalog(const std::vector<CurveRestriction>& restrictions,
                                       bool complete) {
    if (restrictions.empty())
        return {ExtValue::pos_inf(), complete, std::nullopt};
    Rational best = seshadri_on_curve(restrictions[0].restricted, restrictions[0].mult_x);
    for (size_t i = 1; i < restrictions.size(); ++i)
        best = min(best, seshadri_on_curve(restrictions[i].restricted, restrictions[i].mult_x));
    return {ExtValue(best), complete, std::nullopt};
}

long long toric_seshadri(const std::vector<std::vector<long long>>& invariant_line_splittings) {
    if (invariant_line_splittings.empty())
        throw std::domain_error("toric_seshadri: no invariant lines supplied");
    bool seen = false;
    long long best = 0;
    for (const auto& line : invariant_line_splittings) {
        if (line.empty())
            throw std::domain_error("toric_seshadri: empty splitting for an invariant line");
        for (long long d : line) {
            if (!seen || d < best) best = d;
            seen = true;
        }
    }
    return best;
}

ExactOrInterval segre_upper_bound(const Rational& s_n_dual, unsigned n, unsigned r,
                                  const Int& mult_x, const Rational& precision) {
    if (s_n_dual.sign() < 0)
        throw std::domain_error("segre_upper_bound: negative Segre number");
    if (n == 0 || r == 0)
        throw std::domain_error("segre_upper_bound: dimension and rank must be positive");
    if (mult_x <= 0)
        throw std::domain_error("segre_upper_bound: multiplicity must be positive");
    Rational denom = Rational(binomial(Int(n) + Int(r) - 1, Int(n))) * Rational(mult_x);
    return nth_root(s_n_dual / denom, n, precision);
}

Rational det_upper_bound(const Rational& eps_det, const Int& r) {
    if (r <= 0)
        throw std::domain_error("det_upper_bound: rank must be positive");
    return eps_det / Rational(r);
}

Rational combine_lower_bounds(const std::vector<BoundPart>& parts) {
    Rational total(0);
    for (const auto& p : parts) total = total + p.weight * p.bound;
    return total;
}

Verdict ampleness_verdict(const std::vector<SeshadriEstimate>& point_estimates) {
    if (point_estimates.empty()) return Verdict::Unknown;
    for (const auto& est : point_estimates) {
        int s = 0;
        if (est.catalog_complete && est.upper.certified_sign(s) && s <= 0)
            return Verdict::NotAmple;
    }
    bool all_positive = true;
    for (const auto& est : point_estimates) {
        bool certified = false;
        if (est.lower && est.lower->sign() > 0) certified = true;
        int s = 0;
        if (est.catalog_complete && est.upper.certified_sign(s) && s > 0) certified = true;
        if (!certified) {
            all_positive = false;
            break;
        }
    }
    return all_positive ? Verdict::Ample : Verdict::Unknown;
}

KnownEntry known_value(const KnownVariety& v) {
    switch (v.kind) {
        case VarietyKind::ProjectiveSpace:
            if (v.dim < 1)
                throw std::domain_error("known_value: projective space needs dimension >= 1");
            return {KnownEntry::Quality::Exact,
                    ExtValue(Rational(v.dim == 1 ? 2 : 1))};
        case VarietyKind::HomogeneousNonPn:
            return {KnownEntry::Quality::Exact, ExtValue(Rational(0))};
        case VarietyKind::GeneralTypeOrPsefCanonical:
            return {KnownEntry::Quality::Exact, ExtValue::neg_inf()};
        case VarietyKind::CalabiYauLike:
            return {KnownEntry::Quality::UpperBound, ExtValue(Rational(0))};
    }
    throw std::logic_error("known_value: unhandled kind");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Ample: return "Ample";
        case Verdict::NotAmple: return "NotAmple";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

} // namespace sesh
