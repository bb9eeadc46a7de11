#include "sesh/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace sesh {

namespace {

// Sort by slope descending and merge equal-slope runs into single pieces.
std::vector<SemistablePiece> canonical_pieces(std::vector<SemistablePiece> ps) {
    std::sort(ps.begin(), ps.end(), [](const SemistablePiece& x, const SemistablePiece& y) {
        return x.slope() > y.slope();
    });
    std::vector<SemistablePiece> merged;
    for (const auto& p : ps) {
        if (!merged.empty() && merged.back().slope() == p.slope()) {
            merged.back().rank += p.rank;
            merged.back().degree = merged.back().degree + p.degree;
        } else {
            merged.push_back(p);
        }
    }
    return merged;
}

CurveBundle canonical(std::vector<SemistablePiece> ps, Rational tw) {
    return CurveBundle(canonical_pieces(std::move(ps)), std::move(tw));
}

} // namespace

CurveBundle::CurveBundle(std::vector<SemistablePiece> pieces, Rational twist)
    : pieces_(std::move(pieces)), twist_(std::move(twist)) {
    if (pieces_.empty())
        throw std::domain_error("CurveBundle: empty piece list");
    for (const auto& p : pieces_)
        if (p.rank <= 0)
            throw std::domain_error("CurveBundle: piece ranks must be positive");
}

Int CurveBundle::total_rank() const {
    Int r = 0;
    for (const auto& p : pieces_) r += p.rank;
    return r;
}

Rational CurveBundle::total_degree() const {
    Rational d(0);
    for (const auto& p : pieces_) d = d + p.degree + twist_ * Rational(p.rank);
    return d;
}

Rational HNPolygon::mu_max() const {
    const auto& [r, d] = vertices.at(1);
    return (d - vertices[0].second) / Rational(Int(r - vertices[0].first));
}

Rational HNPolygon::mu_min() const {
    const auto& [r1, d1] = vertices[vertices.size() - 2];
    const auto& [r2, d2] = vertices.back();
    return (d2 - d1) / Rational(Int(r2 - r1));
}

bool HNPolygon::concave() const {
    if (vertices.size() < 2 || vertices[0] != std::pair<Int, Rational>{0, Rational(0)})
        return false;
    for (size_t i = 1; i + 1 < vertices.size(); ++i) {
        Rational left = (vertices[i].second - vertices[i - 1].second) /
                        Rational(Int(vertices[i].first - vertices[i - 1].first));
        Rational right = (vertices[i + 1].second - vertices[i].second) /
                         Rational(Int(vertices[i + 1].first - vertices[i].first));
        if (!(left > right)) return false;
    }
    return true;
}

HNPolygon hn_polygon(const CurveBundle& b) {
    auto ps = canonical_pieces(b.pieces());
    HNPolygon poly;
    poly.vertices.emplace_back(Int(0), Rational(0));
    Int r(0);
    Rational d(0);
    for (const auto& p : ps) {
        r += p.rank;
        d = d + p.degree + b.twist() * Rational(p.rank);
        poly.vertices.emplace_back(r, d);
    }
    return poly;
}

Rational mu_min(const CurveBundle& b) {
    Rational m = b.pieces()[0].slope();
    for (const auto& p : b.pieces()) m = min(m, p.slope());
    return m + b.twist();
}

Rational mu_max(const CurveBundle& b) {
    Rational m = b.pieces()[0].slope();
    for (const auto& p : b.pieces()) m = max(m, p.slope());
    return m + b.twist();
}

Rational seshadri_on_curve(const CurveBundle& b, const Int& mult_x) {
    if (mult_x <= 0)
        throw std::domain_error("seshadri_on_curve: multiplicity must be positive");
    return mu_min(b) / Rational(mult_x);
}

CurveBundle tensor(const CurveBundle& a, const CurveBundle& b) {
    std::vector<SemistablePiece> out;
    for (const auto& p : a.pieces())
        for (const auto& q : b.pieces())
            out.push_back({p.rank * q.rank,
                           Rational(p.rank) * q.degree + Rational(q.rank) * p.degree});
    return canonical(std::move(out), a.twist() + b.twist());
}

CurveBundle sym(const CurveBundle& b, unsigned m) {
    if (m == 0) return CurveBundle({{Int(1), Rational(0)}});
    const auto& ps = b.pieces();
    std::vector<SemistablePiece> out;
    // Enumerate compositions m = m_0 + ... + m_{k-1}; each contributes the
    // tensor product of the per-piece symmetric powers, again semistable.
    std::vector<unsigned> comp(ps.size(), 0);
    auto emit = [&]() {
        Int rank(1);
        Rational slope(0);
        for (size_t i = 0; i < ps.size(); ++i) {
            if (comp[i] == 0) continue;
            rank *= binomial(ps[i].rank + Int(comp[i]) - 1, Int(comp[i]));
            slope = slope + Rational(Int(comp[i])) * ps[i].slope();
        }
        out.push_back({rank, slope * Rational(rank)});
    };
    auto rec = [&](auto&& self, size_t i, unsigned left) -> void {
        if (i + 1 == ps.size()) {
            comp[i] = left;
            emit();
            return;
        }
        for (unsigned take = 0; take <= left; ++take) {
            comp[i] = take;
            self(self, i + 1, left - take);
        }
    };
    rec(rec, 0, m);
    return canonical(std::move(out), b.twist() * Rational(Int(m)));
}

CurveBundle direct_sum(const CurveBundle& a, const CurveBundle& b) {
    // Normalize both summands by folding the twist into the degrees.
    std::vector<SemistablePiece> out;
    for (const auto& p : a.pieces())
        out.push_back({p.rank, p.degree + a.twist() * Rational(p.rank)});
    for (const auto& p : b.pieces())
        out.push_back({p.rank, p.degree + b.twist() * Rational(p.rank)});
    return canonical(std::move(out), Rational(0));
}

CurveBundle dual(const CurveBundle& b) {
    std::vector<SemistablePiece> out;
    for (const auto& p : b.pieces()) out.push_back({p.rank, -p.degree});
    return canonical(std::move(out), -b.twist());
}

CurveBundle det(const CurveBundle& b) {
    return CurveBundle({{Int(1), b.total_degree()}});
}

CurveBundle twist(const CurveBundle& b, const Rational& t) {
    return CurveBundle(b.pieces(), b.twist() + t);
}

bool is_nef(const CurveBundle& b) { return mu_min(b).sign() >= 0; }

bool is_ample(const CurveBundle& b) { return mu_min(b).sign() > 0; }

} // namespace sesh
