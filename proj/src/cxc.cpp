#include "sesh/cxc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sesh {

namespace {

SurdTerms st(const QuadExt& x) { return SurdTerms(x); }

SurdTerms st_neg(const SurdTerms& x) { return x * SurdTerms(QuadExt(Rational(-1))); }

SurdTerms st_sub(const SurdTerms& a, const SurdTerms& b) { return a + st_neg(b); }

ExactOrInterval terms_value(const SurdTerms& t) {
    QuadExt q;
    if (t.to_quadext(q)) return ExactOrInterval(q);
    return ExactOrInterval(t.enclosure(default_precision()));
}

bool all_rational(const CxCClass& d) {
    return d.a.is_rational() && d.b.is_rational() && d.c.is_rational();
}

// Exact square root within the quadratic field of x, when one exists there.
std::optional<QuadExt> field_sqrt(const QuadExt& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_rational())
        return nth_root(x.rational_value(), 2, default_precision()).surd();
    Rational A = x.rational_part();
    Rational B = x.surd_coefficient();
    Rational d(x.radicand());
    Rational norm = A * A - B * B * d;
    if (norm.sign() < 0) return std::nullopt;
    auto norm_root = nth_root(norm, 2, default_precision());
    if (!norm_root.is_rational()) return std::nullopt;
    Rational N = norm_root.rational_value();
    for (const Rational& p2 : {(A + N) / Rational(2), (A - N) / Rational(2)}) {
        if (p2.sign() <= 0) continue;
        auto p_root = nth_root(p2, 2, default_precision());
        if (!p_root.is_rational()) continue;
        Rational p = p_root.rational_value();
        QuadExt cand(p, B / (Rational(2) * p), x.radicand());
        if (cand * cand == x) return cand.sign() >= 0 ? cand : -cand;
    }
    return std::nullopt;
}

Rational vojta_a_rational(long long g, const Rational& b) {
    Rational u = b - Rational(1);
    return Rational(g) / u + u * Rational(g - 1) + Rational(1);
}

} // namespace

Genus::Genus(long long g) : g_(g) {
    if (g < 2) throw std::domain_error("Genus: g must be at least 2");
}

CxCClass fiber1_class() { return {QuadExt(1), QuadExt(0), QuadExt(0)}; }
CxCClass fiber2_class() { return {QuadExt(0), QuadExt(1), QuadExt(0)}; }
CxCClass delta_class() { return {QuadExt(0), QuadExt(0), QuadExt(1)}; }
CxCClass theta_class(const Genus& g) {
    QuadExt w{Rational(g.value() - 1)};
    return {w, w, QuadExt(1)};
}

std::string generality_name(Generality x) {
    switch (x) {
        case Generality::Arbitrary: return "Arbitrary";
        case Generality::General: return "General";
        case Generality::VeryGeneral: return "VeryGeneral";
    }
    return "Arbitrary";
}

std::string nef_verdict_name(NefVerdict v) {
    switch (v) {
        case NefVerdict::Nef: return "Nef";
        case NefVerdict::NotNef: return "NotNef";
        case NefVerdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

// D1.D2 = a1 b2 + a2 b1 + (a1 + b1) c2 + (a2 + b2) c1 + c1 c2 (2-2g)
SurdTerms intersect_terms(const CxCClass& d1, const CxCClass& d2, long long g) {
    SurdTerms acc = st(d1.a) * st(d2.b);
    acc += st(d2.a) * st(d1.b);
    acc += (st(d1.a) + st(d1.b)) * st(d2.c);
    acc += (st(d2.a) + st(d2.b)) * st(d1.c);
    acc += st(d1.c) * st(d2.c) * st(QuadExt(Rational(2 - 2 * g)));
    return acc;
}

Rational intersect_rational(const CxCClass& d1, const CxCClass& d2, long long g) {
    Rational a1 = d1.a.rational_value(), b1 = d1.b.rational_value(),
             c1 = d1.c.rational_value();
    Rational a2 = d2.a.rational_value(), b2 = d2.b.rational_value(),
             c2 = d2.c.rational_value();
    return a1 * b2 + a2 * b1 + (a1 + b1) * c2 + (a2 + b2) * c1 +
           c1 * c2 * Rational(2 - 2 * g);
}

} // namespace

ExactOrInterval intersect(const CxCClass& d1, const CxCClass& d2, const Genus& g) {
    if (all_rational(d1) && all_rational(d2))
        return ExactOrInterval(intersect_rational(d1, d2, g.value()));
    return terms_value(intersect_terms(d1, d2, g.value()));
}

ExactOrInterval self_intersection(const CxCClass& d, const Genus& g) {
    return intersect(d, d, g);
}

std::optional<PairingViolation> necessary_conditions(const CxCClass& d, const Genus& g) {
    long long gv = g.value();
    if (all_rational(d)) {
        Rational a = d.a.rational_value(), b = d.b.rational_value(),
                 c = d.c.rational_value();
        Rational p1 = b + c;
        if (p1.sign() < 0) return PairingViolation{"D.f1", ExactOrInterval(p1)};
        Rational p2 = a + c;
        if (p2.sign() < 0) return PairingViolation{"D.f2", ExactOrInterval(p2)};
        Rational p3 = a + b - c * Rational(2 * gv - 2);
        if (p3.sign() < 0) return PairingViolation{"D.delta", ExactOrInterval(p3)};
        Rational p4 = intersect_rational(d, d, gv);
        if (p4.sign() < 0) return PairingViolation{"D.D", ExactOrInterval(p4)};
        return std::nullopt;
    }
    const CxCClass bases[3] = {fiber1_class(), fiber2_class(), delta_class()};
    const char* names[3] = {"D.f1", "D.f2", "D.delta"};
    for (int i = 0; i < 3; ++i) {
        SurdTerms t = intersect_terms(d, bases[i], gv);
        if (t.sign() < 0) return PairingViolation{names[i], terms_value(t)};
    }
    SurdTerms sq = intersect_terms(d, d, gv);
    if (sq.sign() < 0) return PairingViolation{"D.D", terms_value(sq)};
    return std::nullopt;
}

QuadExt vojta_a(const Genus& g, const QuadExt& b) {
    if (quad_compare_mixed(b, QuadExt(1)) <= 0)
        throw std::domain_error("vojta_a: requires b > 1");
    QuadExt u = b - QuadExt(1);
    return QuadExt(Rational(g.value())) / u + u * QuadExt(Rational(g.value() - 1)) +
           QuadExt(1);
}

QuadExt vojta_b(const Genus& g, const QuadExt& a) {
    long long gv = g.value();
    QuadExt threshold(Rational(1), Rational(2), Int(gv) * Int(gv - 1));
    if (quad_compare_mixed(a, threshold) < 0)
        throw std::domain_error("vojta_b: valid only for a >= " + threshold.str());
    QuadExt am1 = a - QuadExt(1);
    QuadExt disc = am1 * am1 - QuadExt(Rational(4 * gv * (gv - 1)));
    auto root = field_sqrt(disc);
    if (!root)
        throw std::domain_error("vojta_b: discriminant root leaves the quadratic field");
    return QuadExt(1) + QuadExt(Rational(2 * gv)) / (am1 + *root);
}

namespace {

NefCertificate self_witness_cert(const CxCClass& cls, const std::string& family,
                                 Generality gen) {
    NefCertificate cert;
    cert.verdict = NefVerdict::Nef;
    cert.generality = gen;
    cert.family = family;
    cert.combination.push_back({cls, family, QuadExt(1)});
    return cert;
}

} // namespace

FamilyClass kouvidakis_class(const Genus& g) {
    Rational kappa = Rational(g.value()) / Rational(isqrt_floor(Int(g.value()))) + Rational(1);
    CxCClass cls{QuadExt(kappa), QuadExt(kappa), QuadExt(-1)};
    return {cls, self_witness_cert(cls, "kouvidakis", Generality::VeryGeneral)};
}

FamilyClass integral_family_class(const Genus& g, long long d) {
    long long gv = g.value();
    if (gv < 3)
        throw std::domain_error("integral_family_class: requires genus at least 3");
    long long threshold = (3 * gv) / 2 + 3;
    if (d < threshold)
        throw std::domain_error("integral_family_class: d must be at least " +
                                std::to_string(threshold));
    CxCClass cls{QuadExt(Rational(d)),
                 QuadExt(Rational(1) + Rational(gv) / Rational(d - gv)), QuadExt(-1)};
    return {cls, self_witness_cert(cls, "integral", Generality::General)};
}

std::vector<FamilyClass> sporadic_family(const Genus& g) {
    long long gv = g.value();
    std::vector<FamilyClass> out;
    for (long long k = 1; k <= (gv - 5) / 2; ++k) {
        QuadExt a{Rational(2 * gv - k)};
        QuadExt b{Rational(1) + Rational(gv) / Rational(gv - k)};
        CxCClass cls{a, b, QuadExt(-1)};
        CxCClass swapped{b, a, QuadExt(-1)};
        out.push_back({cls, self_witness_cert(cls, "sporadic", Generality::VeryGeneral)});
        out.push_back(
            {swapped, self_witness_cert(swapped, "sporadic", Generality::VeryGeneral)});
    }
    return out;
}

CxCClass conjecture_class(const Genus& g, const QuadExt& a) {
    if (quad_compare_mixed(a, QuadExt(1)) <= 0)
        throw std::domain_error("conjecture_class: requires a > 1");
    QuadExt b = QuadExt(1) + QuadExt(Rational(g.value())) / (a - QuadExt(1));
    return {a, b, QuadExt(-1)};
}

TangencyRecord tangent_from_point(const Genus& g, const QuadExt& pa, const QuadExt& pb) {
    Rational gr(g.value());
    QuadExt pu = pb - QuadExt(1);
    QuadExt A = pa - QuadExt(1) - pu * QuadExt(Rational(g.value() - 1));
    std::vector<QuadExt> roots;
    if (A.is_zero()) {
        roots.push_back(pu / QuadExt(2));
    } else {
        QuadExt disc = (QuadExt(gr) - A * pu) * QuadExt(gr);
        if (disc.sign() < 0)
            throw std::domain_error("tangent_from_point: no real tangent line");
        auto s = field_sqrt(disc);
        if (!s)
            throw std::domain_error(
                "tangent_from_point: tangency discriminant leaves the quadratic field");
        roots.push_back((QuadExt(gr) - *s) / A);
        if (!s->is_zero()) roots.push_back((QuadExt(gr) + *s) / A);
    }
    std::optional<QuadExt> u0;
    for (const auto& r : roots) {
        if (r.sign() <= 0 || quad_compare_mixed(r, QuadExt(1)) > 0) continue;
        if (!u0 || quad_less(r, *u0)) u0 = r;
    }
    if (!u0)
        throw std::domain_error(
            "tangent_from_point: no tangency with touch point in b in (1, 2]");
    QuadExt tb = *u0 + QuadExt(1);
    QuadExt ta = QuadExt(gr) / *u0 + *u0 * QuadExt(Rational(g.value() - 1)) + QuadExt(1);
    QuadExt slope = QuadExt(Rational(g.value() - 1)) - QuadExt(gr) / (*u0 * *u0);
    return {pa, pb, ta, tb, slope};
}

QuadExt TangencyRecord::a_at(const QuadExt& b) const {
    return point_a + slope * (b - point_b);
}

Rational slope_R(const Genus& g, const Rational& a, long long n) {
    if (n < 1) throw std::domain_error("slope_R: n must be positive");
    if (a <= Rational(1)) throw std::domain_error("slope_R: requires a > 1");
    Rational den = Rational(n) * a + Rational(1 - g.value() - n);
    if (den.is_zero())
        throw std::domain_error("slope_R: n = " + std::to_string(n) +
                                " is the pole of the slope (n*a + 1 - g - n = 0)");
    return -Rational(n) * (Rational(1) + Rational(n) * Rational(g.value()) / den);
}

Rational slope_R_limit(const Genus& g, const Rational& a) {
    if (a <= Rational(1)) throw std::domain_error("slope_R_limit: requires a > 1");
    return -(Rational(1) + Rational(g.value()) / (a - Rational(1)));
}

// ---- exact slice machinery for c < 0 ----------------------------------

namespace {

struct SlicePoint {
    Rational a, b;
    std::string family;
};

struct TangentSegment {
    // Endpoints ordered by b: e1b < e2b. Each endpoint carries the class it
    // certifies against and its family tag.
    QuadExt e1a, e1b, e2a, e2b;
    CxCClass cls1, cls2;
    std::string fam1, fam2;
};

struct SliceData {
    std::vector<SlicePoint> chain;  // lower-left hull, a ascending / b descending
    std::vector<TangentSegment> segments;
};

CxCClass point_class(const QuadExt& a, const QuadExt& b) { return {a, b, QuadExt(-1)}; }

std::vector<SlicePoint> slice_points(long long g, Generality level, unsigned samples) {
    std::vector<SlicePoint> pts;
    for (unsigned j = 1; j <= samples; ++j) {
        Rational b = Rational(1) + Rational(j) / Rational(samples);
        Rational a = vojta_a_rational(g, b);
        pts.push_back({a, b, "vojta"});
        pts.push_back({b, a, "vojta-swap"});
    }
    if (level >= Generality::General && g >= 3) {
        for (long long d = (3 * g) / 2 + 3; d <= 2 * g; ++d)
            pts.push_back({Rational(d), Rational(1) + Rational(g) / Rational(d - g),
                           "integral"});
    }
    if (level >= Generality::VeryGeneral) {
        for (long long k = 1; k <= (g - 5) / 2; ++k) {
            Rational a(2 * g - k);
            Rational b = Rational(1) + Rational(g) / Rational(g - k);
            pts.push_back({a, b, "sporadic"});
            pts.push_back({b, a, "sporadic"});
        }
        Rational kappa = Rational(g) / Rational(isqrt_floor(Int(g))) + Rational(1);
        pts.push_back({kappa, kappa, "kouvidakis"});
    }
    auto family_rank = [](const std::string& f) {
        if (f == "vojta" || f == "vojta-swap") return 0;
        if (f == "integral") return 1;
        return 2;
    };
    std::sort(pts.begin(), pts.end(), [&](const SlicePoint& p, const SlicePoint& q) {
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        // Coincident points keep the tag with the weakest generality need.
        if (family_rank(p.family) != family_rank(q.family))
            return family_rank(p.family) < family_rank(q.family);
        return p.family < q.family;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const SlicePoint& p, const SlicePoint& q) {
                              return p.a == q.a && p.b == q.b;
                          }),
              pts.end());
    return pts;
}

Rational cross(const SlicePoint& o, const SlicePoint& p, const SlicePoint& q) {
    return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
}

// Lower-left boundary chain of conv(points) + nonnegative quadrant.
std::vector<SlicePoint> lower_left_chain(const std::vector<SlicePoint>& sorted_pts) {
    std::vector<SlicePoint> hull;
    for (const auto& p : sorted_pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    size_t cut = 0;
    for (size_t i = 1; i < hull.size(); ++i)
        if (hull[i].b < hull[cut].b) cut = i;
    hull.resize(cut + 1);
    return hull;
}

SliceData build_slice_data(long long g, Generality level, unsigned samples) {
    SliceData data;
    auto pts = slice_points(g, level, samples);
    data.chain = lower_left_chain(pts);

    Genus gen(g);
    // Tangent segments from each discrete (off-curve) generator to the two
    // curve branches; these realize the hull boundary exactly between a
    // discrete point and the continuous family.
    for (const auto& p : pts) {
        if (p.family == "vojta" || p.family == "vojta-swap") continue;
        QuadExt pa{p.a}, pb{p.b};
        try {
            auto rec = tangent_from_point(gen, pa, pb);
            if (!(rec.touch_b == pb)) {
                TangentSegment seg;
                seg.e1a = rec.touch_a;
                seg.e1b = rec.touch_b;
                seg.e2a = pa;
                seg.e2b = pb;
                seg.cls1 = point_class(rec.touch_a, rec.touch_b);
                seg.fam1 = "vojta";
                seg.cls2 = point_class(pa, pb);
                seg.fam2 = p.family;
                data.segments.push_back(std::move(seg));
            }
        } catch (const std::domain_error&) {
        }
        try {
            auto rec = tangent_from_point(gen, pb, pa);
            if (!(rec.touch_b == pa)) {
                TangentSegment seg;  // touch point mirrored onto the swapped branch
                seg.e1a = pa;
                seg.e1b = pb;
                seg.e2a = rec.touch_b;
                seg.e2b = rec.touch_a;
                seg.cls1 = point_class(pa, pb);
                seg.fam1 = p.family;
                seg.cls2 = point_class(rec.touch_b, rec.touch_a);
                seg.fam2 = "vojta-swap";
                data.segments.push_back(std::move(seg));
            }
        } catch (const std::domain_error&) {
        }
    }
    return data;
}

const SliceData& slice_data(long long g, Generality level, unsigned samples) {
    struct Key {
        long long g;
        int level;
        unsigned samples;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, std::unique_ptr<SliceData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[Key{g, static_cast<int>(level), samples}];
    if (!slot) slot = std::make_unique<SliceData>(build_slice_data(g, level, samples));
    return *slot;
}

Rational rational_between(const QuadExt& lo, const QuadExt& hi) {
    Rational w(1, 4);
    for (;;) {
        RationalInterval ilo = lo.enclosure(w);
        RationalInterval ihi = hi.enclosure(w);
        if (ilo.hi() < ihi.lo()) return (ilo.hi() + ihi.lo()) / Rational(2);
        w = w / Rational(1024);
    }
}

// Append `hi - lo` (>= 0) to the weight list as one or two single-field
// nonnegative parts; the two-part split covers mixed-radicand differences.
void push_difference(std::vector<WeightedGenerator>& out, const CxCClass& cls,
                     const std::string& family, const QuadExt& hi, const QuadExt& lo) {
    int cmp = quad_compare_mixed(hi, lo);
    if (cmp == 0) return;
    if (cmp < 0) throw std::domain_error("push_difference: negative weight");
    try {
        out.push_back({cls, family, hi - lo});
        return;
    } catch (const MixedRadicand&) {
    }
    QuadExt mid{rational_between(lo, hi)};
    out.push_back({cls, family, mid - lo});
    out.push_back({cls, family, hi - mid});
}

void push_weight(std::vector<WeightedGenerator>& out, const CxCClass& cls,
                 const std::string& family, const QuadExt& w) {
    if (w.is_zero()) return;
    out.push_back({cls, family, w});
}

using Witness = std::vector<WeightedGenerator>;

// Membership of (x, y) in {b-coordinate above the curve branch}: curve test.
std::optional<Witness> curve_membership(const QuadExt& x, const QuadExt& y, long long g,
                                        bool swapped) {
    const QuadExt& h = swapped ? y : x;  // horizontal coordinate of the branch chart
    const QuadExt& v = swapped ? x : y;
    if (quad_compare_mixed(v, QuadExt(1)) <= 0) return std::nullopt;
    QuadExt b_curve = quad_min(v, QuadExt(2));
    QuadExt a_curve = vojta_a(Genus(g), b_curve);
    if (quad_compare_mixed(h, a_curve) < 0) return std::nullopt;
    Witness w;
    CxCClass gen =
        swapped ? point_class(b_curve, a_curve) : point_class(a_curve, b_curve);
    push_weight(w, gen, swapped ? "vojta-swap" : "vojta", QuadExt(1));
    const CxCClass fh = swapped ? fiber2_class() : fiber1_class();
    const CxCClass fv = swapped ? fiber1_class() : fiber2_class();
    push_difference(w, fh, swapped ? "fiber-f2" : "fiber-f1", h, a_curve);
    push_difference(w, fv, swapped ? "fiber-f1" : "fiber-f2", v, b_curve);
    return w;
}

std::optional<Witness> chain_membership(const QuadExt& x, const QuadExt& y,
                                        const std::vector<SlicePoint>& chain) {
    if (chain.empty()) return std::nullopt;
    const SlicePoint& A = chain.front();
    const SlicePoint& B = chain.back();
    if (quad_compare_mixed(x, QuadExt(A.a)) < 0) return std::nullopt;
    if (quad_compare_mixed(y, QuadExt(B.b)) < 0) return std::nullopt;
    if (quad_compare_mixed(x, QuadExt(B.a)) >= 0) {
        Witness w;
        push_weight(w, point_class(QuadExt(B.a), QuadExt(B.b)), B.family, QuadExt(1));
        push_difference(w, fiber1_class(), "fiber-f1", x, QuadExt(B.a));
        push_difference(w, fiber2_class(), "fiber-f2", y, QuadExt(B.b));
        return w;
    }
    size_t lo = 0, hi = chain.size() - 1;  // invariant: a(lo) <= x < a(hi)
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (quad_compare_mixed(x, QuadExt(chain[mid].a)) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    const SlicePoint& P = chain[lo];
    const SlicePoint& Q = chain[hi];
    // Above-segment sign test: (x - Qa)(Pb - Qb) - (y - Qb)(Pa - Qa) >= 0,
    // with Pb > Qb along the descending chain.
    SurdTerms test = st_sub(st_sub(st(x), st(QuadExt(Q.a))) * st(QuadExt(P.b - Q.b)),
                            st_sub(st(y), st(QuadExt(Q.b))) * st(QuadExt(P.a - Q.a)));
    if (test.sign() < 0) return std::nullopt;
    try {
        QuadExt lambda = (QuadExt(Q.a) - x) / QuadExt(Q.a - P.a);
        QuadExt zb = lambda * QuadExt(P.b) + (QuadExt(1) - lambda) * QuadExt(Q.b);
        Witness w;
        push_weight(w, point_class(QuadExt(P.a), QuadExt(P.b)), P.family, lambda);
        push_weight(w, point_class(QuadExt(Q.a), QuadExt(Q.b)), Q.family,
                    QuadExt(1) - lambda);
        push_difference(w, fiber2_class(), "fiber-f2", y, zb);
        return w;
    } catch (const MixedRadicand&) {
        return std::nullopt;
    }
}

std::optional<Witness> segment_membership(const QuadExt& x, const QuadExt& y,
                                          const TangentSegment& seg) {
    if (quad_compare_mixed(y, seg.e1b) < 0) return std::nullopt;
    if (quad_compare_mixed(y, seg.e2b) > 0) return std::nullopt;
    // (x - e1a)(e2b - e1b) - (y - e1b)(e2a - e1a) >= 0, with e2b > e1b.
    SurdTerms db = st_sub(st(seg.e2b), st(seg.e1b));
    SurdTerms da = st_sub(st(seg.e2a), st(seg.e1a));
    SurdTerms test =
        st_sub(st_sub(st(x), st(seg.e1a)) * db, st_sub(st(y), st(seg.e1b)) * da);
    if (test.sign() < 0) return std::nullopt;
    try {
        QuadExt t = (y - seg.e1b) / (seg.e2b - seg.e1b);
        QuadExt za = seg.e1a + t * (seg.e2a - seg.e1a);
        Witness w;
        push_weight(w, seg.cls1, seg.fam1, QuadExt(1) - t);
        push_weight(w, seg.cls2, seg.fam2, t);
        push_difference(w, fiber1_class(), "fiber-f1", x, za);
        return w;
    } catch (const MixedRadicand&) {
        return std::nullopt;
    }
}

std::optional<Witness> slice_membership(const QuadExt& x, const QuadExt& y, long long g,
                                        Generality level, unsigned samples) {
    if (auto w = curve_membership(x, y, g, false)) return w;
    if (auto w = curve_membership(x, y, g, true)) return w;
    const SliceData& data = slice_data(g, level, samples);
    if (auto w = chain_membership(x, y, data.chain)) return w;
    for (const auto& seg : data.segments)
        if (auto w = segment_membership(x, y, seg)) return w;
    return std::nullopt;
}

std::string witness_family(const Witness& w) {
    std::string out;
    for (const auto& gen : w) {
        if (gen.family.rfind("fiber-", 0) == 0) continue;
        if (out.find(gen.family) != std::string::npos) continue;
        if (!out.empty()) out += "+";
        out += gen.family;
    }
    return out;
}

NefCertificate unknown_cert(Generality tried) {
    NefCertificate cert;
    cert.verdict = NefVerdict::Unknown;
    cert.generality = tried;
    return cert;
}

// Decomposition over the extremal rays of {a, b, c >= 0, a+b >= c(2g-2)}.
NefCertificate criterion_cert(const CxCClass& d, long long g) {
    NefCertificate cert;
    cert.verdict = NefVerdict::Nef;
    cert.generality = Generality::Arbitrary;
    cert.family = "nonnegative-criterion";
    Rational edge(2 * g - 2);
    CxCClass edge1{QuadExt(edge), QuadExt(0), QuadExt(1)};
    CxCClass edge2{QuadExt(0), QuadExt(edge), QuadExt(1)};
    try {
        QuadExt alpha = quad_min(d.c, d.a / QuadExt(edge));
        QuadExt beta = d.c - alpha;
        QuadExt gamma = d.a - alpha * QuadExt(edge);
        QuadExt eta = d.b - beta * QuadExt(edge);
        Witness w;
        push_weight(w, edge1, "delta-edge", alpha);
        push_weight(w, edge2, "delta-edge", beta);
        push_weight(w, fiber1_class(), "fiber-f1", gamma);
        push_weight(w, fiber2_class(), "fiber-f2", eta);
        cert.combination = std::move(w);
    } catch (const MixedRadicand&) {
        // Mixed-field coefficients: the verdict rests on the exact sign
        // checks; the decomposition record is omitted.
        cert.combination.clear();
    }
    return cert;
}

} // namespace

std::vector<TaggedClass> generator_set(const Genus& g, Generality max_generality,
                                       const SamplingParams& params) {
    std::vector<TaggedClass> out;
    out.push_back({fiber1_class(), "fiber-f1", Generality::Arbitrary});
    out.push_back({fiber2_class(), "fiber-f2", Generality::Arbitrary});
    out.push_back({theta_class(g), "theta", Generality::Arbitrary});
    Generality level_cap = max_generality;
    for (const auto& p : slice_points(g.value(), level_cap, params.curve_samples)) {
        Generality lvl = Generality::Arbitrary;
        if (p.family == "integral") lvl = Generality::General;
        if (p.family == "sporadic" || p.family == "kouvidakis")
            lvl = Generality::VeryGeneral;
        out.push_back({point_class(QuadExt(p.a), QuadExt(p.b)), p.family, lvl});
    }
    for (const auto& [fa, fb] : params.focus) {
        try {
            auto rec = tangent_from_point(g, fa, fb);
            out.push_back({point_class(rec.touch_a, rec.touch_b), "vojta",
                           Generality::Arbitrary});
        } catch (const std::exception&) {
        }
        try {
            auto rec = tangent_from_point(g, fb, fa);
            out.push_back({point_class(rec.touch_b, rec.touch_a), "vojta-swap",
                           Generality::Arbitrary});
        } catch (const std::exception&) {
        }
    }
    return out;
}

NefCertificate certify_nef(const CxCClass& d, const Genus& g, Generality max_generality,
                           const SamplingParams& params) {
    if (auto violation = necessary_conditions(d, g)) {
        NefCertificate cert;
        cert.verdict = NefVerdict::NotNef;
        cert.generality = Generality::Arbitrary;
        cert.family = "necessary-conditions";
        cert.violation = std::move(violation);
        return cert;
    }
    if (d.c.sign() >= 0) {
        if (d.a.sign() >= 0 && d.b.sign() >= 0) return criterion_cert(d, g.value());
        return unknown_cert(max_generality);
    }
    QuadExt m = -d.c;
    QuadExt x, y;
    try {
        x = d.a / m;
        y = d.b / m;
    } catch (const MixedRadicand&) {
        return unknown_cert(max_generality);
    }
    for (int lvl = 0; lvl <= static_cast<int>(max_generality); ++lvl) {
        auto level = static_cast<Generality>(lvl);
        auto w = slice_membership(x, y, g.value(), level, params.curve_samples);
        if (!w) continue;
        NefCertificate cert;
        cert.verdict = NefVerdict::Nef;
        cert.generality = level;
        cert.family = witness_family(*w);
        if (m.is_rational()) {
            for (auto& gen : *w) gen.weight = gen.weight * m;
        } else {
            cert.scale = m;
        }
        cert.combination = std::move(*w);
        return cert;
    }
    return unknown_cert(max_generality);
}

std::vector<RegionCell> region_sample(const Genus& g, const Rational& a_lo,
                                      const Rational& a_hi, const Rational& b_lo,
                                      const Rational& b_hi, const Rational& step,
                                      Generality max_generality) {
    if (step.sign() <= 0) throw std::domain_error("region_sample: step must be positive");
    std::vector<RegionCell> cells;
    for (Rational a = a_lo; a <= a_hi; a = a + step) {
        for (Rational b = b_lo; b <= b_hi; b = b + step) {
            CxCClass cls{QuadExt(a), QuadExt(b), QuadExt(-1)};
            cells.push_back({a, b, certify_nef(cls, g, max_generality).verdict});
        }
    }
    return cells;
}

} // namespace sesh
