#include "sesh/cli.hpp"

#include "sesh/certificate.hpp"
#include "sesh/curve.hpp"
#include "sesh/cxc.hpp"
#include "sesh/estimate.hpp"
#include "sesh/jets.hpp"
#include "sesh/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sesh {
namespace {

using nlohmann::json;

struct Ctx {
    std::ostream& out;
    std::ostream& err;
    std::vector<std::string> echo;
    std::string format = "table";
    Rational precision = default_precision();
    unsigned digits = 12;
    bool assert_complete = false;
    bool indefinite = false;  // anything short of a definite answer appeared
    int exit_code = 0;
};

unsigned decimal_digits(const Rational& precision) {
    Rational p(1);
    const Rational tenth(1, 10);
    for (unsigned k = 1; k <= 40; ++k) {
        p = p * tenth;
        if (p <= precision) return k;
    }
    return 40;
}

// The rational grammar plus a scientific suffix ("1e-9", "2.5e-3").
Rational parse_precision(const std::string& text) {
    std::size_t e = text.find_first_of("eE");
    Rational value;
    if (e == std::string::npos) {
        value = parse_rational(text);
    } else {
        value = parse_rational(text.substr(0, e));
        long long exp = std::stoll(text.substr(e + 1));
        Rational ten(10);
        value = exp >= 0 ? value * ten.pow(exp) : value / ten.pow(-exp);
    }
    if (value.sign() <= 0) throw std::domain_error("precision must be positive");
    return value;
}

std::string show(const Ctx& c, const QuadExt& v) {
    std::string s = print_coefficient(v);
    if (v.is_rational() && v.rational_value().den() == 1) return s;
    return s + " (~" + decimal_truncate(v, c.digits) + ")";
}

std::string show(const Ctx& c, const Rational& v) { return show(c, QuadExt(v)); }

std::string show(const Ctx& c, const ExactOrInterval& v) {
    if (v.exact()) return show(c, v.surd());
    const RationalInterval& iv = v.interval();
    return "[" + iv.lo().str() + ", " + iv.hi().str() + "] (~" +
           decimal_truncate(QuadExt(iv.mid()), c.digits) + ")";
}

std::string show(const Ctx& c, const ExtValue& v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return show(c, v.finite());
}

json jvalue(const QuadExt& v) { return print_coefficient(v); }

json jvalue(const ExactOrInterval& v) {
    if (v.exact()) return jvalue(v.surd());
    return json{{"lo", v.interval().lo().str()}, {"hi", v.interval().hi().str()}};
}

json jvalue(const ExtValue& v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return jvalue(v.finite());
}

void emit(Ctx& c, const json& doc, const std::string& table) {
    if (c.format == "json")
        c.out << doc.dump(2) << "\n";
    else
        c.out << table;
}

void report_notes(Ctx& c, const std::vector<std::string>& notes) {
    for (const std::string& n : notes) c.err << "note: " << n << "\n";
}

CurveBundle bundle_arg(Ctx& c, const std::string& text) {
    ParsedBundle p = parse_bundle(text);
    report_notes(c, p.notes);
    return p.bundle;
}

CxCClass class_arg(Ctx& c, const std::string& text) {
    ParsedClass p = parse_class(text);
    report_notes(c, p.notes);
    return p.cls;
}

Generality generality_arg(const std::string& name) {
    if (name == "arbitrary") return Generality::Arbitrary;
    if (name == "general") return Generality::General;
    if (name == "very-general") return Generality::VeryGeneral;
    throw std::domain_error("unknown generality '" + name + "'");
}

long long integer_arg(const std::string& text, const std::string& what) {
    Rational v = parse_rational(text);
    if (v.den() != 1) throw std::domain_error(what + " must be an integer");
    return static_cast<long long>(v.num());
}

// One catalog entry: "[label=]pieces[@mult]".
CurveRestriction curve_arg(Ctx& c, const std::string& text, std::size_t index) {
    std::string body = text;
    std::string label = "curve-" + std::to_string(index + 1);
    Int mult(1);
    if (std::size_t at = body.rfind('@'); at != std::string::npos) {
        long long m = integer_arg(body.substr(at + 1), "multiplicity");
        if (m <= 0) throw std::domain_error("multiplicity must be positive");
        mult = m;
        body = body.substr(0, at);
    }
    if (std::size_t eq = body.find('='); eq != std::string::npos && eq < body.find(':')) {
        label = body.substr(0, eq);
        body = body.substr(eq + 1);
    }
    return {label, mult, bundle_arg(c, body)};
}

// One point estimate for the ampleness verdict: "upper=Q|inf,lower=Q,complete".
SeshadriEstimate point_arg(const std::string& text) {
    SeshadriEstimate est{ExtValue::pos_inf(), false, std::nullopt};
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (field == "complete")
            est.catalog_complete = true;
        else if (field.rfind("upper=", 0) == 0) {
            std::string v = field.substr(6);
            est.upper = v == "inf" ? ExtValue::pos_inf() : ExtValue(parse_rational(v));
        } else if (field.rfind("lower=", 0) == 0)
            est.lower = parse_rational(field.substr(6));
        else
            throw std::domain_error("unknown field '" + field + "' in point estimate");
    }
    return est;
}

void note_verdict(Ctx& c, NefVerdict v) {
    if (v == NefVerdict::Unknown) {
        c.exit_code = 2;
        c.indefinite = true;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Ctx ctx{out, err, args};
    CLI::App app{"Exact Seshadri constants: curve bundles, self-product nef "
                 "certificates, jet-separation thresholds",
                 "seshadri"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string precision_text;
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--precision", precision_text,
                   "enclosure width and decimal-rendering precision "
                   "(rational or scientific, e.g. 1/1000000 or 1e-9)");
    app.add_flag("--assert-complete", ctx.assert_complete,
                 "exit 2 when any emitted result is not definite");

    std::vector<std::pair<CLI::App*, std::function<void()>>> handlers;
    auto leaf = [&handlers](CLI::App* parent, const char* name, const char* desc,
                            std::function<void()> fn) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        handlers.emplace_back(sub, std::move(fn));
        return sub;
    };
    auto group = [&app](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->require_subcommand(1);
        sub->fallthrough();
        return sub;
    };

    // Flag storage; string-typed inputs go through the exact parsers so
    // errors carry column positions.
    std::string cv_pieces, bd_pieces, bd_with, bd_by;
    long long cv_mult = 1;
    unsigned bd_m = 1;

    std::vector<std::string> se_curves, se_lines, se_parts, se_points;
    bool se_complete = false;
    std::string se_segre, se_det;
    unsigned se_dim = 1, se_rank = 1;
    long long se_mult = 1;

    long long cx_g = 2, cx_n = 0;
    std::string cx_class, cx_generality = "arbitrary";
    std::string cx_a, cx_b, cx_at;
    std::string rg_alo = "0", rg_ahi = "4", rg_blo = "0", rg_bhi = "4", rg_step = "1";
    std::vector<std::string> cx_focus;
    unsigned cx_samples = 64;
    bool cx_limit = false;

    long long jt_n = 1, jt_r = 1, jt_k = 1, jt_m = 0, jt_p = 0, jt_s = 0;
    std::string jt_beta, jt_eps;
    bool jt_lowdim = false;

    CLI::App* curve = group("curve", "slope data for bundles on a single curve");

    CLI::App* curve_hn = leaf(curve, "hn", "slope polygon of the bundle", [&] {
        HNPolygon poly = hn_polygon(bundle_arg(ctx, cv_pieces));
        std::ostringstream t;
        json verts = json::array();
        for (const auto& [rank, degree] : poly.vertices) {
            t << rank.str() << " " << degree.str() << "\n";
            verts.push_back({{"rank", rank.str()}, {"degree", degree.str()}});
        }
        t << "mu_max = " << show(ctx, poly.mu_max()) << "\n";
        t << "mu_min = " << show(ctx, poly.mu_min()) << "\n";
        emit(ctx,
             json{{"vertices", verts},
                  {"mu_max", poly.mu_max().str()},
                  {"mu_min", poly.mu_min().str()}},
             t.str());
    });
    curve_hn->add_option("--pieces", cv_pieces, "bundle as rank:degree list")->required();

    CLI::App* curve_se = leaf(curve, "seshadri", "Seshadri constant at a curve point", [&] {
        Rational v = seshadri_on_curve(bundle_arg(ctx, cv_pieces), Int(cv_mult));
        emit(ctx, json{{"value", v.str()}}, show(ctx, v) + "\n");
    });
    curve_se->add_option("--pieces", cv_pieces, "bundle as rank:degree list")->required();
    curve_se->add_option("--mult", cv_mult, "multiplicity of the point on the curve");

    CLI::App* curve_nef = leaf(curve, "nef", "nefness and ampleness of the bundle", [&] {
        CurveBundle b = bundle_arg(ctx, cv_pieces);
        bool nef = is_nef(b), ample = is_ample(b);
        emit(ctx, json{{"nef", nef}, {"ample", ample}},
             std::string(nef ? "Nef" : "NotNef") + "\nample: " + (ample ? "yes" : "no") +
                 "\n");
    });
    curve_nef->add_option("--pieces", cv_pieces, "bundle as rank:degree list")->required();

    CLI::App* bundle = group("bundle", "formal arithmetic on curve bundles");
    auto emit_bundle = [&ctx](const CurveBundle& b) {
        emit(ctx, json{{"bundle", print_bundle(b)}}, print_bundle(b) + "\n");
    };

    CLI::App* b_sym = leaf(bundle, "sym", "symmetric power", [&] {
        emit_bundle(sym(bundle_arg(ctx, bd_pieces), bd_m));
    });
    b_sym->add_option("--pieces", bd_pieces, "bundle as rank:degree list")->required();
    b_sym->add_option("--m", bd_m, "symmetric power")->required();

    CLI::App* b_tensor = leaf(bundle, "tensor", "tensor product", [&] {
        emit_bundle(tensor(bundle_arg(ctx, bd_pieces), bundle_arg(ctx, bd_with)));
    });
    b_tensor->add_option("--pieces", bd_pieces, "left factor")->required();
    b_tensor->add_option("--with", bd_with, "right factor")->required();

    CLI::App* b_det = leaf(bundle, "det", "determinant line bundle", [&] {
        emit_bundle(det(bundle_arg(ctx, bd_pieces)));
    });
    b_det->add_option("--pieces", bd_pieces, "bundle as rank:degree list")->required();

    CLI::App* b_dual = leaf(bundle, "dual", "dual bundle", [&] {
        emit_bundle(dual(bundle_arg(ctx, bd_pieces)));
    });
    b_dual->add_option("--pieces", bd_pieces, "bundle as rank:degree list")->required();

    CLI::App* b_twist = leaf(bundle, "twist", "twist by a rational class", [&] {
        emit_bundle(twist(bundle_arg(ctx, bd_pieces), parse_rational(bd_by)));
    });
    b_twist->add_option("--pieces", bd_pieces, "bundle as rank:degree list")->required();
    b_twist->add_option("--by", bd_by, "rational twist")->required();

    CLI::App* se = group("seshadri", "Seshadri estimates from curve catalogs");

    CLI::App* se_cat = leaf(se, "catalog", "infimum over the supplied curves", [&] {
        std::vector<CurveRestriction> rs;
        for (std::size_t i = 0; i < se_curves.size(); ++i)
            rs.push_back(curve_arg(ctx, se_curves[i], i));
        SeshadriEstimate est = estimate_from_catalog(rs, se_complete);
        if (!est.catalog_complete) ctx.indefinite = true;
        std::ostringstream t;
        t << "upper = " << show(ctx, est.upper) << "\n";
        t << "complete: " << (est.catalog_complete ? "yes" : "no") << "\n";
        json j{{"upper", jvalue(est.upper)}, {"complete", est.catalog_complete}};
        if (est.lower) {
            t << "lower = " << show(ctx, *est.lower) << "\n";
            j["lower"] = est.lower->str();
        }
        emit(ctx, j, t.str());
    });
    se_cat->add_option("--curve", se_curves, "[label=]pieces[@mult], repeatable")
        ->required();
    se_cat->add_flag("--complete", se_complete,
                     "assert the catalog attains the infimum");

    CLI::App* se_toric = leaf(se, "toric", "fixed-point rule on a smooth toric variety", [&] {
        std::vector<std::vector<long long>> rows;
        for (const std::string& line : se_lines) {
            std::vector<long long> row;
            std::stringstream ss(line);
            std::string part;
            while (std::getline(ss, part, ','))
                row.push_back(integer_arg(part, "splitting degree"));
            rows.push_back(row);
        }
        long long v = toric_seshadri(rows);
        emit(ctx, json{{"value", v}}, std::to_string(v) + "\n");
    });
    se_toric
        ->add_option("--line", se_lines,
                     "splitting degrees on one invariant line, repeatable")
        ->required();

    CLI::App* se_b = leaf(se, "bounds", "upper/lower bound combinators", [&] {
        std::ostringstream t;
        json j;
        if (!se_segre.empty()) {
            ExactOrInterval u = segre_upper_bound(parse_rational(se_segre), se_dim,
                                                  se_rank, Int(se_mult), ctx.precision);
            t << "segre_upper = " << show(ctx, u) << "\n";
            j["segre_upper"] = jvalue(u);
        }
        if (!se_det.empty()) {
            Rational u = det_upper_bound(parse_rational(se_det), Int(se_rank));
            t << "det_upper = " << show(ctx, u) << "\n";
            j["det_upper"] = u.str();
        }
        if (!se_parts.empty()) {
            std::vector<BoundPart> parts;
            for (const std::string& p : se_parts) {
                std::size_t c1 = p.find(':'), c2 = p.rfind(':');
                if (c1 == std::string::npos || c2 == c1)
                    throw std::domain_error("expected label:weight:bound in '" + p + "'");
                parts.push_back({p.substr(0, c1),
                                 parse_rational(p.substr(c1 + 1, c2 - c1 - 1)),
                                 parse_rational(p.substr(c2 + 1))});
            }
            Rational lo = combine_lower_bounds(parts);
            t << "lower = " << show(ctx, lo) << "\n";
            j["lower"] = lo.str();
        }
        if (j.empty())
            throw std::domain_error(
                "nothing to compute: pass --segre, --det-seshadri, or --part");
        emit(ctx, j, t.str());
    });
    se_b->add_option("--segre", se_segre, "top Segre number of the dual bundle");
    se_b->add_option("--dim", se_dim, "variety dimension");
    se_b->add_option("--rank", se_rank, "bundle rank");
    se_b->add_option("--mult", se_mult, "point multiplicity");
    se_b->add_option("--det-seshadri", se_det, "Seshadri constant of the determinant");
    se_b->add_option("--part", se_parts, "label:weight:bound, repeatable");

    CLI::App* se_v = leaf(se, "verdict", "ampleness from per-point estimates", [&] {
        std::vector<SeshadriEstimate> ests;
        for (const std::string& p : se_points) ests.push_back(point_arg(p));
        Verdict v = ampleness_verdict(ests);
        if (v == Verdict::Unknown) {
            ctx.exit_code = 2;
            ctx.indefinite = true;
        }
        emit(ctx, json{{"verdict", verdict_name(v)}}, verdict_name(v) + "\n");
    });
    se_v->add_option("--point", se_points, "upper=Q|inf,lower=Q,complete (repeatable)")
        ->required();

    CLI::App* cxc = group("cxc", "nef certification on a curve self-product");

    CLI::App* cx_cert = leaf(cxc, "certify", "certify nefness of a class", [&] {
        Genus g(cx_g);
        CxCClass cls = class_arg(ctx, cx_class);
        SamplingParams params;
        params.curve_samples = cx_samples;
        NefCertificate cert = certify_nef(cls, g, generality_arg(cx_generality), params);
        note_verdict(ctx, cert.verdict);
        std::ostringstream t;
        t << nef_verdict_name(cert.verdict) << "\n";
        t << "generality: " << generality_name(cert.generality) << "\n";
        if (!cert.family.empty()) t << "family: " << cert.family << "\n";
        for (const WeightedGenerator& w : cert.combination)
            t << "  " << print_coefficient(w.weight) << " * (" << print_class(w.cls)
              << ") [" << w.family << "]\n";
        if (!(cert.scale == QuadExt(Rational(1))))
            t << "scale: " << print_coefficient(cert.scale) << "\n";
        if (cert.violation)
            t << "violation: " << cert.violation->pairing << " = "
              << show(ctx, cert.violation->value) << "\n";
        emit(ctx, certificate_document(g, cls, cert, ctx.echo), t.str());
    });
    cx_cert->add_option("--g", cx_g, "genus (>= 2)")->required();
    cx_cert->add_option("--class", cx_class, "a f1 + b f2 + c d")->required();
    cx_cert->add_option("--generality", cx_generality, "curve generality assumption")
        ->check(CLI::IsMember({"arbitrary", "general", "very-general"}));
    cx_cert->add_option("--samples", cx_samples, "samples along continuous families");

    CLI::App* cx_rg = leaf(cxc, "region", "verdict grid for a f1 + b f2 - d", [&] {
        Genus g(cx_g);
        std::vector<RegionCell> cells = region_sample(
            g, parse_rational(rg_alo), parse_rational(rg_ahi), parse_rational(rg_blo),
            parse_rational(rg_bhi), parse_rational(rg_step),
            generality_arg(cx_generality));
        std::ostringstream t;
        json rows = json::array();
        long long nef = 0, notnef = 0, unknown = 0;
        for (const RegionCell& cell : cells) {
            std::string name = nef_verdict_name(cell.verdict);
            t << cell.a.str() << " " << cell.b.str() << " " << name << "\n";
            rows.push_back({{"a", cell.a.str()}, {"b", cell.b.str()}, {"verdict", name}});
            (cell.verdict == NefVerdict::Nef
                 ? nef
                 : cell.verdict == NefVerdict::NotNef ? notnef : unknown) += 1;
        }
        if (unknown > 0) ctx.indefinite = true;
        t << "# nef=" << nef << " notnef=" << notnef << " unknown=" << unknown << "\n";
        emit(ctx,
             json{{"cells", rows}, {"nef", nef}, {"notnef", notnef}, {"unknown", unknown}},
             t.str());
    });
    cx_rg->add_option("--g", cx_g, "genus (>= 2)")->required();
    cx_rg->add_option("--a-lo", rg_alo, "left edge");
    cx_rg->add_option("--a-hi", rg_ahi, "right edge");
    cx_rg->add_option("--b-lo", rg_blo, "bottom edge");
    cx_rg->add_option("--b-hi", rg_bhi, "top edge");
    cx_rg->add_option("--step", rg_step, "grid step");
    cx_rg->add_option("--generality", cx_generality, "curve generality assumption")
        ->check(CLI::IsMember({"arbitrary", "general", "very-general"}));

    CLI::App* cx_sl = leaf(cxc, "slope", "restriction slope or its limit", [&] {
        Genus g(cx_g);
        Rational a = parse_rational(cx_a);
        std::ostringstream t;
        json j;
        if (cx_limit && cx_n > 0)
            throw std::domain_error("--n and --limit are exclusive");
        if (cx_limit) {
            Rational v = slope_R_limit(g, a);
            t << "limit = " << show(ctx, v) << "\n";
            j["limit"] = v.str();
        } else {
            if (cx_n <= 0) throw std::domain_error("pass --n >= 1 or --limit");
            Rational v = slope_R(g, a, cx_n);
            t << "slope = " << show(ctx, v) << "\n";
            j["slope"] = v.str();
        }
        emit(ctx, j, t.str());
    });
    cx_sl->add_option("--g", cx_g, "genus (>= 2)")->required();
    cx_sl->add_option("--a", cx_a, "f1 coefficient")->required();
    cx_sl->add_option("--n", cx_n, "restriction index");
    cx_sl->add_flag("--limit", cx_limit, "limit as n grows");

    CLI::App* cx_tg = leaf(cxc, "tangent", "tangency data from an external point", [&] {
        Genus g(cx_g);
        TangencyRecord rec =
            tangent_from_point(g, parse_coefficient(cx_a), parse_coefficient(cx_b));
        std::ostringstream t;
        t << "touch_b = " << show(ctx, rec.touch_b) << "\n";
        t << "touch_a = " << show(ctx, rec.touch_a) << "\n";
        t << "slope = " << show(ctx, rec.slope) << "\n";
        json j{{"touch_b", jvalue(rec.touch_b)},
               {"touch_a", jvalue(rec.touch_a)},
               {"slope", jvalue(rec.slope)}};
        if (!cx_at.empty()) {
            QuadExt at = parse_coefficient(cx_at);
            QuadExt v = rec.a_at(at);
            t << "a(" << print_coefficient(at) << ") = " << show(ctx, v) << "\n";
            j["at"] = print_coefficient(at);
            j["a_at"] = jvalue(v);
        }
        emit(ctx, j, t.str());
    });
    cx_tg->add_option("--g", cx_g, "genus (>= 2)")->required();
    cx_tg->add_option("--a", cx_a, "point a-coordinate")->required();
    cx_tg->add_option("--b", cx_b, "point b-coordinate")->required();
    cx_tg->add_option("--at", cx_at, "evaluate the tangent line at this b");

    CLI::App* cx_gen = leaf(cxc, "generators", "nef generator catalog", [&] {
        Genus g(cx_g);
        SamplingParams params;
        params.curve_samples = cx_samples;
        for (const std::string& f : cx_focus) {
            std::size_t comma = f.find(',');
            if (comma == std::string::npos)
                throw std::domain_error("focus expects 'a,b'");
            params.focus.emplace_back(parse_coefficient(f.substr(0, comma)),
                                      parse_coefficient(f.substr(comma + 1)));
        }
        std::vector<TaggedClass> gens =
            generator_set(g, generality_arg(cx_generality), params);
        std::ostringstream t;
        json rows = json::array();
        for (const TaggedClass& tc : gens) {
            t << print_class(tc.cls) << "  [" << tc.family << ", "
              << generality_name(tc.generality) << "]\n";
            rows.push_back({{"class", print_class(tc.cls)},
                            {"family", tc.family},
                            {"generality", generality_name(tc.generality)}});
        }
        emit(ctx, json{{"generators", rows}}, t.str());
    });
    cx_gen->add_option("--g", cx_g, "genus (>= 2)")->required();
    cx_gen->add_option("--generality", cx_generality, "include families up to here")
        ->check(CLI::IsMember({"arbitrary", "general", "very-general"}));
    cx_gen->add_option("--samples", cx_samples, "samples along continuous families");
    cx_gen->add_option("--focus", cx_focus, "a,b query point for tangency witnesses, repeatable");

    CLI::App* jets = group("jets", "quantitative jet-separation thresholds");

    CLI::App* jt_hacon = leaf(jets, "hacon", "very-general Seshadri lower bound", [&] {
        ExactOrInterval M = hacon_M(jt_n, jt_r, ctx.precision);
        std::ostringstream t;
        t << "M = " << show(ctx, M) << "\n";
        t << "generality: " << hacon_generality() << "\n";
        json j{{"M", jvalue(M)}, {"generality", hacon_generality()}};
        if (!jt_beta.empty()) {
            long long lambda = hacon_lambda(jt_n, parse_rational(jt_beta), M);
            t << "lambda = " << lambda << "\n";
            j["lambda"] = lambda;
        }
        emit(ctx, j, t.str());
    });
    jt_hacon->add_option("--n", jt_n, "dimension")->required();
    jt_hacon->add_option("--r", jt_r, "rank")->required();
    jt_hacon->add_option("--beta", jt_beta, "nef threshold of the twist");

    CLI::App* jt_adj = leaf(jets, "adjoint", "adjoint-twist jet threshold", [&] {
        Rational th = adjoint_jet_threshold(jt_n, jt_r, jt_p, jt_s);
        std::ostringstream t;
        t << "threshold = " << show(ctx, th) << "\n";
        json j{{"threshold", th.str()}};
        if (!jt_eps.empty()) {
            std::optional<long long> p =
                adjoint_min_p(jt_n, jt_r, jt_s, parse_rational(jt_eps));
            if (!p) throw std::domain_error("eps must be positive");
            t << "min_p = " << *p << "\n";
            j["min_p"] = *p;
        }
        emit(ctx, j, t.str());
    });
    jt_adj->add_option("--n", jt_n, "dimension")->required();
    jt_adj->add_option("--r", jt_r, "rank")->required();
    jt_adj->add_option("--p", jt_p, "symmetric power");
    jt_adj->add_option("--s", jt_s, "jet order (>= -1)");
    jt_adj->add_option("--eps", jt_eps, "invert: least p with threshold below eps");

    CLI::App* jt_ps = leaf(jets, "popa-schnell", "pluricanonical jet thresholds", [&] {
        Rational th = ps_seshadri_threshold(jt_k, jt_n, jt_s, jt_m, jt_r);
        std::ostringstream t;
        t << "threshold = " << show(ctx, th) << "\n";
        t << "generality: " << ps_generality() << "\n";
        json j{{"threshold", th.str()}, {"generality", ps_generality()}};
        if (!jt_eps.empty()) {
            std::optional<long long> m =
                ps_min_m(jt_k, jt_n, jt_s, jt_r, parse_rational(jt_eps));
            if (!m) throw std::domain_error("eps must be positive");
            t << "min_m = " << *m << "\n";
            j["min_m"] = *m;
        }
        if (!jt_beta.empty()) {
            ExactOrInterval M = hacon_M(jt_n, jt_r, ctx.precision);
            long long lambda =
                ps_lambda(jt_k, parse_rational(jt_beta), M, jt_n, jt_s, jt_r);
            t << "M = " << show(ctx, M) << "\n";
            t << "lambda = " << lambda << "\n";
            j["M"] = jvalue(M);
            j["lambda"] = lambda;
        }
        emit(ctx, j, t.str());
    });
    jt_ps->add_option("--k", jt_k, "canonical multiple");
    jt_ps->add_option("--n", jt_n, "dimension")->required();
    jt_ps->add_option("--r", jt_r, "rank")->required();
    jt_ps->add_option("--s", jt_s, "jet order (>= -1)");
    jt_ps->add_option("--m", jt_m, "symmetric power");
    jt_ps->add_option("--eps", jt_eps, "invert: least m with threshold below eps");
    jt_ps->add_option("--beta", jt_beta, "nef threshold; also reports lambda");

    CLI::App* jt_lb = leaf(jets, "line-bundle", "jet count for k-jets of line bundles", [&] {
        long long ell = line_bundle_ell(jt_k, jt_n, jt_s, jt_lowdim);
        emit(ctx, json{{"ell", ell}}, std::to_string(ell) + "\n");
    });
    jt_lb->add_option("--k", jt_k, "jet multiple");
    jt_lb->add_option("--n", jt_n, "dimension")->required();
    jt_lb->add_option("--s", jt_s, "jet order (>= -1)");
    jt_lb->add_flag("--low-dim-ample", jt_lowdim, "ample variant for n <= 3");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        if (precision_text.empty())
            if (const char* env = std::getenv("SESHADRI_PRECISION")) precision_text = env;
        if (!precision_text.empty()) ctx.precision = parse_precision(precision_text);
        ctx.digits = decimal_digits(ctx.precision);
        for (auto& [sub, fn] : handlers)
            if (sub->parsed()) fn();
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    if (ctx.assert_complete && ctx.indefinite && ctx.exit_code == 0) ctx.exit_code = 2;
    return ctx.exit_code;
}

} // namespace sesh
