#include "sesh/certificate.hpp"

#include "sesh/parse.hpp"

#include <stdexcept>

namespace sesh {

namespace {

using nlohmann::json;

SurdTerms st(const QuadExt& x) { return SurdTerms(x); }

SurdTerms st_sub(const SurdTerms& a, const SurdTerms& b) {
    return a + b * SurdTerms(QuadExt(Rational(-1)));
}

json encode_value(const ExactOrInterval& v) {
    if (v.exact()) return print_coefficient(v.surd());
    return json{{"lo", v.interval().lo().str()}, {"hi", v.interval().hi().str()}};
}

json encode_class(const CxCClass& cls) {
    return json{{"a", print_coefficient(cls.a)},
                {"b", print_coefficient(cls.b)},
                {"c", print_coefficient(cls.c)},
                {"text", print_class(cls)}};
}

CxCClass decode_class(const json& j) {
    return CxCClass{parse_coefficient(j.at("a").get<std::string>()),
                    parse_coefficient(j.at("b").get<std::string>()),
                    parse_coefficient(j.at("c").get<std::string>())};
}

void add_family(json& families, const std::string& name) {
    // Compound tags like "integral+vojta" describe one part at a time.
    std::size_t start = 0;
    while (start <= name.size()) {
        std::size_t sep = name.find('+', start);
        std::string part = name.substr(start, sep == std::string::npos ? sep : sep - start);
        if (!part.empty() && !families.contains(part)) families[part] = family_description(part);
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
}

bool within_long(const Rational& x) {
    return x.den() == 1 && x.num() > -1000000000 && x.num() < 1000000000;
}

bool matches_family(const Genus& g, const std::string& family, const CxCClass& c) {
    long long gv = g.value();
    try {
        if (family == "fiber-f1") return c == fiber1_class();
        if (family == "fiber-f2") return c == fiber2_class();
        if (family == "theta") return c == theta_class(g);
        if (family == "delta-edge")
            return c == CxCClass{QuadExt(2 * gv - 2), QuadExt(0), QuadExt(1)} ||
                   c == CxCClass{QuadExt(0), QuadExt(2 * gv - 2), QuadExt(1)};
        if (family == "vojta")
            return c.c == QuadExt(-1) && quad_compare_mixed(c.b, QuadExt(1)) > 0 &&
                   c.a == vojta_a(g, c.b);
        if (family == "vojta-swap")
            return c.c == QuadExt(-1) && quad_compare_mixed(c.a, QuadExt(1)) > 0 &&
                   c.b == vojta_a(g, c.a);
        if (family == "integral") {
            if (!(c.c == QuadExt(-1)) || !c.a.is_rational()) return false;
            const Rational& a = c.a.rational_value();
            if (!within_long(a)) return false;
            return integral_family_class(g, static_cast<long long>(a.num())).cls == c;
        }
        if (family == "sporadic") {
            for (const FamilyClass& f : sporadic_family(g))
                if (f.cls == c) return true;
            return false;
        }
        if (family == "kouvidakis") return c == kouvidakis_class(g).cls;
    } catch (const std::domain_error&) {
        return false;
    }
    return false;
}

// The cone decomposition behind a combination-free Nef verdict: the class is
// alpha*(edge f1 + delta) + beta*(edge f2 + delta) + gamma*f1 + eta*f2 with
// edge = 2g-2, alpha = min(c, a/edge); all four coefficients must be
// provably nonnegative even when a, b, c live in different fields.
bool cone_criterion_holds(const CxCClass& d, const Genus& g) {
    if (d.c.sign() < 0 || d.a.sign() < 0 || d.b.sign() < 0) return false;
    QuadExt edge(2 * g.value() - 2);
    if (quad_compare_mixed(d.c * edge, d.a) <= 0) {
        // alpha = c: beta = 0, gamma = a - c*edge >= 0 by the comparison,
        // eta = b >= 0 already checked.
        return true;
    }
    // alpha = a/edge: gamma = 0, beta = c - a/edge > 0 by the comparison,
    // eta = b - beta*edge = b + a - c*edge.
    SurdTerms eta = st_sub(st(d.b) + st(d.a), st(d.c * edge));
    return eta.sign() >= 0;
}

void verify_combination(const Genus& g, const CxCClass& cls, const json& witness,
                        CertificateCheck& out) {
    auto problem = [&](std::string msg) {
        out.ok = false;
        out.problems.push_back(std::move(msg));
    };
    QuadExt scale = parse_coefficient(witness.at("scale").get<std::string>());
    if (scale.sign() <= 0) problem("scale is not positive");
    SurdTerms sum[3];
    for (const json& gen : witness.at("combination")) {
        QuadExt weight = parse_coefficient(gen.at("weight").get<std::string>());
        if (weight.sign() < 0) problem("negative weight on " + gen.at("family").get<std::string>());
        CxCClass c = decode_class(gen);
        if (!matches_family(g, gen.at("family").get<std::string>(), c))
            problem("generator does not belong to family '" +
                    gen.at("family").get<std::string>() + "'");
        SurdTerms w = st(weight);
        sum[0] += w * st(c.a);
        sum[1] += w * st(c.b);
        sum[2] += w * st(c.c);
    }
    const QuadExt* coords[3] = {&cls.a, &cls.b, &cls.c};
    const char* names[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
        SurdTerms diff = st_sub(st(scale) * sum[i], st(*coords[i]));
        if (diff.sign() != 0) problem(std::string("combination misses coordinate ") + names[i]);
    }
}

void verify_violation(const Genus& g, const CxCClass& cls, const json& witness,
                      CertificateCheck& out) {
    auto problem = [&](std::string msg) {
        out.ok = false;
        out.problems.push_back(std::move(msg));
    };
    const json& viol = witness.at("violation");
    std::string pairing = viol.at("pairing").get<std::string>();
    ExactOrInterval recomputed = [&]() -> ExactOrInterval {
        if (pairing == "D.f1") return intersect(cls, fiber1_class(), g);
        if (pairing == "D.f2") return intersect(cls, fiber2_class(), g);
        if (pairing == "D.delta") return intersect(cls, delta_class(), g);
        if (pairing == "D.D") return self_intersection(cls, g);
        throw std::domain_error("unrecognized pairing '" + pairing + "'");
    }();
    bool negative = recomputed.exact() ? recomputed.surd().sign() < 0
                                       : recomputed.interval().hi().sign() < 0;
    if (!negative) {
        problem("pairing " + pairing + " is not certifiably negative");
        return;
    }
    const json& value = viol.at("value");
    if (value.is_string()) {
        QuadExt claimed = parse_coefficient(value.get<std::string>());
        if (recomputed.exact()) {
            if (!(claimed == recomputed.surd())) problem("violation value does not recompute");
        } else {
            RationalInterval ce = claimed.enclosure(default_precision());
            const RationalInterval& got = recomputed.interval();
            if (ce.hi() < got.lo() || got.hi() < ce.lo())
                problem("violation value is outside the recomputed enclosure");
        }
    } else {
        RationalInterval claimed(parse_rational(value.at("lo").get<std::string>()),
                                 parse_rational(value.at("hi").get<std::string>()));
        RationalInterval got = recomputed.enclosure(default_precision());
        if (claimed.hi() < got.lo() || got.hi() < claimed.lo())
            problem("violation enclosure does not overlap the recomputed one");
    }
}

} // namespace

std::string family_description(const std::string& family) {
    if (family == "fiber-f1") return "fiber class of the first projection";
    if (family == "fiber-f2") return "fiber class of the second projection";
    if (family == "theta") return "principal polarization pullback, nef for every curve";
    if (family == "delta-edge") return "edge ray (2g-2) f + delta of the nonnegative-diagonal cone";
    if (family == "vojta") return "curve of classes a(b) f1 + b f2 - delta, nef on every curve";
    if (family == "vojta-swap") return "coordinate swap of the every-curve family";
    if (family == "integral") return "integer-degree classes, nef on general curves";
    if (family == "sporadic") return "isolated classes, nef on very general curves";
    if (family == "kouvidakis") return "root-of-genus class, nef on very general curves";
    if (family == "necessary-conditions") return "failed pairing against a nef class";
    if (family == "nonnegative-criterion")
        return "decomposition over fibers and the diagonal edge rays";
    return "unrecognized family";
}

nlohmann::json certificate_document(const Genus& g, const CxCClass& cls,
                                    const NefCertificate& cert,
                                    const std::vector<std::string>& command_echo) {
    json doc;
    doc["schema"] = "nef-certificate/1";
    doc["command"] = command_echo;
    doc["genus"] = g.value();
    doc["class"] = encode_class(cls);
    doc["verdict"] = nef_verdict_name(cert.verdict);
    doc["generality"] = generality_name(cert.generality);
    doc["family"] = cert.family;
    json families = json::object();
    if (!cert.family.empty()) add_family(families, cert.family);
    switch (cert.verdict) {
        case NefVerdict::Nef: {
            json combo = json::array();
            for (const WeightedGenerator& wg : cert.combination) {
                json gen = encode_class(wg.cls);
                gen.erase("text");
                gen["family"] = wg.family;
                gen["weight"] = print_coefficient(wg.weight);
                combo.push_back(std::move(gen));
                add_family(families, wg.family);
            }
            doc["witness"] = json{{"combination", std::move(combo)},
                                  {"scale", print_coefficient(cert.scale)}};
            break;
        }
        case NefVerdict::NotNef:
            doc["witness"] =
                json{{"violation", json{{"pairing", cert.violation->pairing},
                                        {"value", encode_value(cert.violation->value)}}}};
            break;
        case NefVerdict::Unknown:
            doc["witness"] = nullptr;
            break;
    }
    doc["families"] = std::move(families);
    return doc;
}

CertificateCheck verify_certificate(const nlohmann::json& doc) {
    CertificateCheck out;
    auto problem = [&](std::string msg) {
        out.ok = false;
        out.problems.push_back(std::move(msg));
    };
    try {
        if (doc.at("schema").get<std::string>() != "nef-certificate/1") {
            problem("unsupported schema");
            return out;
        }
        Genus genus(doc.at("genus").get<long long>());
        CxCClass cls = decode_class(doc.at("class"));
        std::string verdict = doc.at("verdict").get<std::string>();
        const json& witness = doc.at("witness");
        if (verdict == "Unknown") {
            if (!witness.is_null()) problem("an Unknown verdict cannot carry a witness");
        } else if (verdict == "NotNef") {
            verify_violation(genus, cls, witness, out);
        } else if (verdict == "Nef") {
            if (witness.at("combination").empty() && !(cls == CxCClass{})) {
                if (doc.at("family").get<std::string>() != "nonnegative-criterion" ||
                    !cone_criterion_holds(cls, genus))
                    problem("empty combination without a valid cone decomposition");
            } else {
                verify_combination(genus, cls, witness, out);
            }
        } else {
            problem("unrecognized verdict '" + verdict + "'");
        }
    } catch (const std::exception& e) {
        problem(std::string("malformed document: ") + e.what());
    }
    return out;
}

} // namespace sesh
