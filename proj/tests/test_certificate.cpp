#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sesh/certificate.hpp"
#include "sesh/parse.hpp"
#include "gen.hpp"

#include <string>
#include <vector>

using namespace sesh;
using gen::Rng;
using nlohmann::json;

namespace {

json doc_for(long long g, const CxCClass& cls, Generality level) {
    Genus genus(g);
    NefCertificate cert = certify_nef(cls, genus, level);
    return certificate_document(genus, cls, cert, {"cxc", "certify"});
}

json roundtrip(const json& doc) { return json::parse(doc.dump()); }

bool verifies(const json& doc) { return verify_certificate(doc).ok; }

CxCClass cls3(QuadExt a, QuadExt b, QuadExt c) { return CxCClass{a, b, c}; }

} // namespace

TEST_CASE("golden documents re-verify after a serialization round trip") {
    // Every verdict kind and every witness shape in one corpus.
    std::vector<json> corpus;
    corpus.push_back(doc_for(7, cls3(QuadExt(14), QuadExt(2), QuadExt(-1)),
                             Generality::Arbitrary));
    corpus.push_back(doc_for(7, cls3(QuadExt(13), QuadExt(Rational(13, 6)), QuadExt(-1)),
                             Generality::VeryGeneral));
    corpus.push_back(doc_for(7, cls3(QuadExt(Rational(137, 10)), QuadExt(2), QuadExt(-1)),
                             Generality::General));
    corpus.push_back(doc_for(7, cls3(QuadExt(8), QuadExt(2), QuadExt(-1)),
                             Generality::VeryGeneral));
    corpus.push_back(doc_for(7, cls3(QuadExt(2), QuadExt(2), QuadExt(-1)),
                             Generality::Arbitrary));
    corpus.push_back(doc_for(5, theta_class(Genus(5)), Generality::Arbitrary));
    corpus.push_back(doc_for(9, kouvidakis_class(Genus(9)).cls, Generality::VeryGeneral));
    corpus.push_back(doc_for(2, cls3(QuadExt(0), QuadExt(0), QuadExt(0)),
                             Generality::Arbitrary));
    corpus.push_back(doc_for(2, cls3(QuadExt(0), QuadExt(0), QuadExt(1)),
                             Generality::Arbitrary));
    // Quadratic class certified through a scaled witness.
    QuadExt s2(Rational(0), Rational(1), Int(2));
    corpus.push_back(doc_for(7, cls3(QuadExt(14) * s2, QuadExt(2) * s2, -s2),
                             Generality::Arbitrary));
    // Mixed-field coefficients: cone criterion with the record omitted.
    corpus.push_back(doc_for(2,
                             cls3(QuadExt(Rational(0), Rational(1), Int(2)),
                                  QuadExt(Rational(0), Rational(1), Int(3)), QuadExt(1)),
                             Generality::Arbitrary));

    for (const json& doc : corpus) {
        std::string dumped = doc.dump();
        CAPTURE(dumped);
        CertificateCheck check = verify_certificate(roundtrip(doc));
        CHECK(check.ok);
        if (!check.ok)
            for (const std::string& p : check.problems) MESSAGE(p);
    }
}

TEST_CASE("document layout pins the published schema") {
    json doc = doc_for(7, cls3(QuadExt(14), QuadExt(2), QuadExt(-1)), Generality::Arbitrary);
    CHECK(doc.at("schema") == "nef-certificate/1");
    CHECK(doc.at("genus") == 7);
    CHECK(doc.at("class").at("a") == "14");
    CHECK(doc.at("class").at("c") == "-1");
    CHECK(doc.at("class").at("text") == "14 f1 + 2 f2 - d");
    CHECK(doc.at("verdict") == "Nef");
    CHECK(doc.at("generality") == "Arbitrary");
    CHECK(doc.at("family") == "vojta");
    CHECK(doc.at("command") == json::array({"cxc", "certify"}));
    CHECK(doc.at("witness").at("scale") == "1");
    REQUIRE(doc.at("witness").at("combination").is_array());
    REQUIRE(!doc.at("witness").at("combination").empty());
    for (const json& gen : doc.at("witness").at("combination")) {
        CHECK(gen.contains("a"));
        CHECK(gen.contains("b"));
        CHECK(gen.contains("c"));
        CHECK(gen.at("family").is_string());
        CHECK(parse_coefficient(gen.at("weight").get<std::string>()).sign() >= 0);
    }
    CHECK(doc.at("families").contains("vojta"));
    CHECK(family_description("vojta") ==
          doc.at("families").at("vojta").get<std::string>());

    json notnef = doc_for(7, cls3(QuadExt(2), QuadExt(2), QuadExt(-1)), Generality::Arbitrary);
    CHECK(notnef.at("verdict") == "NotNef");
    CHECK(notnef.at("witness").at("violation").at("pairing") == "D.D");
    CHECK(notnef.at("witness").at("violation").at("value") == "-12");

    json unknown = doc_for(7, cls3(QuadExt(8), QuadExt(2), QuadExt(-1)), Generality::VeryGeneral);
    CHECK(unknown.at("verdict") == "Unknown");
    CHECK(unknown.at("witness").is_null());

    QuadExt s2(Rational(0), Rational(1), Int(2));
    json scaled = doc_for(7, cls3(QuadExt(14) * s2, QuadExt(2) * s2, -s2),
                          Generality::Arbitrary);
    CHECK(scaled.at("witness").at("scale") == "sqrt(2)");
    CHECK(scaled.at("witness").at("combination")[0].at("a") == "14");
}

TEST_CASE("tampered documents are rejected") {
    json nef = doc_for(7, cls3(QuadExt(14), QuadExt(2), QuadExt(-1)), Generality::Arbitrary);
    REQUIRE(verifies(nef));

    json t = nef;
    t["class"]["a"] = "15";
    CHECK_FALSE(verifies(t));

    t = nef;
    t["witness"]["combination"][0]["weight"] =
        "-" + t["witness"]["combination"][0]["weight"].get<std::string>();
    CHECK_FALSE(verifies(t));

    t = nef;
    t["witness"]["combination"][0]["family"] = "kouvidakis";
    CHECK_FALSE(verifies(t));

    t = nef;
    t["witness"]["scale"] = "0";
    CHECK_FALSE(verifies(t));

    t = nef;
    t["genus"] = 8;
    CHECK_FALSE(verifies(t));

    t = nef;
    t["verdict"] = "Maybe";
    CHECK_FALSE(verifies(t));

    t = nef;
    t["schema"] = "nef-certificate/2";
    CHECK_FALSE(verifies(t));

    t = nef;
    t["witness"]["combination"][0]["b"] = "3";
    CHECK_FALSE(verifies(t));

    t = nef;
    t["class"]["a"] = "1/0";
    CHECK_FALSE(verifies(t));

    t = nef;
    t.erase("witness");
    CHECK_FALSE(verifies(t));

    json notnef = doc_for(7, cls3(QuadExt(2), QuadExt(2), QuadExt(-1)), Generality::Arbitrary);
    REQUIRE(verifies(notnef));
    t = notnef;
    t["witness"]["violation"]["value"] = "-11";
    CHECK_FALSE(verifies(t));
    t = notnef;
    t["witness"]["violation"]["pairing"] = "D.f1";
    CHECK_FALSE(verifies(t));

    json unknown = doc_for(7, cls3(QuadExt(8), QuadExt(2), QuadExt(-1)), Generality::General);
    REQUIRE(verifies(unknown));
    t = unknown;
    t["witness"] = json{{"combination", json::array()}, {"scale", "1"}};
    CHECK_FALSE(verifies(t));
}

TEST_CASE("cone-criterion documents recheck the decomposition signs") {
    CxCClass mixed = cls3(QuadExt(Rational(0), Rational(1), Int(2)),
                          QuadExt(Rational(0), Rational(1), Int(3)), QuadExt(1));
    json doc = doc_for(2, mixed, Generality::Arbitrary);
    REQUIRE(doc.at("verdict") == "Nef");
    REQUIRE(doc.at("family") == "nonnegative-criterion");
    REQUIRE(doc.at("witness").at("combination").empty());
    CHECK(verifies(doc));

    json t = doc;
    t["class"]["b"] = "0";  // eta = a + b - 2c turns negative
    CHECK_FALSE(verifies(t));
    t = doc;
    t["class"]["c"] = "-1";
    CHECK_FALSE(verifies(t));
    t = doc;
    t["family"] = "vojta";
    CHECK_FALSE(verifies(t));
}

TEST_CASE("random certificates re-verify and perturbed ones fail") {
    Rng rng(408);
    const long long genera[] = {2, 3, 5, 7, 9};
    int nef_seen = 0, tampered_caught = 0, tampered_total = 0;
    for (int it = 0; it < 250; ++it) {
        long long g = genera[rng.range(0, 4)];
        QuadExt a(rng.positive_rational(22, 8));
        QuadExt b(rng.positive_rational(22, 8));
        QuadExt c = rng.range(0, 4) == 0 ? QuadExt(rng.rational(2, 3)) : QuadExt(-1);
        CxCClass cls{a, b, c};
        Generality level = static_cast<Generality>(rng.range(0, 2));
        json doc = doc_for(g, cls, level);
        CertificateCheck check = verify_certificate(roundtrip(doc));
        std::string dumped = doc.dump();
        CAPTURE(dumped);
        CHECK(check.ok);
        if (doc.at("verdict") == "Nef" && !doc.at("witness").at("combination").empty()) {
            ++nef_seen;
            json t = doc;
            // Shift one class coordinate: the exact identity must notice.
            t["class"]["b"] = print_coefficient(b + QuadExt(Rational(1, 997)));
            ++tampered_total;
            if (!verifies(t)) ++tampered_caught;
        }
    }
    CHECK(nef_seen > 40);
    CHECK(tampered_caught == tampered_total);
}
