#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sesh/parse.hpp"
#include "gen.hpp"

#include <string>
#include <vector>

using namespace sesh;
using gen::Rng;

namespace {

CxCClass cls_of(const std::string& text) { return parse_class(text).cls; }

std::size_t column_of_class(const std::string& text) {
    try {
        parse_class(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

std::size_t column_of_bundle(const std::string& text) {
    try {
        parse_bundle(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

CxCClass make(QuadExt a, QuadExt b, QuadExt c) { return CxCClass{a, b, c}; }

} // namespace

TEST_CASE("class grammar accepts the documented forms") {
    CHECK(cls_of("f1 + f2 - d") == make(QuadExt(1), QuadExt(1), QuadExt(-1)));
    CHECK(cls_of("13 f1 + 13/6 f2 - d") ==
          make(QuadExt(13), QuadExt(Rational(13, 6)), QuadExt(-1)));
    CHECK(cls_of("13.7 f1 + 2 f2 - d") ==
          make(QuadExt(Rational(137, 10)), QuadExt(2), QuadExt(-1)));
    CHECK(cls_of("8 f1 + 2 f2 - d") == make(QuadExt(8), QuadExt(2), QuadExt(-1)));
    CHECK(cls_of("- d") == make(QuadExt(0), QuadExt(0), QuadExt(-1)));
    CHECK(cls_of("2*f1") == make(QuadExt(2), QuadExt(0), QuadExt(0)));
    CHECK(cls_of("delta") == cls_of("d"));
    CHECK(cls_of("3 delta") == make(QuadExt(0), QuadExt(0), QuadExt(3)));
    CHECK(cls_of("f1 + f1") == make(QuadExt(2), QuadExt(0), QuadExt(0)));
    CHECK(cls_of("1/2 f1") == make(QuadExt(Rational(1, 2)), QuadExt(0), QuadExt(0)));
    CHECK(cls_of("0.25 d") == make(QuadExt(0), QuadExt(0), QuadExt(Rational(1, 4))));
    CHECK(cls_of("f2 - f1") == make(QuadExt(-1), QuadExt(1), QuadExt(0)));
    CHECK(cls_of("+ 2 f2") == make(QuadExt(0), QuadExt(2), QuadExt(0)));
}

TEST_CASE("class grammar accepts quadratic coefficients") {
    CHECK(cls_of("sqrt(2) f1") == make(QuadExt(Rational(0), Rational(1), Int(2)),
                                       QuadExt(0), QuadExt(0)));
    CHECK(cls_of("2+3*sqrt(5) f1") == make(QuadExt(Rational(2), Rational(3), Int(5)),
                                           QuadExt(0), QuadExt(0)));
    CHECK(cls_of("13-2/7*sqrt(6) f1") ==
          make(QuadExt(Rational(13), Rational(-2, 7), Int(6)), QuadExt(0), QuadExt(0)));
    CHECK(cls_of("-2+3*sqrt(5) f2") ==
          make(QuadExt(0), QuadExt(Rational(-2), Rational(3), Int(5)), QuadExt(0)));
    CHECK(cls_of("3*sqrt(2) d") ==
          make(QuadExt(0), QuadExt(0), QuadExt(Rational(0), Rational(3), Int(2))));
    CHECK(cls_of("1/2*sqrt(3) f1") ==
          make(QuadExt(Rational(0), Rational(1, 2), Int(3)), QuadExt(0), QuadExt(0)));
    CHECK(cls_of("sqrt(5)+2 f1") ==
          make(QuadExt(Rational(2), Rational(1), Int(5)), QuadExt(0), QuadExt(0)));
    CHECK(cls_of("- sqrt(2) f1 + f2") ==
          make(QuadExt(Rational(0), Rational(-1), Int(2)), QuadExt(1), QuadExt(0)));
    // The sign binds to the first atom of a two-part coefficient.
    CHECK(cls_of("f1 - 2+3*sqrt(5) f2") ==
          make(QuadExt(1), QuadExt(Rational(-2), Rational(3), Int(5)), QuadExt(0)));
}

TEST_CASE("non-squarefree radicands are normalized with a note") {
    ParsedClass p8 = parse_class("sqrt(8) f1");
    CHECK(p8.cls == make(QuadExt(Rational(0), Rational(2), Int(2)), QuadExt(0), QuadExt(0)));
    REQUIRE(p8.notes.size() == 1);
    CHECK(p8.notes[0] == "sqrt(8) normalized to 2*sqrt(2)");

    ParsedClass p4 = parse_class("sqrt(4) f1");
    CHECK(p4.cls == make(QuadExt(2), QuadExt(0), QuadExt(0)));
    REQUIRE(p4.notes.size() == 1);
    CHECK(p4.notes[0] == "sqrt(4) normalized to 2");

    CHECK(parse_class("sqrt(6) f1").notes.empty());
    CHECK(parse_class("12 f1").notes.empty());
    // Notes from a two-part coefficient survive.
    ParsedClass two = parse_class("2+sqrt(8) f1");
    CHECK(two.cls == make(QuadExt(Rational(2), Rational(2), Int(2)), QuadExt(0), QuadExt(0)));
    CHECK(two.notes.size() == 1);
}

TEST_CASE("class errors carry the offending column") {
    CHECK(column_of_class("13 f3 + d") == 4);
    CHECK(column_of_class("1/0 f1") == 1);
    CHECK(column_of_class("13 f1 + 1/0 f2") == 9);
    CHECK(column_of_class("sqrt(-2) f1") == 6);
    CHECK(column_of_class("sqrt(2/3) f1") == 6);
    CHECK(column_of_class("13 + f1") == 4);
    CHECK(column_of_class("") == 1);
    CHECK(column_of_class("13") == 3);
    CHECK(column_of_class("f1 & f2") == 4);
    CHECK(column_of_class("f1 f2") == 4);

    CHECK_THROWS_AS(parse_class("13 f3"), ParseError);
    CHECK_THROWS_WITH(parse_class("13 f3"), doctest::Contains("unknown symbol 'f3'"));
    CHECK_THROWS_WITH(parse_class("13 f3"), doctest::Contains("column 4"));
    CHECK_THROWS_WITH(parse_class("1/0 f1"), doctest::Contains("zero denominator"));
    CHECK_THROWS_WITH(parse_class("sqrt(-2) f1"), doctest::Contains("non-negative"));
    CHECK_THROWS_WITH(parse_class("13"), doctest::Contains("expected f1, f2, or d"));
}

TEST_CASE("bundle grammar handles pieces and twist") {
    ParsedBundle doc = parse_bundle("1:1,1:2 twist=-1/2");
    CurveBundle want({{Int(1), Rational(1)}, {Int(1), Rational(2)}}, Rational(-1, 2));
    CHECK(doc.bundle == want);
    CHECK(doc.notes.empty());

    CHECK(parse_bundle("1:1").bundle == CurveBundle({{Int(1), Rational(1)}}));
    CHECK(parse_bundle("2:-3").bundle == CurveBundle({{Int(2), Rational(-3)}}));
    CHECK(parse_bundle("3:7/2 twist=1/3").bundle ==
          CurveBundle({{Int(3), Rational(7, 2)}}, Rational(1, 3)));
    CHECK(parse_bundle("1:0.5").bundle == CurveBundle({{Int(1), Rational(1, 2)}}));
    CHECK(parse_bundle(" 1:1 , 1:2 ").bundle ==
          CurveBundle({{Int(1), Rational(1)}, {Int(1), Rational(2)}}));
}

TEST_CASE("bundle errors carry the offending column") {
    CHECK(column_of_bundle("0:1") == 1);
    CHECK(column_of_bundle("x:1") == 1);
    CHECK(column_of_bundle("1:1,") == 5);
    CHECK(column_of_bundle("1:1 twist=") == 11);
    CHECK(column_of_bundle("1:1 tw=2") == 5);
    CHECK(column_of_bundle("1:2:3") == 4);
    CHECK(column_of_bundle("1:1/0") == 3);
    CHECK(column_of_bundle("1/2:1") == 1);
    CHECK(column_of_bundle("") == 1);

    CHECK_THROWS_WITH(parse_bundle("0:1"), doctest::Contains("positive integer"));
    CHECK_THROWS_WITH(parse_bundle("1:1 tw=2"), doctest::Contains("unknown keyword 'tw'"));
}

TEST_CASE("printing is exact and stable") {
    CHECK(print_class(make(QuadExt(13), QuadExt(Rational(13, 6)), QuadExt(-1))) ==
          "13 f1 + 13/6 f2 - d");
    CHECK(print_class(make(QuadExt(1), QuadExt(1), QuadExt(-1))) == "f1 + f2 - d");
    CHECK(print_class(make(QuadExt(0), QuadExt(0), QuadExt(0))) == "0 f1 + 0 f2 + 0 d");
    CHECK(print_class(make(QuadExt(-1), QuadExt(0), QuadExt(Rational(0), Rational(-1), Int(2)))) ==
          "-f1 - sqrt(2) d");
    CHECK(print_class(make(QuadExt(Rational(137, 10)), QuadExt(2), QuadExt(-1))) ==
          "137/10 f1 + 2 f2 - d");

    CHECK(print_coefficient(QuadExt(Rational(13), Rational(2, 7), Int(6))) ==
          "13+2/7*sqrt(6)");
    CHECK(print_coefficient(QuadExt(Rational(13), Rational(-2, 7), Int(6))) ==
          "13-2/7*sqrt(6)");
    CHECK(print_coefficient(QuadExt(Rational(0), Rational(-1), Int(2))) == "-sqrt(2)");
    CHECK(print_coefficient(QuadExt(-13)) == "-13");
    CHECK(print_coefficient(QuadExt(Rational(-2), Rational(3), Int(5))) == "-2+3*sqrt(5)");

    CHECK(print_bundle(CurveBundle({{Int(1), Rational(1)}, {Int(1), Rational(2)}},
                                   Rational(-1, 2))) == "1:1,1:2 twist=-1/2");
    CHECK(print_bundle(CurveBundle({{Int(2), Rational(-3)}})) == "2:-3");
}

TEST_CASE("round-trip: parsing a printed value is the identity") {
    Rng rng(406);
    for (int it = 0; it < 1000; ++it) {
        QuadExt coords[3];
        for (QuadExt& x : coords)
            x = rng.range(0, 2) == 0 ? QuadExt(rng.rational(50, 20)) : rng.surd(30, 60);
        CxCClass cls{coords[0], coords[1], coords[2]};
        ParsedClass back = parse_class(print_class(cls));
        CHECK(back.cls == cls);
        CHECK(back.notes.empty());
    }
    for (int it = 0; it < 1000; ++it) {
        std::vector<SemistablePiece> pieces;
        long long count = rng.range(1, 5);
        for (long long i = 0; i < count; ++i)
            pieces.push_back({Int(rng.range(1, 9)), rng.rational(40, 12)});
        Rational tw = rng.range(0, 1) == 0 ? Rational(0) : rng.rational(10, 8);
        CurveBundle b(pieces, tw);
        CHECK(parse_bundle(print_bundle(b)).bundle == b);
    }
    for (int it = 0; it < 500; ++it) {
        QuadExt x = rng.range(0, 1) == 0 ? QuadExt(rng.rational(100, 40)) : rng.surd(60, 80);
        CHECK(parse_coefficient(print_coefficient(x)) == x);
    }
}

TEST_CASE("malformed input raises ParseError and nothing else") {
    const std::string alphabet = "f12d +-*/sqrt()0123456789:,.=xq";
    Rng rng(407);
    for (int it = 0; it < 400; ++it) {
        std::string text;
        long long len = rng.range(0, 24);
        for (long long i = 0; i < len; ++i)
            text += alphabet[static_cast<std::size_t>(
                rng.range(0, static_cast<long long>(alphabet.size()) - 1))];
        try {
            parse_class(text);
        } catch (const ParseError& e) {
            CHECK(e.column() >= 1);
            CHECK(e.column() <= text.size() + 1);
        }
        try {
            parse_bundle(text);
        } catch (const ParseError& e) {
            CHECK(e.column() >= 1);
            CHECK(e.column() <= text.size() + 1);
        }
    }
}
