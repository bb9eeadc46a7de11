#pragma once

#include "sesh/curve.hpp"
#include "sesh/cxc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sesh {

// Input rejection carrying the 1-based column of the offending token; the
// what() text already ends with "(column N)" so it can be shown verbatim.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& message);
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Parse result plus advisory notes, e.g. a radicand that had its square part
// pulled out front.
struct ParsedClass {
    CxCClass cls;
    std::vector<std::string> notes;
};

struct ParsedBundle {
    CurveBundle bundle;
    std::vector<std::string> notes;
};

// Signed terms over the symbols f1, f2 and d (alias: delta) with rational
// ("13", "13/6", "13.7") or quadratic ("p+q*sqrt(n)") coefficients; repeated
// symbols accumulate. Decimals parse exactly.
ParsedClass parse_class(const std::string& text);

// Comma list of rank:degree pairs plus an optional trailing
// "twist=<rational>", e.g. "1:1,1:2 twist=-1/2".
ParsedBundle parse_bundle(const std::string& text);

// A standalone coefficient in the class-coefficient grammar.
QuadExt parse_coefficient(const std::string& text);

// Exact renderings; parsing them back yields the identical value.
std::string print_class(const CxCClass& cls);
std::string print_bundle(const CurveBundle& b);
std::string print_coefficient(const QuadExt& x);

} // namespace sesh
