#include "sesh/parse.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace sesh {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
      column_(column) {}

namespace {

enum class Tok { Number, Word, Plus, Minus, Star, Comma, Colon, Equals, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t column;  // 1-based
    std::string text;
    Rational value;  // Number only
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto col = [&](std::size_t at) { return at + 1; };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i + 1 < text.size() && (text[i] == '/' || text[i] == '.') &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            std::string lexeme = text.substr(start, i - start);
            Rational value;
            try {
                value = parse_rational(lexeme);
            } catch (const std::domain_error&) {
                throw ParseError(col(start), "zero denominator in '" + lexeme + "'");
            }
            out.push_back({Tok::Number, col(start), lexeme, value});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
            out.push_back({Tok::Word, col(start), text.substr(start, i - start), Rational(0)});
            continue;
        }
        Tok kind;
        switch (ch) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case ',': kind = Tok::Comma; break;
            case ':': kind = Tok::Colon; break;
            case '=': kind = Tok::Equals; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(col(start), std::string("unexpected character '") + ch + "'");
        }
        out.push_back({kind, col(start), std::string(1, ch), Rational(0)});
        ++i;
    }
    out.push_back({Tok::End, col(text.size()), "", Rational(0)});
    return out;
}

class Cursor {
public:
    Cursor(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = i_ + ahead;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (t.kind != Tok::End) ++i_;
        return t;
    }
    std::size_t mark() const { return i_; }
    void rewind(std::size_t m) { i_ = m; }
    bool at(Tok k) const { return peek().kind == k; }
    bool is_word(const char* w) const { return at(Tok::Word) && peek().text == w; }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
    throw ParseError(t.column, message);
}

// sqrt '(' n ')' with n a non-negative integer; the cursor sits on "sqrt".
// Pulls square factors out of n, recording a note when that happens.
QuadExt parse_sqrt(Cursor& c, std::vector<std::string>& notes) {
    c.next();
    if (!c.at(Tok::LParen)) fail(c.peek(), "expected '(' after sqrt");
    c.next();
    if (c.at(Tok::Minus)) fail(c.peek(), "radicand must be non-negative");
    if (!c.at(Tok::Number)) fail(c.peek(), "expected a radicand");
    const Token& rad = c.next();
    if (rad.value.den() != 1) fail(rad, "radicand must be an integer");
    if (!c.at(Tok::RParen)) fail(c.peek(), "expected ')' after the radicand");
    c.next();
    Int n = rad.value.num();
    auto [s, f] = squarefree_decompose(n);
    if (s != 1) {
        std::string to = f == 1 ? s.str() : s.str() + "*sqrt(" + f.str() + ")";
        notes.push_back("sqrt(" + n.str() + ") normalized to " + to);
    }
    return QuadExt(Rational(0), Rational(1), n);
}

// NUMBER | NUMBER '*' sqrt(n) | sqrt(n)
std::optional<QuadExt> parse_atom(Cursor& c, std::vector<std::string>& notes) {
    if (c.is_word("sqrt")) return parse_sqrt(c, notes);
    if (!c.at(Tok::Number)) return std::nullopt;
    const Token& num = c.next();
    if (c.at(Tok::Star) && c.peek(1).kind == Tok::Word && c.peek(1).text == "sqrt") {
        c.next();
        return QuadExt(num.value) * parse_sqrt(c, notes);
    }
    return QuadExt(num.value);
}

// An atom, optionally followed by +/- and a second atom when exactly one of
// the halves is rational — the "p+q*sqrt(n)" coefficient form. A leading
// sign binds to the first atom only; a '+'/'-' that does not complete such
// a pair is left for the caller.
std::optional<QuadExt> parse_coef(Cursor& c, bool negate_first, std::vector<std::string>& notes) {
    std::optional<QuadExt> first = parse_atom(c, notes);
    if (!first) return std::nullopt;
    if (negate_first) first = -*first;
    if (c.at(Tok::Plus) || c.at(Tok::Minus)) {
        std::size_t m = c.mark();
        bool minus = c.next().kind == Tok::Minus;
        std::size_t note_mark = notes.size();
        std::optional<QuadExt> second = parse_atom(c, notes);
        if (second && first->is_rational() != second->is_rational())
            return minus ? *first - *second : *first + *second;
        notes.resize(note_mark);
        c.rewind(m);
    }
    return first;
}

int symbol_slot(const Token& t) {
    if (t.text == "f1") return 0;
    if (t.text == "f2") return 1;
    if (t.text == "d" || t.text == "delta") return 2;
    return -1;
}

Rational expect_signed_rational(Cursor& c, const char* what) {
    int sign = 1;
    if (c.at(Tok::Plus) || c.at(Tok::Minus))
        if (c.next().kind == Tok::Minus) sign = -1;
    if (!c.at(Tok::Number)) fail(c.peek(), std::string("expected ") + what);
    Rational v = c.next().value;
    return sign < 0 ? -v : v;
}

} // namespace

ParsedClass parse_class(const std::string& text) {
    Cursor c(lex(text));
    ParsedClass result;
    QuadExt acc[3];
    if (c.at(Tok::End)) fail(c.peek(), "empty class");
    bool first = true;
    for (;;) {
        bool minus = false;
        if (c.at(Tok::Plus) || c.at(Tok::Minus)) minus = c.next().kind == Tok::Minus;
        else if (!first) fail(c.peek(), "expected '+' or '-'");
        std::optional<QuadExt> coef = parse_coef(c, minus, result.notes);
        if (coef && c.at(Tok::Star)) c.next();
        if (!c.at(Tok::Word)) fail(c.peek(), "expected f1, f2, or d");
        const Token& sym = c.next();
        int slot = symbol_slot(sym);
        if (slot < 0) fail(sym, "unknown symbol '" + sym.text + "'");
        acc[slot] += coef.value_or(minus ? QuadExt(-1) : QuadExt(1));
        first = false;
        if (c.at(Tok::End)) break;
    }
    result.cls = CxCClass{acc[0], acc[1], acc[2]};
    return result;
}

ParsedBundle parse_bundle(const std::string& text) {
    Cursor c(lex(text));
    std::vector<SemistablePiece> pieces;
    if (c.at(Tok::End)) fail(c.peek(), "expected rank:degree");
    for (;;) {
        if (!c.at(Tok::Number)) fail(c.peek(), "expected a rank");
        const Token& rank = c.next();
        if (rank.value.den() != 1 || rank.value.sign() <= 0)
            fail(rank, "rank must be a positive integer");
        if (!c.at(Tok::Colon)) fail(c.peek(), "expected ':' between rank and degree");
        c.next();
        Rational degree = expect_signed_rational(c, "a degree");
        pieces.push_back({rank.value.num(), degree});
        if (!c.at(Tok::Comma)) break;
        c.next();
    }
    Rational tw(0);
    if (c.at(Tok::Word)) {
        const Token& word = c.peek();
        if (word.text != "twist") fail(word, "unknown keyword '" + word.text + "'");
        c.next();
        if (!c.at(Tok::Equals)) fail(c.peek(), "expected '=' after twist");
        c.next();
        tw = expect_signed_rational(c, "a twist value");
    }
    if (!c.at(Tok::End)) fail(c.peek(), "unexpected trailing input");
    return {CurveBundle(std::move(pieces), std::move(tw)), {}};
}

QuadExt parse_coefficient(const std::string& text) {
    std::vector<std::string> notes;
    Cursor c(lex(text));
    bool minus = false;
    if (c.at(Tok::Plus) || c.at(Tok::Minus)) minus = c.next().kind == Tok::Minus;
    std::optional<QuadExt> coef = parse_coef(c, minus, notes);
    if (!coef) fail(c.peek(), "expected a coefficient");
    if (!c.at(Tok::End)) fail(c.peek(), "unexpected trailing input");
    return *coef;
}

std::string print_coefficient(const QuadExt& x) {
    if (x.is_rational()) return x.rational_value().str();
    const Rational& q = x.surd_coefficient();
    Rational mag = q.sign() < 0 ? -q : q;
    std::string surd = "sqrt(" + x.radicand().str() + ")";
    if (mag != Rational(1)) surd = mag.str() + "*" + surd;
    if (x.rational_part().is_zero()) return (q.sign() < 0 ? "-" : "") + surd;
    return x.rational_part().str() + (q.sign() < 0 ? "-" : "+") + surd;
}

std::string print_class(const CxCClass& cls) {
    const QuadExt* coefs[3] = {&cls.a, &cls.b, &cls.c};
    const char* syms[3] = {"f1", "f2", "d"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        const QuadExt& v = *coefs[i];
        if (v.is_zero()) continue;
        // A leading '-' in the rendered coefficient becomes the term joiner;
        // the parser folds it back onto the first atom.
        std::string body;
        bool neg = false;
        if (v == QuadExt(-1)) {
            neg = true;
        } else if (!(v == QuadExt(1))) {
            body = print_coefficient(v);
            if (body[0] == '-') {
                neg = true;
                body.erase(0, 1);
            }
            body += " ";
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        out += body + syms[i];
    }
    if (out.empty()) out = "0 f1 + 0 f2 + 0 d";
    return out;
}

std::string print_bundle(const CurveBundle& b) {
    std::string out;
    for (const SemistablePiece& p : b.pieces()) {
        if (!out.empty()) out += ",";
        out += p.rank.str() + ":" + p.degree.str();
    }
    if (!b.twist().is_zero()) out += " twist=" + b.twist().str();
    return out;
}

} // namespace sesh
