#include "sesh/value.hpp"

#include <algorithm>
#include <ostream>

namespace sesh {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) { return os << iv.str(); }
std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const ExactOrInterval& v) { return os << v.str(); }

Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    if (n == 0) return 0;
    Int r = sqrt(n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

static Int ipow(Int base, unsigned e) {
    Int acc = 1;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Int iroot_floor(const Int& a, unsigned n) {
    if (a < 0) throw std::domain_error("iroot_floor: negative argument");
    if (n == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (n == 1 || a <= 1) return a;
    if (n == 2) return isqrt_floor(a);
    unsigned bits = static_cast<unsigned>(msb(a)) + 1;
    Int x = Int(1) << (bits / n + 1);
    // Newton iteration descends to the floor once started above the root.
    while (true) {
        Int xn1 = ipow(x, n - 1);
        Int next = ((n - 1) * x + a / xn1) / n;
        if (next >= x) break;
        x = next;
    }
    while (ipow(x, n) > a) --x;
    while (ipow(x + 1, n) <= a) ++x;
    return x;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int acc = 1;
    for (Int i = 1; i <= kk; ++i) {
        acc *= n - kk + i;
        acc /= i;
    }
    return acc;
}

std::pair<Int, Int> squarefree_decompose(const Int& d) {
    if (d < 0) throw std::domain_error("squarefree_decompose: negative radicand");
    Int s = 1, f = 1, rest = d;
    for (Int p = 2; p <= 100000 && p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (e >= 2) s *= ipow(p, e / 2);
        if (e & 1u) f *= p;
    }
    if (rest > 1) {
        Int r2 = isqrt_floor(rest);
        if (r2 * r2 == rest) {
            s *= r2;
        } else {
            Int r3 = iroot_floor(rest, 3);
            if (r3 * r3 * r3 == rest) {
                s *= r3;
                f *= r3;
            } else {
                // Cofactor has no factor below 1e5 and is neither a square
                // nor a cube: treated as squarefree.
                f *= rest;
            }
        }
    }
    return {s, f};
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("parse_rational: empty literal");
    bool neg = false;
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') neg = t[i++] == '-';
    auto digits = [&](std::size_t& j) {
        std::size_t start = j;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j == start) throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
        return t.substr(start, j - start);
    };
    // Leading zeros must go before cpp_int sees them (octal prefix), but the
    // digit count still drives the decimal scale.
    auto to_int = [](const std::string& s) {
        std::size_t nz = s.find_first_not_of('0');
        return nz == std::string::npos ? Int(0) : Int(s.substr(nz));
    };
    std::string ip = digits(i);
    Rational value;
    if (i < t.size() && t[i] == '/') {
        ++i;
        std::string dp = digits(i);
        if (to_int(dp) == 0) throw std::domain_error("parse_rational: zero denominator");
        value = Rational(to_int(ip), to_int(dp));
    } else if (i < t.size() && t[i] == '.') {
        ++i;
        std::string fp = digits(i);
        Int scale = ipow(10, static_cast<unsigned>(fp.size()));
        value = Rational(Int(to_int(ip) * scale + to_int(fp)), scale);
    } else {
        value = Rational(to_int(ip));
    }
    if (i != t.size()) throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    return neg ? -value : value;
}

std::string decimal_truncate(const Rational& x, unsigned frac_digits) {
    Int scale = ipow(10, frac_digits);
    Int t = (x.abs() * Rational(scale)).floor();
    std::string body = t.str();
    std::string sign = x.sign() < 0 && t != 0 ? "-" : "";
    if (frac_digits == 0) return sign + body;
    if (body.size() <= frac_digits) body.insert(0, frac_digits + 1 - body.size(), '0');
    body.insert(body.size() - frac_digits, ".");
    return sign + body;
}

// Number of digits of |x| before the decimal point (0 when |x| < 1), or
// minus the count of leading fractional zeros when |x| < 1.
static long long decimal_exponent(const Rational& x) {
    Rational a = x.abs();
    if (a.is_zero()) return 1;
    long long e = 0;
    if (a >= Rational(1)) {
        Rational t = a;
        while (t >= Rational(1)) { t /= 10; ++e; }
        return e;
    }
    Rational t = a;
    while (t < Rational(1, 10)) { t *= 10; --e; }
    return e;
}

std::string decimal_truncate_sig(const Rational& x, unsigned sig_digits) {
    if (sig_digits == 0) throw std::domain_error("decimal_truncate_sig: zero digits");
    if (x.is_zero()) return "0";
    long long e = decimal_exponent(x);
    long long frac = static_cast<long long>(sig_digits) - e;
    if (frac < 0) {
        // Truncate in the integer part.
        Int scale = ipow(10, static_cast<unsigned>(-frac));
        Int t = (x.abs() / Rational(scale)).floor() * scale;
        return (x.sign() < 0 ? "-" : "") + t.str();
    }
    return decimal_truncate(x, static_cast<unsigned>(frac));
}

RationalInterval sqrt_interval(const Rational& x, const Rational& width) {
    if (x.sign() < 0) throw std::domain_error("sqrt_interval: negative argument");
    if (width.sign() <= 0) throw std::domain_error("sqrt_interval: width must be positive");
    if (x.is_zero()) return RationalInterval(Rational(0));
    Int s = 1;
    while (Rational(2, s) > width) s *= 10;
    Int num = x.num() * s * s, den = x.den();
    Int t = isqrt_floor(num / den);
    Int u = t + 1;
    while (u * u * den < num) ++u;
    return {Rational(t, s), Rational(u, s)};
}

RationalInterval nth_root_interval(const Rational& x, unsigned n, const Rational& width) {
    if (x.sign() < 0) throw std::domain_error("nth_root_interval: negative argument");
    if (n == 0) throw std::domain_error("nth_root_interval: zeroth root");
    if (width.sign() <= 0) throw std::domain_error("nth_root_interval: width must be positive");
    if (n == 1) return RationalInterval(x);
    if (x.is_zero()) return RationalInterval(Rational(0));
    Int s = 1;
    while (Rational(2, s) > width) s *= 10;
    Int num = x.num() * ipow(s, n), den = x.den();
    Int t = iroot_floor(num / den, n);
    Int u = t + 1;
    while (ipow(u, n) * den < num) ++u;
    return {Rational(t, s), Rational(u, s)};
}

RationalInterval reciprocal(const RationalInterval& a) {
    if (a.contains_zero()) throw std::domain_error("reciprocal: interval straddles zero");
    return {Rational(1) / a.hi(), Rational(1) / a.lo()};
}

QuadExt::QuadExt(Rational p, Rational q, Int d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ < 0) throw std::domain_error("QuadExt: negative radicand");
    if (q_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ == 0) {
        q_ = 0;
        return;
    }
    auto [s, f] = squarefree_decompose(d_);
    if (s != 1) q_ *= Rational(s);
    d_ = f;
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        d_ = 0;
    }
}

int QuadExt::sign() const {
    if (q_.is_zero()) return p_.sign();
    if (p_.is_zero()) return q_.sign();
    if (p_.sign() == q_.sign()) return p_.sign();
    Rational p2 = p_ * p_, q2d = q_ * q_ * Rational(d_);
    if (p2 == q2d) return 0;
    return p2 > q2d ? p_.sign() : q_.sign();
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == b.d_) return QuadExt(a.p_ + b.p_, a.q_ + b.q_, a.d_);
    if (a.q_.is_zero()) return QuadExt(a.p_ + b.p_, b.q_, b.d_);
    if (b.q_.is_zero()) return QuadExt(a.p_ + b.p_, a.q_, a.d_);
    throw MixedRadicand();
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == b.d_)
        return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * Rational(a.d_), a.p_ * b.q_ + a.q_ * b.p_, a.d_);
    if (a.q_.is_zero()) return QuadExt(a.p_ * b.p_, a.p_ * b.q_, b.d_);
    if (b.q_.is_zero()) return QuadExt(a.p_ * b.p_, a.q_ * b.p_, a.d_);
    throw MixedRadicand();
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) throw std::domain_error("QuadExt: division by zero");
    if (b.q_.is_zero()) return QuadExt(a.p_ / b.p_, a.q_ / b.p_, a.d_);
    if (a.q_.is_zero() || a.d_ == b.d_) {
        Rational norm = b.p_ * b.p_ - b.q_ * b.q_ * Rational(b.d_);
        return a * QuadExt(b.p_ / norm, -b.q_ / norm, b.d_);
    }
    throw MixedRadicand();
}

RationalInterval QuadExt::enclosure(const Rational& width) const {
    if (q_.is_zero()) return RationalInterval(p_);
    Rational sub = width / q_.abs();
    return p_ + q_ * sqrt_interval(Rational(d_), sub);
}

Int QuadExt::floor() const {
    if (q_.is_zero()) return p_.floor();
    Rational w(1, 4);
    while (true) {
        RationalInterval iv = enclosure(w);
        Int fl = iv.lo().floor();
        if (iv.hi() < Rational(Int(fl + 1))) return fl;
        // The value is irrational, so it is never the integer the enclosure
        // straddles; tighten until the enclosure commits to one side.
        w /= 1024;
    }
}

std::string QuadExt::str() const {
    if (q_.is_zero()) return p_.str();
    std::string tail = q_.str() + "*sqrt(" + d_.str() + ")";
    if (p_.is_zero()) return tail;
    if (q_.sign() > 0) return p_.str() + " + " + tail;
    return p_.str() + " - " + (-q_).str() + "*sqrt(" + d_.str() + ")";
}

int quad_compare_mixed(const QuadExt& x, const QuadExt& y) {
    if (x.radicand() == y.radicand() || x.is_rational() || y.is_rational())
        return (x - y).sign();
    if (x == y) return 0;
    // Distinct squarefree radicands with nonzero surd parts never produce
    // equal values, so refinement separates the enclosures.
    Rational w(1, 16);
    while (true) {
        RationalInterval ix = x.enclosure(w), iy = y.enclosure(w);
        if (certainly_less(ix, iy)) return -1;
        if (certainly_less(iy, ix)) return 1;
        w /= 1024;
    }
}

QuadExt quad_min(const QuadExt& x, const QuadExt& y) { return quad_compare_mixed(x, y) <= 0 ? x : y; }
QuadExt quad_max(const QuadExt& x, const QuadExt& y) { return quad_compare_mixed(x, y) >= 0 ? x : y; }

SurdTerms::SurdTerms(const QuadExt& x) {
    add(x.rational_part(), 1);
    if (!x.surd_coefficient().is_zero()) add(x.surd_coefficient(), x.radicand());
}

void SurdTerms::add(const Rational& coef, const Int& squarefree_radicand) {
    if (coef.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), squarefree_radicand,
                               [](const auto& t, const Int& d) { return t.first < d; });
    if (it != terms_.end() && it->first == squarefree_radicand) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {squarefree_radicand, coef});
    }
}

SurdTerms& SurdTerms::operator+=(const SurdTerms& o) {
    for (const auto& [d, c] : o.terms_) add(c, d);
    return *this;
}

SurdTerms operator*(const SurdTerms& a, const SurdTerms& b) {
    SurdTerms out;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) {
            // sqrt(da)*sqrt(db) = g*sqrt((da/g)(db/g)) with g = gcd: the
            // cofactors are coprime and squarefree, so their product is too.
            Int g = gcd(da, db);
            out.add(ca * cb * Rational(g), (da / g) * (db / g));
        }
    return out;
}

bool SurdTerms::is_zero() const { return terms_.empty(); }

bool SurdTerms::to_quadext(QuadExt& out) const {
    Rational p, q;
    Int d = 0;
    for (const auto& [rad, coef] : terms_) {
        if (rad == 1) {
            p = coef;
        } else if (d == 0) {
            d = rad;
            q = coef;
        } else {
            return false;
        }
    }
    out = QuadExt(p, q, d);
    return true;
}

RationalInterval SurdTerms::enclosure(const Rational& width) const {
    if (terms_.empty()) return RationalInterval(Rational(0));
    Rational per = width / Rational(static_cast<long long>(terms_.size()));
    RationalInterval acc{Rational(0)};
    for (const auto& [rad, coef] : terms_) {
        if (rad == 1) {
            acc = acc + RationalInterval(coef);
        } else {
            acc = acc + coef * sqrt_interval(Rational(rad), per / coef.abs());
        }
    }
    return acc;
}

int SurdTerms::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_.front().second.sign();
    QuadExt q;
    if (to_quadext(q)) return q.sign();
    Rational w(1, 16);
    while (true) {
        int s;
        if (enclosure(w).certified_sign(s)) return s;
        w /= 1024;
    }
}

std::string decimal_truncate(const QuadExt& x, unsigned frac_digits) {
    if (x.is_rational()) return decimal_truncate(x.rational_value(), frac_digits);
    Int scale = ipow(10, frac_digits);
    QuadExt scaled = x * QuadExt(Rational(scale));
    Int t = x.sign() >= 0 ? scaled.floor() : -((-scaled).floor());
    Rational approx(t, scale);
    return decimal_truncate(approx, frac_digits);
}

std::string decimal_truncate_sig(const QuadExt& x, unsigned sig_digits) {
    if (x.is_rational()) return decimal_truncate_sig(x.rational_value(), sig_digits);
    if (sig_digits == 0) throw std::domain_error("decimal_truncate_sig: zero digits");
    // The enclosure pins the magnitude; irrational values cannot sit on a
    // power of ten, so the digit count is decided exactly.
    RationalInterval iv = x.enclosure(Rational(1, 1000000));
    Rational probe = iv.lo().abs() > iv.hi().abs() ? iv.hi() : iv.lo();
    long long e = 1;
    {
        Rational a = probe.abs();
        e = 0;
        if (a >= Rational(1)) {
            Rational t = a;
            while (t >= Rational(1)) { t /= 10; ++e; }
        } else {
            Rational t = a;
            while (t < Rational(1, 10)) { t *= 10; --e; }
        }
    }
    long long frac = static_cast<long long>(sig_digits) - e;
    if (frac < 0) {
        Int scale = ipow(10, static_cast<unsigned>(-frac));
        QuadExt scaled = x / QuadExt(Rational(scale));
        Int t = x.sign() >= 0 ? scaled.floor() : -((-scaled).floor());
        return (Rational(t) * Rational(scale)).str();
    }
    return decimal_truncate(x, static_cast<unsigned>(frac));
}

ExactOrInterval nth_root(const Rational& x, unsigned n, const Rational& precision) {
    if (x.sign() < 0) throw std::domain_error("nth_root: negative argument");
    if (n == 0) throw std::domain_error("nth_root: zeroth root");
    if (n == 1) return ExactOrInterval(x);
    Int pr = iroot_floor(x.num(), n), qr = iroot_floor(x.den(), n);
    if (ipow(pr, n) == x.num() && ipow(qr, n) == x.den())
        return ExactOrInterval(Rational(pr, qr));
    if (n == 2)
        return ExactOrInterval(QuadExt(Rational(0), Rational(1, x.den()), x.num() * x.den()));
    return ExactOrInterval(nth_root_interval(x, n, precision));
}

Rational default_precision() { return Rational(1, Int("1000000000000")); }

} // namespace sesh
