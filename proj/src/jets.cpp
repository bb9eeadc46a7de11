#include "sesh/jets.hpp"

#include <numeric>
#include <stdexcept>

namespace sesh {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

long long to_ll(const Int& v) { return static_cast<long long>(v); }

long long clamp_zero(const Int& v) { return v < 0 ? 0 : to_ll(v); }

// 1 / (binomial(n+r-i, r) * (n-i)^(n-i)): the (n-i)-th power of the i-th
// candidate in hacon_M, kept rational so candidates compare exactly.
Rational hacon_term_power(long long n, long long r, long long i) {
    long long k = n - i;
    Int kk(1);
    for (long long j = 0; j < k; ++j) kk *= Int(k);
    return Rational(Int(1), Int(binomial(Int(n + r - i), Int(r)) * kk));
}

// Certified-positive lower bound of M; throws unless positivity is provable.
Rational positive_lower_bound(const ExactOrInterval& M, const char* who) {
    if (M.exact()) {
        if (M.surd().sign() <= 0)
            throw std::domain_error(std::string(who) + ": M must be positive");
        // The caller divides by M exactly in this case; the bound is unused.
        return Rational(1);
    }
    const RationalInterval& iv = M.interval();
    if (iv.lo().sign() <= 0)
        throw std::domain_error(std::string(who) + ": M must be certified positive");
    return iv.lo();
}

} // namespace

ExactOrInterval hacon_M(long long n, long long r, const Rational& precision) {
    require(n >= 1, "hacon_M: dimension must be at least 1");
    require(r >= 1, "hacon_M: rank must be at least 1");

    // term_i = x_i^(1/k_i) with x_i = hacon_term_power(n, r, i), k_i = n - i.
    // Compare exactly via x_i^(L/k_i) vs x_j^(L/k_j), L = lcm(k_i, k_j); on
    // ties keep the smaller root degree so the result stays as exact as it
    // can be.
    long long best_k = n;
    Rational best_x = hacon_term_power(n, r, 0);
    for (long long i = 1; i < n; ++i) {
        long long k = n - i;
        Rational x = hacon_term_power(n, r, i);
        long long common = std::lcm(best_k, k);
        if (x.pow(common / k) <= best_x.pow(common / best_k)) {
            best_k = k;
            best_x = x;
        }
    }
    return nth_root(best_x, static_cast<unsigned>(best_k), precision);
}

long long hacon_lambda(long long n, const Rational& beta, const ExactOrInterval& M) {
    require(n >= 1, "hacon_lambda: dimension must be at least 1");
    require(beta.sign() > 0, "hacon_lambda: beta must be positive");
    Rational lo = positive_lower_bound(M, "hacon_lambda");
    Rational nb = Rational(n) * beta;
    if (M.exact()) {
        QuadExt q = QuadExt(nb) / M.surd();
        return to_ll(q.floor() + 1);
    }
    // Widen outward: dividing by the lower endpoint can only raise lambda.
    return to_ll(least_integer_greater(nb / lo));
}

Rational adjoint_jet_threshold(long long n, long long r, long long p, long long s) {
    require(n >= 1, "adjoint_jet_threshold: dimension must be at least 1");
    require(r >= 1, "adjoint_jet_threshold: rank must be at least 1");
    require(p >= 0, "adjoint_jet_threshold: symmetric power must be non-negative");
    require(s >= -1, "adjoint_jet_threshold: jet order must be at least -1");
    return Rational(n + s, p + r);
}

std::optional<long long> adjoint_min_p(long long n, long long r, long long s,
                                       const Rational& eps) {
    require(n >= 1, "adjoint_min_p: dimension must be at least 1");
    require(r >= 1, "adjoint_min_p: rank must be at least 1");
    require(s >= -1, "adjoint_min_p: jet order must be at least -1");
    if (eps.sign() <= 0) return std::nullopt;
    return clamp_zero(least_integer_greater(Rational(n + s) / eps - Rational(r)));
}

Rational ps_seshadri_threshold(long long k, long long n, long long s, long long m,
                               long long r) {
    require(k >= 1, "ps_seshadri_threshold: canonical multiple must be at least 1");
    require(n >= 1, "ps_seshadri_threshold: dimension must be at least 1");
    require(s >= -1, "ps_seshadri_threshold: jet order must be at least -1");
    require(m >= 0, "ps_seshadri_threshold: symmetric power must be non-negative");
    require(r >= 1, "ps_seshadri_threshold: rank must be at least 1");
    return Rational(k * (n + s), m + k * (r - 1) + 1);
}

std::optional<long long> ps_min_m(long long k, long long n, long long s, long long r,
                                  const Rational& eps) {
    require(k >= 1, "ps_min_m: canonical multiple must be at least 1");
    require(n >= 1, "ps_min_m: dimension must be at least 1");
    require(s >= -1, "ps_min_m: jet order must be at least -1");
    require(r >= 1, "ps_min_m: rank must be at least 1");
    if (eps.sign() <= 0) return std::nullopt;
    Rational bound = Rational(k * (n + s)) / eps - Rational(k * (r - 1) + 1);
    return clamp_zero(least_integer_greater(bound));
}

long long ps_lambda(long long k, const Rational& beta, const ExactOrInterval& M,
                    long long n, long long s, long long r) {
    require(k >= 1, "ps_lambda: canonical multiple must be at least 1");
    require(n >= 1, "ps_lambda: dimension must be at least 1");
    require(s >= -1, "ps_lambda: jet order must be at least -1");
    require(r >= 1, "ps_lambda: rank must be at least 1");
    require(beta.sign() > 0, "ps_lambda: beta must be positive");
    Rational lo = positive_lower_bound(M, "ps_lambda");
    Rational top = beta * Rational(n + s);
    if (M.exact()) {
        QuadExt bound = (QuadExt(top) / M.surd() - QuadExt(Rational(r - 1)))
                            * QuadExt(Rational(k))
                        - QuadExt(Rational(1));
        return clamp_zero(bound.floor() + 1);
    }
    Rational bound = Rational(k) * (top / lo - Rational(r - 1)) - Rational(1);
    return clamp_zero(least_integer_greater(bound));
}

long long line_bundle_ell(long long k, long long n, long long s, bool low_dim_ample) {
    require(k >= 1, "line_bundle_ell: canonical multiple must be at least 1");
    require(n >= 1, "line_bundle_ell: dimension must be at least 1");
    require(s >= -1, "line_bundle_ell: jet order must be at least -1");
    if (low_dim_ample && n > 3)
        throw std::domain_error("line_bundle_ell: ample variant needs dimension <= 3");
    long long dim = low_dim_ample ? n - 1 : n;
    long long ell = k * (dim * (n + s) + 1);
    return ell < 0 ? 0 : ell;
}

std::string hacon_generality() { return "very general points"; }

std::string ps_generality() { return "general points"; }

} // namespace sesh
