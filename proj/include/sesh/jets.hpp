#pragma once

#include "sesh/rational.hpp"
#include "sesh/value.hpp"

#include <optional>
#include <string>

namespace sesh {

// Parameters shared by the jet-separation calculators: n = dimension,
// r = rank, k = canonical multiple, m/p = symmetric powers, s = jet order
// (s = -1 means the vacuous separation every sheaf satisfies), beta = a
// positive slope datum, eps = a Seshadri lower bound.
struct JetQuery {
    long long n = 1;
    long long r = 1;
    long long k = 1;
    long long m = 0;
    long long p = 0;
    long long s = 0;
    Rational beta = Rational(1);
    Rational eps = Rational(0);
};

// min over i in {0..n-1} of binomial(n+r-i, r)^(-1/(n-i)) / (n-i).
// The binding index is found by exact integer comparison; the returned value
// is exact whenever the binding root is rational or quadratic, otherwise an
// enclosure of width at most `precision`.
ExactOrInterval hacon_M(long long n, long long r,
                        const Rational& precision = default_precision());

// Smallest integer strictly greater than n*beta/M. Interval M is widened
// outward (its lower endpoint is used), so the result is always sufficient.
long long hacon_lambda(long long n, const Rational& beta, const ExactOrInterval& M);

// (n+s)/(p+r): a Seshadri lower bound above this separates s-jets for the
// adjoint twist by the p-th symmetric power.
Rational adjoint_jet_threshold(long long n, long long r, long long p, long long s);

// Least p >= 0 with adjoint_jet_threshold(n, r, p, s) < eps; nullopt when
// eps <= 0 (no symmetric power can help).
std::optional<long long> adjoint_min_p(long long n, long long r, long long s,
                                       const Rational& eps);

// k(n+s) / (m + k(r-1) + 1).
Rational ps_seshadri_threshold(long long k, long long n, long long s, long long m,
                               long long r);

// Least m >= 0 with ps_seshadri_threshold(k, n, s, m, r) < eps; nullopt when
// eps <= 0.
std::optional<long long> ps_min_m(long long k, long long n, long long s, long long r,
                                  const Rational& eps);

// Smallest integer strictly greater than k*(beta*(n+s)/M - (r-1)) - 1,
// clamped at 0; interval M is widened outward as in hacon_lambda.
long long ps_lambda(long long k, const Rational& beta, const ExactOrInterval& M,
                    long long n, long long s, long long r);

// k(n(n+s) + 1), or k((n-1)(n+s) + 1) when the low-dimensional ample variant
// applies (n <= 3 only).
long long line_bundle_ell(long long k, long long n, long long s,
                          bool low_dim_ample = false);

// Qualifiers attached to the two threshold families: where on the variety
// the conclusion holds.
std::string hacon_generality();  // "very general points"
std::string ps_generality();     // "general points"

} // namespace sesh
