#pragma once

#include "fuchsforge/operator_series.hpp"

namespace fuchsforge {

/// L = quotient * M + remainder modulo t^(T+1), order(remainder) < order(M).
struct DivisionResult {
    OperatorSeries quotient;
    OperatorSeries remainder;
    bool divisible() const { return remainder.is_zero(); }
};

/// U*L + V*M = gcd with order(U) < order(M), order(V) < order(L); the gcd is
/// normalized so its leading eps-coefficient series is the constant 1.
struct BezoutCertificate {
    OperatorSeries gcd;
    OperatorSeries U;
    OperatorSeries V;
};

/// target * H = K * source, checked to truncation.
struct ConjugacyPair {
    OperatorSeries H;
    OperatorSeries K;
    OperatorSeries target;
};

/// Ore right division. The leading eps-coefficient of M must be invertible
/// as a Laurent series to the required precision.
DivisionResult div_rem(const OperatorSeries& L, const OperatorSeries& M);

/// Extended noncommutative Euclid.
BezoutCertificate gcd_bezout(const OperatorSeries& L, const OperatorSeries& M);

/// Least common multiple: the smallest-order operator right-divisible by both,
/// found as a linear dependence of the remainders of eps^k M modulo L over the
/// Laurent coefficient field; normalized like the gcd.
OperatorSeries lcm(const OperatorSeries& L, const OperatorSeries& M);

/// Weyl conjugation M = lcm(L,H) H^{-1}: returns (M, K) with M H = K L.
/// Requires gcd(L, H) = 1.
ConjugacyPair conjugate_by(const OperatorSeries& L, const OperatorSeries& H);

/// Inversion of a conjugacy: given M H = K L with gcd(L, H) = 1, produces
/// (V, W) with L V = W M and gcd(V, M) = 1, via U L + V H = 1.
std::pair<OperatorSeries, OperatorSeries> invert_conjugacy(const OperatorSeries& L,
                                                           const OperatorSeries& M,
                                                           const OperatorSeries& H);

/// Division variant that keeps quotient and remainder Fuchsian:
/// Q' = Q - 1, R' = M + R. Requires L, M Fuchsian with order(L) > order(M).
DivisionResult relaxed_fuchsian_div(const OperatorSeries& L, const OperatorSeries& M);

}  // namespace fuchsforge
