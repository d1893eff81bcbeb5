#pragma once

#include <optional>
#include <vector>

#include "fuchsforge/analysis.hpp"
#include "fuchsforge/euclidean.hpp"

namespace fuchsforge {

/// u p + v q = r with deg u <= deg q - 1, deg v <= deg p - 1; unique when
/// gcd(p, q) = 1 and deg r <= deg p + deg q - 1.
std::pair<EulerPolynomial, EulerPolynomial> sylvester_solve(const EulerPolynomial& p,
                                                            const EulerPolynomial& q,
                                                            const EulerPolynomial& r);

/// U L + V M = R, solved order by order in t (one Sylvester solve per order).
/// Requires L, M Fuchsian with gcd0(L, M) = 1, R holomorphic (kmin >= 0) of
/// order <= ord L + ord M - 1. U, V come out holomorphic with
/// ord U <= ord M - 1, ord V <= ord L - 1.
std::pair<OperatorSeries, OperatorSeries> solve_ULVM(const OperatorSeries& L,
                                                     const OperatorSeries& M,
                                                     const OperatorSeries& R);

/// Fuchsian Bezout pair: U L + V H = 1 with U, V Fuchsian and
/// gcd0(V, L) = 1, via U = H + U', V = -L + V' and U'L + V'H = 1 - [H, L].
std::pair<OperatorSeries, OperatorSeries> fuchsian_bezout(const OperatorSeries& L,
                                                          const OperatorSeries& H);

/// One order of the homological recursion: the polynomials solving
/// p0(.+j) h_j - p0 k_j + q_j h_0 = v_j (with h_0 = 1).
struct HomologicalStep {
    int j;
    EulerPolynomial v;  // defect from lower orders
    EulerPolynomial h;
    EulerPolynomial k;
    EulerPolynomial q;  // normal-form correction (zero when absorbed)
};

enum class NormalFormKind {
    Euler,
    PolyTruncation,
    MinimalAffine,
    MinimalReducible,
};

std::string kind_name(NormalFormKind k);

struct NormalFormResult {
    NormalFormKind kind;
    OperatorSeries source;
    OperatorSeries normal_form;
    /// Ordered first-order factors (lambda_i, r_i) when kind is
    /// MinimalReducible; the normal form is their product.
    std::vector<std::pair<FieldScalar, LaurentSeries>> factors;
    ConjugacyPair conj;  // conj.target == normal_form
    int achieved_trunc;
    ResonanceStructure resonance;
    std::vector<HomologicalStep> steps;
    /// For MinimalAffine with simple split p0: per non-resonating root,
    /// whether the normal form is right-divisible by (eps - lambda).
    std::optional<std::vector<std::pair<FieldScalar, bool>>> separated_roots;

    NormalFormResult(NormalFormKind k, OperatorSeries src, OperatorSeries nf, ConjugacyPair c,
                     int at, ResonanceStructure rs)
        : kind(k), source(std::move(src)), normal_form(std::move(nf)), conj(std::move(c)),
          achieved_trunc(at), resonance(std::move(rs)) {}
};

/// Nonresonant case: conjugates L to its Euler part (h_j from the triangular
/// recursion). Rejects resonant input.
NormalFormResult eulerize_nonresonant(const OperatorSeries& L);

/// Truncation at the resonance bound N; the conjugacy is H = H0 + L,
/// K = K0 + M with H0 = 1 + sum_{j>N} t^j h_j.
NormalFormResult truncate_equiv(const OperatorSeries& L);

/// Minimal affine normal form p0 + sum t^j q_j with deg q_j <= nu_j - 1 and
/// q_j = 0 off the resonance orders (defect reduced mod w_j).
NormalFormResult minimal_affine_nf(const OperatorSeries& L);

/// p_{ij}: the order-j coefficient of the elementary product with t^j
/// inserted in factor i (1-based) of the ordered factorization of p0.
EulerPolynomial build_pij(const std::vector<FieldScalar>& roots, int i, int j);

/// Completely reducible normal form (eps-lambda_1+r_1)...(eps-lambda_n+r_n)
/// with supp r_i inside J(lambda_i) and deg r_i <= N. Needs a split Euler
/// part; roots may be supplied (validated) or are extracted exactly.
NormalFormResult minimal_reducible_nf(const OperatorSeries& L,
                                      std::optional<std::vector<FieldScalar>> roots = std::nullopt);

/// Full formal factorization unit * (eps-lambda_1+r1)...(eps-lambda_n+rn)
/// with series tails; the unit is the leading eps-coefficient of L (the
/// quotient chain of the factorization ends at an order-zero invertible
/// germ, so non-monic operators factor only up to this left unit).
struct FactorizationResult {
    LaurentSeries unit;
    std::vector<std::pair<FieldScalar, LaurentSeries>> factors;
    int achieved_trunc;
};
FactorizationResult formal_factorize(const OperatorSeries& L,
                                     std::optional<std::vector<FieldScalar>> roots = std::nullopt);

enum class EquivalenceFlavor { Weyl, Fuchsian };

struct ConjugacyReport {
    bool identity_ok = false;
    std::optional<int> first_defect_order;
    int checked_through = 0;
    bool gcd_ok = false;    // Weyl: gcd(L,H)=1; Fuchsian: gcd0=1
    bool shape_ok = false;  // Fuchsian flavor: H and K Fuchsian
    EquivalenceFlavor flavor = EquivalenceFlavor::Weyl;
    bool pass() const { return identity_ok && gcd_ok && shape_ok; }
};

/// Checks M H = K L term by term to the common truncation plus the
/// flavor-specific nondegeneracy conditions.
ConjugacyReport verify_conjugacy(const OperatorSeries& L, const OperatorSeries& M,
                                 const OperatorSeries& H, const OperatorSeries& K,
                                 EquivalenceFlavor flavor);

}  // namespace fuchsforge
