#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fuchsforge/operator_series.hpp"

namespace fuchsforge {

/// kmin = 0 and deg p_0 = order(L): holomorphic coefficients with an
/// invertible leading coefficient at t = 0.
bool is_fuchsian(const OperatorSeries& L);

struct PreFuchsianCheck {
    bool ok = false;
    int shift = 0;  // t^shift * L is Fuchsian when ok
};
PreFuchsianCheck is_pre_fuchsian(const OperatorSeries& L);

/// gcd of the Eulerizations (monic); both operands must be Fuchsian.
EulerPolynomial gcd0(const OperatorSeries& L, const OperatorSeries& H);

/// Resonance data of an indicial polynomial p0. The root-free part
/// (res_orders, w_j, nu_j, N) never needs root-finding; the root-full part
/// (Lambda, Lambda_j, I_j, J) is present when an ordered root list is known.
struct ResonanceStructure {
    EulerPolynomial p0;
    std::set<int> res_orders;              // j with deg w_j >= 1
    std::map<int, EulerPolynomial> w;      // j -> gcd(p0, p0(.+j)), monic
    std::map<int, int> nu;                 // j -> deg w_j
    int bound = 0;                         // N = max resonance order, 0 if none

    std::optional<std::vector<FieldScalar>> roots;      // natural order
    std::map<int, std::vector<FieldScalar>> lambda_j;   // multiset, sorted
    std::map<int, std::vector<int>> index_sets;         // I_j, 1-based, ascending
    std::map<int, std::set<int>> j_sets;                // root position i -> J(lambda_i)

    ResonanceStructure(EulerPolynomial p) : p0(std::move(p)) {}
    EulerPolynomial w_at(int j) const;  // w_j for any j >= 1 (constant 1 off res_orders)
};

/// Root-free resonance detection: candidate orders are the positive integer
/// roots of Res_eps(p0(eps), p0(eps+j)) as a polynomial in j, each verified
/// by a polynomial gcd. Works over Q and Q(i) without factoring p0.
ResonanceStructure resonance_orders(const EulerPolynomial& p0);

/// Natural order: integer-difference classes sorted internally in ascending
/// order, classes arranged by the lexicographic key (re, im) of their least
/// element; multiple roots end up in consecutive positions.
std::vector<FieldScalar> natural_order(std::vector<FieldScalar> roots);

/// Full resonance structure from an ordered root list. The list must
/// multiply out to p0 (up to the leading coefficient) and be noncreasing
/// within each integer-difference class; I_j picks the last instances of a
/// multiple root.
ResonanceStructure resonance_structure(const EulerPolynomial& p0,
                                       const std::vector<FieldScalar>& ordered_roots);

}  // namespace fuchsforge
