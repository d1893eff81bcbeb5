#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fuchsforge/euler_poly.hpp"

namespace fuchsforge {

/// All rational-integer roots of p with multiplicities, found exactly via the
/// rational root theorem (divisor candidates of the constant term).
/// Complete over Q and Q(i); throws PreconditionError if the divisor
/// enumeration budget is exceeded (pass roots explicitly in that case).
std::map<long, int> integer_roots(const EulerPolynomial& p);

/// All roots of p lying in its coefficient field, with multiplicities.
/// Complete over Q (rational root theorem) and over Q(i) (Gaussian-integer
/// divisor candidates); budget-capped like integer_roots.
std::vector<std::pair<FieldScalar, int>> field_roots(const EulerPolynomial& p);

/// Full splitting of p into linear factors over its field, if one exists:
/// returns the multiset of roots (unordered) or nullopt when p does not
/// split.
std::optional<std::vector<FieldScalar>> try_split(const EulerPolynomial& p);

}  // namespace fuchsforge
