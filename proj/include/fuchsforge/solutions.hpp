#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fuchsforge/operator_series.hpp"

namespace fuchsforge {

/// A multivalued germ t^lambda * series with a truncated holomorphic factor
/// (relative powers, valuation >= 0).
struct ExponentSeries {
    FieldScalar exponent;
    LaurentSeries series;
};

/// Applies a graded operator: t^k p_k(eps) maps t^(lambda+m) to
/// p_k(lambda+m) t^(lambda+m+k). Reliable through the smaller of the two
/// relative truncations.
ExponentSeries apply_operator(const OperatorSeries& L, const ExponentSeries& u);

struct FrobeniusSolution {
    FieldScalar exponent;
    LaurentSeries series;  // c_0 = 1
    int trunc;
};

/// Frobenius coefficients from p0(lambda+m) c_m = -sum p_k(lambda+m-k) c_(m-k).
/// Requires p0(lambda) = 0 and L Fuchsian. At a resonant order where the
/// right-hand side also vanishes the free coefficient is set to 0; otherwise
/// throws LogObstruction with the failing order.
FrobeniusSolution frobenius_solution(const OperatorSeries& L, const FieldScalar& lambda, int T);

/// Solutions of (eps - lambda + r(t)) u = rhs with r(0) = 0.
/// Homogeneous (no rhs): u = t^lambda exp(rho), rho = -integral of r dt/t.
/// Nonhomogeneous: variation of constants; throws LogObstruction when the
/// quadrature demands a dt/t term.
ExponentSeries first_order_solve(const FieldScalar& lambda, const LaurentSeries& r,
                                 const std::optional<ExponentSeries>& rhs, int T);

struct ChainSolution {
    int start_index;  // 1-based factor whose homogeneous solution seeds the thread
    ExponentSeries solution;
};
struct ChainObstruction {
    int start_index;
    int at_factor;
    int order;
};
using ChainEntry = std::variant<ChainSolution, ChainObstruction>;

/// Solves L_1 u_1 = 0, L_2 u_2 = u_1, ... right to left for every thread of
/// a first-order factorization, returning the log-free members of a solution
/// basis and the obstruction positions otherwise.
std::vector<ChainEntry> chain_solve(
    const std::vector<std::pair<FieldScalar, LaurentSeries>>& factors, int T);

enum class SingularityClass { Holomorphic, Meromorphic, RamifiedOrLog };
std::string singularity_name(SingularityClass c);

/// Apparent-singularity test: holomorphic iff the indicial roots are pairwise
/// distinct nonnegative integers and no Frobenius recursion hits a log
/// obstruction (checked through max(T, N), conclusive since obstructions can
/// only occur at orders <= N); meromorphic with signs allowed; otherwise
/// ramified_or_log.
SingularityClass classify_apparent(const OperatorSeries& L, int T);

struct CompanionSystem {
    enum class Basis { DForm, EulerForm };
    Basis basis;
    int n;
    std::vector<LaurentSeries> entries;  // row-major n x n
    const LaurentSeries& at(int row, int col) const {
        return entries[static_cast<std::size_t>(row * n + col)];
    }
};

/// First-order companion system of L u = 0: subdiagonal identity structure
/// with last row -lead^{-1} (a_n, ..., a_1). The Euler basis requires a
/// Fuchsian operator and yields holomorphic entries.
CompanionSystem companion(const OperatorSeries& L, CompanionSystem::Basis basis);

}  // namespace fuchsforge
