#include "fuchsforge/solutions.hpp"

#include <algorithm>

#include "fuchsforge/analysis.hpp"
#include "fuchsforge/roots.hpp"

namespace fuchsforge {

ExponentSeries apply_operator(const OperatorSeries& L, const ExponentSeries& u) {
    Field f = L.field();
    require_same_field(f, u.exponent.field());
    if (u.series.is_zero() || L.is_zero()) {
        int t = std::min(L.trunc(), u.series.trunc());
        return {u.exponent, LaurentSeries(f, t)};
    }
    if (u.series.valuation() < 0)
        throw PreconditionError("apply_operator expects a relative series with kmin >= 0");
    if (L.kmin() < 0)
        throw PreconditionError("apply_operator expects a holomorphic operator");
    int T = std::min(L.trunc(), u.series.trunc());
    std::vector<FieldScalar> out(static_cast<std::size_t>(T) + 1, FieldScalar::zero(f));
    for (int s = 0; s <= T; ++s) {
        for (int k = std::max(0, s - u.series.trunc()); k <= std::min(s, L.trunc()); ++k) {
            int m = s - k;
            FieldScalar cm = u.series.coeff(m);
            if (cm.is_zero()) continue;
            EulerPolynomial pk = L.term(k);
            if (pk.is_zero()) continue;
            out[static_cast<std::size_t>(s)] +=
                pk.evaluate(u.exponent + FieldScalar(f, m)) * cm;
        }
    }
    return {u.exponent, LaurentSeries(f, 0, T, std::move(out))};
}

FrobeniusSolution frobenius_solution(const OperatorSeries& L, const FieldScalar& lambda, int T) {
    if (!is_fuchsian(L)) throw PreconditionError("frobenius_solution requires a Fuchsian operator");
    Field f = L.field();
    EulerPolynomial p0 = L.term(0);
    if (!p0.evaluate(lambda).is_zero())
        throw PreconditionError("lambda is not a root of the indicial polynomial");
    int Teff = std::min(T, L.trunc());
    std::vector<FieldScalar> c(static_cast<std::size_t>(Teff) + 1, FieldScalar::zero(f));
    c[0] = FieldScalar::one(f);
    for (int m = 1; m <= Teff; ++m) {
        FieldScalar rhs = FieldScalar::zero(f);
        for (int k = 1; k <= m; ++k) {
            EulerPolynomial pk = L.term(k);
            if (pk.is_zero()) continue;
            rhs -= pk.evaluate(lambda + FieldScalar(f, m - k)) * c[static_cast<std::size_t>(m - k)];
        }
        FieldScalar lead = p0.evaluate(lambda + FieldScalar(f, m));
        if (lead.is_zero()) {
            if (!rhs.is_zero())
                throw LogObstruction("Frobenius recursion requires a logarithm", m);
            // resonant order with vanishing obstruction: pick the canonical
            // representative with free coefficient zero
            c[static_cast<std::size_t>(m)] = FieldScalar::zero(f);
        } else {
            c[static_cast<std::size_t>(m)] = rhs / lead;
        }
    }
    return {lambda, LaurentSeries(f, 0, Teff, std::move(c)), Teff};
}

ExponentSeries first_order_solve(const FieldScalar& lambda, const LaurentSeries& r,
                                 const std::optional<ExponentSeries>& rhs, int T) {
    Field f = lambda.field();
    if (!r.is_zero() && r.valuation() < 1)
        throw PreconditionError("first_order_solve requires r(0) = 0");
    int Teff = std::min(T, r.trunc());
    // rho = -integral r dt/t, termwise: rho_k = -r_k / k (no k = 0 term)
    std::vector<FieldScalar> rho(static_cast<std::size_t>(std::max(Teff, 0)) + 1,
                                 FieldScalar::zero(f));
    for (int k = 1; k <= Teff; ++k) {
        if (k >= r.valuation() && !r.is_zero())
            rho[static_cast<std::size_t>(k)] = -(r.coeff(k) / FieldScalar(f, k));
    }
    LaurentSeries rho_s(f, 0, Teff, rho);
    LaurentSeries grow = rho_s.exp();
    if (!rhs) return {lambda, grow};

    // variation of constants: u = t^lambda e^rho phi with
    // eps phi = t^(mu - lambda) e^(-rho) g
    int Tq = std::min(Teff, rhs->series.trunc());
    LaurentSeries decay = (-rho_s).exp();
    LaurentSeries forcing = decay * rhs->series;  // relative powers, val >= 0
    FieldScalar offset = rhs->exponent - lambda;
    std::vector<FieldScalar> phi(static_cast<std::size_t>(std::max(Tq, 0)) + 1,
                                 FieldScalar::zero(f));
    for (int s = 0; s <= Tq; ++s) {
        FieldScalar d = s <= forcing.trunc() ? forcing.coeff(s) : FieldScalar::zero(f);
        FieldScalar exp_shift = offset + FieldScalar(f, s);
        if (exp_shift.is_zero()) {
            if (!d.is_zero())
                throw LogObstruction("quadrature demands a dt/t term", s);
            continue;
        }
        phi[static_cast<std::size_t>(s)] = d / exp_shift;
    }
    LaurentSeries phi_s(f, 0, Tq, std::move(phi));
    return {rhs->exponent, grow.truncated(Tq) * phi_s};
}

std::vector<ChainEntry> chain_solve(
    const std::vector<std::pair<FieldScalar, LaurentSeries>>& factors, int T) {
    std::vector<ChainEntry> out;
    int n = static_cast<int>(factors.size());
    for (int start = 1; start <= n; ++start) {
        try {
            ExponentSeries u = first_order_solve(factors[static_cast<std::size_t>(start - 1)].first,
                                                 factors[static_cast<std::size_t>(start - 1)].second,
                                                 std::nullopt, T);
            int at = start;
            try {
                for (int p = start + 1; p <= n; ++p) {
                    at = p;
                    u = first_order_solve(factors[static_cast<std::size_t>(p - 1)].first,
                                          factors[static_cast<std::size_t>(p - 1)].second, u, T);
                }
                out.push_back(ChainSolution{start, std::move(u)});
            } catch (const LogObstruction& e) {
                out.push_back(ChainObstruction{start, at, e.order});
            }
        } catch (const LogObstruction& e) {
            out.push_back(ChainObstruction{start, start, e.order});
        }
    }
    return out;
}

std::string singularity_name(SingularityClass c) {
    switch (c) {
        case SingularityClass::Holomorphic: return "holomorphic";
        case SingularityClass::Meromorphic: return "meromorphic";
        case SingularityClass::RamifiedOrLog: return "ramified_or_log";
    }
    return "?";
}

SingularityClass classify_apparent(const OperatorSeries& L, int T) {
    if (!is_fuchsian(L)) throw PreconditionError("classify_apparent requires a Fuchsian operator");
    EulerPolynomial p0 = L.term(0);
    int n = p0.degree();
    if (n == 0) return SingularityClass::Holomorphic;
    std::map<long, int> iroots = integer_roots(p0);
    int total = 0;
    bool distinct = true, nonneg = true;
    for (const auto& [r, m] : iroots) {
        total += m;
        if (m > 1) distinct = false;
        if (r < 0) nonneg = false;
    }
    if (total != n || !distinct) return SingularityClass::RamifiedOrLog;
    // a log obstruction can only appear at orders <= N, so checking through
    // max(T, N) is conclusive
    int N = resonance_orders(p0).bound;
    int Teff = std::min(std::max(T, N), L.trunc());
    for (const auto& [r, m] : iroots) {
        (void)m;
        try {
            frobenius_solution(L, FieldScalar(L.field(), r), Teff);
        } catch (const LogObstruction&) {
            return SingularityClass::RamifiedOrLog;
        }
    }
    return nonneg ? SingularityClass::Holomorphic : SingularityClass::Meromorphic;
}

CompanionSystem companion(const OperatorSeries& L, CompanionSystem::Basis basis) {
    Field f = L.field();
    int n = L.order();
    if (n < 1) throw PreconditionError("companion system needs order >= 1");
    std::vector<LaurentSeries> coeffs;
    if (basis == CompanionSystem::Basis::EulerForm) {
        if (!is_fuchsian(L))
            throw PreconditionError("Euler companion form requires a Fuchsian operator");
        coeffs = L.collected();
    } else {
        coeffs = to_d_form(L);
    }
    LaurentSeries inv = coeffs[0].inverse();
    int T = inv.trunc();
    for (const auto& c : coeffs) T = std::min(T, c.trunc());
    CompanionSystem sys{basis, n, {}};
    sys.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       LaurentSeries(f, T));
    for (int row = 0; row + 1 < n; ++row)
        sys.entries[static_cast<std::size_t>(row * n + row + 1)] = LaurentSeries::one(f, T);
    for (int col = 0; col < n; ++col) {
        const LaurentSeries& a = coeffs[static_cast<std::size_t>(n - col)];
        sys.entries[static_cast<std::size_t>((n - 1) * n + col)] = -(inv * a).truncated(T);
    }
    return sys;
}

}  // namespace fuchsforge
