#include "fuchsforge/normal_forms.hpp"

#include <algorithm>
#include <functional>

#include "fuchsforge/roots.hpp"

namespace fuchsforge {

std::string kind_name(NormalFormKind k) {
    switch (k) {
        case NormalFormKind::Euler: return "euler";
        case NormalFormKind::PolyTruncation: return "poly_truncation";
        case NormalFormKind::MinimalAffine: return "minimal_affine";
        case NormalFormKind::MinimalReducible: return "minimal_reducible";
    }
    return "?";
}

std::pair<EulerPolynomial, EulerPolynomial> sylvester_solve(const EulerPolynomial& p,
                                                            const EulerPolynomial& q,
                                                            const EulerPolynomial& r) {
    require_same_field(p.field(), q.field());
    if (p.is_zero() || q.is_zero())
        throw PreconditionError("sylvester_solve needs nonzero p, q");
    if (!poly_gcd(p, q).is_one())
        throw PreconditionError("sylvester_solve needs gcd(p, q) = 1");
    if (r.degree() > p.degree() + q.degree() - 1)
        throw PreconditionError("sylvester_solve: deg r exceeds deg p + deg q - 1");
    EulerPolynomial a = poly_inv_mod(p, q);  // a*p = 1 (mod q)
    EulerPolynomial u = poly_divrem(a * r, q).remainder;
    EulerPolynomial v = poly_exact_div(r - p * u, q);
    return {u, v};
}

std::pair<OperatorSeries, OperatorSeries> solve_ULVM(const OperatorSeries& L,
                                                     const OperatorSeries& M,
                                                     const OperatorSeries& R) {
    if (!is_fuchsian(L) || !is_fuchsian(M))
        throw PreconditionError("solve_ULVM requires Fuchsian L, M");
    if (!gcd0(L, M).is_one())
        throw PreconditionError("solve_ULVM requires gcd0(L, M) = 1");
    if (!R.is_zero() && R.kmin() < 0)
        throw PreconditionError("solve_ULVM requires holomorphic R");
    int n = L.order(), m = M.order();
    if (R.order() > n + m - 1)
        throw PreconditionError("solve_ULVM requires order(R) <= order(L) + order(M) - 1");
    Field f = L.field();
    int T = std::min({L.trunc(), M.trunc(), R.trunc()});
    EulerPolynomial p0 = L.term(0), q0 = M.term(0);
    std::vector<EulerPolynomial> u, v;
    for (int k = 0; k <= T; ++k) {
        EulerPolynomial rhs = R.term(k);
        for (int a = 0; a < k; ++a) {
            int b = k - a;
            rhs -= u[static_cast<std::size_t>(a)].shift(b) * L.term(b);
            rhs -= v[static_cast<std::size_t>(a)].shift(b) * M.term(b);
        }
        auto [uk, vk] = sylvester_solve(p0, q0, rhs);
        u.push_back(std::move(uk));
        v.push_back(std::move(vk));
    }
    OperatorSeries U(f, 0, T, std::move(u));
    OperatorSeries V(f, 0, T, std::move(v));
    return {U, V};
}

std::pair<OperatorSeries, OperatorSeries> fuchsian_bezout(const OperatorSeries& L,
                                                          const OperatorSeries& H) {
    if (!is_fuchsian(L) || !is_fuchsian(H))
        throw PreconditionError("fuchsian_bezout requires Fuchsian operands");
    if (!gcd0(L, H).is_one())
        throw PreconditionError("fuchsian_bezout requires gcd0(L, H) = 1");
    int T = std::min(L.trunc(), H.trunc());
    OperatorSeries one = OperatorSeries::one(L.field(), T);
    OperatorSeries comm = H * L - L * H;  // zero Euler part, order <= n+m-1
    auto [u1, v1] = solve_ULVM(L, H, one - comm);
    return {H + u1, v1 - L};
}

namespace {

// Dense exact solve A x = b (A square, row-major); nullopt when singular.
std::optional<std::vector<FieldScalar>> dense_solve(std::vector<std::vector<FieldScalar>> A,
                                                    std::vector<FieldScalar> b) {
    std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        FieldScalar inv = A[col][col].inverse();
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].is_zero()) continue;
            FieldScalar factor = A[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) A[row][k] -= factor * A[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<FieldScalar> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(b[i] / A[i][i]);
    return x;
}

ResonanceStructure empty_resonance(const EulerPolynomial& p0) {
    return ResonanceStructure(p0);
}

ResonanceStructure analyze(const EulerPolynomial& p0) {
    if (p0.degree() < 1) return empty_resonance(p0);
    return resonance_orders(p0);
}

struct EngineOutput {
    std::vector<EulerPolynomial> q, h, k;
    std::vector<HomologicalStep> steps;
};

// One pass of the homological recursion with h0 = k0 = 1: for each order j
// the chooser fixes the normal-form coefficient q_j (it must leave the
// residual divisible by w_j), then (h_j, k_j) solve
//   p0(.+j) h_j - p0 k_j = v_j - q_j
// through the coprime core p0(.+j)/w_j, p0/w_j. The degree pin
// deg h_j <= n - nu_j - 1 makes the solution unique.
EngineOutput run_homological(const OperatorSeries& L, const ResonanceStructure& rs,
                             const std::function<EulerPolynomial(int, const EulerPolynomial&)>& choose_q) {
    Field f = L.field();
    int T = L.trunc();
    EulerPolynomial p0 = L.term(0);
    EngineOutput out;
    out.q.push_back(p0);
    out.h.push_back(EulerPolynomial::one(f));
    out.k.push_back(EulerPolynomial::one(f));
    for (int j = 1; j <= T; ++j) {
        EulerPolynomial v = EulerPolynomial::zero(f);
        for (int a = 0; a < j; ++a) {
            int b = j - a;
            v += out.k[static_cast<std::size_t>(a)].shift(b) * L.term(b);
        }
        for (int a = 1; a < j; ++a) {
            int b = j - a;
            v -= out.q[static_cast<std::size_t>(a)].shift(b) * out.h[static_cast<std::size_t>(b)];
        }
        EulerPolynomial qj = choose_q(j, v);
        EulerPolynomial d = v - qj;
        EulerPolynomial wj = rs.w_at(j);
        EulerPolynomial hj(f), kj(f);
        if (!d.is_zero()) {
            auto dd = poly_divrem(d, wj);
            if (!dd.remainder.is_zero())
                throw InternalError("homological residual not divisible by w_j");
            EulerPolynomial e = dd.quotient;
            EulerPolynomial P = poly_exact_div(p0.shift(j), wj);
            EulerPolynomial Q = poly_exact_div(p0, wj);
            EulerPolynomial A = poly_inv_mod(P, Q);
            hj = poly_divrem(A * e, Q).remainder;
            kj = poly_exact_div(P * hj - e, Q);
        }
        out.steps.push_back({j, v, hj, kj, qj});
        out.q.push_back(std::move(qj));
        out.h.push_back(std::move(hj));
        out.k.push_back(std::move(kj));
    }
    return out;
}

OperatorSeries series_from_terms(Field f, const std::vector<EulerPolynomial>& terms, int T) {
    return OperatorSeries(f, 0, T, terms);
}

// H0 = 1 + t h_1 + ... is Fuchsian only when every h_j is constant; otherwise
// apply the Fuchsianization H -> H0 + L, K -> K0 + M (M (H0+L) = (K0+M) L).
void repair_if_needed(const OperatorSeries& L, const OperatorSeries& M, OperatorSeries& H,
                      OperatorSeries& K) {
    if (is_fuchsian(H)) return;
    H = H + L;
    K = K + M;
}

NormalFormResult finish(NormalFormKind kind, const OperatorSeries& L, OperatorSeries M,
                        EngineOutput eng, ResonanceStructure rs, bool always_repair) {
    Field f = L.field();
    int T = L.trunc();
    OperatorSeries H = series_from_terms(f, eng.h, T);
    OperatorSeries K = series_from_terms(f, eng.k, T);
    if (always_repair) {
        H = H + L;
        K = K + M;
    } else {
        repair_if_needed(L, M, H, K);
    }
    NormalFormResult res(kind, L, M, ConjugacyPair{H, K, M}, T, std::move(rs));
    res.steps = std::move(eng.steps);
    return res;
}

void require_fuchsian(const OperatorSeries& L, const char* who) {
    if (!is_fuchsian(L)) throw PreconditionError(std::string(who) + " requires a Fuchsian operator");
}

void require_precision(const OperatorSeries& L, const ResonanceStructure& rs) {
    if (L.trunc() < rs.bound)
        throw PrecisionError("truncation " + std::to_string(L.trunc()) +
                             " is below the resonance bound N = " + std::to_string(rs.bound));
}

}  // namespace

NormalFormResult eulerize_nonresonant(const OperatorSeries& L) {
    require_fuchsian(L, "eulerize_nonresonant");
    Field f = L.field();
    EulerPolynomial p0 = L.term(0);
    ResonanceStructure rs = analyze(p0);
    if (rs.bound > 0)
        throw PreconditionError("eulerize_nonresonant: operator is resonant (w_j nontrivial)");
    auto eng = run_homological(L, rs, [&](int, const EulerPolynomial&) {
        return EulerPolynomial::zero(f);
    });
    OperatorSeries M = OperatorSeries::from_poly(p0, L.trunc());
    return finish(NormalFormKind::Euler, L, M, std::move(eng), std::move(rs), false);
}

NormalFormResult truncate_equiv(const OperatorSeries& L) {
    require_fuchsian(L, "truncate_equiv");
    ResonanceStructure rs = analyze(L.term(0));
    require_precision(L, rs);
    int N = rs.bound;
    auto eng = run_homological(L, rs, [&](int j, const EulerPolynomial& v) {
        return j <= N ? v : EulerPolynomial::zero(L.field());
    });
    OperatorSeries M(L.field(), 0, L.trunc(), eng.q);
    // sanity: through order N the defect is the Taylor coefficient itself
    for (int j = 1; j <= N; ++j)
        if (eng.q[static_cast<std::size_t>(j)] != L.term(j))
            throw InternalError("truncation defect mismatch");
    return finish(NormalFormKind::PolyTruncation, L, M, std::move(eng), std::move(rs), true);
}

NormalFormResult minimal_affine_nf(const OperatorSeries& L) {
    require_fuchsian(L, "minimal_affine_nf");
    Field f = L.field();
    ResonanceStructure rs = analyze(L.term(0));
    require_precision(L, rs);
    auto eng = run_homological(L, rs, [&](int j, const EulerPolynomial& v) {
        return poly_divrem(v, rs.w_at(j)).remainder;
    });
    OperatorSeries M(f, 0, L.trunc(), eng.q);
    NormalFormResult res =
        finish(NormalFormKind::MinimalAffine, L, M, std::move(eng), rs, false);
    // Separation-of-resonances report for simple split Euler parts: a root
    // in no resonance would make the kernel-complement normal form divisible
    // by (eps - lambda); record whether the minimal form is.
    if (L.term(0).degree() >= 1) {
        auto split = try_split(L.term(0));
        if (split) {
            bool simple = true;
            for (std::size_t a = 0; a < split->size() && simple; ++a)
                for (std::size_t b = a + 1; b < split->size(); ++b)
                    if ((*split)[a] == (*split)[b]) { simple = false; break; }
            if (simple) {
                std::vector<std::pair<FieldScalar, bool>> flags;
                for (const auto& lam : *split) {
                    bool in_resonance = false;
                    for (const auto& mu : *split) {
                        FieldScalar d = mu - lam;
                        if (!(mu == lam) && d.is_integer()) in_resonance = true;
                    }
                    if (in_resonance) continue;
                    OperatorSeries lin = OperatorSeries::from_poly(
                        EulerPolynomial(f, {-lam, FieldScalar::one(f)}), L.trunc());
                    flags.push_back({lam, div_rem(res.normal_form, lin).divisible()});
                }
                res.separated_roots = std::move(flags);
            }
        }
    }
    return res;
}

EulerPolynomial build_pij(const std::vector<FieldScalar>& roots, int i, int j) {
    int n = static_cast<int>(roots.size());
    if (i < 1 || i > n) throw PreconditionError("build_pij: index out of range");
    if (n == 0) throw PreconditionError("build_pij: empty root list");
    Field f = roots.front().field();
    FieldScalar shift(f, j);
    std::vector<FieldScalar> rs;
    for (int a = 1; a < i; ++a) rs.push_back(roots[static_cast<std::size_t>(a - 1)] - shift);
    for (int a = i + 1; a <= n; ++a) rs.push_back(roots[static_cast<std::size_t>(a - 1)]);
    return EulerPolynomial::from_roots(f, rs, FieldScalar::one(f));
}

namespace {

std::vector<FieldScalar> obtain_roots(const EulerPolynomial& p0,
                                      std::optional<std::vector<FieldScalar>> supplied,
                                      const char* who) {
    Field f = p0.field();
    std::vector<FieldScalar> roots;
    if (supplied) {
        roots = std::move(*supplied);
        if (static_cast<int>(roots.size()) != p0.degree())
            throw PreconditionError(std::string(who) + ": root list length mismatch");
        EulerPolynomial prod = EulerPolynomial::from_roots(f, roots, p0.leading());
        if (prod != p0)
            throw PreconditionError(std::string(who) + ": roots do not multiply out to p0");
    } else {
        auto split = try_split(p0);
        if (!split)
            throw PreconditionError(std::string(who) +
                                    ": Euler part does not split over the field "
                                    "(supply roots explicitly if they exist)");
        roots = std::move(*split);
    }
    return natural_order(std::move(roots));
}

OperatorSeries ordered_product(Field f, const std::vector<FieldScalar>& lambdas,
                               const std::vector<std::vector<FieldScalar>>& rcoef, int T) {
    OperatorSeries prod = OperatorSeries::one(f, T);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        OperatorSeries factor = OperatorSeries::from_poly(
            EulerPolynomial(f, {-lambdas[i], FieldScalar::one(f)}), T);
        for (int k = 1; k <= T; ++k) {
            const FieldScalar& c = rcoef[i][static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            factor = factor + OperatorSeries::graded_term(k, EulerPolynomial::constant(c), T);
        }
        prod = prod * factor;
    }
    return prod;
}

}  // namespace

NormalFormResult minimal_reducible_nf(const OperatorSeries& L,
                                      std::optional<std::vector<FieldScalar>> roots_in) {
    require_fuchsian(L, "minimal_reducible_nf");
    Field f = L.field();
    int T = L.trunc();
    int n = L.order();
    std::vector<FieldScalar> roots = obtain_roots(L.term(0), std::move(roots_in),
                                                  "minimal_reducible_nf");
    // normalize to a monic operator: products of monic first-order factors
    // have monic Euler part and deg p_k <= n-1 for k >= 1
    LaurentSeries a0 = L.coefficient_series(n);
    bool monic = a0 == LaurentSeries::one(f, L.trunc());
    OperatorSeries Lm = monic ? L : OperatorSeries::from_laurent(a0.inverse()) * L;
    ResonanceStructure rs = n >= 1 ? resonance_structure(Lm.term(0), roots)
                                   : empty_resonance(Lm.term(0));
    require_precision(Lm, rs);
    int N = rs.bound;

    std::vector<std::vector<FieldScalar>> rcoef(
        static_cast<std::size_t>(n),
        std::vector<FieldScalar>(static_cast<std::size_t>(T) + 1, FieldScalar::zero(f)));
    auto eng = run_homological(Lm, rs, [&](int j, const EulerPolynomial& v) {
        EulerPolynomial xj = ordered_product(f, roots, rcoef, T).term(j);
        if (j > N || !rs.res_orders.count(j)) return xj;
        const EulerPolynomial wj = rs.w.at(j);
        int nu = wj.degree();
        const std::vector<int>& idx = rs.index_sets.at(j);
        if (static_cast<int>(idx.size()) != nu)
            throw InternalError("resonance index set size differs from nu_j");
        std::vector<std::vector<FieldScalar>> A(
            static_cast<std::size_t>(nu),
            std::vector<FieldScalar>(static_cast<std::size_t>(nu), FieldScalar::zero(f)));
        std::vector<EulerPolynomial> pij;
        for (int c = 0; c < nu; ++c) {
            EulerPolynomial p = build_pij(roots, idx[static_cast<std::size_t>(c)], j);
            EulerPolynomial pm = poly_divrem(p, wj).remainder;
            for (int row = 0; row < nu; ++row)
                A[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = pm.coeff(row);
            pij.push_back(std::move(p));
        }
        EulerPolynomial target = poly_divrem(v - xj, wj).remainder;
        std::vector<FieldScalar> b;
        for (int row = 0; row < nu; ++row) b.push_back(target.coeff(row));
        auto sol = dense_solve(std::move(A), std::move(b));
        if (!sol)
            throw InternalError("p_ij family dependent modulo w_j");
        EulerPolynomial qj = xj;
        for (int c = 0; c < nu; ++c) {
            const FieldScalar& ci = (*sol)[static_cast<std::size_t>(c)];
            rcoef[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)] - 1)]
                 [static_cast<std::size_t>(j)] = ci;
            qj += pij[static_cast<std::size_t>(c)].scaled(ci);
        }
        return qj;
    });
    OperatorSeries M = ordered_product(f, roots, rcoef, T);
    if (M != OperatorSeries(f, 0, T, eng.q))
        throw InternalError("reducible product disagrees with homological targets");
    OperatorSeries H = series_from_terms(f, eng.h, T);
    OperatorSeries K = series_from_terms(f, eng.k, T);
    repair_if_needed(Lm, M, H, K);
    if (!monic) K = K * OperatorSeries::from_laurent(a0.inverse());
    NormalFormResult res(NormalFormKind::MinimalReducible, L, M, ConjugacyPair{H, K, M}, T, rs);
    res.steps = std::move(eng.steps);
    for (int i = 0; i < n; ++i)
        res.factors.push_back(
            {roots[static_cast<std::size_t>(i)],
             LaurentSeries(f, 1, T,
                           std::vector<FieldScalar>(
                               rcoef[static_cast<std::size_t>(i)].begin() + 1,
                               rcoef[static_cast<std::size_t>(i)].end()))});
    return res;
}

FactorizationResult formal_factorize(const OperatorSeries& L,
                                     std::optional<std::vector<FieldScalar>> roots_in) {
    require_fuchsian(L, "formal_factorize");
    Field f = L.field();
    int T = L.trunc();
    int n = L.order();
    std::vector<FieldScalar> roots = obtain_roots(L.term(0), std::move(roots_in),
                                                  "formal_factorize");
    LaurentSeries a0 = L.coefficient_series(n);
    OperatorSeries Lm = a0 == LaurentSeries::one(f, T) ? L
                                                       : OperatorSeries::from_laurent(a0.inverse()) * L;
    std::vector<std::vector<FieldScalar>> rcoef(
        static_cast<std::size_t>(n),
        std::vector<FieldScalar>(static_cast<std::size_t>(T) + 1, FieldScalar::zero(f)));
    for (int j = 1; j <= Lm.trunc(); ++j) {
        OperatorSeries prod = ordered_product(f, roots, rcoef, Lm.trunc());
        EulerPolynomial v = Lm.term(j) - prod.term(j);
        if (v.is_zero()) continue;
        if (n == 0) throw InternalError("nonzero defect for an order-zero operator");
        if (v.degree() > n - 1)
            throw InternalError("factorization defect exceeds degree n-1");
        std::vector<std::vector<FieldScalar>> A(
            static_cast<std::size_t>(n),
            std::vector<FieldScalar>(static_cast<std::size_t>(n), FieldScalar::zero(f)));
        for (int c = 0; c < n; ++c) {
            EulerPolynomial p = build_pij(roots, c + 1, j);
            for (int row = 0; row < n; ++row)
                A[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = p.coeff(row);
        }
        std::vector<FieldScalar> b;
        for (int row = 0; row < n; ++row) b.push_back(v.coeff(row));
        auto sol = dense_solve(std::move(A), std::move(b));
        if (!sol) throw InternalError("p_ij family linearly dependent");
        for (int c = 0; c < n; ++c)
            rcoef[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] =
                (*sol)[static_cast<std::size_t>(c)];
    }
    FactorizationResult out{a0, {}, Lm.trunc()};
    for (int i = 0; i < n; ++i)
        out.factors.push_back(
            {roots[static_cast<std::size_t>(i)],
             LaurentSeries(f, 1, Lm.trunc(),
                           std::vector<FieldScalar>(
                               rcoef[static_cast<std::size_t>(i)].begin() + 1,
                               rcoef[static_cast<std::size_t>(i)].end()))});
    return out;
}

ConjugacyReport verify_conjugacy(const OperatorSeries& L, const OperatorSeries& M,
                                 const OperatorSeries& H, const OperatorSeries& K,
                                 EquivalenceFlavor flavor) {
    ConjugacyReport rep;
    rep.flavor = flavor;
    OperatorSeries mh = M * H;
    OperatorSeries kl = K * L;
    int common = std::min(mh.trunc(), kl.trunc());
    OperatorSeries diff = mh - kl;
    rep.checked_through = common;
    rep.identity_ok = diff.is_zero();
    if (!rep.identity_ok) rep.first_defect_order = diff.kmin();
    if (flavor == EquivalenceFlavor::Weyl) {
        rep.shape_ok = true;
        if (!L.is_zero() && !H.is_zero()) {
            BezoutCertificate cert = gcd_bezout(L, H);
            rep.gcd_ok = cert.gcd.order() == 0;
        }
    } else {
        rep.shape_ok = is_fuchsian(H) && is_fuchsian(K);
        if (is_fuchsian(L) && is_fuchsian(H)) rep.gcd_ok = gcd0(L, H).is_one();
    }
    return rep;
}

}  // namespace fuchsforge
