#pragma once

// Shared helpers for the test suites: parse shortcuts, seeded random
// generators, and an independent dense linear-algebra oracle for the
// homological steps (kept free of the structured solver's code path).

#include <random>
#include <vector>

#include "fuchsforge/analysis.hpp"
#include "fuchsforge/dsl.hpp"
#include "fuchsforge/euclidean.hpp"
#include "fuchsforge/normal_forms.hpp"
#include "fuchsforge/solutions.hpp"

namespace tsup {

using namespace fuchsforge;

inline OperatorSeries op(const std::string& text, int trunc = 12, Field f = Field::Q) {
    return parse_operator(text, trunc, f);
}

inline EulerPolynomial poly(const std::string& text, Field f = Field::Q) {
    OperatorSeries L = parse_operator(text, 4, f);
    if (!L.is_zero() && (L.kmin() < 0 || L.order() < 0))
        throw InternalError("not a polynomial expression");
    return L.is_zero() ? EulerPolynomial::zero(f) : L.term(0);
}

inline FieldScalar q(long num, long den = 1, Field f = Field::Q) {
    return FieldScalar(f, num, den);
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen);
    }

    FieldScalar scalar(Field f = Field::Q) {
        int num = uniform(-4, 4);
        int den = uniform(1, 3);
        if (f == Field::Qi && uniform(0, 2) == 0)
            return FieldScalar(f, mpq_class(num, den), mpq_class(uniform(-2, 2)));
        FieldScalar s(f, num, den);
        return s;
    }

    FieldScalar nonzero_scalar(Field f = Field::Q) {
        for (;;) {
            FieldScalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    EulerPolynomial poly_deg_at_most(int deg, Field f = Field::Q) {
        std::vector<FieldScalar> c;
        for (int i = 0; i <= deg; ++i)
            c.push_back(uniform(0, 2) == 0 ? FieldScalar::zero(f) : scalar(f));
        return EulerPolynomial(f, std::move(c));
    }

    EulerPolynomial poly_deg_exact(int deg, Field f = Field::Q) {
        EulerPolynomial p = poly_deg_at_most(deg - 1 >= 0 ? deg - 1 : 0, f);
        if (deg == 0) return EulerPolynomial::constant(nonzero_scalar(f));
        return p + EulerPolynomial::monomial(nonzero_scalar(f), deg);
    }

    /// Random operator with t-support in [kmin, support_hi] tracked through
    /// trunc. Keeping the support away from trunc makes order additivity
    /// exact (the product's leading term stays inside the tracked window).
    OperatorSeries operator_series(int max_order, int trunc, Field f = Field::Q,
                                   int kmin_lo = 0, int support_hi = -1) {
        if (support_hi < 0) support_hi = trunc;
        int kmin = uniform(kmin_lo, 0);
        std::vector<EulerPolynomial> terms;
        for (int k = kmin; k <= trunc; ++k)
            terms.push_back(k <= support_hi && uniform(0, 2) != 0
                                ? poly_deg_at_most(max_order, f)
                                : EulerPolynomial::zero(f));
        OperatorSeries L(f, kmin, trunc, std::move(terms));
        if (L.is_zero())
            return OperatorSeries::from_poly(poly_deg_exact(max_order, f), trunc);
        return L;
    }

    /// Operator whose bottom term realizes the order (pre-Fuchsian shape up
    /// to a t-shift); division chains on these stay within precision while
    /// intermediate remainders still drop out of the shape.
    OperatorSeries ore_operator(int order, int trunc, Field f = Field::Q) {
        int kmin = uniform(-1, 0);
        std::vector<EulerPolynomial> terms;
        terms.push_back(poly_deg_exact(order, f));
        for (int k = kmin + 1; k <= trunc; ++k)
            terms.push_back(uniform(0, 1) == 0 ? EulerPolynomial::zero(f)
                                               : poly_deg_at_most(order, f));
        return OperatorSeries(f, kmin, trunc, std::move(terms));
    }

    OperatorSeries fuchsian(int order, int trunc, Field f = Field::Q) {
        std::vector<EulerPolynomial> terms;
        terms.push_back(poly_deg_exact(order, f));
        for (int k = 1; k <= trunc; ++k)
            terms.push_back(uniform(0, 1) == 0 ? EulerPolynomial::zero(f)
                                               : poly_deg_at_most(order, f));
        return OperatorSeries(f, 0, trunc, std::move(terms));
    }

    OperatorSeries nonresonant_fuchsian(int order, int trunc, Field f = Field::Q) {
        for (;;) {
            OperatorSeries L = fuchsian(order, trunc, f);
            if (resonance_orders(L.term(0)).bound == 0) return L;
        }
    }

    /// Resonant Fuchsian operator whose Euler part splits with integer
    /// roots in [0, root_hi].
    OperatorSeries resonant_split_fuchsian(int order, int trunc, int root_hi,
                                           std::vector<FieldScalar>* roots_out = nullptr,
                                           Field f = Field::Q) {
        for (;;) {
            std::vector<FieldScalar> roots;
            for (int i = 0; i < order; ++i) roots.push_back(q(uniform(0, root_hi), 1, f));
            EulerPolynomial p0 = EulerPolynomial::from_roots(f, roots, FieldScalar::one(f));
            bool resonant = false;
            for (std::size_t a = 0; a < roots.size() && !resonant; ++a)
                for (std::size_t b = 0; b < roots.size(); ++b) {
                    FieldScalar d = roots[a] - roots[b];
                    if (d.is_integer() && d.to_integer() >= 1) resonant = true;
                }
            if (!resonant) continue;
            std::vector<EulerPolynomial> terms{p0};
            for (int k = 1; k <= trunc; ++k)
                terms.push_back(uniform(0, 1) == 0 ? EulerPolynomial::zero(f)
                                                   : poly_deg_at_most(order, f));
            if (roots_out) *roots_out = std::move(roots);
            return OperatorSeries(f, 0, trunc, std::move(terms));
        }
    }

    OperatorSeries split_fuchsian(int order, int trunc, int root_hi,
                                  Field f = Field::Q) {
        std::vector<FieldScalar> roots;
        for (int i = 0; i < order; ++i) roots.push_back(q(uniform(0, root_hi), 1, f));
        EulerPolynomial p0 = EulerPolynomial::from_roots(f, roots, FieldScalar::one(f));
        std::vector<EulerPolynomial> terms{p0};
        for (int k = 1; k <= trunc; ++k)
            terms.push_back(uniform(0, 1) == 0 ? EulerPolynomial::zero(f)
                                               : poly_deg_at_most(order, f));
        return OperatorSeries(f, 0, trunc, std::move(terms));
    }
};

/// Independent dense solver for one homological order: unknowns are the
/// coefficients of h (deg <= n - nu - 1), k (deg <= n - 1) and the q-part
/// q = q_base + sum c_b q_basis[b]; the equation p0(.+j) h - p0 k + q = v is
/// matched coefficient-by-coefficient up to degree 2n - 1 and solved by
/// Gaussian elimination. Throws on a singular or inconsistent system.
struct OracleStep {
    EulerPolynomial h, k, q;
};

inline OracleStep dense_homological_oracle(const EulerPolynomial& p0, int j,
                                           const EulerPolynomial& v,
                                           const EulerPolynomial& q_base,
                                           const std::vector<EulerPolynomial>& q_basis) {
    Field f = p0.field();
    int n = p0.degree();
    EulerPolynomial p0j = p0.shift(j);
    int nu = poly_gcd(p0, p0j).degree();
    int nh = n - nu, nk = n, nq = static_cast<int>(q_basis.size());
    int cols = nh + nk + nq;
    int rows = 2 * n;
    if (cols != rows) throw InternalError("oracle system is not square");
    std::vector<std::vector<FieldScalar>> A(
        static_cast<std::size_t>(rows),
        std::vector<FieldScalar>(static_cast<std::size_t>(cols), FieldScalar::zero(f)));
    auto put = [&](int col, const EulerPolynomial& colpoly) {
        for (int r = 0; r < rows; ++r) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = colpoly.coeff(r);
    };
    int col = 0;
    for (int a = 0; a < nh; ++a)
        put(col++, p0j * EulerPolynomial::monomial(FieldScalar::one(f), a));
    for (int a = 0; a < nk; ++a)
        put(col++, -(p0 * EulerPolynomial::monomial(FieldScalar::one(f), a)));
    for (const auto& b : q_basis) put(col++, b);
    EulerPolynomial rhs_poly = v - q_base;
    std::vector<FieldScalar> b(static_cast<std::size_t>(rows), FieldScalar::zero(f));
    if (rhs_poly.degree() >= rows) throw InternalError("oracle rhs degree out of range");
    for (int r = 0; r < rows; ++r) b[static_cast<std::size_t>(r)] = rhs_poly.coeff(r);

    // plain Gauss-Jordan
    for (int c = 0; c < cols; ++c) {
        int piv = -1;
        for (int r = c; r < rows; ++r)
            if (!A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw InternalError("oracle system singular");
        std::swap(A[static_cast<std::size_t>(piv)], A[static_cast<std::size_t>(c)]);
        std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(c)]);
        FieldScalar inv = A[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)].inverse();
        for (int r = 0; r < rows; ++r) {
            if (r == c) continue;
            FieldScalar factor = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * inv;
            if (factor.is_zero()) continue;
            for (int k2 = c; k2 < cols; ++k2)
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k2)] -=
                    factor * A[static_cast<std::size_t>(c)][static_cast<std::size_t>(k2)];
            b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(c)];
        }
    }
    std::vector<FieldScalar> x;
    for (int r = 0; r < rows; ++r)
        x.push_back(b[static_cast<std::size_t>(r)] /
                    A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)]);
    std::vector<FieldScalar> hc(x.begin(), x.begin() + nh);
    std::vector<FieldScalar> kc(x.begin() + nh, x.begin() + nh + nk);
    EulerPolynomial h(f, std::move(hc));
    EulerPolynomial k(f, std::move(kc));
    EulerPolynomial qp = q_base;
    for (int i = 0; i < nq; ++i)
        qp += q_basis[static_cast<std::size_t>(i)].scaled(x[static_cast<std::size_t>(nh + nk + i)]);
    return {h, k, qp};
}

/// Checks one recorded step of a normal-form run against the dense oracle.
inline bool oracle_matches_step(const EulerPolynomial& p0, const HomologicalStep& st,
                                const EulerPolynomial& q_base,
                                const std::vector<EulerPolynomial>& q_basis) {
    OracleStep o = dense_homological_oracle(p0, st.j, st.v, q_base, q_basis);
    return o.h == st.h && o.k == st.k && o.q == st.q;
}

/// Applies the collected d-form to a monomial t^m exactly:
/// sum a_i d^(n-i) (t^m) with d^s t^m = m (m-1) ... (m-s+1) t^(m-s).
inline std::map<int, FieldScalar> apply_d_form_to_monomial(
    const std::vector<LaurentSeries>& dform, long m, Field f) {
    std::map<int, FieldScalar> out;
    int n = static_cast<int>(dform.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        int s = n - i;
        FieldScalar fall = FieldScalar::one(f);
        for (int r = 0; r < s; ++r) fall *= FieldScalar(f, m - r);
        const LaurentSeries& a = dform[static_cast<std::size_t>(i)];
        if (a.is_zero() || fall.is_zero()) continue;
        for (int kk = a.valuation(); kk <= a.trunc(); ++kk) {
            FieldScalar c = a.coeff(kk);
            if (c.is_zero()) continue;
            int power = kk + static_cast<int>(m) - s;
            auto [it, inserted] = out.try_emplace(power, FieldScalar::zero(f));
            it->second += c * fall;
        }
    }
    return out;
}

inline std::map<int, FieldScalar> apply_graded_to_monomial(const OperatorSeries& L, long m,
                                                           Field f) {
    std::map<int, FieldScalar> out;
    for (int k = L.kmin(); k <= L.trunc(); ++k) {
        EulerPolynomial p = L.term(k);
        if (p.is_zero()) continue;
        FieldScalar val = p.evaluate(FieldScalar(f, m));
        if (val.is_zero()) continue;
        auto [it, inserted] = out.try_emplace(k + static_cast<int>(m), FieldScalar::zero(f));
        it->second += val;
    }
    return out;
}

}  // namespace tsup
