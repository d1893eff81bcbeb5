#include "fuchsforge/analysis.hpp"

#include <algorithm>

#include "fuchsforge/roots.hpp"

namespace fuchsforge {

bool is_fuchsian(const OperatorSeries& L) {
    if (L.is_zero()) return false;
    return L.kmin() == 0 && L.term(0).degree() == L.order();
}

PreFuchsianCheck is_pre_fuchsian(const OperatorSeries& L) {
    if (L.is_zero()) return {};
    if (L.term(L.kmin()).degree() == L.order()) return {true, -L.kmin()};
    return {};
}

EulerPolynomial gcd0(const OperatorSeries& L, const OperatorSeries& H) {
    if (!is_fuchsian(L) || !is_fuchsian(H))
        throw PreconditionError("gcd0 requires Fuchsian operands");
    return poly_gcd(L.term(0), H.term(0));
}

EulerPolynomial ResonanceStructure::w_at(int j) const {
    auto it = w.find(j);
    if (it != w.end()) return it->second;
    return EulerPolynomial::one(p0.field());
}

namespace {

// Lagrange interpolation through (x_k, y_k), exact over the field.
EulerPolynomial interpolate(Field f, const std::vector<FieldScalar>& xs,
                            const std::vector<FieldScalar>& ys) {
    EulerPolynomial acc = EulerPolynomial::zero(f);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        EulerPolynomial basis = EulerPolynomial::one(f);
        FieldScalar denom = FieldScalar::one(f);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= EulerPolynomial(f, {-xs[j], FieldScalar::one(f)});
            denom *= xs[i] - xs[j];
        }
        acc += basis.scaled(ys[i] / denom);
    }
    return acc;
}

EulerPolynomial conj_coeffs(const EulerPolynomial& p) {
    std::vector<FieldScalar> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).conj());
    return EulerPolynomial(p.field(), std::move(c));
}

// Positive-integer roots of Res_eps(p0(eps), p0(eps+j)) viewed as a
// polynomial in j, computed by interpolation (degree <= n^2) and the
// rational root test after stripping the forced factor j^v.
std::vector<int> resonance_candidates(const EulerPolynomial& p0) {
    Field f = p0.field();
    int n = p0.degree();
    int dmax = n * n;
    std::vector<FieldScalar> xs, ys;
    for (int j = 0; j <= dmax; ++j) {
        xs.push_back(FieldScalar(f, j));
        ys.push_back(poly_resultant(p0, p0.shift(j)));
    }
    EulerPolynomial R = interpolate(f, xs, ys);
    if (f == Field::Qi) R = R * conj_coeffs(R);  // real polynomial, same integer roots
    if (R.is_zero()) throw InternalError("identically vanishing resonance resultant");
    // strip j^v (R(0) = Res(p0, p0) = 0 whenever n >= 1)
    std::vector<FieldScalar> c;
    int v = 0;
    while (R.coeff(v).is_zero()) ++v;
    for (int i = v; i <= R.degree(); ++i) c.push_back(R.coeff(i));
    EulerPolynomial Rs(f, std::move(c));
    std::vector<int> out;
    for (const auto& [r, mult] : integer_roots(Rs)) {
        (void)mult;
        if (r < 1) continue;
        if (r > 1000000000L)
            throw PreconditionError("resonance order does not fit the order type");
        out.push_back(static_cast<int>(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ResonanceStructure resonance_orders(const EulerPolynomial& p0) {
    if (p0.degree() < 1)
        throw PreconditionError("resonance analysis needs deg p0 >= 1");
    ResonanceStructure rs(p0);
    for (int j : resonance_candidates(p0)) {
        EulerPolynomial wj = poly_gcd(p0, p0.shift(j));
        if (wj.degree() >= 1) {
            rs.res_orders.insert(j);
            rs.nu[j] = wj.degree();
            rs.w.emplace(j, std::move(wj));
            rs.bound = std::max(rs.bound, j);
        }
    }
    return rs;
}

std::vector<FieldScalar> natural_order(std::vector<FieldScalar> roots) {
    std::sort(roots.begin(), roots.end(), FieldScalar::lex_less);
    // classes keyed by first-seen representative; lex sort makes the class
    // minimum appear first, so class order = encounter order
    std::vector<std::vector<FieldScalar>> classes;
    for (const auto& r : roots) {
        bool placed = false;
        for (auto& cls : classes) {
            FieldScalar d = r - cls.front();
            if (d.is_integer()) {
                cls.push_back(r);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({r});
    }
    std::vector<FieldScalar> out;
    for (auto& cls : classes)
        for (auto& r : cls) out.push_back(std::move(r));
    return out;
}

ResonanceStructure resonance_structure(const EulerPolynomial& p0,
                                       const std::vector<FieldScalar>& ordered_roots) {
    Field f = p0.field();
    if (p0.degree() < 1)
        throw PreconditionError("resonance analysis needs deg p0 >= 1");
    if (static_cast<int>(ordered_roots.size()) != p0.degree())
        throw PreconditionError("root list length does not match deg p0");
    EulerPolynomial prod = EulerPolynomial::from_roots(f, ordered_roots, p0.leading());
    if (prod != p0)
        throw PreconditionError("supplied roots do not multiply out to p0");
    // within an integer-difference class the list must be non-decreasing
    for (std::size_t a = 0; a < ordered_roots.size(); ++a)
        for (std::size_t b = a + 1; b < ordered_roots.size(); ++b) {
            FieldScalar d = ordered_roots[b] - ordered_roots[a];
            if (d.is_integer() && d.re() < 0)
                throw PreconditionError("root list is not in natural order");
        }

    ResonanceStructure rs = resonance_orders(p0);
    rs.roots = ordered_roots;
    int n = static_cast<int>(ordered_roots.size());
    for (int j : rs.res_orders) {
        const EulerPolynomial& wj = rs.w.at(j);
        std::vector<FieldScalar> lam;
        std::vector<int> idx;
        // distinct roots of w_j are exactly the lambda with lambda + j in
        // the root multiset; multiplicity in Lambda_j = multiplicity in w_j
        std::vector<std::pair<FieldScalar, int>> seen;  // distinct root, positions consumed
        for (int i = 0; i < n; ++i) {
            const FieldScalar& lambda = ordered_roots[static_cast<std::size_t>(i)];
            bool dup = false;
            for (auto& s : seen) dup = dup || s.first == lambda;
            if (dup) continue;
            if (!wj.evaluate(lambda).is_zero()) continue;
            EulerPolynomial work = wj;
            EulerPolynomial lin(f, {-lambda, FieldScalar::one(f)});
            int k = 0;
            while (!work.is_zero() && work.evaluate(lambda).is_zero()) {
                work = poly_exact_div(work, lin);
                ++k;
            }
            for (int c = 0; c < k; ++c) lam.push_back(lambda);
            // the last k instances of lambda in the ordered list
            std::vector<int> positions;
            for (int p = 0; p < n; ++p)
                if (ordered_roots[static_cast<std::size_t>(p)] == lambda) positions.push_back(p + 1);
            for (std::size_t c = positions.size() - static_cast<std::size_t>(k);
                 c < positions.size(); ++c)
                idx.push_back(positions[c]);
            seen.push_back({lambda, k});
        }
        std::sort(lam.begin(), lam.end(), FieldScalar::lex_less);
        std::sort(idx.begin(), idx.end());
        rs.lambda_j[j] = std::move(lam);
        rs.index_sets[j] = std::move(idx);
    }
    for (int i = 0; i < n; ++i) {
        std::set<int> J;
        for (int p = 0; p < n; ++p) {
            FieldScalar d = ordered_roots[static_cast<std::size_t>(p)] -
                            ordered_roots[static_cast<std::size_t>(i)];
            if (d.is_integer()) {
                long v = d.to_integer();
                if (v >= 1) J.insert(static_cast<int>(v));
            }
        }
        rs.j_sets[i + 1] = std::move(J);
    }
    return rs;
}

}  // namespace fuchsforge
