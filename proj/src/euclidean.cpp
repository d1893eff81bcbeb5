#include "fuchsforge/euclidean.hpp"

#include <algorithm>

#include "fuchsforge/analysis.hpp"

namespace fuchsforge {

namespace {

// c(t) * eps^d as an operator, tracked to c's truncation.
OperatorSeries series_times_eps_power(const LaurentSeries& c, int d) {
    OperatorSeries r(c.field(), c.trunc());
    for (int k = c.valuation(); k <= c.trunc(); ++k) {
        FieldScalar ck = c.coeff(k);
        if (ck.is_zero()) continue;
        r = r + OperatorSeries::graded_term(k, EulerPolynomial::monomial(ck, d), c.trunc());
    }
    return r;
}

}  // namespace

DivisionResult div_rem(const OperatorSeries& L, const OperatorSeries& M) {
    require_same_field(L.field(), M.field());
    if (M.is_zero()) throw PreconditionError("division by the zero operator");
    Field f = L.field();
    int m = M.order();
    LaurentSeries mlead = M.coefficient_series(m);
    LaurentSeries mlead_inv = mlead.inverse();
    OperatorSeries R = L;
    OperatorSeries Q(f, L.trunc());
    bool have_q = false;
    while (!R.is_zero() && R.order() >= m) {
        int r = R.order();
        LaurentSeries c = R.coefficient_series(r) * mlead_inv;
        if (c.is_zero())
            throw PrecisionError("insufficient truncation to divide (quotient term lost)");
        OperatorSeries mono = series_times_eps_power(c, r - m);
        Q = have_q ? Q + mono : mono;
        have_q = true;
        R = R - mono * M;
    }
    if (!have_q) Q = OperatorSeries(f, R.trunc());
    return {Q, R};
}

namespace {

// Left-multiplies every part of a certificate by the inverse of the gcd's
// leading coefficient series, making the gcd monic in the collected sense.
BezoutCertificate normalize_certificate(OperatorSeries g, OperatorSeries u, OperatorSeries v) {
    LaurentSeries lead = g.coefficient_series(g.order());
    OperatorSeries s = OperatorSeries::from_laurent(lead.inverse());
    return {s * g, s * u, s * v};
}

}  // namespace

BezoutCertificate gcd_bezout(const OperatorSeries& L, const OperatorSeries& M) {
    require_same_field(L.field(), M.field());
    if (L.is_zero() || M.is_zero())
        throw PreconditionError("gcd of a zero operator");
    Field f = L.field();
    // right-divisibility is unchanged by left units: strip t^kmin up front so
    // the Euclid chain does not pay Laurent-inversion precision for it
    int vL = L.kmin(), vM = M.kmin();
    OperatorSeries Ln = L.shifted_t(-vL), Mn = M.shifted_t(-vM);
    int T = std::min(Ln.trunc(), Mn.trunc());
    OperatorSeries r0 = Ln, r1 = Mn;
    OperatorSeries u0 = OperatorSeries::one(f, T), u1 = OperatorSeries::zero(f, T);
    OperatorSeries v0 = OperatorSeries::zero(f, T), v1 = OperatorSeries::one(f, T);
    while (!r1.is_zero()) {
        DivisionResult d = div_rem(r0, r1);
        OperatorSeries u2 = u0 - d.quotient * u1;
        OperatorSeries v2 = v0 - d.quotient * v1;
        r0 = r1; r1 = d.remainder;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    BezoutCertificate cert = normalize_certificate(
        r0, u0 * OperatorSeries::graded_term(-vL, EulerPolynomial::one(f), u0.trunc()),
        v0 * OperatorSeries::graded_term(-vM, EulerPolynomial::one(f), v0.trunc()));
    // a chain that terminated on an artifact of truncation fails this
    if (!div_rem(L, cert.gcd).remainder.is_zero() ||
        !div_rem(M, cert.gcd).remainder.is_zero())
        throw PrecisionError("truncation exhausted during the Euclid chain");
    return cert;
}

OperatorSeries lcm(const OperatorSeries& L_in, const OperatorSeries& M_in) {
    require_same_field(L_in.field(), M_in.field());
    if (L_in.is_zero() || M_in.is_zero())
        throw PreconditionError("lcm of a zero operator");
    // common right multiples are unchanged by left units
    OperatorSeries L = L_in.shifted_t(-L_in.kmin());
    OperatorSeries M = M_in.shifted_t(-M_in.kmin());
    Field f = L.field();
    int n = L.order();
    if (n == 0) {
        // L is an invertible series: lcm = M up to normalization
        LaurentSeries lead = M.coefficient_series(M.order());
        return OperatorSeries::from_laurent(lead.inverse()) * M;
    }
    // Rows are the collected coefficients (eps^0..eps^(n-1)) of
    // rem(eps^k M, L); combos track the dependence over the Laurent field.
    struct Row {
        std::vector<LaurentSeries> entries;
        std::vector<LaurentSeries> combo;  // coefficients of eps^0..eps^k
        int pivot = -1;
    };
    std::vector<Row> basis;
    int T = std::min(L.trunc(), M.trunc());
    for (int k = 0; k <= n; ++k) {
        OperatorSeries ek = OperatorSeries::graded_term(0, EulerPolynomial::monomial(FieldScalar::one(f), k), T);
        OperatorSeries rem = div_rem(ek * M, L).remainder;
        Row row;
        for (int d = 0; d < n; ++d) row.entries.push_back(rem.coefficient_series(d));
        row.combo.assign(static_cast<std::size_t>(k) + 1, LaurentSeries(f, T));
        row.combo.back() = LaurentSeries::one(f, T);
        // basis rows are kept mutually reduced (zero at each other's pivot
        // columns), so one pass fully reduces the incoming row
        for (const Row& b : basis) {
            const LaurentSeries& e = row.entries[static_cast<std::size_t>(b.pivot)];
            if (e.is_zero()) continue;
            LaurentSeries factor = e.div(b.entries[static_cast<std::size_t>(b.pivot)]);
            for (int d = 0; d < n; ++d)
                row.entries[static_cast<std::size_t>(d)] =
                    row.entries[static_cast<std::size_t>(d)] -
                    factor * b.entries[static_cast<std::size_t>(d)];
            for (std::size_t c = 0; c < b.combo.size(); ++c)
                row.combo[c] = row.combo[c] - factor * b.combo[c];
        }
        bool all_zero = true;
        for (const auto& e : row.entries) all_zero = all_zero && e.is_zero();
        if (all_zero) {
            OperatorSeries P(f, T);
            bool have = false;
            for (std::size_t c = 0; c < row.combo.size(); ++c) {
                if (row.combo[c].is_zero()) continue;
                OperatorSeries piece = series_times_eps_power(row.combo[c], static_cast<int>(c));
                P = have ? P + piece : piece;
                have = true;
            }
            OperatorSeries result = P * M;
            LaurentSeries lead = result.coefficient_series(result.order());
            result = OperatorSeries::from_laurent(lead.inverse()) * result;
            if (!div_rem(result, L).remainder.is_zero() ||
                !div_rem(result, M).remainder.is_zero())
                throw PrecisionError("truncation exhausted in the lcm linear solve");
            return result;
        }
        // pick the entry of smallest valuation as pivot (best precision)
        int best = -1;
        for (int d = 0; d < n; ++d) {
            const auto& e = row.entries[static_cast<std::size_t>(d)];
            if (e.is_zero()) continue;
            if (best < 0 || e.valuation() < row.entries[static_cast<std::size_t>(best)].valuation())
                best = d;
        }
        row.pivot = best;
        // eliminate the new pivot column from the stored rows
        for (Row& b : basis) {
            const LaurentSeries& e = b.entries[static_cast<std::size_t>(best)];
            if (e.is_zero()) continue;
            LaurentSeries factor = e.div(row.entries[static_cast<std::size_t>(best)]);
            for (int d = 0; d < n; ++d)
                b.entries[static_cast<std::size_t>(d)] =
                    b.entries[static_cast<std::size_t>(d)] -
                    factor * row.entries[static_cast<std::size_t>(d)];
            b.combo.resize(row.combo.size(), LaurentSeries(f, T));
            for (std::size_t c = 0; c < row.combo.size(); ++c)
                b.combo[c] = b.combo[c] - factor * row.combo[c];
        }
        basis.push_back(std::move(row));
    }
    throw InternalError("no linear dependence among n+1 remainders (precision loss?)");
}

ConjugacyPair conjugate_by(const OperatorSeries& L, const OperatorSeries& H) {
    BezoutCertificate cert = gcd_bezout(L, H);
    if (cert.gcd.order() != 0)
        throw PreconditionError("conjugate_by requires gcd(L, H) = 1");
    OperatorSeries P = lcm(L, H);
    DivisionResult byH = div_rem(P, H);
    if (!byH.divisible())
        throw InternalError("lcm not divisible by H");
    DivisionResult byL = div_rem(P, L);
    if (!byL.divisible())
        throw InternalError("lcm not divisible by L");
    return {H, byL.quotient, byH.quotient};
}

std::pair<OperatorSeries, OperatorSeries> invert_conjugacy(const OperatorSeries& L,
                                                           const OperatorSeries& M,
                                                           const OperatorSeries& H) {
    // sanity: M H must be right-divisible by L (i.e. M H = K L for some K)
    DivisionResult chk = div_rem(M * H, L);
    if (!chk.divisible())
        throw PreconditionError("invert_conjugacy: M*H is not right-divisible by L");
    BezoutCertificate cert = gcd_bezout(L, H);
    if (cert.gcd.order() != 0 || !cert.gcd.term(0).is_one())
        throw PreconditionError("invert_conjugacy requires gcd(L, H) = 1");
    // U L + V H = 1  =>  L V H = (1 - L U) L, so L V is divisible by M from
    // the right after cancelling H against lcm(L, H) = M H.
    const OperatorSeries& V = cert.V;
    DivisionResult w = div_rem(L * V, M);
    if (!w.divisible())
        throw InternalError("invert_conjugacy: L*V not divisible by M");
    return {V, w.quotient};
}

DivisionResult relaxed_fuchsian_div(const OperatorSeries& L, const OperatorSeries& M) {
    if (!is_fuchsian(L) || !is_fuchsian(M))
        throw PreconditionError("relaxed division requires Fuchsian operands");
    if (L.order() <= M.order())
        throw PreconditionError("relaxed division requires order(L) > order(M)");
    DivisionResult d = div_rem(L, M);
    OperatorSeries one = OperatorSeries::one(L.field(), d.quotient.trunc());
    return {d.quotient - one, M + d.remainder};
}

}  // namespace fuchsforge
