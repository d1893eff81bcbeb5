#include "fuchsforge/euler_poly.hpp"

#include <sstream>

namespace fuchsforge {

EulerPolynomial::EulerPolynomial(Field f, std::vector<FieldScalar> coeffs)
    : fld_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_) require_same_field(c.field(), fld_);
    strip();
}

void EulerPolynomial::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

EulerPolynomial EulerPolynomial::constant(FieldScalar c) {
    EulerPolynomial p(c.field());
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

EulerPolynomial EulerPolynomial::monomial(FieldScalar c, int deg) {
    EulerPolynomial p(c.field());
    if (deg < 0) throw PreconditionError("negative monomial degree");
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, FieldScalar::zero(c.field()));
        p.c_.back() = std::move(c);
    }
    return p;
}

EulerPolynomial EulerPolynomial::from_roots(Field f, std::span<const FieldScalar> roots,
                                            const FieldScalar& lead) {
    EulerPolynomial p = constant(lead);
    for (const auto& r : roots) {
        EulerPolynomial lin(f, {-r, FieldScalar::one(f)});
        p *= lin;
    }
    return p;
}

FieldScalar EulerPolynomial::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return FieldScalar::zero(fld_);
    return c_[static_cast<std::size_t>(i)];
}

const FieldScalar& EulerPolynomial::leading() const {
    if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return c_.back();
}

EulerPolynomial EulerPolynomial::operator-() const {
    EulerPolynomial r(fld_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

EulerPolynomial& EulerPolynomial::operator+=(const EulerPolynomial& o) {
    require_same_field(fld_, o.fld_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldScalar::zero(fld_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
}

EulerPolynomial& EulerPolynomial::operator-=(const EulerPolynomial& o) {
    require_same_field(fld_, o.fld_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldScalar::zero(fld_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
}

EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b) {
    require_same_field(a.fld_, b.fld_);
    EulerPolynomial r(a.fld_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldScalar::zero(a.fld_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.strip();
    return r;
}

EulerPolynomial& EulerPolynomial::operator*=(const EulerPolynomial& o) {
    *this = *this * o;
    return *this;
}

EulerPolynomial EulerPolynomial::scaled(const FieldScalar& s) const {
    require_same_field(fld_, s.field());
    EulerPolynomial r(fld_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    return r;
}

EulerPolynomial EulerPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

EulerPolynomial EulerPolynomial::shift(int j) const {
    // Horner synthetic composition with (eps + j): exact, degree preserved.
    EulerPolynomial r(fld_);
    EulerPolynomial lin(fld_, {FieldScalar(fld_, j), FieldScalar::one(fld_)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
}

FieldScalar EulerPolynomial::evaluate(const FieldScalar& x) const {
    FieldScalar r = FieldScalar::zero(fld_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string EulerPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        FieldScalar c = coeff(d);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (d >= 1) os << "*e";
        if (d >= 2) os << "^" << d;
        first = false;
    }
    return os.str();
}

PolyDivision poly_divrem(const EulerPolynomial& a, const EulerPolynomial& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    Field f = a.field();
    EulerPolynomial q = EulerPolynomial::zero(f);
    EulerPolynomial r = a;
    FieldScalar inv_lead = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FieldScalar c = r.leading() * inv_lead;
        int d = r.degree() - b.degree();
        EulerPolynomial m = EulerPolynomial::monomial(c, d);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

EulerPolynomial poly_exact_div(const EulerPolynomial& a, const EulerPolynomial& b) {
    auto d = poly_divrem(a, b);
    if (!d.remainder.is_zero())
        throw InternalError("inexact polynomial division");
    return d.quotient;
}

EulerPolynomial poly_gcd(const EulerPolynomial& a, const EulerPolynomial& b) {
    EulerPolynomial x = a, y = b;
    while (!y.is_zero()) {
        EulerPolynomial r = poly_divrem(x, y).remainder;
        x = y;
        y = r;
    }
    return x.monic();
}

PolyBezout poly_extended_gcd(const EulerPolynomial& a, const EulerPolynomial& b) {
    Field f = a.field();
    require_same_field(f, b.field());
    EulerPolynomial r0 = a, r1 = b;
    EulerPolynomial u0 = EulerPolynomial::one(f), u1 = EulerPolynomial::zero(f);
    EulerPolynomial v0 = EulerPolynomial::zero(f), v1 = EulerPolynomial::one(f);
    while (!r1.is_zero()) {
        auto d = poly_divrem(r0, r1);
        EulerPolynomial r2 = d.remainder;
        EulerPolynomial u2 = u0 - d.quotient * u1;
        EulerPolynomial v2 = v0 - d.quotient * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    FieldScalar s = r0.leading().inverse();
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

EulerPolynomial poly_inv_mod(const EulerPolynomial& a, const EulerPolynomial& m) {
    auto bez = poly_extended_gcd(a, m);
    if (!bez.g.is_one())
        throw PreconditionError("polynomial not invertible modulo the given modulus");
    return poly_divrem(bez.u, m).remainder;
}

FieldScalar poly_resultant(const EulerPolynomial& a, const EulerPolynomial& b) {
    Field f = a.field();
    require_same_field(f, b.field());
    if (a.is_zero() || b.is_zero()) return FieldScalar::zero(f);
    int n = a.degree(), m = b.degree();
    if (n == 0) {
        // Res(c, b) = c^deg b
        FieldScalar r = FieldScalar::one(f);
        for (int k = 0; k < m; ++k) r *= a.coeff(0);
        return r;
    }
    if (m == 0) {
        FieldScalar r = FieldScalar::one(f);
        for (int k = 0; k < n; ++k) r *= b.coeff(0);
        return r;
    }
    // Sylvester determinant by fraction-free-enough Gaussian elimination
    // over the exact field (row swaps tracked by sign).
    int sz = n + m;
    std::vector<std::vector<FieldScalar>> s(
        static_cast<std::size_t>(sz),
        std::vector<FieldScalar>(static_cast<std::size_t>(sz), FieldScalar::zero(f)));
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) s[row][row + k] = a.coeff(n - k);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) s[m + row][row + k] = b.coeff(m - k);
    FieldScalar det = FieldScalar::one(f);
    for (int col = 0; col < sz; ++col) {
        int pivot = -1;
        for (int row = col; row < sz; ++row)
            if (!s[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) return FieldScalar::zero(f);
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        FieldScalar inv = s[col][col].inverse();
        for (int row = col + 1; row < sz; ++row) {
            if (s[row][col].is_zero()) continue;
            FieldScalar factor = s[row][col] * inv;
            for (int k = col; k < sz; ++k) s[row][k] -= factor * s[col][k];
        }
    }
    return det;
}

}  // namespace fuchsforge
