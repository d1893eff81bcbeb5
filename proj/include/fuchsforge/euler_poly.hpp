#pragma once

#include <span>
#include <vector>

#include "fuchsforge/field.hpp"

namespace fuchsforge {

/// Polynomial in the Euler symbol with FieldScalar coefficients, stored in
/// ascending powers with trailing zeros stripped. The zero polynomial has an
/// empty coefficient list and degree -1 (sentinel for "minus infinity").
class EulerPolynomial {
public:
    explicit EulerPolynomial(Field f) : fld_(f) {}
    EulerPolynomial(Field f, std::vector<FieldScalar> coeffs);

    static EulerPolynomial zero(Field f) { return EulerPolynomial(f); }
    static EulerPolynomial constant(FieldScalar c);
    static EulerPolynomial one(Field f) { return constant(FieldScalar::one(f)); }
    static EulerPolynomial monomial(FieldScalar c, int deg);
    /// The symbol itself.
    static EulerPolynomial eps(Field f) { return monomial(FieldScalar::one(f), 1); }
    /// Product of (eps - lambda) over the given roots, times lead.
    static EulerPolynomial from_roots(Field f, std::span<const FieldScalar> roots,
                                      const FieldScalar& lead);

    Field field() const { return fld_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldScalar coeff(int i) const;
    const FieldScalar& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    EulerPolynomial operator-() const;
    EulerPolynomial& operator+=(const EulerPolynomial& o);
    EulerPolynomial& operator-=(const EulerPolynomial& o);
    EulerPolynomial& operator*=(const EulerPolynomial& o);
    friend EulerPolynomial operator+(EulerPolynomial a, const EulerPolynomial& b) { return a += b; }
    friend EulerPolynomial operator-(EulerPolynomial a, const EulerPolynomial& b) { return a -= b; }
    friend EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b);

    EulerPolynomial scaled(const FieldScalar& s) const;
    EulerPolynomial monic() const;
    /// Argument shift w(eps + j); the degree is preserved.
    EulerPolynomial shift(int j) const;
    FieldScalar evaluate(const FieldScalar& x) const;

    friend bool operator==(const EulerPolynomial& a, const EulerPolynomial& b) {
        return a.fld_ == b.fld_ && a.c_ == b.c_;
    }
    friend bool operator!=(const EulerPolynomial& a, const EulerPolynomial& b) { return !(a == b); }

    /// Debug rendering; the canonical DSL text lives in dsl.hpp.
    std::string to_string() const;

private:
    void strip();

    Field fld_;
    std::vector<FieldScalar> c_;
};

/// shift_poly from the commutation rule w t^j = t^j w(eps + j).
inline EulerPolynomial shift_poly(const EulerPolynomial& w, int j) { return w.shift(j); }

struct PolyDivision {
    EulerPolynomial quotient;
    EulerPolynomial remainder;
};

/// Commutative division with remainder; throws PreconditionError on zero divisor.
PolyDivision poly_divrem(const EulerPolynomial& a, const EulerPolynomial& b);
/// Exact division; throws InternalError if the remainder is nonzero.
EulerPolynomial poly_exact_div(const EulerPolynomial& a, const EulerPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
EulerPolynomial poly_gcd(const EulerPolynomial& a, const EulerPolynomial& b);

struct PolyBezout {
    EulerPolynomial g;  // monic gcd
    EulerPolynomial u;
    EulerPolynomial v;  // u*a + v*b = g
};
PolyBezout poly_extended_gcd(const EulerPolynomial& a, const EulerPolynomial& b);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
EulerPolynomial poly_inv_mod(const EulerPolynomial& a, const EulerPolynomial& m);

/// Resultant of a and b (determinant of the Sylvester matrix).
FieldScalar poly_resultant(const EulerPolynomial& a, const EulerPolynomial& b);

}  // namespace fuchsforge
