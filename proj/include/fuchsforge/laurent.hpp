#pragma once

#include <vector>

#include "fuchsforge/field.hpp"

namespace fuchsforge {

/// Truncated Laurent series sum c_k t^k, k = kmin..trunc, with exact field
/// coefficients. A value with trunc = T represents its class modulo t^(T+1);
/// every operation propagates the tightest truncation it can certify.
/// Canonical form: the lowest tracked coefficient is nonzero, and the zero
/// series stores no coefficients (kmin = trunc + 1).
class LaurentSeries {
public:
    LaurentSeries(Field f, int trunc) : fld_(f), kmin_(trunc + 1), trunc_(trunc) {}
    LaurentSeries(Field f, int kmin, int trunc, std::vector<FieldScalar> coeffs);

    static LaurentSeries zero(Field f, int trunc) { return LaurentSeries(f, trunc); }
    static LaurentSeries one(Field f, int trunc) { return monomial(FieldScalar::one(f), 0, trunc); }
    static LaurentSeries monomial(FieldScalar c, int k, int trunc);

    Field field() const { return fld_; }
    bool is_zero() const { return c_.empty(); }
    /// Lowest tracked power (trunc + 1 for the zero series).
    int valuation() const { return kmin_; }
    int trunc() const { return trunc_; }
    /// Coefficient of t^k for k <= trunc; asking past the truncation is a bug.
    FieldScalar coeff(int k) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scaled(const FieldScalar& s) const;
    /// Multiplication by t^k (shifts both valuation and truncation).
    LaurentSeries shifted(int k) const;
    LaurentSeries truncated(int new_trunc) const;

    /// Multiplicative inverse; kmin flips sign and the truncation drops to
    /// trunc - 2*valuation. Throws PreconditionError on the zero series.
    LaurentSeries inverse() const;
    LaurentSeries div(const LaurentSeries& o) const { return *this * o.inverse(); }

    /// t d/dt: multiplies the coefficient of t^k by k.
    LaurentSeries euler_derivative() const;

    /// exp of a series with valuation >= 1 (or zero); computed by the
    /// recurrence s*y_s = sum i*rho_i*y_(s-i).
    LaurentSeries exp() const;

    bool agrees_with(const LaurentSeries& o, int through) const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.fld_ == b.fld_ && a.kmin_ == b.kmin_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    std::string to_string() const;

private:
    void canonicalize();

    Field fld_;
    int kmin_;
    int trunc_;
    std::vector<FieldScalar> c_;  // c_[k - kmin_] for kmin_ <= k <= trunc_
};

}  // namespace fuchsforge
