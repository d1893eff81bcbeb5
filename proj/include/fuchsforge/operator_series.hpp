#pragma once

#include <vector>

#include "fuchsforge/euler_poly.hpp"
#include "fuchsforge/laurent.hpp"

namespace fuchsforge {

/// Truncated graded differential operator sum t^k p_k(eps), k = kmin..trunc,
/// over the Euler derivation eps = t d/dt. Multiplication follows the
/// commutation rule (t^a p)(t^b q) = t^(a+b) p(eps + b) q(eps), and the
/// truncation propagates as min(A.trunc + B.kmin, B.trunc + A.kmin).
/// Canonical form: the term at kmin is nonzero unless the operator is zero;
/// the zero operator stores no terms (kmin = trunc + 1).
class OperatorSeries {
public:
    OperatorSeries(Field f, int trunc) : fld_(f), kmin_(trunc + 1), trunc_(trunc) {}
    OperatorSeries(Field f, int kmin, int trunc, std::vector<EulerPolynomial> terms);

    static OperatorSeries zero(Field f, int trunc) { return OperatorSeries(f, trunc); }
    static OperatorSeries one(Field f, int trunc);
    /// t^k * p(eps) as a single graded term.
    static OperatorSeries graded_term(int k, EulerPolynomial p, int trunc);
    static OperatorSeries from_poly(EulerPolynomial p, int trunc) {
        return graded_term(0, std::move(p), trunc);
    }
    /// An order-zero operator (multiplication by the series).
    static OperatorSeries from_laurent(const LaurentSeries& s);

    Field field() const { return fld_; }
    bool is_zero() const { return terms_.empty(); }
    int kmin() const { return kmin_; }
    int trunc() const { return trunc_; }
    /// Term at t-power k; exact zero below kmin, a bug to request past trunc.
    EulerPolynomial term(int k) const;
    /// max over k of deg p_k; -1 for the zero operator.
    int order() const;

    OperatorSeries operator-() const;
    friend OperatorSeries operator+(const OperatorSeries& a, const OperatorSeries& b);
    friend OperatorSeries operator-(const OperatorSeries& a, const OperatorSeries& b);
    friend OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b);

    OperatorSeries scaled(const FieldScalar& s) const;
    /// Multiplication by t^k on the left (equals the right: t^k is central
    /// only up to shift, but shifting the grading is exactly t^k * L).
    OperatorSeries shifted_t(int k) const;
    OperatorSeries truncated(int new_trunc) const;

    /// Laurent series of the eps^r coefficients across all tracked t-powers.
    LaurentSeries coefficient_series(int r) const;
    /// eps-collected form: entry i is the coefficient series of eps^(n-i).
    std::vector<LaurentSeries> collected() const;
    static OperatorSeries from_collected(Field f, const std::vector<LaurentSeries>& coeffs);

    bool agrees_with(const OperatorSeries& o, int through) const;

    friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
        return a.fld_ == b.fld_ && a.kmin_ == b.kmin_ && a.trunc_ == b.trunc_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const OperatorSeries& a, const OperatorSeries& b) { return !(a == b); }

    std::string to_string() const;

private:
    void canonicalize();

    Field fld_;
    int kmin_;
    int trunc_;
    std::vector<EulerPolynomial> terms_;  // terms_[k - kmin_]
};

int order(const OperatorSeries& L);

/// Euler part p_0 of the noncommutative Taylor expansion (the indicial
/// polynomial when L is Fuchsian). Requires kmin >= 0.
EulerPolynomial eulerization(const OperatorSeries& L);

/// d-form coefficients a_i(t) with sum a_i d^(n-i) = L (entry 0 leads).
std::vector<LaurentSeries> to_d_form(const OperatorSeries& L);
/// Inverse: evaluates sum a_i d^(n-i) in the graded eps-representation via
/// t^k d^k = eps (eps-1) ... (eps-k+1). The leading entry must be nonzero.
OperatorSeries to_euler_form(Field f, const std::vector<LaurentSeries>& d_coeffs);

}  // namespace fuchsforge
