#pragma once

#include <gmpxx.h>

#include <string>

#include "fuchsforge/errors.hpp"

namespace fuchsforge {

/// Coefficient field of a computation: the rationals Q or the Gaussian
/// rationals Q(i). The tag is uniform across one computation; operations
/// on scalars from different fields throw FieldMismatchError.
enum class Field { Q, Qi };

std::string field_name(Field f);
Field field_from_name(const std::string& name);

/// Exact scalar from Q or Q(i). Rationals are kept reduced with positive
/// denominators (GMP canonical form). No floating point anywhere.
class FieldScalar {
public:
    explicit FieldScalar(Field f) : fld_(f) {}
    FieldScalar(Field f, long n) : fld_(f), re_(n) {}
    FieldScalar(Field f, long num, long den);
    FieldScalar(Field f, mpq_class re) : fld_(f), re_(std::move(re)) {}
    FieldScalar(Field f, mpq_class re, mpq_class im);

    static FieldScalar zero(Field f) { return FieldScalar(f); }
    static FieldScalar one(Field f) { return FieldScalar(f, 1); }
    /// The imaginary unit; only available over Q(i).
    static FieldScalar i(Field f);

    Field field() const { return fld_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    /// True iff the value is a rational integer (imaginary part zero).
    bool is_integer() const;
    /// Exact conversion to a machine integer; throws if not representable.
    long to_integer() const;

    FieldScalar conj() const;
    /// re^2 + im^2 as an exact rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    FieldScalar inverse() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);

    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.fld_ == b.fld_ && a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    /// Lexicographic order on (re, im); used for deterministic root ordering.
    static bool lex_less(const FieldScalar& a, const FieldScalar& b);

    /// Canonical string: "a/b" over Q, "a/b+c/d i" (or "-" before the
    /// imaginary part) over Q(i). Denominator 1 is omitted by GMP.
    std::string to_string() const;
    static FieldScalar parse(Field f, const std::string& text);

private:
    Field fld_;
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Throws FieldMismatchError unless both scalars carry the same field tag.
void require_same_field(const FieldScalar& a, const FieldScalar& b);
void require_same_field(Field a, Field b);

}  // namespace fuchsforge
