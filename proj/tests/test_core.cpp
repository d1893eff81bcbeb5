#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fuchsforge;
using tsup::op;
using tsup::poly;
using tsup::q;

TEST_CASE("field scalars are canonical and exact") {
    FieldScalar a(Field::Q, 2, -4);
    CHECK(a == q(-1, 2));
    CHECK(a.re().get_den() == 2);  // positive denominator, lowest terms
    CHECK((a + a) == q(-1));
    CHECK((a * q(-2)) == q(1));
    CHECK(q(3).inverse() == q(1, 3));
    CHECK_THROWS_AS(q(0).inverse(), PreconditionError);

    FieldScalar i = FieldScalar::i(Field::Qi);
    CHECK((i * i) == FieldScalar(Field::Qi, -1));
    CHECK(i.conj() == -i);
    CHECK_THROWS_AS(FieldScalar::i(Field::Q), FieldMismatchError);
    CHECK_THROWS_AS(q(1) + FieldScalar(Field::Qi, 1), FieldMismatchError);

    CHECK(FieldScalar::parse(Field::Q, q(-7, 3).to_string()) == q(-7, 3));
    FieldScalar z(Field::Qi, mpq_class(1, 2), mpq_class(-5, 4));
    CHECK(FieldScalar::parse(Field::Qi, z.to_string()) == z);
}

TEST_CASE("shift_poly matches the commutation rule") {
    CHECK(shift_poly(poly("E-1"), 2) == poly("E+1"));
    CHECK(shift_poly(poly("E^2"), 1) == poly("E^2+2*E+1"));

    // eps * t = t * (eps + 1) as operators
    CHECK(op("E*t") == op("t*(E+1)"));

    // w t^j = t^j w(eps+j) for random w, j
    tsup::Rng rng(7101);
    for (int trial = 0; trial < 50; ++trial) {
        EulerPolynomial w = rng.poly_deg_at_most(3);
        int j = rng.uniform(-3, 3);
        OperatorSeries lhs = OperatorSeries::from_poly(w, 10) *
                             OperatorSeries::graded_term(j, EulerPolynomial::one(Field::Q), 10);
        OperatorSeries rhs = OperatorSeries::graded_term(j, EulerPolynomial::one(Field::Q), 10) *
                             OperatorSeries::from_poly(w.shift(j), 10);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operator addition") {
    OperatorSeries A = op("(E+t)*(E-1)");
    OperatorSeries zero(Field::Q, 12);
    CHECK(A + zero == A);
    CHECK((A + (-A)).is_zero());
    OperatorSeries s = op("E^2-E") + op("t*(E-1)");
    CHECK(s == A);
    CHECK(s.term(0) == poly("E^2-E"));
    CHECK(s.term(1) == poly("E-1"));
}

TEST_CASE("operator multiplication") {
    OperatorSeries L = op("(E+t)*(E-1)");
    CHECK(L.term(0) == poly("E^2-E"));
    CHECK(L.term(1) == poly("E-1"));
    CHECK(op("1") * L == L);
    // eps t = t (eps + 1) differs from t eps by t
    CHECK(op("E*t") - op("t*E") == op("t"));
    CHECK(order(op("t*(E-1)")) == 1);
}

TEST_CASE("ring properties on random operators") {
    tsup::Rng rng(20107);
    for (int trial = 0; trial < 60; ++trial) {
        OperatorSeries A = rng.operator_series(3, 10, Field::Q, -2, 4);
        OperatorSeries B = rng.operator_series(3, 10, Field::Q, -2, 4);
        OperatorSeries C = rng.operator_series(3, 10, Field::Q, -2, 4);
        OperatorSeries lhs = (A * B) * C;
        OperatorSeries rhs = A * (B * C);
        int through = std::min(lhs.trunc(), rhs.trunc());
        CHECK(lhs.agrees_with(rhs, through));
        OperatorSeries d1 = A * (B + C);
        OperatorSeries d2 = A * B + A * C;
        CHECK(d1.agrees_with(d2, std::min(d1.trunc(), d2.trunc())));
        if (!A.is_zero() && !B.is_zero()) CHECK(order(A * B) == order(A) + order(B));
    }
}

TEST_CASE("eulerization and order") {
    CHECK(eulerization(op("(E+t)*(E-1)")) == poly("E*(E-1)"));
    EulerPolynomial p0 = poly("E^3-2*E+1");
    CHECK(eulerization(OperatorSeries::from_poly(p0, 10)) == p0);
    CHECK_THROWS_AS(eulerization(op("D")), PreconditionError);
}

TEST_CASE("d-form and euler-form conversions") {
    // d = t^-1 eps
    OperatorSeries d = op("D");
    CHECK(d.kmin() == -1);
    CHECK(d.term(-1) == poly("E"));

    // d^2 = t^-2 eps (eps - 1)
    OperatorSeries d2 = op("D^2");
    CHECK(d2.kmin() == -2);
    CHECK(d2.term(-2) == poly("E^2-E"));

    // order-zero operators stay put
    OperatorSeries a = op("1+t^2");
    auto coeffs = to_d_form(a);
    REQUIRE(coeffs.size() == 1);
    CHECK(to_euler_form(Field::Q, coeffs) == a);

    // eps (eps - 1) = t^2 d^2: evaluate both sides on monomials t^m
    OperatorSeries L = op("E*(E-1)");
    auto dform = to_d_form(L);
    for (long m = 0; m <= 4; ++m) {
        auto lhs = tsup::apply_graded_to_monomial(L, m, Field::Q);
        auto rhs = tsup::apply_d_form_to_monomial(dform, m, Field::Q);
        for (int p = -2; p <= 10; ++p) {
            FieldScalar lv = lhs.count(p) ? lhs.at(p) : q(0);
            FieldScalar rv = rhs.count(p) ? rhs.at(p) : q(0);
            CHECK(lv == rv);
        }
    }

    // round-trip on random operators of order <= 3
    tsup::Rng rng(5501);
    for (int trial = 0; trial < 40; ++trial) {
        OperatorSeries R = rng.operator_series(3, 10, Field::Q, -2);
        if (R.is_zero()) continue;
        OperatorSeries back = to_euler_form(Field::Q, to_d_form(R));
        CHECK(back.agrees_with(R, back.trunc()));
        CHECK(back.trunc() >= R.trunc() - R.order());
    }
}

TEST_CASE("laurent series arithmetic") {
    Field f = Field::Q;
    LaurentSeries one = LaurentSeries::one(f, 12);
    LaurentSeries s(f, -1, 12,
                    {FieldScalar(f, 2), FieldScalar(f, -1), FieldScalar(f, 1, 3)});
    LaurentSeries inv = s.inverse();
    LaurentSeries prod = s * inv;
    CHECK(prod.agrees_with(one, std::min(prod.trunc(), one.trunc())));
    CHECK(inv.valuation() == 1);

    // exp(rho) exp(-rho) = 1
    LaurentSeries rho =
        LaurentSeries::monomial(q(1), 1, 10) + LaurentSeries::monomial(q(-2, 3), 3, 10);
    LaurentSeries e1 = rho.exp(), e2 = (-rho).exp();
    CHECK((e1 * e2).agrees_with(LaurentSeries::one(f, 10), 10));

    // euler derivative of t^k multiplies by k
    LaurentSeries t3 = LaurentSeries::monomial(q(5), 3, 8);
    CHECK(t3.euler_derivative() == t3.scaled(q(3)));

    CHECK_THROWS_AS(LaurentSeries(f, 8).inverse(), PreconditionError);
}

TEST_CASE("truncation propagation in products") {
    OperatorSeries A = op("E", 10);
    OperatorSeries B = op("t^-2*E", 10);
    OperatorSeries P = A * B;
    CHECK(P.trunc() == 8);
    OperatorSeries S = A + B;
    CHECK(S.trunc() == 10);
}
