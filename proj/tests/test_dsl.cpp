#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fuchsforge;
using tsup::op;
using tsup::poly;
using tsup::q;

TEST_CASE("parser examples") {
    OperatorSeries L = op("(E + t)*(E - 1)");
    CHECK(L.term(0) == poly("E^2-E"));
    CHECK(L.term(1) == poly("E-1"));

    OperatorSeries d2 = op("D^2");
    CHECK(d2.kmin() == -2);
    CHECK(d2.term(-2) == poly("E^2-E"));

    OperatorSeries m = op("3/2*t^2*E");
    CHECK(m.kmin() == 2);
    CHECK(m.term(2) == EulerPolynomial::monomial(q(3, 2), 1));

    CHECK(op("t^-3").kmin() == -3);
    CHECK(op("2^3") == op("8"));
    CHECK(op("(E-1)^2") == op("(E-1)*(E-1)"));
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse("E +"), ParseError);
    CHECK_THROWS_AS(parse("(E"), ParseError);
    CHECK_THROWS_AS(parse("E^"), ParseError);
    CHECK_THROWS_AS(parse("E^-1"), ParseError);  // negative powers only on t
    CHECK_THROWS_AS(parse("x"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    try {
        parse("E + # t");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    // i is a parse-level atom but a Q-field evaluation error
    CHECK_THROWS_AS(parse_operator("i", 8, Field::Q), FieldMismatchError);
    CHECK(parse_operator("i*i", 8, Field::Qi) == parse_operator("-1", 8, Field::Qi));
}

TEST_CASE("printing round-trips") {
    CHECK(print_text(op("E")) == "E");
    CHECK(print_text(OperatorSeries(Field::Q, 10)) == "0");
    CHECK(print_text(op("(E+t)*(E-1)")) == "(E^2-E) + t*(E-1)");

    const char* corpus[] = {
        "E",
        "0",
        "1",
        "-1",
        "E^2-E",
        "(E + t)*(E - 1)",
        "t^-2*(E^2-E)",
        "D^2",
        "3/2*t^2*E",
        "E*(E-1)*(E-2)",
        "(E-1/2)*(E+5)",
        "t*(E-1) + t^2*7",
        "E^3 - 2*E + 1",
        "1/3 + t + t^2*E",
        "D*D - 1",
        "(t + t^2)*(E + 1)",
        "E - 1 + t^4",
        "-E^2 + t",
        "t^-1*E + E^2",
        "5",
    };
    for (const char* text : corpus) {
        OperatorSeries L = op(text, 10);
        OperatorSeries back = op(print_text(L), 10);
        CHECK(back.agrees_with(L, std::min(back.trunc(), L.trunc())));
    }
    // complex coefficients round-trip over Qi
    OperatorSeries Z = parse_operator("(1/2 + 3/4*i)*E + t*i", 10, Field::Qi);
    OperatorSeries back = parse_operator(print_text(Z), 10, Field::Qi);
    CHECK(back.agrees_with(Z, 10));
}

TEST_CASE("json round-trips bit-exactly") {
    tsup::Rng rng(3141);
    for (int trial = 0; trial < 20; ++trial) {
        OperatorSeries L = rng.operator_series(3, 8, Field::Q, -2);
        Json j = operator_to_json(L);
        OperatorSeries back = operator_from_json(j);
        CHECK(back == L);
        CHECK(operator_to_json(back).dump() == j.dump());
    }
    OperatorSeries Z = parse_operator("(1/2 - 3/4*i)*E^2 + t^-1*i", 8, Field::Qi);
    CHECK(operator_from_json(operator_to_json(Z)) == Z);

    LaurentSeries s(Field::Q, -2, 8, {q(1), q(0), q(-7, 3)});
    CHECK(laurent_from_json(Field::Q, laurent_to_json(s)) == s);
}

TEST_CASE("hostile input never escapes the typed errors") {
    // oversized exponents and headroom demands are rejected, not allocated
    CHECK_THROWS_AS(parse("t^99999999"), ParseError);
    CHECK_THROWS_AS(parse("E^99999999"), ParseError);
    CHECK_THROWS_AS(parse_operator("(t^-100000)^100000", 8, Field::Q), Error);
    CHECK_THROWS_AS(parse_operator("E", -3, Field::Q), PreconditionError);
    // zero denominators must raise, not trap in the bignum layer
    CHECK_THROWS_AS(parse_operator("1/0", 8, Field::Q), ParseError);
    CHECK_THROWS_AS(FieldScalar::parse(Field::Q, "3/0"), PreconditionError);

    // parser fuzz: random strings either parse or throw ParseError; nothing
    // else may escape from evaluation but the library's own error types
    tsup::Rng rng(1234);
    const std::string alphabet = "Et D()+-*/^0123456789i";
    for (int trial = 0; trial < 400; ++trial) {
        std::string s;
        int len = rng.uniform(1, 16);
        for (int k = 0; k < len; ++k)
            s.push_back(alphabet[static_cast<std::size_t>(
                rng.uniform(0, static_cast<int>(alphabet.size()) - 1))]);
        try {
            OperatorSeries L = parse_operator(s, 6, Field::Q);
            (void)L;
        } catch (const Error&) {
            // fine: ParseError, PreconditionError, FieldMismatchError
        }
    }
}

TEST_CASE("evaluation respects the requested truncation") {
    // deep negative powers still deliver the asked-for precision
    OperatorSeries L = op("D^3*t^3", 12);
    CHECK(L.trunc() == 12);
    // D^3 t^3 = t^-3 e(e-1)(e-2) t^3 = (e+3)(e+2)(e+1)
    CHECK(L == OperatorSeries::from_poly(poly("(E+3)*(E+2)*(E+1)"), 12));
}
