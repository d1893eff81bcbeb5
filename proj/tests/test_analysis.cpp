#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuchsforge/roots.hpp"
#include "support.hpp"

using namespace fuchsforge;
using tsup::op;
using tsup::poly;
using tsup::q;

TEST_CASE("fuchsian and pre-fuchsian tests") {
    CHECK(is_fuchsian(op("(E+t)*(E-1)")));
    CHECK_FALSE(is_fuchsian(op("D")));
    auto p1 = is_pre_fuchsian(op("D"));
    CHECK(p1.ok);
    CHECK(p1.shift == 1);
    auto p2 = is_pre_fuchsian(op("D^2"));
    CHECK(p2.ok);
    CHECK(p2.shift == 2);
    // t E + 1 has deg p_kmin < order: not even pre-Fuchsian
    CHECK_FALSE(is_pre_fuchsian(op("t*E+1")).ok);
    CHECK_FALSE(is_fuchsian(OperatorSeries(Field::Q, 10)));
    // a Fuchsian operator shifted up needs a negative shift back
    auto p3 = is_pre_fuchsian(op("(E+t)*(E-1)").shifted_t(2));
    CHECK(p3.ok);
    CHECK(p3.shift == -2);
}

TEST_CASE("root-free resonance detection") {
    {
        ResonanceStructure rs = resonance_orders(poly("E*(E-1)"));
        CHECK(rs.res_orders == std::set<int>{1});
        CHECK(rs.w.at(1) == poly("E"));
        CHECK(rs.nu.at(1) == 1);
        CHECK(rs.bound == 1);
    }
    {
        ResonanceStructure rs = resonance_orders(poly("E*(E-1/2)"));
        CHECK(rs.res_orders.empty());
        CHECK(rs.bound == 0);
    }
    {
        ResonanceStructure rs = resonance_orders(poly("(E-1)*(E-1)*(E-3)"));
        CHECK(rs.res_orders == std::set<int>{2});
        CHECK(rs.w.at(2) == poly("E-1"));
        CHECK(rs.nu.at(2) == 1);
    }
    {
        // no root-finding needed: E^2 - 2 does not split over Q
        ResonanceStructure rs = resonance_orders(poly("E^2-2"));
        CHECK(rs.res_orders.empty());
        // but (E^2-2)*(E^2-4*E+2) has both roots shifted by 2
        ResonanceStructure rs2 = resonance_orders(poly("E^2-2") * poly("E^2-4*E+2"));
        CHECK(rs2.res_orders == std::set<int>{2});
        CHECK(rs2.nu.at(2) == 2);
    }
    {
        // Gaussian-rational roots i and i+2 over Qi
        Field f = Field::Qi;
        FieldScalar i = FieldScalar::i(f);
        std::vector<FieldScalar> roots{i, i + FieldScalar(f, 2)};
        EulerPolynomial p0 = EulerPolynomial::from_roots(f, roots, FieldScalar::one(f));
        ResonanceStructure rs = resonance_orders(p0);
        CHECK(rs.res_orders == std::set<int>{2});
    }
}

TEST_CASE("natural order") {
    auto ord1 = natural_order({q(1), q(3), q(1)});
    CHECK(ord1 == std::vector<FieldScalar>{q(1), q(1), q(3)});

    auto ord2 = natural_order({q(0), q(1, 2)});
    CHECK(ord2 == std::vector<FieldScalar>{q(0), q(1, 2)});  // classes by lex minimum

    auto ord3 = natural_order({q(5), q(2), q(2), q(7)});
    CHECK(ord3 == std::vector<FieldScalar>{q(2), q(2), q(5), q(7)});

    // two classes: {-1/2, 3/2} and {0, 2}; class of -1/2 comes first
    auto ord4 = natural_order({q(2), q(3, 2), q(0), q(-1, 2)});
    CHECK(ord4 == std::vector<FieldScalar>{q(-1, 2), q(3, 2), q(0), q(2)});
}

TEST_CASE("resonance structure with roots") {
    {
        std::vector<FieldScalar> roots{q(0), q(1)};
        ResonanceStructure rs = resonance_structure(poly("E*(E-1)"), roots);
        CHECK(rs.lambda_j.at(1) == std::vector<FieldScalar>{q(0)});
        CHECK(rs.index_sets.at(1) == std::vector<int>{1});
        CHECK(rs.j_sets.at(1) == std::set<int>{1});
        CHECK(rs.j_sets.at(2).empty());
    }
    {
        // multiple root: last instances enter I_j
        std::vector<FieldScalar> roots{q(1), q(1), q(3)};
        EulerPolynomial p0 = EulerPolynomial::from_roots(Field::Q, roots, q(1));
        ResonanceStructure rs = resonance_structure(p0, roots);
        CHECK(rs.lambda_j.at(2) == std::vector<FieldScalar>{q(1)});
        CHECK(rs.index_sets.at(2) == std::vector<int>{2});
    }
    {
        std::vector<FieldScalar> roots{q(0), q(1), q(2)};
        EulerPolynomial p0 = EulerPolynomial::from_roots(Field::Q, roots, q(1));
        ResonanceStructure rs = resonance_structure(p0, roots);
        CHECK(rs.j_sets.at(1) == std::set<int>{1, 2});
        CHECK(rs.j_sets.at(2) == std::set<int>{1});
        CHECK(rs.j_sets.at(3).empty());
    }
    CHECK_THROWS_AS(resonance_structure(poly("E*(E-1)"), {q(0), q(2)}), PreconditionError);
    CHECK_THROWS_AS(resonance_structure(poly("E*(E-1)"), {q(1), q(0)}), PreconditionError);
    CHECK_THROWS_AS(resonance_orders(poly("5")), PreconditionError);
}

TEST_CASE("root-free and root-full resonance data agree") {
    tsup::Rng rng(1013);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(1, 4);
        std::vector<FieldScalar> roots;
        for (int i = 0; i < n; ++i) roots.push_back(q(rng.uniform(-3, 5)));
        roots = natural_order(std::move(roots));
        EulerPolynomial p0 = EulerPolynomial::from_roots(Field::Q, roots, q(1));
        ResonanceStructure rs = resonance_structure(p0, roots);
        // expected orders from pairwise differences
        std::set<int> expect;
        for (const auto& a : roots)
            for (const auto& b : roots) {
                FieldScalar d = b - a;
                if (d.is_integer() && d.to_integer() >= 1)
                    expect.insert(static_cast<int>(d.to_integer()));
            }
        CHECK(rs.res_orders == expect);
        for (int j : rs.res_orders) {
            // w_j = product over matched pairs; deg w_j = |Lambda_j|
            CHECK(rs.nu.at(j) == static_cast<int>(rs.lambda_j.at(j).size()));
            EulerPolynomial prod = EulerPolynomial::from_roots(Field::Q, rs.lambda_j.at(j), q(1));
            CHECK(prod == rs.w.at(j));
            CHECK(j <= rs.bound);
        }
        // beyond the bound w_j is constant
        EulerPolynomial wbig = poly_gcd(p0, p0.shift(rs.bound + 1));
        CHECK(wbig.degree() == 0);
    }
}

TEST_CASE("gcd0") {
    CHECK(gcd0(op("(E+t)*(E-1)"), op("E-1+t^2")) == poly("E-1"));
    CHECK(gcd0(op("(E+t)*(E-1)"), op("1")).is_one());
    OperatorSeries L = op("(E+t)*(E-1)");
    CHECK(gcd0(L, L) == poly("E*(E-1)").monic());
    CHECK_THROWS_AS(gcd0(op("D"), op("E")), PreconditionError);
}

TEST_CASE("exact root extraction") {
    {
        auto r = integer_roots(poly("E*(E-1)*(E-1)*(E+3)"));
        CHECK(r == std::map<long, int>{{0, 1}, {1, 2}, {-3, 1}});
    }
    {
        auto split = try_split(poly("(2*E-1)*(E+3)"));
        REQUIRE(split.has_value());
        auto ordered = natural_order(*split);
        CHECK(ordered == std::vector<FieldScalar>{q(-3), q(1, 2)});
    }
    CHECK_FALSE(try_split(poly("E^2-2")).has_value());
    CHECK_FALSE(try_split(poly("E^2+1")).has_value());
    {
        // over Qi the same polynomial splits as (E-i)(E+i)
        Field f = Field::Qi;
        FieldScalar i = FieldScalar::i(f);
        EulerPolynomial p(f, {FieldScalar::one(f), FieldScalar::zero(f), FieldScalar::one(f)});
        auto split = try_split(p);
        REQUIRE(split.has_value());
        CHECK(split->size() == 2);
        for (const auto& r : *split) CHECK((r == i || r == -i));
    }
    {
        // Gaussian-rational roots with denominators: (2E - i)(E - 1 - i)
        Field f = Field::Qi;
        FieldScalar i = FieldScalar::i(f);
        FieldScalar half_i = i * FieldScalar(f, 1, 2);
        FieldScalar one_plus_i = FieldScalar(f, 1) + i;
        EulerPolynomial p = EulerPolynomial::from_roots(
            f, std::vector<FieldScalar>{half_i, one_plus_i}, FieldScalar(f, 2));
        auto split = try_split(p);
        REQUIRE(split.has_value());
        bool found_half = false, found_opi = false;
        for (const auto& r : *split) {
            found_half = found_half || r == half_i;
            found_opi = found_opi || r == one_plus_i;
        }
        CHECK(found_half);
        CHECK(found_opi);
    }
}
