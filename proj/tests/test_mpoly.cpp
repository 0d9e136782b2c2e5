#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubics/mpoly.hpp"

#include <random>

using namespace cubics;

namespace {

VarTablePtr geometry_table() {
    return VarTable::make({{"x1", VarRole::Geometry},
                           {"x2", VarRole::Geometry},
                           {"x3", VarRole::Geometry},
                           {"x4", VarRole::Geometry},
                           {"x5", VarRole::Geometry},
                           {"s", VarRole::Curve},
                           {"t", VarRole::Curve},
                           {"a", VarRole::Parameter},
                           {"a_inv", VarRole::Parameter},
                           {"e1", VarRole::Parameter},
                           {"e2", VarRole::Parameter},
                           {"e3", VarRole::Parameter}});
}

const char* kChordal = "x1*x4^2 + x2^2*x5 - x1*x3*x5 - 2*x2*x3*x4 + x3^3";
const char* kForm1 =
    "x3*x4^2 + (x1*x2 + x3^2)*x5 + e1*x4^2*x5 + e2*x4*x5^2 + e3*x5^3";

MPoly random_poly(std::mt19937& rng, const VarTablePtr& table, int terms) {
    std::uniform_int_distribution<int> var(0, 4);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> coeff(-4, 4);
    MPoly p(table);
    for (int i = 0; i < terms; ++i) {
        Mono m(table->size(), 0);
        m[var(rng)] += exp(rng);
        m[var(rng)] += exp(rng);
        p.add_term(m, CycNum(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("parse: chordal cubic has the five expected terms") {
    auto table = geometry_table();
    MPoly f = parse_poly(kChordal, table);
    CHECK(f.term_count() == 5);
    CHECK(f.is_homogeneous({VarRole::Geometry}));
    CHECK(f.degree({VarRole::Geometry}) == 3);
    // Spot-check two coefficients.
    Mono m(table->size(), 0);
    m[table->index_of("x2")] = 1;
    m[table->index_of("x3")] = 1;
    m[table->index_of("x4")] = 1;
    CHECK(f.terms().at(m) == CycNum(-2));
    Mono c(table->size(), 0);
    c[table->index_of("x3")] = 3;
    CHECK(f.terms().at(c) == CycNum(1));
}

TEST_CASE("parse: zeta(3)^3 is 1; syntax error carries its offset") {
    auto table = geometry_table();
    CHECK(parse_poly("zeta(3)^3", table) == MPoly::constant(table, CycNum(1)));
    try {
        parse_poly("x1 + * x2", table);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_poly("x9 + x1", table), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0", table), parse_error);
    CHECK_THROWS_AS(parse_poly("zeta(0)", table), parse_error);
}

TEST_CASE("parse: grammar corners") {
    auto table = geometry_table();
    CHECK(parse_poly("-x1 + x1", table).is_zero());
    CHECK(parse_poly("2^3", table) == MPoly::constant(table, CycNum(8)));
    CHECK(parse_poly("(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2", table).is_zero());
    CHECK(parse_poly("3/2*x1", table) ==
          MPoly::variable(table, 0) * CycNum(Rational(3, 2)));
    CHECK(parse_poly(" x1 ", table) == MPoly::variable(table, 0));
}

TEST_CASE("substitute: binomial expansion oracle") {
    auto table = geometry_table();
    MPoly f = parse_poly("x3^3", table);
    MPoly img = parse_poly("x4 + x5", table);
    MPoly expected = parse_poly("x4^3 + 3*x4^2*x5 + 3*x4*x5^2 + x5^3", table);
    CHECK(f.substituted({{table->index_of("x3"), img}}) == expected);
    // Identity assignment
    MPoly g = parse_poly(kChordal, table);
    CHECK(g.substituted({}) == g);
}

TEST_CASE("substitute: chordal cubic vanishes on the quartic curve") {
    auto table = geometry_table();
    MPoly f = parse_poly(kChordal, table);
    // Full-expansion oracle: substitute the rational normal quartic.
    std::map<size_t, MPoly> nu4 = {
        {0, parse_poly("s^4", table)},   {1, parse_poly("s^3*t", table)},
        {2, parse_poly("s^2*t^2", table)}, {3, parse_poly("s*t^3", table)},
        {4, parse_poly("t^4", table)}};
    CHECK(f.substituted(nu4).is_zero());
}

TEST_CASE("substitute is a ring homomorphism on random pairs") {
    auto table = geometry_table();
    std::mt19937 rng(42);
    std::map<size_t, MPoly> assignment = {
        {0, parse_poly("x2 + 2*x3", table)},
        {1, parse_poly("x1*x4 - x5", table)},
        {3, parse_poly("zeta(3)*x4", table)}};
    for (int iter = 0; iter < 25; ++iter) {
        MPoly f = random_poly(rng, table, 4), g = random_poly(rng, table, 4);
        CHECK((f * g).substituted(assignment) ==
              f.substituted(assignment) * g.substituted(assignment));
        CHECK((f + g).substituted(assignment) ==
              f.substituted(assignment) + g.substituted(assignment));
    }
}

TEST_CASE("derivative examples") {
    auto table = geometry_table();
    CHECK(parse_poly("x3^3", table).derivative(2) == parse_poly("3*x3^2", table));
    MPoly f = parse_poly(kChordal, table);
    CHECK(f.derivative(0) == parse_poly("x4^2 - x3*x5", table));
    CHECK(parse_poly("x1", table).derivative(1).is_zero());
}

TEST_CASE("linear_change: examples and conventions") {
    auto table = geometry_table();
    MPoly f = parse_poly("x1*x4^2 + x2*x4*x5 + x3*x5^2", table);
    // Swap block of the plane action at a=d=0, b=c=1: x1<->x3, x4<->x5.
    PolyMatrix m(table, 5);
    auto C = [&](long v) { return MPoly::constant(table, CycNum(v)); };
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) m.at(i, j) = C(0);
    m.at(0, 2) = C(1);  // d^2 block at a=d=0, b=c=1
    m.at(1, 1) = C(1);  // ad+bc = 1
    m.at(2, 0) = C(1);
    m.at(3, 4) = C(1);  // x4 -> x5 (entries a=0, c=1)
    m.at(4, 3) = C(1);
    CHECK(linear_change(f, m) == f);

    PolyMatrix id(table, 5);
    for (size_t i = 0; i < 5; ++i) id.at(i, i) = C(1);
    CHECK(linear_change(parse_poly(kChordal, table), id) == parse_poly(kChordal, table));
}

TEST_CASE("linear_change composes contravariantly (row-vector convention)") {
    auto table = geometry_table();
    std::mt19937 rng(5);
    auto C = [&](long v) { return MPoly::constant(table, CycNum(v)); };
    // A non-commuting pair fixes the orientation.
    PolyMatrix p(table, 5), q(table, 5);
    for (size_t i = 0; i < 5; ++i) {
        p.at(i, i) = C(1);
        q.at(i, i) = C(1);
    }
    p.at(0, 1) = C(1);           // x shear
    q.at(1, 0) = C(1);           // opposite shear: pq != qp
    MPoly f = random_poly(rng, table, 5);
    CHECK(linear_change(f, p * q) == linear_change(linear_change(f, q), p));
    MPoly g = parse_poly("x1^2", table);
    CHECK(linear_change(g, p * q) != linear_change(linear_change(g, p), q));
    for (int iter = 0; iter < 10; ++iter) {
        MPoly h = random_poly(rng, table, 4);
        CHECK(linear_change(h, p * q) == linear_change(linear_change(h, q), p));
    }
}

TEST_CASE("reduce_mod: unprojection identity reduces to zero") {
    auto table = geometry_table();
    MPoly cubic = parse_poly(kForm1, table);
    RelationSet rels({cubic});
    MPoly f = parse_poly(
        "x4*(x3*x4 + e1*x4*x5 + e2*x5^2) + x5*(x1*x2 + x3^2 + e3*x5^2)", table);
    CHECK(reduce_mod(f, rels).is_zero());
    CHECK(reduce_mod(cubic, RelationSet({cubic})).is_zero());
    MPoly x1 = parse_poly("x1", table);
    CHECK(reduce_mod(x1, RelationSet({parse_poly("x2", table)})) == x1);
}

TEST_CASE("reduce_mod is idempotent and linear") {
    auto table = geometry_table();
    RelationSet rels({parse_poly(kForm1, table),
                      parse_poly("a*a_inv - 1", table)});
    std::mt19937 rng(77);
    for (int iter = 0; iter < 20; ++iter) {
        MPoly f = random_poly(rng, table, 5), g = random_poly(rng, table, 5);
        MPoly rf = reduce_mod(f, rels);
        CHECK(reduce_mod(rf, rels) == rf);
        CHECK(reduce_mod(f + g, rels) == reduce_mod(f, rels) + reduce_mod(g, rels));
    }
}

TEST_CASE("semi_invariance: monomial scaling and torus actions") {
    auto table = geometry_table();
    auto C = [&](long v) { return MPoly::constant(table, CycNum(v)); };
    MPoly f = parse_poly("x1*x2", table);
    PolyMatrix m(table, 5);
    for (size_t i = 0; i < 5; ++i) m.at(i, i) = C(1);
    m.at(0, 0) = C(2);
    auto lambda = semi_invariance(f, m, {}, {});
    REQUIRE(lambda);
    CHECK(*lambda == C(2));

    // tau_a on the generic conic form: strictly invariant modulo a*a_inv - 1.
    MPoly cubic = parse_poly(kForm1, table);
    PolyMatrix tau(table, 5);
    for (size_t i = 0; i < 5; ++i) tau.at(i, i) = C(1);
    tau.at(0, 0) = parse_poly("a", table);
    tau.at(1, 1) = parse_poly("a_inv", table);
    RelationSet rels({parse_poly("a*a_inv - 1", table)});
    auto lt = semi_invariance(cubic, tau, {table->index_of("a"), table->index_of("a_inv")},
                              rels);
    REQUIRE(lt);
    CHECK(*lt == C(1));

    // A matrix that does not preserve the form fails.
    PolyMatrix bad(table, 5);
    for (size_t i = 0; i < 5; ++i) bad.at(i, i) = C(1);
    bad.at(0, 1) = C(1);
    CHECK(!semi_invariance(cubic, bad, {}, {}));
    CHECK_THROWS_AS(semi_invariance(MPoly(table), m, {}, {}), std::invalid_argument);
}

TEST_CASE("semi_invariance multiplier is multiplicative for constant matrices") {
    auto table = geometry_table();
    auto C = [&](const Rational& v) { return MPoly::constant(table, CycNum(v)); };
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(1, 5);
    // Weighted-homogeneous for diag(r^2, r*s, s^2, *, *): both monomials
    // scale by r^2 s^4.
    MPoly f = parse_poly("x1*x3^2 + zeta(3)*x2^2*x3", table);
    for (int iter = 0; iter < 10; ++iter) {
        PolyMatrix m(table, 5), n(table, 5);
        long r = d(rng), s = d(rng), u = d(rng), v = d(rng);
        for (size_t i = 0; i < 5; ++i) {
            m.at(i, i) = C(Rational(1));
            n.at(i, i) = C(Rational(1));
        }
        m.at(0, 0) = C(Rational(r * r));
        m.at(1, 1) = C(Rational(r * s));
        m.at(2, 2) = C(Rational(s * s));
        n.at(0, 0) = C(Rational(u * u));
        n.at(1, 1) = C(Rational(u * v));
        n.at(2, 2) = C(Rational(v * v));
        auto lm = semi_invariance(f, m, {}, {});
        auto ln = semi_invariance(f, n, {}, {});
        auto lmn = semi_invariance(f, m * n, {}, {});
        REQUIRE(lm);
        REQUIRE(ln);
        REQUIRE(lmn);
        CHECK(*lmn == *lm * *ln);
    }
}

TEST_CASE("print/parse round trip") {
    auto table = geometry_table();
    for (const char* text : {kChordal, kForm1,
                             "x1*x3^2 + x2*x4^2 + x5^3",
                             "x5*(x1*x2 + x3^2) + x4^3 + e1*x4*x5^2 + e2*x5^3",
                             "-x1 + 1/2*x2 - zeta(3)*x3",
                             "(1 - 2*zeta(3))*x1*x2 + zeta(4)*x5^3"}) {
        MPoly f = parse_poly(text, table);
        CHECK(parse_poly(f.to_string(), table) == f);
    }
    std::mt19937 rng(3);
    for (int iter = 0; iter < 25; ++iter) {
        MPoly f = random_poly(rng, table, 6);
        CHECK(parse_poly(f.to_string(), table) == f);
    }
    CHECK(MPoly(table).to_string() == "0");
}

TEST_CASE("zero polynomial degree conventions") {
    auto table = geometry_table();
    MPoly zero(table);
    CHECK(zero.degree() == -1);
    CHECK(zero.is_homogeneous());
    CHECK(zero.is_homogeneous({VarRole::Geometry}));
}

TEST_CASE("split_by groups coefficients on geometry monomials") {
    auto table = geometry_table();
    MPoly f = parse_poly(kForm1, table);
    std::set<size_t> geo;
    for (size_t v : table->indices_with_role(VarRole::Geometry)) geo.insert(v);
    auto parts = f.split_by(geo);
    Mono key(table->size(), 0);
    key[3] = 2;
    key[4] = 1;  // x4^2 x5
    CHECK(parts.at(key) == parse_poly("e1", table));
}
