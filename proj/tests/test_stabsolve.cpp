#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubics/stabsolve.hpp"

#include <algorithm>

using namespace cubics;

namespace {

VarTablePtr geo5() {
    return VarTable::make({{"x1", VarRole::Geometry},
                           {"x2", VarRole::Geometry},
                           {"x3", VarRole::Geometry},
                           {"x4", VarRole::Geometry},
                           {"x5", VarRole::Geometry},
                           {"a1", VarRole::Parameter},
                           {"e1", VarRole::Parameter},
                           {"e2", VarRole::Parameter},
                           {"e3", VarRole::Parameter},
                           {"alpha", VarRole::Parameter},
                           {"beta", VarRole::Parameter},
                           {"gamma", VarRole::Parameter}});
}

MatrixShape::Entry U(const char* name) { return std::string(name); }
MatrixShape::Entry K(long v) { return CycNum(v); }

// Pointwise stabilizer pattern of the plane {x4 = x5 = 0}: identity on the
// first block, full unknown rows for x4 and x5.
MatrixShape plane_stab_shape() {
    MatrixShape s;
    s.dim = 5;
    s.entries = {
        K(1), K(0), K(0), K(0), K(0),
        K(0), K(1), K(0), K(0), K(0),
        K(0), K(0), K(1), K(0), K(0),
        U("m41"), U("m42"), U("m43"), U("m44"), U("m45"),
        U("m51"), U("m52"), U("m53"), U("m54"), U("m55")};
    return s;
}

// Pointwise stabilizer pattern of the line {x3 = x4 = x5 = 0}.
MatrixShape line_stab_shape() {
    MatrixShape s;
    s.dim = 5;
    s.entries = {
        K(1), K(0), K(0), K(0), K(0),
        K(0), K(1), K(0), K(0), K(0),
        U("b1"), U("c1"), U("d1"), U("e1u"), U("f1"),
        U("b2"), U("c2"), U("d2"), U("e2u"), U("f2"),
        U("b3"), U("c3"), U("d3"), U("e3u"), U("f3")};
    return s;
}

const char* kLine1 =
    "x1*(x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2) + "
    "x2*(x3^2 + zeta(3)^2*x4^2 + zeta(3)*x5^2) + "
    "x3^2*x4 + x3*x4^2 + x3^2*x5 + x4^2*x5 - x3^3 - x4^3 + a1*x3*x4*x5 + "
    "x3*x5^2 + x4*x5^2 - x5^3";

const char* kForm1 =
    "x3*x4^2 + (x1*x2 + x3^2)*x5 + e1*x4^2*x5 + e2*x4*x5^2 + e3*x5^3";

}  // namespace

TEST_CASE("buchberger: toy examples give the expected reduced bases") {
    auto t = VarTable::make({{"x", VarRole::Unknown}, {"y", VarRole::Unknown}});
    PolySystem sys;
    sys.table = t;
    sys.unknowns = {0, 1};
    sys.equations = {parse_poly("x^2 - 1", t), parse_poly("x - 1", t)};
    auto gb = buchberger(sys, false);
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == parse_poly("x - 1", t));

    PolySystem sys2;
    sys2.table = t;
    sys2.unknowns = {0, 1};
    sys2.equations = {parse_poly("x", t), parse_poly("x - y", t)};
    auto gb2 = buchberger(sys2, false);
    REQUIRE(gb2.basis.size() == 2);
    CHECK(gb2.basis[0] == parse_poly("x", t));
    CHECK(gb2.basis[1] == parse_poly("y", t));

    // staircase: <x - 1, y> in two unknowns is zero dimensional.
    PolySystem sys3;
    sys3.table = t;
    sys3.unknowns = {0, 1};
    sys3.equations = {parse_poly("x - 1", t), parse_poly("y", t)};
    CHECK(staircase_dimension(buchberger(sys3, false)) == 0);
}

TEST_CASE("reduced basis is canonical under permuted input") {
    auto t = VarTable::make({{"x", VarRole::Unknown},
                             {"y", VarRole::Unknown},
                             {"z", VarRole::Unknown}});
    std::vector<MPoly> eqs = {parse_poly("x^2 + y^2 + z^2 - 1", t),
                              parse_poly("x*y - z", t),
                              parse_poly("x - y", t)};
    std::vector<std::vector<size_t>> perms = {{0, 1, 2}, {2, 1, 0}, {1, 2, 0}};
    std::vector<std::string> results;
    for (const auto& p : perms) {
        PolySystem sys;
        sys.table = t;
        sys.unknowns = {0, 1, 2};
        for (size_t i : p) sys.equations.push_back(eqs[i]);
        auto gb = buchberger(sys, false);
        std::string repr;
        for (const auto& b : gb.basis) repr += b.to_string() + ";";
        results.push_back(repr);
    }
    CHECK(results[0] == results[1]);
    CHECK(results[0] == results[2]);
}

TEST_CASE("invariance_system: one-unknown scaling of x1") {
    auto t = geo5();
    MPoly f = parse_poly("x1", t);
    MatrixShape s;
    s.dim = 5;
    s.entries = {U("u"), K(0), K(0), K(0), K(0),
                 K(0), K(1), K(0), K(0), K(0),
                 K(0), K(0), K(1), K(0), K(0),
                 K(0), K(0), K(0), K(1), K(0),
                 K(0), K(0), K(0), K(0), K(1)};
    PolySystem sys = invariance_system(f, s, /*unknown_multiplier=*/true);
    REQUIRE(sys.equations.size() == 1);
    CHECK(sys.equations[0] == parse_poly("u - lam", sys.table));
}

TEST_CASE("line case (1): the stabilizer system cuts out the trivial group") {
    auto t = geo5();
    MPoly f = parse_poly(kLine1, t);
    PolySystem sys = invariance_system(
        f, line_stab_shape(), true,
        "d1*(e2u*f3 - e3u*f2) - e1u*(d2*f3 - d3*f2) + f1*(d2*e3u - d3*e2u)");
    auto gb = buchberger(sys, /*localize=*/true);
    // Expected: the linear ideal forcing the identity matrix, multiplier 1,
    // localization variable 1; the parameter a1 stays free.
    std::vector<std::string> expected = {
        "b1", "b2", "b3", "c1", "c2", "c3", "d2", "d3", "e1u", "e3u",
        "f1", "f2", "d1 - 1", "e2u - 1", "f3 - 1", "lam - 1", "w_loc - 1"};
    auto table = gb.basis.empty() ? sys.table : gb.basis[0].table();
    std::vector<MPoly> expected_polys;
    for (const auto& e : expected) expected_polys.push_back(parse_poly(e, table));
    RelationSet expected_rels(expected_polys);
    for (const auto& b : gb.basis) CHECK(reduce_mod(b, expected_rels).is_zero());
    for (const auto& e : expected_polys) CHECK(gb_reduce(e, gb).is_zero());
    CHECK(staircase_dimension(gb) == 1);  // only a1 is free
}

TEST_CASE("line case (4): two-torus system has staircase dimension 2") {
    auto t = geo5();
    MPoly f = parse_poly("x1*x3^2 + x2*x4^2 + x5^3", t);
    MatrixShape s;
    s.dim = 5;
    s.entries = {U("m11"), K(0), K(0), K(0), K(0),
                 K(0), U("m22"), K(0), K(0), K(0),
                 K(0), K(0), U("m33"), K(0), K(0),
                 K(0), K(0), K(0), U("m44"), K(0),
                 K(0), K(0), K(0), K(0), K(1)};
    PolySystem sys = invariance_system(f, s, true, "m11*m22*m33*m44");
    auto gb = buchberger(sys, true);
    CHECK(staircase_dimension(gb) == 2);
    // The claimed torus family satisfies the system.
    auto ft = VarTable::extended(sys.table, {{"t1", VarRole::Parameter},
                                             {"t1i", VarRole::Parameter},
                                             {"t2", VarRole::Parameter},
                                             {"t2i", VarRole::Parameter}});
    std::map<std::string, MPoly> family = {
        {"m11", parse_poly("t1i^2", ft)}, {"m22", parse_poly("t2i^2", ft)},
        {"m33", parse_poly("t1", ft)},    {"m44", parse_poly("t2", ft)},
        {"lam", parse_poly("1", ft)}};
    RelationSet rels({parse_poly("t1*t1i - 1", ft), parse_poly("t2*t2i - 1", ft)});
    auto check = verify_solution_family(sys, family, rels);
    CHECK(check.ok);
}

TEST_CASE("generic conic torus system has staircase dimension 1") {
    auto t = geo5();
    MPoly f = parse_poly(kForm1, t);
    MatrixShape s;
    s.dim = 5;
    s.entries = {U("m11"), K(0), K(0), K(0), K(0),
                 K(0), U("m22"), K(0), K(0), K(0),
                 K(0), K(0), K(1), K(0), K(0),
                 K(0), K(0), K(0), K(1), K(0),
                 K(0), K(0), K(0), K(0), K(1)};
    PolySystem sys = invariance_system(f, s, false, "m11*m22");
    // Symbolic e-parameters cancel: the only equation is m11*m22 - 1.
    REQUIRE(sys.equations.size() == 1);
    CHECK(sys.equations[0] == parse_poly("m11*m22 - 1", sys.table));
    auto gb = buchberger(sys, true);
    CHECK(staircase_dimension(gb) == 1);
}

TEST_CASE("plane case: full stabilizer pattern collapses to the 3-parameter family") {
    auto t = geo5();
    MPoly f = parse_poly("x1*x4^2 + x2*x4*x5 + x3*x5^2", t);
    PolySystem sys = invariance_system(f, plane_stab_shape(), true, "m44*m55");
    auto gb = buchberger(sys, true);
    CHECK(staircase_dimension(gb) == 3);

    // The displayed family (alpha, beta, gamma) satisfies the system...
    std::map<std::string, MPoly> family = {
        {"m41", parse_poly("0", sys.table)},
        {"m42", parse_poly("-alpha", sys.table)},
        {"m43", parse_poly("-beta", sys.table)},
        {"m44", parse_poly("gamma", sys.table)},
        {"m45", parse_poly("0", sys.table)},
        {"m51", parse_poly("alpha", sys.table)},
        {"m52", parse_poly("beta", sys.table)},
        {"m53", parse_poly("0", sys.table)},
        {"m54", parse_poly("0", sys.table)},
        {"m55", parse_poly("gamma", sys.table)},
        {"lam", parse_poly("gamma^2", sys.table)}};
    CHECK(verify_solution_family(sys, family, {}).ok);

    // ... and the system forces the sign-linked pattern: m42 + m51 lies in
    // the ideal, m42 - m51 does not.
    CHECK(gb_reduce(parse_poly("m42 + m51", sys.table), gb).is_zero());
    CHECK(!gb_reduce(parse_poly("m42 - m51", sys.table), gb).is_zero());
    CHECK(gb_reduce(parse_poly("m53", sys.table), gb).is_zero());
}

TEST_CASE("eta generators: solutions of their own systems, rejected elsewhere") {
    auto t = geo5();
    // Case with e1 = e3 = 0: eta2 = diag(1,1,1,zeta3,zeta3^2) is in the
    // stabilizer, with multiplier zeta3^2.
    MPoly conic3 = parse_poly(
        "x3*x4^2 + (x1*x2 + x3^2)*x5 + e2*x4*x5^2", t);
    PolySystem sys3 = invariance_system(conic3, plane_stab_shape(), true,
                                        "m44*m55 - m45*m54");
    std::map<std::string, MPoly> eta2;
    for (const char* n : {"m41", "m42", "m43", "m45", "m51", "m52", "m53", "m54"})
        eta2.emplace(n, MPoly(sys3.table));
    eta2.emplace("m44", MPoly::constant(sys3.table, CycNum::root_of_unity(3)));
    eta2.emplace("m55", MPoly::constant(sys3.table, CycNum::root_of_unity(3, 2)));
    eta2.emplace("lam", MPoly::constant(sys3.table, CycNum::root_of_unity(3, 2)));
    CHECK(verify_solution_family(sys3, eta2, {}).ok);

    // Against the generic form the same assignment leaves an e1-residual.
    MPoly conic1 = parse_poly(kForm1, t);
    PolySystem sys1 = invariance_system(conic1, plane_stab_shape(), true,
                                        "m44*m55 - m45*m54");
    auto fail = verify_solution_family(sys1, eta2, {});
    CHECK(!fail.ok);
    CHECK(fail.residual.find("e1") != std::string::npos);
}

TEST_CASE("resource caps reject oversized inputs") {
    auto t = VarTable::make({{"x", VarRole::Unknown}});
    PolySystem sys;
    sys.table = t;
    sys.unknowns = {0};
    sys.equations = {parse_poly("x^13 - 1", t)};
    CHECK_THROWS_AS(buchberger(sys, false), cap_exceeded);
}
