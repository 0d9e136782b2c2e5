#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubics/projalg.hpp"

#include <random>

using namespace cubics;

namespace {

VarTablePtr base_table() {
    return VarTable::make({{"x1", VarRole::Geometry},
                           {"x2", VarRole::Geometry},
                           {"x3", VarRole::Geometry},
                           {"x4", VarRole::Geometry},
                           {"x5", VarRole::Geometry},
                           {"s", VarRole::Curve},
                           {"t", VarRole::Curve},
                           {"a", VarRole::Parameter},
                           {"b", VarRole::Parameter},
                           {"c", VarRole::Parameter},
                           {"d", VarRole::Parameter},
                           {"u1", VarRole::Parameter},
                           {"u2", VarRole::Parameter},
                           {"u3", VarRole::Parameter},
                           {"u4", VarRole::Parameter},
                           {"u5", VarRole::Parameter}});
}

const char* kChordal = "x1*x4^2 + x2^2*x5 - x1*x3*x5 - 2*x2*x3*x4 + x3^3";
const char* kQ1 = "x3^2 + zeta(3)*x4^2 + zeta(3)^2*x5^2";
const char* kQ2 = "x3^2 + zeta(3)^2*x4^2 + zeta(3)*x5^2";

PolyMatrix generic2(const VarTablePtr& t) {
    PolyMatrix m(t, 2);
    m.at(0, 0) = parse_poly("a", t);
    m.at(0, 1) = parse_poly("b", t);
    m.at(1, 0) = parse_poly("c", t);
    m.at(1, 1) = parse_poly("d", t);
    return m;
}

PolyMatrix const2(const VarTablePtr& t, long a, long b, long c, long d) {
    PolyMatrix m(t, 2);
    m.at(0, 0) = MPoly::constant(t, CycNum(a));
    m.at(0, 1) = MPoly::constant(t, CycNum(b));
    m.at(1, 0) = MPoly::constant(t, CycNum(c));
    m.at(1, 1) = MPoly::constant(t, CycNum(d));
    return m;
}

CurveParam conic_curve(const VarTablePtr& t) {
    CurveParam c;
    c.label = "C";
    c.s_var = t->index_of("s");
    c.t_var = t->index_of("t");
    c.components = {parse_poly("s^2", t), parse_poly("-t^2", t), parse_poly("s*t", t),
                    MPoly(t), MPoly(t)};
    return c;
}

CurveParam quartic_curve(const VarTablePtr& t) {
    CurveParam c;
    c.label = "nu4";
    c.s_var = t->index_of("s");
    c.t_var = t->index_of("t");
    c.components = {parse_poly("s^4", t), parse_poly("s^3*t", t), parse_poly("s^2*t^2", t),
                    parse_poly("s*t^3", t), parse_poly("t^4", t)};
    return c;
}

ScalarMatrix diag5(std::initializer_list<CycNum> entries) {
    ScalarMatrix m(5);
    size_t i = 0;
    for (const auto& e : entries) {
        m.at(i, i) = e;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("sym_power: identity and diagonal examples") {
    auto t = base_table();
    size_t s = t->index_of("s"), tt = t->index_of("t");
    PolyMatrix id = const2(t, 1, 0, 0, 1);
    PolyMatrix s4 = sym_power(id, 4, s, tt);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            CHECK(s4.at(i, j) == MPoly::constant(t, CycNum(i == j ? 1 : 0)));

    // diag(a, a_inv) with the torus relation gives diag(a^4, a^2, 1, ...).
    auto ext = VarTable::extended(t, {{"a_inv", VarRole::Parameter}});
    PolyMatrix tor(ext, 2);
    tor.at(0, 0) = parse_poly("a", ext);
    tor.at(1, 1) = parse_poly("a_inv", ext);
    RelationSet rel({parse_poly("a*a_inv - 1", ext)});
    PolyMatrix st = sym_power(tor, 4, ext->index_of("s"), ext->index_of("t"), rel);
    CHECK(st.at(0, 0) == parse_poly("a^4", ext));
    CHECK(st.at(1, 1) == parse_poly("a^2", ext));
    CHECK(st.at(2, 2) == parse_poly("1", ext));
    CHECK(st.at(3, 3) == parse_poly("a_inv^2", ext));
    CHECK(st.at(4, 4) == parse_poly("a_inv^4", ext));
    CHECK(st.at(0, 1).is_zero());
}

TEST_CASE("sym_power is a homomorphism and matches curve composition") {
    auto t = base_table();
    size_t sv = t->index_of("s"), tv = t->index_of("t");
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int iter = 0; iter < 8; ++iter) {
        PolyMatrix m1 = const2(t, d(rng), d(rng), d(rng), d(rng));
        PolyMatrix m2 = const2(t, d(rng), d(rng), d(rng), d(rng));
        for (long deg : {2L, 4L}) {
            PolyMatrix lhs = sym_power(m1 * m2, deg, sv, tv);
            PolyMatrix rhs = sym_power(m1, deg, sv, tv) * sym_power(m2, deg, sv, tv);
            for (size_t i = 0; i <= static_cast<size_t>(deg); ++i)
                for (size_t j = 0; j <= static_cast<size_t>(deg); ++j)
                    CHECK(lhs.at(i, j) == rhs.at(i, j));
        }
        // nu_d((s,t) m) = nu_d(s,t) * sym_power(m, d), exactly.
        CurveParam nu = quartic_curve(t);
        PolyMatrix sp = sym_power(m1, 4, sv, tv);
        MPoly s = MPoly::variable(t, sv), tp = MPoly::variable(t, tv);
        std::map<size_t, MPoly> move = {{sv, s * m1.at(0, 0) + tp * m1.at(1, 0)},
                                        {tv, s * m1.at(0, 1) + tp * m1.at(1, 1)}};
        auto moved = sp.apply_row(nu.components);
        for (size_t j = 0; j < 5; ++j)
            CHECK(nu.components[j].substituted(move) == moved[j]);
    }
}

TEST_CASE("sym_power conjugation reproduces the conic-case 5x5 block") {
    auto t = base_table();
    size_t sv = t->index_of("s"), tv = t->index_of("t");
    PolyMatrix sym2 = sym_power(generic2(t), 2, sv, tv);
    auto C = [&](const char* e) { return parse_poly(e, t); };

    // 5x5 block displayed for the second conic normal form.
    PolyMatrix paper(t, 5);
    paper.at(0, 0) = C("a^2");
    paper.at(0, 1) = C("b^2");
    paper.at(0, 2) = C("zeta(4)*a*b");
    paper.at(1, 0) = C("c^2");
    paper.at(1, 1) = C("d^2");
    paper.at(1, 2) = C("zeta(4)*c*d");
    paper.at(2, 0) = C("-2*zeta(4)*a*c");
    paper.at(2, 1) = C("-2*zeta(4)*b*d");
    paper.at(2, 2) = C("a*d + b*c");
    paper.at(3, 3) = C("a*d - b*c");
    paper.at(4, 4) = C("a*d - b*c");

    // Sym^2 extended by det on the last two coordinates.
    PolyMatrix symd(t, 5);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) symd.at(i, j) = sym2.at(i, j);
    symd.at(3, 3) = C("a*d - b*c");
    symd.at(4, 4) = C("a*d - b*c");

    // Conjugator: basis change (s^2, st, t^2) -> (s^2, -t^2, st) twisted by
    // zeta_4, identity on the last two coordinates.
    PolyMatrix conj(t, 5);
    conj.at(0, 0) = C("1");
    conj.at(1, 2) = C("zeta(4)");
    conj.at(2, 1) = C("1");
    conj.at(3, 3) = C("1");
    conj.at(4, 4) = C("1");

    PolyMatrix lhs = conj * paper;
    PolyMatrix rhs = symd * conj;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
}

TEST_CASE("chordal semi-invariance under Sym^4: exponent from the specialization oracle") {
    auto t = base_table();
    size_t sv = t->index_of("s"), tv = t->index_of("t");
    MPoly f = parse_poly(kChordal, t);

    // Oracle: at random constant matrices, the ratio f(x Sym) / f is det^k;
    // find k by exact division, independently of the matching algorithm.
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-3, 3);
    long exponent = -1;
    for (int iter = 0; iter < 5; ++iter) {
        long a = d(rng), b = d(rng), c = d(rng), dd = d(rng);
        long det_l = a * dd - b * c;
        if (det_l == 0 || det_l == 1 || det_l == -1) continue;  // det^k ambiguous
        CycNum det = CycNum(det_l);
        PolyMatrix sym = sym_power(const2(t, a, b, c, dd), 4, sv, tv);
        MPoly moved = linear_change(f, sym);
        // ratio of leading coefficients; then verify moved == ratio * f.
        CycNum ratio = moved.leading_coeff() / f.leading_coeff();
        CHECK(moved == f * ratio);
        long k = 0;
        CycNum r = ratio;
        while (!r.is_one() && k <= 12) {
            r = r / det;
            ++k;
        }
        CHECK(r.is_one());
        if (exponent < 0) exponent = k;
        CHECK(exponent == k);
    }
    CHECK(exponent == 6);

    // Symbolic run must return exactly (ad - bc)^6.
    PolyMatrix sym = sym_power(generic2(t), 4, sv, tv);
    std::set<size_t> mult_vars = {t->index_of("a"), t->index_of("b"),
                                  t->index_of("c"), t->index_of("d")};
    auto lambda = semi_invariance(f, sym, mult_vars, {});
    REQUIRE(lambda);
    CHECK(*lambda == parse_poly("(a*d - b*c)^6", t));
}

TEST_CASE("map_apply: coordinate projection, unprojection image, indeterminacy") {
    auto t = base_table();
    std::vector<size_t> geo = t->indices_with_role(VarRole::Geometry);

    RationalMap chi;
    chi.factors = {{parse_poly("x1", t), parse_poly("x2", t)},
                   {parse_poly("x3", t), parse_poly("x4", t), parse_poly("x5", t)}};
    ProjPoint ones{{CycNum(1), CycNum(1), CycNum(1), CycNum(1), CycNum(1)}};
    auto v = map_apply(chi, ones, geo);
    REQUIRE(!v.indeterminate);
    CHECK(v.factors[0].proportional_to(ProjPoint{{CycNum(1), CycNum(1)}}));
    CHECK(v.factors[1].proportional_to(ProjPoint{{CycNum(1), CycNum(1), CycNum(1)}}));

    RationalMap rho;
    rho.factors = {{parse_poly("x2*x3", t), parse_poly("x2*x4", t), parse_poly("x2*x5", t),
                    parse_poly(kQ1, t)}};
    ProjPoint p{{CycNum(0), CycNum(1), CycNum(1), CycNum(0), CycNum(0)}};
    auto rv = map_apply(rho, p, geo);
    REQUIRE(!rv.indeterminate);
    CHECK(rv.factors[0].proportional_to(
        ProjPoint{{CycNum(1), CycNum(0), CycNum(0), CycNum(1)}}));

    RationalMap phi;
    phi.factors = {{parse_poly("x1*x2", t), parse_poly("x2^2", t), parse_poly("x3*x2", t),
                    parse_poly("x4*x2", t), parse_poly("x5*x2", t), parse_poly(kQ1, t)}};
    // x2 = 0 and q1 = 0: all six components vanish.
    ProjPoint ind{{CycNum(1), CycNum(0), CycNum(0), CycNum::root_of_unity(12, 5), CycNum(1)}};
    auto iv = map_apply(phi, ind, geo);
    CHECK(iv.indeterminate);
}

TEST_CASE("maps_equal_mod: unprojection identity and a broken permutation") {
    auto t = base_table();
    auto ext = VarTable::extended(t, {{"e1", VarRole::Parameter},
                                      {"e2", VarRole::Parameter},
                                      {"e3", VarRole::Parameter}});
    MPoly cubic = parse_poly(
        "x3*x4^2 + (x1*x2 + x3^2)*x5 + e1*x4^2*x5 + e2*x4*x5^2 + e3*x5^3", ext);
    RelationSet rels({cubic});
    RationalMap phi, psi;
    phi.factors = {{parse_poly("x1*x5", ext), parse_poly("x2*x5", ext),
                    parse_poly("x3*x5", ext), parse_poly("x4*x5", ext),
                    parse_poly("x5^2", ext),
                    parse_poly("x3*x4 + e1*x4*x5 + e2*x5^2", ext)}};
    psi.factors = {{parse_poly("-x1*x4", ext), parse_poly("-x2*x4", ext),
                    parse_poly("-x3*x4", ext), parse_poly("-x4^2", ext),
                    parse_poly("-x4*x5", ext),
                    parse_poly("x1*x2 + x3^2 + e3*x5^2", ext)}};
    CHECK(maps_equal_mod(phi, psi, rels));
    CHECK(maps_equal_mod(phi, phi, rels));

    // Coordinate permutation of the projection is a different map.
    MPoly case1 = parse_poly(kQ1, ext) * parse_poly("x1", ext) +
                  parse_poly(kQ2, ext) * parse_poly("x2", ext) +
                  parse_poly("x3*x4*x5", ext);
    RationalMap chi, chip;
    chi.factors = {{parse_poly("x1", ext), parse_poly("x2", ext)},
                   {parse_poly("x3", ext), parse_poly("x4", ext), parse_poly("x5", ext)}};
    chip.factors = {{parse_poly("x1", ext), parse_poly("x2", ext)},
                    {parse_poly("x4", ext), parse_poly("x3", ext), parse_poly("x5", ext)}};
    CHECK(!maps_equal_mod(chi, chip, RelationSet({case1})));
}

TEST_CASE("transport_action: identity, the case-(3) projection, factor maps") {
    auto t = base_table();
    std::vector<size_t> geo = t->indices_with_role(VarRole::Geometry);
    MPoly case3 = parse_poly(kQ1, t) * parse_poly("x1", t) +
                  parse_poly(kQ2, t) * parse_poly("x2", t);
    RelationSet rels({case3});

    RationalMap rho;
    rho.factors = {{parse_poly("x2*x3", t), parse_poly("x2*x4", t), parse_poly("x2*x5", t),
                    parse_poly(kQ1, t)}};

    ScalarMatrix id5 = ScalarMatrix::identity(5);
    auto tid = transport_action(rho, id5, geo, rels);
    REQUIRE(tid.status == TransportResult::Status::Found);
    CHECK(tid.factor_actions[0].is_identity_projective());

    // sigma1 = (x2, x1, x3, x5, x4)
    ScalarMatrix sigma1(5);
    sigma1.at(0, 1) = CycNum(1);
    sigma1.at(1, 0) = CycNum(1);
    sigma1.at(2, 2) = CycNum(1);
    sigma1.at(3, 4) = CycNum(1);
    sigma1.at(4, 3) = CycNum(1);
    auto ts = transport_action(rho, sigma1, geo, rels);
    REQUIRE(ts.status == TransportResult::Status::Found);
    ScalarMatrix expected(4);
    expected.at(0, 0) = CycNum(1);
    expected.at(1, 2) = CycNum(1);
    expected.at(2, 1) = CycNum(1);
    expected.at(3, 3) = CycNum(-1);
    CHECK(ts.factor_actions[0].key(12) == expected.canonicalized().key(12));

    // chi transports factorwise; sigma2 induces (zeta3, zeta3^2) x cycle.
    RationalMap chi;
    chi.factors = {{parse_poly("x1", t), parse_poly("x2", t)},
                   {parse_poly("x3", t), parse_poly("x4", t), parse_poly("x5", t)}};
    ScalarMatrix sigma2(5);
    sigma2.at(0, 0) = CycNum::root_of_unity(3);
    sigma2.at(1, 1) = CycNum::root_of_unity(3, 2);
    sigma2.at(3, 2) = CycNum(1);
    sigma2.at(4, 3) = CycNum(1);
    sigma2.at(2, 4) = CycNum(1);
    auto tc = transport_action(chi, sigma2, geo, rels);
    REQUIRE(tc.status == TransportResult::Status::Found);
    ScalarMatrix h1(2);
    h1.at(0, 0) = CycNum::root_of_unity(3);
    h1.at(1, 1) = CycNum::root_of_unity(3, 2);
    CHECK(tc.factor_actions[0].key(12) == h1.canonicalized().key(12));
    ScalarMatrix h2(3);
    h2.at(1, 0) = CycNum(1);
    h2.at(2, 1) = CycNum(1);
    h2.at(0, 2) = CycNum(1);
    CHECK(tc.factor_actions[1].key(12) == h2.canonicalized().key(12));
}

TEST_CASE("curve containment and singular loci") {
    auto t = base_table();
    auto ext = VarTable::extended(t, {{"e1", VarRole::Parameter},
                                      {"e2", VarRole::Parameter},
                                      {"e3", VarRole::Parameter}});
    MPoly chordal = parse_poly(kChordal, ext);
    CurveParam nu4 = quartic_curve(ext);
    CurveParam conic = conic_curve(ext);
    MPoly form1 = parse_poly(
        "x3*x4^2 + (x1*x2 + x3^2)*x5 + e1*x4^2*x5 + e2*x4*x5^2 + e3*x5^3", ext);

    CurveParam line;
    line.s_var = ext->index_of("s");
    line.t_var = ext->index_of("t");
    line.components = {parse_poly("s", ext), parse_poly("t", ext), MPoly(ext), MPoly(ext),
                       MPoly(ext)};
    MPoly line_form = parse_poly(kQ1, ext) * parse_poly("x1", ext) +
                      parse_poly(kQ2, ext) * parse_poly("x2", ext) +
                      parse_poly("x3*x4*x5", ext);
    CHECK(curve_in_hypersurface(line, line_form));
    CHECK(curve_in_hypersurface(nu4, chordal));
    CHECK(curve_in_hypersurface(conic, form1));

    CHECK(singular_along({chordal}, nu4));
    CHECK(singular_along({form1}, conic));
    // Not singular along the line: d/dx5 restricts to s*t + ...
    CHECK(!singular_along({form1}, line));

    // Euler-relation consistency on the catalog pairs.
    for (const auto& [f, c] : {std::pair<MPoly, CurveParam>{chordal, nu4},
                               std::pair<MPoly, CurveParam>{form1, conic}}) {
        if (singular_along({f}, c)) CHECK(curve_in_hypersurface(c, f));
    }
}

TEST_CASE("singular_along for a complete-intersection pair") {
    // X22 for the second conic form is singular along a conic in P^5.
    auto yt = VarTable::make({{"y1", VarRole::Geometry},
                              {"y2", VarRole::Geometry},
                              {"y3", VarRole::Geometry},
                              {"y4", VarRole::Geometry},
                              {"y5", VarRole::Geometry},
                              {"y6", VarRole::Geometry},
                              {"s", VarRole::Curve},
                              {"t", VarRole::Curve},
                              {"e1", VarRole::Parameter},
                              {"e2", VarRole::Parameter}});
    MPoly q1 = parse_poly("y4^2 + e1*y5^2 - y5*y6", yt);
    MPoly q2 = parse_poly("y1*y2 + y3^2 + e2*y5^2 + y4*y6", yt);
    CurveParam c;
    c.s_var = yt->index_of("s");
    c.t_var = yt->index_of("t");
    c.components = {parse_poly("s^2", yt), parse_poly("-t^2", yt), parse_poly("s*t", yt),
                    MPoly(yt), MPoly(yt), MPoly(yt)};
    CHECK(singular_along({q1, q2}, c));
    // Moving the curve off the singular locus breaks it.
    CurveParam off = c;
    off.components[3] = parse_poly("s*t", yt);
    CHECK(!singular_along({q1, q2}, off));
}

TEST_CASE("line_in_hypersurface certifies the one-dimensional fibers") {
    auto t = base_table();
    MPoly case3 = parse_poly(kQ1, t) * parse_poly("x1", t) +
                  parse_poly(kQ2, t) * parse_poly("x2", t);
    MPoly c_part = parse_poly(
        "x3^2*x4 + x3*x4^2 + x3^2*x5 + x4^2*x5 - x3^3 - x4^3 + x3*x4*x5 + x3*x5^2 "
        "+ x4*x5^2 - x5^3", t);
    MPoly case1 = case3 + c_part;

    auto u = [&](const char* n) { return parse_poly(n, t); };
    std::vector<MPoly> P = {u("u1"), u("u2"), MPoly(t), MPoly(t), MPoly(t)};
    std::vector<MPoly> Q = {MPoly(t), MPoly(t), u("u3"), u("u4"), u("u5")};
    size_t sv = t->index_of("s"), tv = t->index_of("t");

    MPoly constraint3 = parse_poly(
        "u1*(u3^2 + zeta(3)*u4^2 + zeta(3)^2*u5^2) + "
        "u2*(u3^2 + zeta(3)^2*u4^2 + zeta(3)*u5^2)", t);
    CHECK(line_in_hypersurface(P, Q, case3, RelationSet({constraint3}), sv, tv));

    MPoly constraint1 = constraint3 + parse_poly(
        "u3^2*u4 + u3*u4^2 + u3^2*u5 + u4^2*u5 - u3^3 - u4^3 + u3*u4*u5 + u3*u5^2 "
        "+ u4*u5^2 - u5^3", t);
    CHECK(!line_in_hypersurface(P, Q, case1, RelationSet({constraint1}), sv, tv));

    CHECK_THROWS_AS(line_in_hypersurface(P, P, case3, {}, sv, tv),
                    std::invalid_argument);
}

TEST_CASE("induced_param_action on the singular conic") {
    auto t = base_table();
    CurveParam conic = conic_curve(t);

    ScalarMatrix tau_m1 = diag5({CycNum(-1), CycNum(-1), CycNum(1), CycNum(1), CycNum(1)});
    auto m = induced_param_action(tau_m1, conic);
    REQUIRE(m);
    ScalarMatrix expect(2);
    expect.at(0, 0) = CycNum(1);
    expect.at(1, 1) = CycNum(-1);
    CHECK(m->key(12) == expect.canonicalized().key(12));
    auto fps = fixed_parameter_points(*m, 12);
    CHECK(fps.factored);
    REQUIRE(fps.points.size() == 2);
    CHECK(fps.points[0].proportional_to(ProjPoint{{CycNum(1), CycNum(0)}}));
    CHECK(fps.points[1].proportional_to(ProjPoint{{CycNum(0), CycNum(1)}}));

    auto mid = induced_param_action(ScalarMatrix::identity(5), conic);
    REQUIRE(mid);
    CHECK(mid->is_identity_projective());

    ScalarMatrix swap12 = ScalarMatrix::identity(5);
    swap12.at(0, 0) = CycNum(0);
    swap12.at(1, 1) = CycNum(0);
    swap12.at(0, 1) = CycNum(1);
    swap12.at(1, 0) = CycNum(1);
    auto ms = induced_param_action(swap12, conic);
    REQUIRE(ms);
    ProjPoint p10{{CycNum(1), CycNum(0)}}, p01{{CycNum(0), CycNum(1)}};
    CHECK(ms->apply(p10).proportional_to(p01));
    CHECK(ms->apply(p01).proportional_to(p10));

    // An action not preserving the conic fails.
    ScalarMatrix shear = ScalarMatrix::identity(5);
    shear.at(0, 2) = CycNum(1);
    CHECK(!induced_param_action(shear, conic));

    // tau_a at a = zeta_4: induced action is diag(a, 1) projectively.
    ScalarMatrix tz = diag5({CycNum::root_of_unity(4), -CycNum::root_of_unity(4),
                             CycNum(1), CycNum(1), CycNum(1)});
    auto mz = induced_param_action(tz, conic);
    REQUIRE(mz);
    ScalarMatrix ez(2);
    ez.at(0, 0) = CycNum::root_of_unity(4);
    ez.at(1, 1) = CycNum(1);
    CHECK(mz->key(12) == ez.canonicalized().key(12));
}

TEST_CASE("try_sqrt supported fragment") {
    CHECK(*try_sqrt(CycNum(4), 12) == CycNum(2));
    CHECK(*try_sqrt(CycNum(0), 12) == CycNum(0));
    auto r = try_sqrt(CycNum(-4), 12);
    REQUIRE(r);
    CHECK(*r * *r == CycNum(-4));
    auto z = try_sqrt(CycNum::root_of_unity(3), 12);
    REQUIRE(z);
    CHECK(*z * *z == CycNum::root_of_unity(3));
    CHECK(!try_sqrt(CycNum(2), 12));
    CHECK(!try_sqrt(CycNum::root_of_unity(4), 12));
    CHECK(!try_sqrt(CycNum(-4), 3));
}

TEST_CASE("fixed_parameter_points edge cases") {
    ScalarMatrix scalar = ScalarMatrix::identity(2);
    auto whole = fixed_parameter_points(scalar, 12);
    CHECK(whole.whole_line);

    ScalarMatrix rot(2);
    rot.at(0, 1) = CycNum(1);
    rot.at(1, 0) = CycNum(1);
    auto f = fixed_parameter_points(rot, 12);
    CHECK(f.factored);
    REQUIRE(f.points.size() == 2);

    ScalarMatrix irr(2);  // fixed points need sqrt(zeta_4): not in Q(zeta_12)
    irr.at(0, 1) = CycNum::root_of_unity(4);
    irr.at(1, 0) = CycNum(1);
    auto g = fixed_parameter_points(irr, 12);
    CHECK(!g.factored);
}
