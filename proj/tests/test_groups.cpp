#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubics/groups.hpp"

#include <algorithm>
#include <random>

using namespace cubics;

namespace {

ScalarMatrix zeros(size_t n) { return ScalarMatrix(n); }

// sigma1 = (x2, x1, x3, x5, x4)
ScalarMatrix sigma1() {
    ScalarMatrix m = zeros(5);
    m.at(0, 1) = CycNum(1);
    m.at(1, 0) = CycNum(1);
    m.at(2, 2) = CycNum(1);
    m.at(3, 4) = CycNum(1);
    m.at(4, 3) = CycNum(1);
    return m;
}

// sigma2 = (zeta3 x1, zeta3^2 x2, x4, x5, x3)
ScalarMatrix sigma2() {
    ScalarMatrix m = zeros(5);
    m.at(0, 0) = CycNum::root_of_unity(3);
    m.at(1, 1) = CycNum::root_of_unity(3, 2);
    m.at(3, 2) = CycNum(1);
    m.at(4, 3) = CycNum(1);
    m.at(2, 4) = CycNum(1);
    return m;
}

ScalarMatrix diag(std::vector<CycNum> entries) {
    ScalarMatrix m = zeros(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

ScalarMatrix swap12_5() {
    ScalarMatrix m = ScalarMatrix::identity(5);
    m.at(0, 0) = CycNum(0);
    m.at(1, 1) = CycNum(0);
    m.at(0, 1) = CycNum(1);
    m.at(1, 0) = CycNum(1);
    return m;
}

CurveParam conic(const VarTablePtr& t) {
    CurveParam c;
    c.s_var = t->index_of("s");
    c.t_var = t->index_of("t");
    c.components = {parse_poly("s^2", t), parse_poly("-t^2", t), parse_poly("s*t", t),
                    MPoly(t), MPoly(t)};
    return c;
}

VarTablePtr small_table() {
    return VarTable::make({{"x1", VarRole::Geometry},
                           {"x2", VarRole::Geometry},
                           {"x3", VarRole::Geometry},
                           {"x4", VarRole::Geometry},
                           {"x5", VarRole::Geometry},
                           {"s", VarRole::Curve},
                           {"t", VarRole::Curve}});
}

}  // namespace

TEST_CASE("closure orders for the line-case groups") {
    auto s3 = FiniteMatrixGroup::close({sigma1(), sigma2()});
    CHECK(s3.order() == 6);
    CHECK(!s3.abelian());
    CHECK(recognize(fingerprint(s3)) == "S3");

    ScalarMatrix iota1 = diag({CycNum(1), CycNum(1), CycNum(1), CycNum(-1), CycNum(-1)});
    auto s4 = FiniteMatrixGroup::close({sigma1(), sigma2(), iota1});
    CHECK(s4.order() == 24);
    auto fp = fingerprint(s4);
    CHECK(fp.order_histogram ==
          std::map<size_t, size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    CHECK(fp.derived_order == 12);
    CHECK(recognize(fp) == "S4");
}

TEST_CASE("Klein four-group and dihedral specializations") {
    ScalarMatrix tau_m1 = diag({CycNum(-1), CycNum(-1), CycNum(1), CycNum(1), CycNum(1)});
    auto klein = FiniteMatrixGroup::close({tau_m1, swap12_5()});
    CHECK(klein.order() == 4);
    CHECK(klein.abelian());
    auto fp = fingerprint(klein);
    CHECK(fp.order_histogram == std::map<size_t, size_t>{{1, 1}, {2, 3}});
    CHECK(recognize(fp) == "C2^2");

    ScalarMatrix tau_i = diag({CycNum::root_of_unity(4), -CycNum::root_of_unity(4),
                               CycNum(1), CycNum(1), CycNum(1)});
    auto d4 = FiniteMatrixGroup::close({tau_i, swap12_5()});
    CHECK(d4.order() == 8);
    CHECK(recognize(fingerprint(d4)) == "D4");

    // With eta1 = diag(1,1,1,-1,1): the direct product C2 x D4.
    ScalarMatrix eta1 = diag({CycNum(1), CycNum(1), CycNum(1), CycNum(-1), CycNum(1)});
    auto cd = FiniteMatrixGroup::close({tau_i, swap12_5(), eta1});
    CHECK(cd.order() == 16);
    CHECK(recognize(fingerprint(cd)) == "C2 x D4");
}

TEST_CASE("close caps runaway groups and is generator-order independent") {
    ScalarMatrix shear = ScalarMatrix::identity(2);
    shear.at(1, 0) = CycNum(1);
    CHECK_THROWS_AS(FiniteMatrixGroup::close({shear}, 64), cap_exceeded);

    auto a = FiniteMatrixGroup::close({sigma1(), sigma2()});
    auto b = FiniteMatrixGroup::close({sigma2(), sigma1()});
    REQUIRE(a.order() == b.order());
    std::vector<std::string> ka, kb;
    for (const auto& m : a.elements()) ka.push_back(m.key(3));
    for (const auto& m : b.elements()) kb.push_back(m.key(3));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    CHECK(ka == kb);
}

TEST_CASE("recognition is stable under conjugating the generators") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(-2, 2);
    for (int attempt = 0; attempt < 5; ++attempt) {
        ScalarMatrix conj(5);
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 5; ++j) conj.at(i, j) = CycNum(d(rng));
        auto inv = conj.inverse();
        if (!inv) continue;
        ScalarMatrix g1 = *inv * sigma1() * conj;
        ScalarMatrix g2 = *inv * sigma2() * conj;
        auto g = FiniteMatrixGroup::close({g1, g2});
        CHECK(g.order() == 6);
        CHECK(recognize(fingerprint(g)) == "S3");
    }
}

TEST_CASE("orbits: the three singular fibers and the four blown-up points") {
    auto s3 = FiniteMatrixGroup::close({sigma1(), sigma2()});
    ProjPoint p{{CycNum(1), CycNum(-1), CycNum(0), CycNum(0), CycNum(0)}};
    auto orb = orbit(s3, p);
    CHECK(orb.size() == 3);
    std::vector<ProjPoint> expected = {
        {{CycNum(1), CycNum(-1), CycNum(0), CycNum(0), CycNum(0)}},
        {{CycNum(1), -CycNum::root_of_unity(3), CycNum(0), CycNum(0), CycNum(0)}},
        {{CycNum(1), -CycNum::root_of_unity(3, 2), CycNum(0), CycNum(0), CycNum(0)}}};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& q : orb)
            if (q.proportional_to(e)) found = true;
        CHECK(found);
    }
    // Orbit-stabilizer.
    CHECK(orb.size() * stabilizer_order(s3, p) == s3.order());

    // Identity group fixes everything.
    auto triv = FiniteMatrixGroup::close({ScalarMatrix::identity(5)});
    CHECK(orbit(triv, p).size() == 1);

    // Induced P^2 action of S4 on [1:1:1]: the four points in general position.
    ScalarMatrix b1 = zeros(3);  // swap of the last two coordinates
    b1.at(0, 0) = CycNum(1);
    b1.at(1, 2) = CycNum(1);
    b1.at(2, 1) = CycNum(1);
    ScalarMatrix b2 = zeros(3);  // 3-cycle
    b2.at(1, 0) = CycNum(1);
    b2.at(2, 1) = CycNum(1);
    b2.at(0, 2) = CycNum(1);
    ScalarMatrix b3 = diag({CycNum(1), CycNum(-1), CycNum(-1)});
    auto p2 = FiniteMatrixGroup::close({b1, b2, b3});
    CHECK(p2.order() == 24);
    ProjPoint one3{{CycNum(1), CycNum(1), CycNum(1)}};
    auto orb4 = orbit(p2, one3);
    CHECK(orb4.size() == 4);
    std::vector<ProjPoint> pts = {{{CycNum(1), CycNum(1), CycNum(1)}},
                                  {{CycNum(1), CycNum(1), CycNum(-1)}},
                                  {{CycNum(1), CycNum(-1), CycNum(1)}},
                                  {{CycNum(-1), CycNum(1), CycNum(1)}}};
    for (const auto& e : pts) {
        bool found = false;
        for (const auto& q : orb4)
            if (q.proportional_to(e)) found = true;
        CHECK(found);
    }
    CHECK(orb4.size() * stabilizer_order(p2, one3) == p2.order());
}

TEST_CASE("common fixed points on the conic") {
    auto t = small_table();
    CurveParam c = conic(t);
    ScalarMatrix tau_m1 = diag({CycNum(-1), CycNum(-1), CycNum(1), CycNum(1), CycNum(1)});

    auto klein = FiniteMatrixGroup::close({tau_m1, swap12_5()});
    auto none = common_fixed_point_on_curve(klein, c, 12);
    CHECK(none.status == CommonFixedPointResult::Status::None);
    CHECK(!none.witness.empty());

    auto c2 = FiniteMatrixGroup::close({tau_m1});
    auto pt = common_fixed_point_on_curve(c2, c, 12);
    REQUIRE(pt.status == CommonFixedPointResult::Status::Point);
    CHECK(pt.parameter_point.proportional_to(ProjPoint{{CycNum(1), CycNum(0)}}));

    auto triv = FiniteMatrixGroup::close({ScalarMatrix::identity(5)});
    auto whole = common_fixed_point_on_curve(triv, c, 12);
    CHECK(whole.status == CommonFixedPointResult::Status::WholeCurve);
    CHECK(whole.parameter_point.proportional_to(ProjPoint{{CycNum(1), CycNum(0)}}));

    // D4 = <tau_{zeta4}, sigma_(12)>: still no common fixed point.
    ScalarMatrix tz = diag({CycNum::root_of_unity(4), -CycNum::root_of_unity(4),
                            CycNum(1), CycNum(1), CycNum(1)});
    auto d4 = FiniteMatrixGroup::close({tz, swap12_5()});
    auto nd = common_fixed_point_on_curve(d4, c, 12);
    CHECK(nd.status == CommonFixedPointResult::Status::None);

    // An element not preserving the conic is reported as such.
    ScalarMatrix swap34 = ScalarMatrix::identity(5);
    swap34.at(2, 2) = CycNum(0);
    swap34.at(3, 3) = CycNum(0);
    swap34.at(2, 3) = CycNum(1);
    swap34.at(3, 2) = CycNum(1);
    auto broken = FiniteMatrixGroup::close({swap34, tau_m1}, 64);
    auto cn = common_fixed_point_on_curve(broken, c, 12);
    CHECK(cn.status == CommonFixedPointResult::Status::CurveNotPreserved);
}

TEST_CASE("fixed point checks at the chordal smooth point") {
    auto t = small_table();
    MPoly chordal = parse_poly(
        "x1*x4^2 + x2^2*x5 - x1*x3*x5 - 2*x2*x3*x4 + x3^3", t);
    ProjPoint p{{CycNum(1), CycNum(0), CycNum(1), CycNum(0), CycNum(1)}};

    ScalarMatrix k1 = diag({CycNum(1), CycNum(-1), CycNum(1), CycNum(-1), CycNum(1)});
    auto r1 = fixed_points_check(k1, p, chordal);
    CHECK(r1.fixed);
    CHECK(r1.on_variety);
    CHECK(r1.smooth);

    ScalarMatrix k2 = zeros(5);  // full reversal
    for (size_t i = 0; i < 5; ++i) k2.at(i, 4 - i) = CycNum(1);
    auto r2 = fixed_points_check(k2, p, chordal);
    CHECK(r2.fixed);
    CHECK(r2.on_variety);
    CHECK(r2.smooth);

    // sigma1 moves [1:0:0:0:0].
    ProjPoint e1{{CycNum(1), CycNum(0), CycNum(0), CycNum(0), CycNum(0)}};
    auto r3 = fixed_points_check(sigma1(), e1, chordal);
    CHECK(!r3.fixed);
}

TEST_CASE("element orders and Cayley structure") {
    auto s3 = FiniteMatrixGroup::close({sigma1(), sigma2()});
    std::map<size_t, size_t> hist;
    for (size_t i = 0; i < s3.order(); ++i) hist[s3.element_order(i)]++;
    CHECK(hist == std::map<size_t, size_t>{{1, 1}, {2, 3}, {3, 2}});
    for (size_t i = 0; i < s3.order(); ++i)
        CHECK(s3.multiply(i, s3.inverse(i)) == 0);
}
