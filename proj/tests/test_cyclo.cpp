#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubics/cyclo.hpp"

#include <random>

using namespace cubics;

namespace {

// Independent reduction oracle: naive division by Phi_n computed from its
// published coefficient list, kept separate from the CycNum code path.
std::vector<Rational> oracle_reduce(std::vector<Rational> poly,
                                    const std::vector<long>& phi) {
    size_t deg = phi.size() - 1;
    while (poly.size() > deg) {
        Rational c = poly.back();
        poly.pop_back();
        for (size_t j = 0; j < deg; ++j)
            poly[poly.size() - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
    for (auto& q : poly) q.canonicalize();
    return poly;
}

CycNum random_cyc(std::mt19937& rng, unsigned conductor) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> poly(euler_phi(conductor));
    for (auto& q : poly) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return CycNum::from_poly(conductor, poly);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match published tables") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_poly(60).size() == euler_phi(60) + 1);
}

TEST_CASE("construction examples") {
    // zeta_3^2 = -1 - zeta_3
    CycNum z32 = CycNum::root_of_unity(3, 2);
    CHECK(z32.coeffs() == std::vector<Rational>{Rational(-1), Rational(-1)});
    // zeta_4^2 = -1
    CycNum z42 = CycNum::root_of_unity(4, 2);
    CHECK(z42.is_rational());
    CHECK(z42.rational_value() == -1);
    // zeta_12^4 is the canonical image of zeta_3
    CHECK(CycNum::root_of_unity(12, 4) == CycNum::root_of_unity(3).lifted(12));
    CHECK(CycNum::root_of_unity(12, 4) == CycNum::root_of_unity(3));
}

TEST_CASE("arithmetic examples") {
    CycNum one(1);
    CycNum z3 = CycNum::root_of_unity(3);
    // (1 + zeta_3)(1 + zeta_3^2) = 1
    CHECK((one + z3) * (one + z3.pow(2)) == one);
    // inv(zeta_3) = -1 - zeta_3
    CHECK(z3.inverse() == CycNum(-1) - z3);
    CHECK(z3 * z3.inverse() == one);
}

TEST_CASE("zeta_3 + zeta_4 against the brute-force Phi_12 oracle") {
    CycNum sum = CycNum::root_of_unity(3) + CycNum::root_of_unity(4);
    CHECK(sum.conductor() == 12);
    // Oracle: reduce x^4 + x^3 by Phi_12 = x^4 - x^2 + 1 directly.
    std::vector<Rational> poly(5, Rational(0));
    poly[4] = 1;  // zeta_12^4 = image of zeta_3
    poly[3] = 1;  // zeta_12^3 = image of zeta_4
    auto reduced = oracle_reduce(poly, {1, 0, -1, 0, 1});
    CHECK(sum.coeffs() == reduced);
    CHECK(reduced == std::vector<Rational>{Rational(-1), Rational(0), Rational(1), Rational(1)});
}

TEST_CASE("lift examples") {
    CHECK(CycNum::root_of_unity(3).lifted(12) == CycNum::root_of_unity(12, 4));
    CycNum q(Rational(5, 3));
    CHECK(q.lifted(4) == q);
    CHECK(CycNum::root_of_unity(4).lifted(12) == CycNum::root_of_unity(12, 3));
    CHECK_THROWS_AS(CycNum::root_of_unity(4).lifted(6), std::invalid_argument);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(CycNum::root_of_unity(0), std::invalid_argument);
    CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("field axioms on randomized triples at catalog conductors") {
    std::mt19937 rng(20240811);
    for (unsigned n : {1u, 3u, 4u, 6u, 12u}) {
        for (int iter = 0; iter < 40; ++iter) {
            CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
            CHECK((a - b) + b == a);
        }
    }
}

TEST_CASE("equality is decided by canonical form") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        CycNum a = random_cyc(rng, 12), b = random_cyc(rng, 12);
        CHECK(((a - b).is_zero()) == (a == b));
    }
    // Mixed conductors
    CHECK(CycNum::root_of_unity(6) == -CycNum::root_of_unity(3, 2));
}

TEST_CASE("lift is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        CycNum a = random_cyc(rng, 6), b = random_cyc(rng, 6);
        CHECK((a * b).lifted(12) == a.lifted(12) * b.lifted(12));
        CHECK((a + b).lifted(12) == a.lifted(12) + b.lifted(12));
    }
}

TEST_CASE("conductor minimization and printing") {
    CycNum z = CycNum::root_of_unity(12, 4);  // = zeta_3
    CHECK(z.minimized().conductor() == 3);
    CHECK(z.to_string() == "zeta(3)");
    CycNum r = CycNum::root_of_unity(12, 6);  // = -1
    CHECK(r.to_string() == "-1");
    CHECK(CycNum(Rational(-3, 2)).to_string() == "-3/2");
    CHECK((CycNum(1) + CycNum::root_of_unity(3)).to_string() == "1 + zeta(3)");
    CHECK((CycNum(1) - 2 * CycNum::root_of_unity(3)).to_string() == "1 - 2*zeta(3)");
}

TEST_CASE("conductor 5 and 60 support") {
    CycNum z5 = CycNum::root_of_unity(5);
    CycNum sum(0);
    for (int k = 0; k < 5; ++k) sum += z5.pow(k);
    CHECK(sum.is_zero());
    CHECK(z5.lifted(60) == CycNum::root_of_unity(60, 12));
    CHECK((z5 * CycNum::root_of_unity(4)).conductor() == 20);
}
