#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubics {

using Rational = mpq_class;

/// Euler totient, for conductors of cyclotomic fields.
unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial Phi_n (monic, integer,
/// ascending degree).  Cached per conductor.
const std::vector<mpz_class>& cyclotomic_poly(unsigned n);

/// An element of Q(zeta_n), stored as the canonical residue modulo Phi_n in
/// the power basis 1, zeta, ..., zeta^{phi(n)-1}.  Conductor 1 is plain Q;
/// conductor 2 is normalized away (zeta_2 = -1).  Values are immutable.
class CycNum {
public:
    CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}
    CycNum(long v) : conductor_(1), coeffs_(1, Rational(v)) {}
    explicit CycNum(const Rational& q) : conductor_(1), coeffs_(1, q) {
        coeffs_[0].canonicalize();
    }

    /// Raw constructor: polynomial in zeta_n (ascending degree), reduced here.
    static CycNum from_poly(unsigned n, std::vector<Rational> poly);

    /// zeta_n^k.
    static CycNum root_of_unity(unsigned n, long k = 1);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    CycNum inverse() const;
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
    CycNum pow(long e) const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Canonical embedding into Q(zeta_m); requires conductor() | m.
    CycNum lifted(unsigned m) const;

    /// Equivalent value at the smallest conductor d | conductor() that
    /// contains it.  Used for printing; arithmetic does not descend.
    CycNum minimized() const;

    /// Grammar text, e.g. "-1/2 + zeta(12)^2".  Prints at the minimal
    /// conductor; round-trips through the expression parser.
    std::string to_string() const;

private:
    unsigned conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_)

    void reduce(std::vector<Rational>& poly) const;
};

inline CycNum operator*(long a, const CycNum& b) { return CycNum(a) * b; }

}  // namespace cubics
