#include "cubics/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cubics {

unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Quotient of x^n - 1 by the product of Phi_d over proper divisors d of n.
std::vector<mpz_class> compute_cyclotomic(unsigned n);

std::map<unsigned, std::vector<mpz_class>>& phi_cache() {
    static std::map<unsigned, std::vector<mpz_class>> cache;
    return cache;
}
std::mutex phi_mutex;

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num,
                                 const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = quot.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

std::vector<mpz_class> compute_cyclotomic(unsigned n) {
    std::vector<mpz_class> poly(n + 1, mpz_class(0));
    poly[0] = -1;
    poly[n] = 1;  // x^n - 1
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = exact_div(std::move(poly), cyclotomic_poly(d));
    }
    return poly;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return it->second;
    }
    // Compute outside the lock; divisor lookups recurse.
    std::vector<mpz_class> value;
    if (n == 1) {
        value = {mpz_class(-1), mpz_class(1)};
    } else {
        value = compute_cyclotomic(n);
    }
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_cache().emplace(n, std::move(value)).first->second;
}

void CycNum::reduce(std::vector<Rational>& poly) const {
    const auto& phi = cyclotomic_poly(conductor_);
    size_t deg = phi.size() - 1;  // phi(n)
    while (poly.size() > deg) {
        Rational c = poly.back();
        size_t top = poly.size() - 1;
        poly.pop_back();
        if (c == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            poly[top - deg + j] -= c * Rational(phi[j]);
        }
    }
    poly.resize(deg, Rational(0));
    for (auto& q : poly) q.canonicalize();
}

CycNum CycNum::from_poly(unsigned n, std::vector<Rational> poly) {
    if (n == 0) throw std::invalid_argument("CycNum: conductor must be positive");
    CycNum r;
    if (n == 2) {
        // zeta_2 = -1; fold into Q.
        Rational v(0);
        Rational sign(1);
        for (auto& q : poly) {
            v += sign * q;
            sign = -sign;
        }
        v.canonicalize();
        r.conductor_ = 1;
        r.coeffs_ = {v};
        return r;
    }
    r.conductor_ = n;
    r.reduce(poly);
    r.coeffs_ = std::move(poly);
    return r;
}

CycNum CycNum::root_of_unity(unsigned n, long k) {
    if (n == 0) throw std::invalid_argument("CycNum: conductor must be positive");
    long m = k % static_cast<long>(n);
    if (m < 0) m += n;
    std::vector<Rational> poly(static_cast<size_t>(m) + 1, Rational(0));
    poly[static_cast<size_t>(m)] = 1;
    return from_poly(n, std::move(poly));
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return q == 0; });
}

bool CycNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum: not rational");
    return coeffs_[0];
}

CycNum CycNum::lifted(unsigned m) const {
    if (m == 0 || m % conductor_ != 0)
        throw std::invalid_argument("CycNum::lifted: conductor must divide target");
    if (m == conductor_) return *this;
    unsigned step = m / conductor_;
    std::vector<Rational> poly(coeffs_.size() * step, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
    return from_poly(m, std::move(poly));
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& q : r.coeffs_) q = -q;
    return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
    unsigned m = std::lcm(conductor_, o.conductor_);
    CycNum a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        a.coeffs_[i] += b.coeffs_[i];
        a.coeffs_[i].canonicalize();
    }
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    unsigned m = std::lcm(conductor_, o.conductor_);
    CycNum a = lifted(m), b = o.lifted(m);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_poly(m, std::move(prod));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: inversion of zero");
    if (is_rational()) return CycNum(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] against Phi_n: find u with a*u = 1 mod Phi_n.
    const auto& phi_z = cyclotomic_poly(conductor_);
    std::vector<Rational> r0(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0 = {Rational(0)}, s1 = {Rational(1)};
    auto deg = [](const std::vector<Rational>& p) {
        return static_cast<long>(p.size()) - 1;
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rational> rem = r0;
        std::vector<Rational> quot(rem.size() - r1.size() + 1, Rational(0));
        for (size_t i = quot.size(); i-- > 0;) {
            Rational c = rem[i + r1.size() - 1] / r1.back();
            c.canonicalize();
            quot[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) {
                rem[i + j] -= c * r1[j];
                rem[i + j].canonicalize();
            }
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s0.size(), quot.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                s2[i + j] -= quot[i] * s1[j];
                s2[i + j].canonicalize();
            }
        }
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::domain_error("CycNum: not invertible");
    Rational lead = r1[0];
    for (auto& q : s1) {
        q /= lead;
        q.canonicalize();
    }
    return from_poly(conductor_, std::move(s1));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(1);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool CycNum::operator==(const CycNum& o) const {
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    unsigned m = std::lcm(conductor_, o.conductor_);
    return lifted(m).coeffs_ == o.lifted(m).coeffs_;
}

CycNum CycNum::minimized() const {
    if (is_rational()) {
        CycNum r;
        r.coeffs_ = {coeffs_[0]};
        return r;
    }
    unsigned n = conductor_;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (d == 2) continue;
        // Solve for this value in the span of lifted powers of zeta_d.
        unsigned pd = euler_phi(d);
        unsigned pn = euler_phi(n);
        std::vector<std::vector<Rational>> cols;
        for (unsigned j = 0; j < pd; ++j)
            cols.push_back(CycNum::root_of_unity(d, j).lifted(n).coeffs_);
        // Gaussian elimination on the pn x pd system cols * y = coeffs_.
        std::vector<std::vector<Rational>> m(pn, std::vector<Rational>(pd + 1));
        for (unsigned i = 0; i < pn; ++i) {
            for (unsigned j = 0; j < pd; ++j) m[i][j] = cols[j][i];
            m[i][pd] = coeffs_[i];
        }
        size_t row = 0;
        std::vector<long> pivot_col(pd, -1);
        for (unsigned col = 0; col < pd && row < pn; ++col) {
            size_t p = row;
            while (p < pn && m[p][col] == 0) ++p;
            if (p == pn) continue;
            std::swap(m[row], m[p]);
            Rational inv = Rational(1) / m[row][col];
            for (unsigned j = col; j <= pd; ++j) {
                m[row][j] *= inv;
                m[row][j].canonicalize();
            }
            for (size_t i = 0; i < pn; ++i) {
                if (i == row || m[i][col] == 0) continue;
                Rational f = m[i][col];
                for (unsigned j = col; j <= pd; ++j) {
                    m[i][j] -= f * m[row][j];
                    m[i][j].canonicalize();
                }
            }
            pivot_col[col] = static_cast<long>(row);
            ++row;
        }
        bool consistent = true;
        for (size_t i = row; i < pn; ++i)
            if (m[i][pd] != 0) { consistent = false; break; }
        if (!consistent) continue;
        std::vector<Rational> sol(pd, Rational(0));
        for (unsigned col = 0; col < pd; ++col)
            if (pivot_col[col] >= 0) sol[col] = m[static_cast<size_t>(pivot_col[col])][pd];
        return from_poly(d, std::move(sol));
    }
    return *this;
}

std::string CycNum::to_string() const {
    CycNum v = minimized();
    if (v.is_rational()) return v.coeffs_[0].get_str();
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < v.coeffs_.size(); ++i) {
        const Rational& q = v.coeffs_[i];
        if (q == 0) continue;
        Rational abs_q = q < 0 ? Rational(-q) : q;
        abs_q.canonicalize();
        if (first) {
            if (q < 0) out << "-";
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << abs_q.get_str();
            continue;
        }
        if (abs_q != 1) out << abs_q.get_str() << "*";
        out << "zeta(" << v.conductor_ << ")";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

}  // namespace cubics
