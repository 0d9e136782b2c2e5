#include "cubics/projalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cubics {

bool ProjPoint::is_zero_vector() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const CycNum& c) { return c.is_zero(); });
}

ProjPoint ProjPoint::canonicalized() const {
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        CycNum inv = c.inverse();
        ProjPoint r;
        r.coords.reserve(coords.size());
        for (const auto& x : coords) r.coords.push_back(x * inv);
        return r;
    }
    return *this;
}

bool ProjPoint::proportional_to(const ProjPoint& o) const {
    if (coords.size() != o.coords.size()) return false;
    if (is_zero_vector() || o.is_zero_vector()) return false;
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j)
            if (!(coords[i] * o.coords[j] == coords[j] * o.coords[i])) return false;
    return true;
}

std::string ProjPoint::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coords.size(); ++i)
        out << (i ? " : " : "") << coords[i].to_string();
    out << "]";
    return out.str();
}

ScalarMatrix ScalarMatrix::identity(size_t dim) {
    ScalarMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) m.at(i, i) = CycNum(1);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("ScalarMatrix: dimension mismatch");
    ScalarMatrix r(dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            CycNum sum(0);
            for (size_t k = 0; k < dim_; ++k) sum += at(i, k) * o.at(k, j);
            r.at(i, j) = sum;
        }
    return r;
}

ProjPoint ScalarMatrix::apply(const ProjPoint& p) const {
    if (p.coords.size() != dim_)
        throw std::invalid_argument("ScalarMatrix: point dimension mismatch");
    ProjPoint r;
    r.coords.assign(dim_, CycNum(0));
    for (size_t j = 0; j < dim_; ++j)
        for (size_t i = 0; i < dim_; ++i) r.coords[j] += p.coords[i] * at(i, j);
    return r;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
    ScalarMatrix a = *this;
    ScalarMatrix inv = identity(dim_);
    for (size_t col = 0; col < dim_; ++col) {
        size_t pivot = col;
        while (pivot < dim_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == dim_) return std::nullopt;
        for (size_t j = 0; j < dim_; ++j) {
            std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        CycNum d = a.at(col, col).inverse();
        for (size_t j = 0; j < dim_; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (size_t i = 0; i < dim_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            CycNum f = a.at(i, col);
            for (size_t j = 0; j < dim_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

ScalarMatrix ScalarMatrix::canonicalized() const {
    for (const auto& c : e_) {
        if (c.is_zero()) continue;
        CycNum inv = c.inverse();
        ScalarMatrix r(dim_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * inv;
        return r;
    }
    return *this;
}

bool ScalarMatrix::is_identity_projective() const {
    ScalarMatrix c = canonicalized();
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (i == j ? !c.at(i, j).is_one() : !c.at(i, j).is_zero()) return false;
        }
    return true;
}

std::string ScalarMatrix::key(unsigned conductor) const {
    std::ostringstream out;
    for (const auto& c : e_) {
        CycNum lifted = c.lifted(std::lcm(conductor, c.conductor()));
        out << "|";
        for (const auto& q : lifted.coeffs()) out << q.get_str() << ",";
    }
    return out.str();
}

std::string ScalarMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < dim_; ++i) {
        out << (i ? "; " : "");
        for (size_t j = 0; j < dim_; ++j) out << (j ? ", " : "") << at(i, j).to_string();
    }
    out << "]";
    return out.str();
}

ScalarMatrix LinearAction::to_scalar(const std::map<size_t, CycNum>& values) const {
    ScalarMatrix m(mat.dim());
    for (size_t i = 0; i < mat.dim(); ++i)
        for (size_t j = 0; j < mat.dim(); ++j) {
            MPoly e = mat.at(i, j).evaluated(values);
            e = reduce_mod(e, rels);
            if (!e.is_constant())
                throw std::invalid_argument("LinearAction " + label +
                                            ": entry not constant after specialization");
            m.at(i, j) = e.constant_value();
        }
    return m;
}

ProjPoint CurveParam::evaluate(const CycNum& s, const CycNum& t) const {
    ProjPoint p;
    for (const auto& comp : components) {
        MPoly v = comp.evaluated({{s_var, s}, {t_var, t}});
        if (!v.is_constant())
            throw std::invalid_argument("CurveParam: components must be binary forms");
        p.coords.push_back(v.constant_value());
    }
    return p;
}

PolyMatrix sym_power(const PolyMatrix& m, long d, size_t s_var, size_t t_var,
                     const RelationSet& rels) {
    if (m.dim() != 2) throw std::invalid_argument("sym_power: need a 2x2 matrix");
    if (d < 1) throw std::invalid_argument("sym_power: degree must be positive");
    auto table = m.table();
    MPoly s = MPoly::variable(table, s_var), t = MPoly::variable(table, t_var);
    MPoly a = s * m.at(0, 0) + t * m.at(1, 0);
    MPoly b = s * m.at(0, 1) + t * m.at(1, 1);
    PolyMatrix result(table, static_cast<size_t>(d) + 1);
    std::set<size_t> st = {s_var, t_var};
    for (long j = 0; j <= d; ++j) {
        MPoly form = a.pow(d - j) * b.pow(j);
        auto parts = form.split_by(st);
        for (const auto& [mono, coeff] : parts) {
            long i = mono[t_var];  // s^(d-i) t^i
            result.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                rels.empty() ? coeff : reduce_mod(coeff, rels);
        }
    }
    return result;
}

MapValue map_apply(const RationalMap& phi, const ProjPoint& p,
                   const std::vector<size_t>& source_vars) {
    MapValue out;
    std::map<size_t, CycNum> values;
    for (size_t i = 0; i < source_vars.size(); ++i) {
        if (i >= p.coords.size())
            throw std::invalid_argument("map_apply: point dimension mismatch");
        values[source_vars[i]] = p.coords[i];
    }
    for (size_t f = 0; f < phi.factors.size(); ++f) {
        ProjPoint img;
        for (const auto& comp : phi.factors[f]) {
            MPoly v = comp.evaluated(values);
            if (!v.is_constant())
                throw std::invalid_argument("map_apply: component did not evaluate");
            img.coords.push_back(v.constant_value());
        }
        if (img.is_zero_vector()) {
            out.indeterminate = true;
            out.indeterminate_factor = f;
            return out;
        }
        out.factors.push_back(img.canonicalized());
    }
    return out;
}

bool maps_equal_mod(const RationalMap& phi, const RationalMap& psi,
                    const RelationSet& rels) {
    if (phi.factors.size() != psi.factors.size())
        throw std::invalid_argument("maps_equal_mod: factor count mismatch");
    for (size_t f = 0; f < phi.factors.size(); ++f) {
        const auto& a = phi.factors[f];
        const auto& b = psi.factors[f];
        if (a.size() != b.size())
            throw std::invalid_argument("maps_equal_mod: component count mismatch");
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j) {
                if (!reduce_mod(a[i] * b[j] - a[j] * b[i], rels).is_zero()) return false;
            }
    }
    return true;
}

TransportResult transport_action(const RationalMap& phi, const ScalarMatrix& g,
                                 const std::vector<size_t>& source_vars,
                                 const RelationSet& rels) {
    TransportResult result;
    result.status = TransportResult::Status::Found;
    for (const auto& comps : phi.factors) {
        size_t n = comps.size();
        auto base = comps[0].table();
        // Fresh unknowns for the candidate target matrix of this factor.
        std::vector<std::pair<std::string, VarRole>> extra;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                extra.emplace_back("h__" + std::to_string(i) + "_" + std::to_string(j),
                                   VarRole::Unknown);
        auto ext = VarTable::extended(base, extra);
        auto hvar = [&](size_t i, size_t j) {
            return ext->index_of("h__" + std::to_string(i) + "_" + std::to_string(j));
        };

        PolyMatrix gm(ext, g.dim());
        for (size_t i = 0; i < g.dim(); ++i)
            for (size_t j = 0; j < g.dim(); ++j)
                gm.at(i, j) = MPoly::constant(ext, g.at(i, j));

        std::vector<MPoly> moved, target;
        std::vector<MPoly> rel_ext;
        for (const auto& r : rels.relations()) rel_ext.push_back(r.rebased(ext));
        RelationSet rels2(rel_ext);
        for (size_t i = 0; i < n; ++i)
            moved.push_back(linear_change(comps[i].rebased(ext), gm, source_vars));
        for (size_t j = 0; j < n; ++j) {
            MPoly sum(ext);
            for (size_t k = 0; k < n; ++k)
                sum += comps[k].rebased(ext) * MPoly::variable(ext, hvar(k, j));
            target.push_back(sum);
        }

        // Cross products are linear and homogeneous in the h-unknowns; each
        // residual base monomial contributes one linear equation.
        std::set<size_t> hvars;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) hvars.insert(hvar(i, j));
        size_t ncols = n * n;
        std::vector<std::vector<CycNum>> rows;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                MPoly cross = reduce_mod(moved[i] * target[j] - moved[j] * target[i], rels2);
                auto parts = cross.split_by(hvars);
                std::map<Mono, std::vector<CycNum>> eqs;
                for (const auto& [hmono, coeff] : parts) {
                    long col = -1;
                    size_t c = 0;
                    for (size_t a = 0; a < n && col < 0; ++a)
                        for (size_t b = 0; b < n; ++b) {
                            if (hmono[hvar(a, b)] == 1) { col = static_cast<long>(c); break; }
                            ++c;
                        }
                    if (col < 0) throw std::logic_error("transport_action: nonlinear residue");
                    for (const auto& [cmono, ccoeff] : coeff.terms()) {
                        auto it = eqs.find(cmono);
                        if (it == eqs.end())
                            it = eqs.emplace(cmono, std::vector<CycNum>(ncols, CycNum(0))).first;
                        it->second[static_cast<size_t>(col)] += ccoeff;
                    }
                }
                for (auto& [mono, row] : eqs) rows.push_back(std::move(row));
            }

        auto basis = nullspace(std::move(rows), n * n);
        if (basis.empty()) {
            result.status = TransportResult::Status::NoSolution;
            return result;
        }
        if (basis.size() > 1) {
            result.status = TransportResult::Status::Degenerate;
            return result;
        }
        ScalarMatrix h(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) h.at(i, j) = basis[0][i * n + j];
        result.factor_actions.push_back(h.canonicalized());
    }
    return result;
}

bool curve_in_hypersurface(const CurveParam& c, const MPoly& f,
                           const std::vector<size_t>& coords) {
    auto geo = coords.empty() ? f.table()->indices_with_role(VarRole::Geometry)
                              : coords;
    if (geo.size() != c.components.size())
        throw std::invalid_argument("curve_in_hypersurface: dimension mismatch");
    std::map<size_t, MPoly> assignment;
    for (size_t i = 0; i < geo.size(); ++i) assignment.emplace(geo[i], c.components[i]);
    return f.substituted(assignment).is_zero();
}

bool singular_along(const std::vector<MPoly>& polys, const CurveParam& c,
                    const std::vector<size_t>& coords) {
    if (polys.empty()) throw std::invalid_argument("singular_along: no polynomials");
    auto table = polys[0].table();
    auto geo = coords.empty() ? table->indices_with_role(VarRole::Geometry) : coords;
    if (geo.size() != c.components.size())
        throw std::invalid_argument("singular_along: dimension mismatch");
    std::map<size_t, MPoly> assignment;
    for (size_t i = 0; i < geo.size(); ++i) assignment.emplace(geo[i], c.components[i]);
    auto on_curve_zero = [&](const MPoly& f) {
        return f.substituted(assignment).is_zero();
    };
    if (polys.size() == 1) {
        for (size_t v : geo)
            if (!on_curve_zero(polys[0].derivative(v))) return false;
        return true;
    }
    // Complete intersection: the polys and all kxk Jacobian minors vanish.
    for (const auto& f : polys)
        if (!on_curve_zero(f)) return false;
    if (polys.size() != 2)
        throw std::invalid_argument("singular_along: only hypersurfaces and pairs");
    for (size_t a = 0; a < geo.size(); ++a)
        for (size_t b = a + 1; b < geo.size(); ++b) {
            MPoly minor = polys[0].derivative(geo[a]) * polys[1].derivative(geo[b]) -
                          polys[0].derivative(geo[b]) * polys[1].derivative(geo[a]);
            if (!on_curve_zero(minor)) return false;
        }
    return true;
}

bool line_in_hypersurface(const std::vector<MPoly>& p, const std::vector<MPoly>& q,
                          const MPoly& f, const RelationSet& rels,
                          size_t s_var, size_t t_var) {
    auto table = f.table();
    auto geo = table->indices_with_role(VarRole::Geometry);
    if (p.size() != geo.size() || q.size() != geo.size())
        throw std::invalid_argument("line_in_hypersurface: dimension mismatch");
    bool distinct = false;
    for (size_t i = 0; i < p.size() && !distinct; ++i)
        for (size_t j = i + 1; j < p.size() && !distinct; ++j)
            if (!reduce_mod(p[i] * q[j] - p[j] * q[i], rels).is_zero()) distinct = true;
    if (!distinct)
        throw std::invalid_argument("line_in_hypersurface: points projectively equal");
    MPoly s = MPoly::variable(table, s_var), t = MPoly::variable(table, t_var);
    std::map<size_t, MPoly> assignment;
    for (size_t i = 0; i < geo.size(); ++i)
        assignment.emplace(geo[i], s * p[i] + t * q[i]);
    return reduce_mod(f.substituted(assignment), rels).is_zero();
}

namespace {

// Dense binary form c[i] * s^(deg-i) t^i over the field.
using BinVec = std::vector<CycNum>;

BinVec binvec_from(const MPoly& f, size_t s_var, size_t t_var) {
    long deg = f.degree();
    if (f.is_zero()) return {};
    BinVec v(static_cast<size_t>(deg) + 1, CycNum(0));
    for (const auto& [m, c] : f.terms()) {
        long total = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i != s_var && i != t_var)
                throw std::invalid_argument("expected a binary form in (s, t)");
            total += m[i];
        }
        if (total != deg) throw std::invalid_argument("binary form not homogeneous");
        v[static_cast<size_t>(m[t_var])] += c;
    }
    while (!v.empty() && std::all_of(v.begin(), v.end(),
                                     [](const CycNum& c) { return c.is_zero(); }))
        return {};
    return v;
}

bool binvec_zero(const BinVec& v) {
    return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); });
}

// gcd of dehomogenized polynomials, tracking s/t powers separately.
struct FactoredBin {
    size_t s_pow = 0, t_pow = 0;
    std::vector<CycNum> core;  // univariate in u = t/s, core[0] != 0, lead != 0
};

FactoredBin factor_bin(const BinVec& v) {
    FactoredBin fb;
    size_t lo = 0, hi = v.size();
    while (lo < hi && v[lo].is_zero()) ++lo;
    while (hi > lo && v[hi - 1].is_zero()) --hi;
    // v[i] multiplies s^(d-i) t^i: leading zeros are powers of t removed from
    // the front... indices below lo carry t^lo; above hi-1 carry s powers.
    fb.t_pow = lo;
    fb.s_pow = v.size() - hi;
    fb.core.assign(v.begin() + lo, v.begin() + hi);
    return fb;
}

std::vector<CycNum> poly_mod(std::vector<CycNum> a, const std::vector<CycNum>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back().is_zero()) { a.pop_back(); continue; }
        CycNum f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

std::vector<CycNum> poly_gcd(std::vector<CycNum> a, std::vector<CycNum> b) {
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        CycNum inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// The unique root of a binary form that is a pure power of one linear form,
// as a parameter point (alpha : beta); nullopt if there are distinct roots.
std::optional<ProjPoint> unique_root(const BinVec& v) {
    if (binvec_zero(v)) return std::nullopt;
    FactoredBin fb = factor_bin(v);
    // core is in u = t/s with core[0], core.back() nonzero; degree 0 means no
    // affine roots beyond the tracked s/t powers.
    size_t core_deg = fb.core.size() - 1;
    int kinds = (fb.s_pow > 0) + (fb.t_pow > 0) + (core_deg > 0);
    if (kinds != 1) return std::nullopt;
    if (fb.s_pow > 0) return ProjPoint{{CycNum(0), CycNum(1)}};
    if (fb.t_pow > 0) return ProjPoint{{CycNum(1), CycNum(0)}};
    // core = c0 (1 - alpha u)^k ... in form coefficients: core_i ~ C(k,i).
    // Solve alpha from the first two coefficients and verify the power.
    long k = static_cast<long>(core_deg);
    CycNum alpha = -(fb.core[1] / (CycNum(k) * fb.core[0]));
    // Verify core == c0 * prod (u-part): coefficient i = c0 * C(k,i) (-alpha)^i.
    CycNum binom(1);
    for (long i = 0; i <= k; ++i) {
        CycNum expected = fb.core[0] * binom * (-alpha).pow(i);
        if (!(expected == fb.core[static_cast<size_t>(i)])) return std::nullopt;
        binom = binom * CycNum(k - i) * CycNum(i + 1).inverse();
    }
    return ProjPoint{{alpha, CycNum(1)}};
}

}  // namespace

std::optional<ScalarMatrix> induced_param_action(const ScalarMatrix& g,
                                                 const CurveParam& c) {
    size_t n = c.components.size();
    if (g.dim() != n) throw std::invalid_argument("induced_param_action: dimension");
    auto table = c.components[0].table();
    // Transformed curve q = g applied to C, as binary forms.
    std::vector<MPoly> q(n, MPoly(table));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            q[j] += c.components[i] * MPoly::constant(table, g.at(i, j));

    auto fiber = [&](const ProjPoint& target) -> std::optional<ProjPoint> {
        // gcd over cross products C_i * target_j - C_j * target_i.
        size_t common_s = 0, common_t = 0;
        std::vector<CycNum> core_gcd;
        bool any = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                MPoly cross = c.components[i] * MPoly::constant(table, target.coords[j]) -
                              c.components[j] * MPoly::constant(table, target.coords[i]);
                if (cross.is_zero()) continue;
                BinVec v = binvec_from(cross, c.s_var, c.t_var);
                FactoredBin fb = factor_bin(v);
                if (!any) {
                    common_s = fb.s_pow;
                    common_t = fb.t_pow;
                    core_gcd = fb.core;
                    any = true;
                } else {
                    common_s = std::min(common_s, fb.s_pow);
                    common_t = std::min(common_t, fb.t_pow);
                    core_gcd = poly_gcd(std::move(core_gcd), fb.core);
                }
            }
        if (!any) return std::nullopt;  // every parameter works: degenerate
        BinVec h(common_s + common_t + core_gcd.size(), CycNum(0));
        // Reassemble s^common_s t^common_t * core_gcd as a binary vector.
        for (size_t i = 0; i < core_gcd.size(); ++i) h[common_t + i] = core_gcd[i];
        return unique_root(h);
    };

    auto eval_q = [&](const CycNum& sv, const CycNum& tv) {
        ProjPoint p;
        for (const auto& comp : q) {
            MPoly v = comp.evaluated({{c.s_var, sv}, {c.t_var, tv}});
            p.coords.push_back(v.constant_value());
        }
        return p;
    };

    ProjPoint q10 = eval_q(CycNum(1), CycNum(0));
    ProjPoint q01 = eval_q(CycNum(0), CycNum(1));
    ProjPoint q11 = eval_q(CycNum(1), CycNum(1));
    if (q10.is_zero_vector() || q01.is_zero_vector() || q11.is_zero_vector())
        return std::nullopt;
    auto r1 = fiber(q10);
    auto r2 = fiber(q01);
    auto r3 = fiber(q11);
    if (!r1 || !r2 || !r3) return std::nullopt;

    // m maps (1:0) -> r1, (0:1) -> r2, (1:1) -> r3.
    const CycNum &a1 = r1->coords[0], &b1 = r1->coords[1];
    const CycNum &a2 = r2->coords[0], &b2 = r2->coords[1];
    const CycNum &a3 = r3->coords[0], &b3 = r3->coords[1];
    CycNum l1 = b2 * a3 - a2 * b3;
    CycNum l2 = a1 * b3 - b1 * a3;
    if (l1.is_zero() || l2.is_zero()) return std::nullopt;
    ScalarMatrix m(2);
    m.at(0, 0) = l1 * a1;
    m.at(0, 1) = l1 * b1;
    m.at(1, 0) = l2 * a2;
    m.at(1, 1) = l2 * b2;

    // Verify C((s,t) m) proportional to q(s,t) identically.
    MPoly s = MPoly::variable(table, c.s_var), t = MPoly::variable(table, c.t_var);
    std::map<size_t, MPoly> move = {
        {c.s_var, s * MPoly::constant(table, m.at(0, 0)) +
                      t * MPoly::constant(table, m.at(1, 0))},
        {c.t_var, s * MPoly::constant(table, m.at(0, 1)) +
                      t * MPoly::constant(table, m.at(1, 1))}};
    std::vector<MPoly> cm;
    for (const auto& comp : c.components) cm.push_back(comp.substituted(move));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!(cm[i] * q[j] - cm[j] * q[i]).is_zero()) return std::nullopt;
    return m.canonicalized();
}

std::optional<CycNum> try_sqrt(const CycNum& d, unsigned conductor) {
    CycNum v = d.minimized();
    if (v.is_zero()) return CycNum(0);
    auto rational_sqrt = [&](const Rational& q) -> std::optional<CycNum> {
        if (q == 0) return CycNum(0);
        bool negative = q < 0;
        Rational a = negative ? Rational(-q) : q;
        a.canonicalize();
        mpz_class num = a.get_num() * a.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t())) return std::nullopt;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
        Rational r(root, a.get_den());
        r.canonicalize();
        if (!negative) return CycNum(r);
        if (conductor % 4 != 0) return std::nullopt;
        return CycNum(r) * CycNum::root_of_unity(conductor, conductor / 4);
    };
    if (v.is_rational()) return rational_sqrt(v.rational_value());
    // Monomial c * zeta^k at the minimal conductor.
    unsigned n = v.conductor();
    long k = -1;
    Rational c;
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        if (v.coeffs()[i] == 0) continue;
        if (k >= 0) return std::nullopt;  // not a monomial
        k = static_cast<long>(i);
        c = v.coeffs()[i];
    }
    if (conductor % n != 0) return std::nullopt;
    long half;
    if (k % 2 == 0) half = k / 2;
    else if (n % 2 == 1) half = (k + static_cast<long>(n)) / 2;
    else return std::nullopt;
    auto rc = rational_sqrt(c);
    if (!rc) return std::nullopt;
    return *rc * CycNum::root_of_unity(n, half);
}

ParamFixedPoints fixed_parameter_points(const ScalarMatrix& m, unsigned conductor) {
    ParamFixedPoints out;
    if (m.dim() != 2) throw std::invalid_argument("fixed_parameter_points: 2x2 only");
    // (s,t) m proportional to (s,t):  -m01 s^2 + (m00 - m11) st + m10 t^2 = 0.
    CycNum A = -m.at(0, 1);
    CycNum B = m.at(0, 0) - m.at(1, 1);
    CycNum C = m.at(1, 0);
    if (A.is_zero() && B.is_zero() && C.is_zero()) {
        out.whole_line = true;
        return out;
    }
    auto push = [&](CycNum a, CycNum b) {
        ProjPoint p{{std::move(a), std::move(b)}};
        p = p.canonicalized();
        for (const auto& q : out.points)
            if (q.proportional_to(p)) return;
        out.points.push_back(std::move(p));
    };
    if (A.is_zero()) {
        push(CycNum(1), CycNum(0));
        if (!B.is_zero()) push(-C, B);
        return out;
    }
    CycNum disc = B * B - CycNum(4) * A * C;
    auto r = try_sqrt(disc, conductor);
    if (!r) {
        out.factored = false;
        return out;
    }
    push((-B + *r), CycNum(2) * A);
    push((-B - *r), CycNum(2) * A);
    return out;
}

std::vector<std::vector<CycNum>> nullspace(std::vector<std::vector<CycNum>> rows,
                                           size_t ncols) {
    size_t rank = 0;
    std::vector<long> pivot_of_col(ncols, -1);
    for (size_t col = 0; col < ncols; ++col) {
        size_t p = rank;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        CycNum inv = rows[rank][col].inverse();
        for (size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            CycNum f = rows[i][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<CycNum>> basis;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<CycNum> vec(ncols, CycNum(0));
        vec[col] = CycNum(1);
        for (size_t c = 0; c < ncols; ++c) {
            if (pivot_of_col[c] < 0) continue;
            vec[c] = -rows[static_cast<size_t>(pivot_of_col[c])][col];
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace cubics
