#pragma once

#include "cubics/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubics {

/// Point in projective space with exact coordinates.
struct ProjPoint {
    std::vector<CycNum> coords;

    bool is_zero_vector() const;
    /// First nonzero coordinate rescaled to 1.
    ProjPoint canonicalized() const;
    bool proportional_to(const ProjPoint& o) const;
    std::string to_string() const;
};

/// Square matrix of field constants acting on row vectors; equality and
/// closure work on the canonical form (first nonzero entry rescaled to 1,
/// all entries lifted to a fixed conductor).
class ScalarMatrix {
public:
    ScalarMatrix(size_t dim) : dim_(dim), e_(dim * dim, CycNum(0)) {}
    static ScalarMatrix identity(size_t dim);

    size_t dim() const { return dim_; }
    const CycNum& at(size_t i, size_t j) const { return e_[i * dim_ + j]; }
    CycNum& at(size_t i, size_t j) { return e_[i * dim_ + j]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ProjPoint apply(const ProjPoint& p) const;  // row vector times matrix
    std::optional<ScalarMatrix> inverse() const;

    ScalarMatrix canonicalized() const;
    bool is_identity_projective() const;
    /// Stable dedup key; all entries are lifted to `conductor`.
    std::string key(unsigned conductor) const;
    std::string to_string() const;

private:
    size_t dim_;
    std::vector<CycNum> e_;
};

/// Labeled projective linear action with polynomial entries, declared
/// relations (e.g. a*a_inv - 1) and a nonvanishing determinant witness.
struct LinearAction {
    std::string label;
    PolyMatrix mat;
    RelationSet rels;
    MPoly det_witness;
    std::vector<size_t> acting_vars;  // empty = table's geometry block

    /// Entry-wise evaluation at parameter values; requires the result to be
    /// parameter-free.
    ScalarMatrix to_scalar(const std::map<size_t, CycNum>& values = {}) const;
    bool parameter_free() const { return mat.all_constant(); }
};

/// Rational map between projective spaces (or into a product, one component
/// group per factor).  Components of a factor are homogeneous of a common
/// degree and not all zero on the domain hypersurface.
struct RationalMap {
    std::string label;
    std::vector<std::vector<MPoly>> factors;

    size_t factor_count() const { return factors.size(); }
};

/// Outcome of evaluating a rational map at a point.  Indeterminacy (all
/// components of some factor vanishing) is a distinct outcome, not an error.
struct MapValue {
    bool indeterminate = false;
    size_t indeterminate_factor = 0;
    std::vector<ProjPoint> factors;
};

/// Parametrized rational curve P^1 -> P^n: binary forms in (s, t) of a
/// common degree.
struct CurveParam {
    std::string label;
    std::vector<MPoly> components;
    size_t s_var = 0;
    size_t t_var = 0;

    ProjPoint evaluate(const CycNum& s, const CycNum& t) const;
};

/// Induced action on coefficient vectors of binary degree-d forms under
/// (u, v) -> (u, v) * m; entries are reduced modulo rels.
PolyMatrix sym_power(const PolyMatrix& m, long d, size_t s_var, size_t t_var,
                     const RelationSet& rels = {});

MapValue map_apply(const RationalMap& phi, const ProjPoint& p,
                   const std::vector<size_t>& source_vars);

/// True iff phi and psi agree as maps on {X = 0}: all cross products
/// phi_i psi_j - phi_j psi_i reduce to zero (factor by factor).
bool maps_equal_mod(const RationalMap& phi, const RationalMap& psi,
                    const RelationSet& rels);

struct TransportResult {
    enum class Status { Found, NoSolution, Degenerate };
    Status status;
    std::vector<ScalarMatrix> factor_actions;  // one per map factor when Found
};

/// Solve for the projective action h on the target with phi(x g) = h(phi(x))
/// modulo the domain relations; linear in the entries of h, unique up to
/// scalar when the map is nondegenerate.  Requires a parameter-free g.
TransportResult transport_action(const RationalMap& phi, const ScalarMatrix& g,
                                 const std::vector<size_t>& source_vars,
                                 const RelationSet& rels);

bool curve_in_hypersurface(const CurveParam& c, const MPoly& f,
                           const std::vector<size_t>& coords = {});

/// True iff the scheme cut out by `polys` is singular along the curve: for a
/// single polynomial all partials vanish on it, for a codimension-k complete
/// intersection all k x k Jacobian minors (and the polys themselves) vanish.
bool singular_along(const std::vector<MPoly>& polys, const CurveParam& c,
                    const std::vector<size_t>& coords = {});

/// True iff f vanishes identically on the line through P and Q, modulo the
/// given constraints on the (possibly symbolic) coordinates.
bool line_in_hypersurface(const std::vector<MPoly>& p, const std::vector<MPoly>& q,
                          const MPoly& f, const RelationSet& rels,
                          size_t s_var, size_t t_var);

/// 2x2 action m on the parameter line with C((s,t) m) proportional to the
/// transformed curve g(C(s,t)); nullopt when the curve is not preserved.
std::optional<ScalarMatrix> induced_param_action(const ScalarMatrix& g,
                                                 const CurveParam& c);

/// Fixed points of a 2x2 action on P^1.  `whole_line` marks scalar actions.
struct ParamFixedPoints {
    bool whole_line = false;
    bool factored = true;  // false: quadratic does not split over the field
    std::vector<ProjPoint> points;
};

ParamFixedPoints fixed_parameter_points(const ScalarMatrix& m, unsigned conductor);

/// Square root in Q(zeta_conductor) for the supported fragment (rationals
/// and monomials c * zeta^k); nullopt when not found there.
std::optional<CycNum> try_sqrt(const CycNum& d, unsigned conductor);

/// Basis of the right nullspace of the matrix given by rows.
std::vector<std::vector<CycNum>> nullspace(std::vector<std::vector<CycNum>> rows,
                                           size_t ncols);

}  // namespace cubics
