#pragma once

#include "cubics/errors.hpp"
#include "cubics/projalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace cubics {

/// Finite group of projective matrices in canonical form, with Cayley table.
class FiniteMatrixGroup {
public:
    size_t dim() const { return dim_; }
    unsigned conductor() const { return conductor_; }
    size_t order() const { return elements_.size(); }
    const std::vector<ScalarMatrix>& elements() const { return elements_; }
    const ScalarMatrix& element(size_t i) const { return elements_[i]; }
    const std::vector<size_t>& generator_indices() const { return gens_; }

    size_t multiply(size_t i, size_t j) const { return cayley_[i][j]; }
    size_t inverse(size_t i) const { return inverse_[i]; }
    size_t element_order(size_t i) const;
    bool abelian() const;

    /// BFS closure of the generators; throws cap_exceeded past `cap`.
    static FiniteMatrixGroup close(const std::vector<ScalarMatrix>& gens,
                                   size_t cap = 240);

private:
    size_t dim_ = 0;
    unsigned conductor_ = 1;
    std::vector<ScalarMatrix> elements_;
    std::vector<size_t> gens_;
    std::vector<std::vector<size_t>> cayley_;
    std::vector<size_t> inverse_;
};

struct GroupFingerprint {
    size_t order = 0;
    bool abelian = false;
    std::map<size_t, size_t> order_histogram;
    size_t center_order = 0;
    size_t derived_order = 0;

    bool operator==(const GroupFingerprint& o) const = default;
    std::string to_string() const;
};

GroupFingerprint fingerprint(const FiniteMatrixGroup& g);

/// Name from the catalog list {C_n, C2^2, D_n, S3, S4, A4, A5, C_m x ...}
/// when the fingerprint pins it down uniquely; "unrecognized" otherwise.
std::string recognize(const GroupFingerprint& fp);

/// Collapse small-group aliases (D1 = C2, D2 = C2^2, D3 = S3, ...).
std::string canonical_group_name(const std::string& name);

/// Orbit of a point under the group, as canonical-form points.
std::vector<ProjPoint> orbit(const FiniteMatrixGroup& g, const ProjPoint& p);

/// Number of group elements fixing the point projectively.
size_t stabilizer_order(const FiniteMatrixGroup& g, const ProjPoint& p);

struct CommonFixedPointResult {
    enum class Status { Point, WholeCurve, None, CurveNotPreserved, Unresolved };
    Status status = Status::Unresolved;
    ProjPoint parameter_point;  // for Point / WholeCurve (base point)
    std::string witness;
};

/// Common fixed parameter value of the induced P^1-actions of all elements
/// on the curve, or a certificate of emptiness.
CommonFixedPointResult common_fixed_point_on_curve(const FiniteMatrixGroup& g,
                                                   const CurveParam& c,
                                                   unsigned conductor);

struct FixedPointCheck {
    bool fixed = false;
    bool on_variety = false;
    bool smooth = false;
};

FixedPointCheck fixed_points_check(const ScalarMatrix& g, const ProjPoint& p,
                                   const MPoly& f);

}  // namespace cubics
