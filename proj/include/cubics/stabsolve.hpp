#pragma once

#include "cubics/errors.hpp"
#include "cubics/mpoly.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cubics {

/// Matrix pattern with fixed constants and named unknowns.
struct MatrixShape {
    using Entry = std::variant<CycNum, std::string>;
    size_t dim = 0;
    std::vector<Entry> entries;  // row-major

    const Entry& at(size_t i, size_t j) const { return entries[i * dim + j]; }
    std::vector<std::string> unknown_names() const;
};

/// Coefficient-matching system for shape-constrained matrices preserving a
/// form.  The table extends the form's table by the unknowns (and the
/// multiplier when it is an unknown); parameters of the form stay symbolic.
struct PolySystem {
    VarTablePtr table;
    std::vector<size_t> unknowns;           // indices into table
    std::vector<MPoly> equations;
    std::optional<MPoly> witness;           // nonvanishing witness
    std::optional<size_t> multiplier_var;   // index of the multiplier unknown
};

/// Equations expressing linear_change(f, shape) = multiplier * f, one per
/// coefficient on the geometry monomials.  `unknown_multiplier` adjoins a
/// fresh unknown for the multiplier, otherwise it is the constant 1.
PolySystem invariance_system(const MPoly& f, const MatrixShape& shape,
                             bool unknown_multiplier,
                             const std::string& witness_expr = "");

struct GroebnerBasis {
    std::vector<MPoly> basis;      // reduced, monic, sorted by leading term
    bool reduced = false;
    std::vector<size_t> ring_vars; // variables of the ambient ring
    bool localized = false;
    std::optional<size_t> localization_var;
};

/// Buchberger with normal pair selection and the coprimality criterion;
/// produces the unique reduced basis.  `localize` adjoins w * witness - 1.
/// Throws cap_exceeded past the degree/size caps.
GroebnerBasis buchberger(const PolySystem& sys, bool localize,
                         long degree_cap = 12, size_t basis_cap = 500);

/// Krull dimension of the quotient, read combinatorially from the leading
/// term staircase; -1 for the unit ideal.
long staircase_dimension(const GroebnerBasis& gb);

/// Normal form against a reduced basis.
MPoly gb_reduce(const MPoly& f, const GroebnerBasis& gb);

/// True iff every equation vanishes identically under the assignment
/// (unknown name -> polynomial in free parameters), modulo rels.
/// On failure returns the first nonzero residual as witness.
struct FamilyCheck {
    bool ok = true;
    std::string residual;
};

FamilyCheck verify_solution_family(const PolySystem& sys,
                                   const std::map<std::string, MPoly>& family,
                                   const RelationSet& rels);

}  // namespace cubics
