#pragma once

#include "cubics/cyclo.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace cubics {

/// Variable roles induce the monomial-order blocks: geometry variables are
/// eliminated first, then curve parameters, then system unknowns, with free
/// parameters ranked last.
enum class VarRole { Geometry, Curve, Unknown, Parameter };

int role_block(VarRole r);

class VarTable {
public:
    static std::shared_ptr<const VarTable> make(
        std::vector<std::pair<std::string, VarRole>> vars);

    /// New table with extra variables appended; existing indices are stable.
    static std::shared_ptr<const VarTable> extended(
        const std::shared_ptr<const VarTable>& base,
        std::vector<std::pair<std::string, VarRole>> extra);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    VarRole role(size_t i) const { return roles_[i]; }
    int block(size_t i) const { return blocks_[i]; }
    std::optional<size_t> find(const std::string& name) const;
    size_t index_of(const std::string& name) const;
    std::vector<size_t> indices_with_role(VarRole r) const;
    bool same_content(const VarTable& o) const {
        return names_ == o.names_ && roles_ == o.roles_;
    }

private:
    std::vector<std::string> names_;
    std::vector<VarRole> roles_;
    std::vector<int> blocks_;
    std::map<std::string, size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;
using Mono = std::vector<int>;

/// Graded reverse lexicographic order applied blockwise by variable role.
/// Returns true if a precedes b (a is larger).
bool mono_greater(const VarTable& table, const Mono& a, const Mono& b);

struct MonoGreater {
    VarTablePtr table;
    bool operator()(const Mono& a, const Mono& b) const {
        return mono_greater(*table, a, b);
    }
};

class RelationSet;

/// Sparse multivariate polynomial over CycNum.  Terms are kept in the
/// table's monomial order, leading term first; zero coefficients are never
/// stored.  Values are immutable in spirit: all operations return copies.
class MPoly {
public:
    using TermMap = std::map<Mono, CycNum, MonoGreater>;

    explicit MPoly(VarTablePtr table);
    static MPoly constant(VarTablePtr table, const CycNum& c);
    static MPoly variable(VarTablePtr table, size_t var, int exp = 1);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    CycNum constant_value() const;  // requires is_constant()

    const Mono& leading_mono() const;       // requires nonzero
    const CycNum& leading_coeff() const;    // requires nonzero

    void add_term(const Mono& m, const CycNum& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const CycNum& c) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly pow(long e) const;

    /// In-place *this += c * x^shift * g; the workhorse of division loops.
    void add_scaled(const MPoly& g, const Mono& shift, const CycNum& c);

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Total degree over variables selected by `roles` (all when empty).
    /// Zero polynomial reports -1 and is homogeneous of every degree.
    long degree(const std::set<VarRole>& roles = {}) const;
    bool is_homogeneous(const std::set<VarRole>& roles = {}) const;

    std::set<size_t> variables_used() const;

    /// Formal partial derivative.
    MPoly derivative(size_t var) const;

    /// Simultaneous substitution; unassigned variables pass through.
    MPoly substituted(const std::map<size_t, MPoly>& assignment) const;

    /// Partial evaluation at constants.
    MPoly evaluated(const std::map<size_t, CycNum>& values) const;

    /// Same polynomial over a super-table containing all this table's names.
    MPoly rebased(const VarTablePtr& new_table) const;

    /// Group terms by their exponents on `vars`; each value is a polynomial
    /// in the remaining variables.
    std::map<Mono, MPoly, MonoGreater> split_by(const std::set<size_t>& vars) const;

    std::string to_string() const;

private:
    VarTablePtr table_;
    TermMap terms_;
};

inline MPoly operator*(const CycNum& c, const MPoly& f) { return f * c; }

/// Rewrite rules with designated leading terms; reduce_mod computes the
/// normal form under multivariate division.
class RelationSet {
public:
    RelationSet() = default;
    explicit RelationSet(std::vector<MPoly> rels);

    bool empty() const { return rels_.empty(); }
    const std::vector<MPoly>& relations() const { return rels_; }

private:
    std::vector<MPoly> rels_;
};

MPoly reduce_mod(const MPoly& f, const RelationSet& rels);

/// Exact quotient f/g, or nullopt if g does not divide f.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

/// Square matrix with polynomial entries, acting on points and polynomials
/// by the row-vector convention (x) -> (x) * M.
class PolyMatrix {
public:
    PolyMatrix(VarTablePtr table, size_t dim);
    size_t dim() const { return dim_; }
    const MPoly& at(size_t i, size_t j) const { return entries_[i * dim_ + j]; }
    MPoly& at(size_t i, size_t j) { return entries_[i * dim_ + j]; }
    const VarTablePtr& table() const { return table_; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool all_constant() const;
    PolyMatrix reduced(const RelationSet& rels) const;

    /// Row vector of polynomials times this matrix.
    std::vector<MPoly> apply_row(const std::vector<MPoly>& row) const;

    std::string to_string() const;

private:
    VarTablePtr table_;
    size_t dim_;
    std::vector<MPoly> entries_;
};

/// f evaluated on the row vector (x) * M, where x runs over `vars`
/// (defaults to the table's geometry variables).
MPoly linear_change(const MPoly& f, const PolyMatrix& M,
                    const std::vector<size_t>& vars = {});

/// Multiplier lambda, a polynomial in mult_vars, with
/// linear_change(f, M) = lambda * f modulo rels; nullopt when none exists.
std::optional<MPoly> semi_invariance(const MPoly& f, const PolyMatrix& M,
                                     const std::set<size_t>& mult_vars,
                                     const RelationSet& rels,
                                     const std::vector<size_t>& vars = {});

/// Thrown by the expression parser; offset is 0-based into the input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Recursive-descent parser for the expression grammar:
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' nonneg-integer)? ;
///   base := variable | rational | 'zeta(' integer ')' | '(' expr ')'
MPoly parse_poly(const std::string& text, const VarTablePtr& table);

}  // namespace cubics
