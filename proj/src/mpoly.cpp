#include "cubics/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cubics {

int role_block(VarRole r) {
    switch (r) {
        case VarRole::Geometry: return 0;
        case VarRole::Curve: return 1;
        case VarRole::Unknown: return 2;
        case VarRole::Parameter: return 3;
    }
    return 3;
}

std::shared_ptr<const VarTable> VarTable::make(
    std::vector<std::pair<std::string, VarRole>> vars) {
    auto t = std::make_shared<VarTable>();
    for (auto& [name, role] : vars) {
        if (t->index_.count(name))
            throw std::invalid_argument("VarTable: duplicate variable " + name);
        t->index_[name] = t->names_.size();
        t->names_.push_back(name);
        t->roles_.push_back(role);
        t->blocks_.push_back(role_block(role));
    }
    return t;
}

std::shared_ptr<const VarTable> VarTable::extended(
    const std::shared_ptr<const VarTable>& base,
    std::vector<std::pair<std::string, VarRole>> extra) {
    std::vector<std::pair<std::string, VarRole>> vars;
    for (size_t i = 0; i < base->size(); ++i)
        vars.emplace_back(base->name(i), base->role(i));
    for (auto& v : extra) vars.push_back(std::move(v));
    return make(std::move(vars));
}

std::optional<size_t> VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

size_t VarTable::index_of(const std::string& name) const {
    auto idx = find(name);
    if (!idx) throw std::invalid_argument("VarTable: unknown variable " + name);
    return *idx;
}

std::vector<size_t> VarTable::indices_with_role(VarRole r) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < size(); ++i)
        if (roles_[i] == r) out.push_back(i);
    return out;
}

bool mono_greater(const VarTable& table, const Mono& a, const Mono& b) {
    long da[4] = {0, 0, 0, 0}, db[4] = {0, 0, 0, 0};
    size_t n = table.size();
    for (size_t i = 0; i < n; ++i) {
        int blk = table.block(i);
        da[blk] += i < a.size() ? a[i] : 0;
        db[blk] += i < b.size() ? b[i] : 0;
    }
    for (int block = 0; block < 4; ++block) {
        if (da[block] != db[block]) return da[block] > db[block];
        // Reverse lexicographic tie-break within the block: scanning from the
        // last variable, the monomial with the smaller exponent is larger.
        for (size_t i = n; i-- > 0;) {
            if (table.block(i) != block) continue;
            int ea = i < a.size() ? a[i] : 0;
            int eb = i < b.size() ? b[i] : 0;
            if (ea != eb) return ea < eb;
        }
    }
    return false;  // equal
}

MPoly::MPoly(VarTablePtr table)
    : table_(std::move(table)), terms_(MonoGreater{table_}) {
    if (!table_) throw std::invalid_argument("MPoly: null table");
}

MPoly MPoly::constant(VarTablePtr table, const CycNum& c) {
    MPoly p(std::move(table));
    if (!c.is_zero()) p.terms_.emplace(Mono(p.table_->size(), 0), c);
    return p;
}

MPoly MPoly::variable(VarTablePtr table, size_t var, int exp) {
    MPoly p(std::move(table));
    if (var >= p.table_->size()) throw std::invalid_argument("MPoly: bad variable index");
    if (exp < 0) throw std::invalid_argument("MPoly: negative exponent");
    Mono m(p.table_->size(), 0);
    m[var] = exp;
    p.terms_.emplace(std::move(m), CycNum(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

CycNum MPoly::constant_value() const {
    if (terms_.empty()) return CycNum(0);
    if (!is_constant()) throw std::domain_error("MPoly: not constant");
    return terms_.begin()->second;
}

const Mono& MPoly::leading_mono() const {
    if (terms_.empty()) throw std::domain_error("MPoly: zero polynomial");
    return terms_.begin()->first;
}

const CycNum& MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("MPoly: zero polynomial");
    return terms_.begin()->second;
}

void MPoly::add_term(const Mono& m, const CycNum& c) {
    if (c.is_zero()) return;
    Mono key = m;
    key.resize(table_->size(), 0);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void check_same_table(const MPoly& a, const MPoly& b) {
    if (a.table() == b.table()) return;
    if (!a.table()->same_content(*b.table()))
        throw std::invalid_argument("MPoly: mismatched variable tables");
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

void MPoly::add_scaled(const MPoly& g, const Mono& shift, const CycNum& c) {
    if (c.is_zero()) return;
    check_same_table(*this, g);
    Mono key(table_->size());
    for (const auto& [m, coeff] : g.terms_) {
        for (size_t i = 0; i < key.size(); ++i) key[i] = m[i] + shift[i];
        add_term(key, coeff * c);
    }
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_table(*this, o);
    MPoly r(table_);
    Mono prod(table_->size());
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            for (size_t i = 0; i < prod.size(); ++i) prod[i] = m1[i] + m2[i];
            r.add_term(prod, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::operator*(const CycNum& c) const {
    MPoly r(table_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("MPoly: negative power");
    MPoly result = MPoly::constant(table_, CycNum(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        if (e >>= 1) base *= base;
    }
    return result;
}

bool MPoly::operator==(const MPoly& o) const {
    check_same_table(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

long MPoly::degree(const std::set<VarRole>& roles) const {
    long deg = -1;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (size_t i = 0; i < m.size(); ++i)
            if (roles.empty() || roles.count(table_->role(i))) d += m[i];
        deg = std::max(deg, d);
    }
    return deg;
}

bool MPoly::is_homogeneous(const std::set<VarRole>& roles) const {
    long deg = -1;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (size_t i = 0; i < m.size(); ++i)
            if (roles.empty() || roles.count(table_->role(i))) d += m[i];
        if (deg == -1) deg = d;
        else if (d != deg) return false;
    }
    return true;
}

std::set<size_t> MPoly::variables_used() const {
    std::set<size_t> used;
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) used.insert(i);
    return used;
}

MPoly MPoly::derivative(size_t var) const {
    if (var >= table_->size()) throw std::invalid_argument("MPoly: bad variable index");
    MPoly r(table_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        r.add_term(d, c * CycNum(m[var]));
    }
    return r;
}

MPoly MPoly::substituted(const std::map<size_t, MPoly>& assignment) const {
    VarTablePtr target = table_;
    for (const auto& [v, img] : assignment) {
        (void)v;
        target = img.table();
        break;
    }
    MPoly result(target);
    // Memoized powers of each substituted image.
    std::map<size_t, std::vector<MPoly>> powers;
    for (const auto& [m, c] : terms_) {
        MPoly term = MPoly::constant(target, c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                term *= MPoly::variable(target, target->index_of(table_->name(i)), m[i]);
                continue;
            }
            auto& pows = powers[i];
            if (pows.empty()) pows.push_back(MPoly::constant(target, CycNum(1)));
            while (pows.size() <= static_cast<size_t>(m[i]))
                pows.push_back(pows.back() * it->second);
            term *= pows[static_cast<size_t>(m[i])];
        }
        result += term;
    }
    return result;
}

MPoly MPoly::evaluated(const std::map<size_t, CycNum>& values) const {
    MPoly result(table_);
    for (const auto& [m, c] : terms_) {
        CycNum coeff = c;
        Mono rest = m;
        for (const auto& [v, val] : values) {
            if (m[v] == 0) continue;
            coeff *= val.pow(m[v]);
            rest[v] = 0;
        }
        result.add_term(rest, coeff);
    }
    return result;
}

MPoly MPoly::rebased(const VarTablePtr& new_table) const {
    std::vector<size_t> remap(table_->size());
    for (size_t i = 0; i < table_->size(); ++i)
        remap[i] = new_table->index_of(table_->name(i));
    MPoly r(new_table);
    for (const auto& [m, c] : terms_) {
        Mono nm(new_table->size(), 0);
        for (size_t i = 0; i < m.size(); ++i) nm[remap[i]] = m[i];
        r.add_term(nm, c);
    }
    return r;
}

std::map<Mono, MPoly, MonoGreater> MPoly::split_by(const std::set<size_t>& vars) const {
    std::map<Mono, MPoly, MonoGreater> parts{MonoGreater{table_}};
    for (const auto& [m, c] : terms_) {
        Mono key(table_->size(), 0), rest(table_->size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (vars.count(i)) key[i] = m[i];
            else rest[i] = m[i];
        }
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, MPoly(table_)).first;
        it->second.add_term(rest, c);
    }
    return parts;
}

namespace {

std::string mono_to_string(const VarTable& table, const Mono& m) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << table.name(i);
        if (m[i] > 1) out << "^" << m[i];
    }
    return out.str();
}

// Splits a coefficient into (positive-leading value, was-negated flag) so
// terms can be joined with " + " / " - ".
std::pair<CycNum, bool> normalize_sign(const CycNum& c) {
    CycNum v = c.minimized();
    for (const auto& q : v.coeffs()) {
        if (q == 0) continue;
        if (q < 0) return {-c, true};
        return {c, false};
    }
    return {c, false};
}

}  // namespace

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto [val, negated] = normalize_sign(c);
        if (first) {
            if (negated) out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        std::string ms = mono_to_string(*table_, m);
        std::string cs = val.to_string();
        bool multi_term = cs.find(" + ") != std::string::npos ||
                          cs.find(" - ") != std::string::npos;
        if (ms.empty()) {
            out << (multi_term ? "(" + cs + ")" : cs);
        } else if (val.is_one()) {
            out << ms;
        } else if (multi_term) {
            out << "(" << cs << ")*" << ms;
        } else {
            out << cs << "*" << ms;
        }
    }
    return out.str();
}

RelationSet::RelationSet(std::vector<MPoly> rels) {
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        rels_.push_back(std::move(r));
    }
}

namespace {

bool mono_divides(const Mono& d, const Mono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > (i < m.size() ? m[i] : 0)) return false;
    return true;
}

}  // namespace

MPoly reduce_mod(const MPoly& f, const RelationSet& rels) {
    if (rels.empty()) return f;
    MPoly work = f;
    MPoly result(f.table());
    while (!work.is_zero()) {
        const Mono& lm = work.leading_mono();
        const CycNum& lc = work.leading_coeff();
        bool reduced = false;
        for (const auto& rel : rels.relations()) {
            const Mono& rm = rel.leading_mono();
            if (!mono_divides(rm, lm)) continue;
            Mono q(lm.size());
            for (size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - rm[i];
            work.add_scaled(rel, q, -(lc / rel.leading_coeff()));
            reduced = true;
            break;
        }
        if (!reduced) {
            CycNum coeff = lc;
            Mono mono = lm;
            result.add_term(mono, coeff);
            work.add_term(mono, -coeff);
        }
    }
    return result;
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) return std::nullopt;
    MPoly quot(f.table());
    MPoly rem = f;
    while (!rem.is_zero()) {
        const Mono& lm = rem.leading_mono();
        if (!mono_divides(g.leading_mono(), lm)) return std::nullopt;
        Mono q(lm.size());
        for (size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - g.leading_mono()[i];
        CycNum c = rem.leading_coeff() / g.leading_coeff();
        quot.add_term(q, c);
        rem.add_scaled(g, q, -c);
    }
    return quot;
}

PolyMatrix::PolyMatrix(VarTablePtr table, size_t dim)
    : table_(std::move(table)), dim_(dim),
      entries_(dim * dim, MPoly(table_)) {
    if (dim == 0) throw std::invalid_argument("PolyMatrix: dimension 0");
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix r(table_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            MPoly sum(table_);
            for (size_t k = 0; k < dim_; ++k) sum += at(i, k) * o.at(k, j);
            r.at(i, j) = sum;
        }
    return r;
}

bool PolyMatrix::all_constant() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const MPoly& e) { return e.is_constant(); });
}

PolyMatrix PolyMatrix::reduced(const RelationSet& rels) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = reduce_mod(e, rels);
    return r;
}

std::vector<MPoly> PolyMatrix::apply_row(const std::vector<MPoly>& row) const {
    if (row.size() != dim_) throw std::invalid_argument("PolyMatrix: row size mismatch");
    std::vector<MPoly> out;
    out.reserve(dim_);
    for (size_t j = 0; j < dim_; ++j) {
        MPoly sum(table_);
        for (size_t i = 0; i < dim_; ++i) sum += row[i] * at(i, j);
        out.push_back(std::move(sum));
    }
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < dim_; ++i) {
        out << (i ? "; " : "");
        for (size_t j = 0; j < dim_; ++j) out << (j ? ", " : "") << at(i, j).to_string();
    }
    out << "]";
    return out.str();
}

MPoly linear_change(const MPoly& f, const PolyMatrix& M,
                    const std::vector<size_t>& vars) {
    std::vector<size_t> acting = vars;
    if (acting.empty()) acting = f.table()->indices_with_role(VarRole::Geometry);
    if (acting.size() != M.dim())
        throw std::invalid_argument("linear_change: dimension mismatch");
    std::map<size_t, MPoly> assignment;
    for (size_t j = 0; j < acting.size(); ++j) {
        MPoly image(f.table());
        for (size_t i = 0; i < acting.size(); ++i)
            image += MPoly::variable(f.table(), acting[i]) * M.at(i, j);
        assignment.emplace(acting[j], std::move(image));
    }
    return f.substituted(assignment);
}

std::optional<MPoly> semi_invariance(const MPoly& f, const PolyMatrix& M,
                                     const std::set<size_t>& mult_vars,
                                     const RelationSet& rels,
                                     const std::vector<size_t>& vars) {
    if (f.is_zero()) throw std::invalid_argument("semi_invariance: zero polynomial");
    MPoly g = reduce_mod(linear_change(f, M, vars), rels);
    std::vector<size_t> acting = vars;
    if (acting.empty()) acting = f.table()->indices_with_role(VarRole::Geometry);
    std::set<size_t> acting_set(acting.begin(), acting.end());
    auto f_parts = f.split_by(acting_set);
    auto g_parts = g.split_by(acting_set);
    // Match the coefficient of one reference monomial of f, then verify.
    const auto& [ref_mono, ref_coeff] = *f_parts.begin();
    auto git = g_parts.find(ref_mono);
    MPoly g_coeff = git == g_parts.end() ? MPoly(f.table()) : git->second;
    auto lambda = divide_exact(g_coeff, ref_coeff);
    if (!lambda) return std::nullopt;
    for (size_t v : lambda->variables_used())
        if (!mult_vars.count(v)) return std::nullopt;
    if (!reduce_mod(g - *lambda * f, rels).is_zero()) return std::nullopt;
    return lambda;
}

}  // namespace cubics
