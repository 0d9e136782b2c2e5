#include "cubics/stabsolve.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cubics {

std::vector<std::string> MatrixShape::unknown_names() const {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& e : entries) {
        if (const auto* name = std::get_if<std::string>(&e)) {
            if (!seen.insert(*name).second)
                throw std::invalid_argument("MatrixShape: duplicate unknown " + *name);
            names.push_back(*name);
        }
    }
    if (names.empty()) throw std::invalid_argument("MatrixShape: no unknowns");
    return names;
}

PolySystem invariance_system(const MPoly& f, const MatrixShape& shape,
                             bool unknown_multiplier,
                             const std::string& witness_expr) {
    auto geo = f.table()->indices_with_role(VarRole::Geometry);
    if (geo.size() != shape.dim)
        throw std::invalid_argument("invariance_system: dimension mismatch");
    if (!f.is_homogeneous({VarRole::Geometry}))
        throw std::invalid_argument("invariance_system: form not homogeneous");

    std::vector<std::pair<std::string, VarRole>> extra;
    for (const auto& name : shape.unknown_names())
        extra.emplace_back(name, VarRole::Unknown);
    if (unknown_multiplier) extra.emplace_back("lam", VarRole::Unknown);
    auto ext = VarTable::extended(f.table(), extra);

    PolySystem sys;
    sys.table = ext;
    for (const auto& [name, role] : extra) {
        (void)role;
        sys.unknowns.push_back(ext->index_of(name));
    }
    if (unknown_multiplier) sys.multiplier_var = ext->index_of("lam");

    PolyMatrix m(ext, shape.dim);
    for (size_t i = 0; i < shape.dim; ++i)
        for (size_t j = 0; j < shape.dim; ++j) {
            const auto& e = shape.at(i, j);
            if (const auto* c = std::get_if<CycNum>(&e))
                m.at(i, j) = MPoly::constant(ext, *c);
            else
                m.at(i, j) = MPoly::variable(ext, ext->index_of(std::get<std::string>(e)));
        }

    MPoly fe = f.rebased(ext);
    MPoly mult = unknown_multiplier
                     ? MPoly::variable(ext, *sys.multiplier_var)
                     : MPoly::constant(ext, CycNum(1));
    std::vector<size_t> geo_ext;
    for (size_t v : geo) geo_ext.push_back(ext->index_of(f.table()->name(v)));
    MPoly residual = linear_change(fe, m, geo_ext) - mult * fe;

    std::set<size_t> split_vars(geo_ext.begin(), geo_ext.end());
    for (size_t i = 0; i < ext->size(); ++i)
        if (ext->role(i) == VarRole::Curve) split_vars.insert(i);
    for (auto& [mono, coeff] : residual.split_by(split_vars))
        sys.equations.push_back(coeff);

    if (!witness_expr.empty()) sys.witness = parse_poly(witness_expr, ext);
    return sys;
}

namespace {

bool mono_divides(const Mono& d, const Mono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

bool mono_coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
    MPoly work = f;
    MPoly result(f.table());
    while (!work.is_zero()) {
        const Mono& lm = work.leading_mono();
        const CycNum& lc = work.leading_coeff();
        bool reduced = false;
        for (const auto& g : basis) {
            if (!mono_divides(g.leading_mono(), lm)) continue;
            Mono q(lm.size());
            for (size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - g.leading_mono()[i];
            work.add_scaled(g, q, -(lc / g.leading_coeff()));
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

MPoly make_monic(MPoly f) {
    if (f.is_zero()) return f;
    return f * f.leading_coeff().inverse();
}

}  // namespace

GroebnerBasis buchberger(const PolySystem& sys, bool localize,
                         long degree_cap, size_t basis_cap) {
    auto table = sys.table;
    std::vector<MPoly> inputs;
    for (const auto& e : sys.equations)
        if (!e.is_zero()) inputs.push_back(e);

    GroebnerBasis out;
    out.ring_vars = sys.unknowns;
    std::set<size_t> ring(sys.unknowns.begin(), sys.unknowns.end());
    for (const auto& e : sys.equations)
        for (size_t v : e.variables_used())
            if (ring.insert(v).second) out.ring_vars.push_back(v);

    if (localize) {
        if (!sys.witness || sys.witness->is_zero())
            throw std::invalid_argument("buchberger: no witness to localize at");
        auto ext = VarTable::extended(table, {{"w_loc", VarRole::Unknown}});
        size_t w = ext->index_of("w_loc");
        std::vector<MPoly> lifted;
        for (const auto& e : inputs) lifted.push_back(e.rebased(ext));
        lifted.push_back(MPoly::variable(ext, w) * sys.witness->rebased(ext) -
                         MPoly::constant(ext, CycNum(1)));
        inputs = std::move(lifted);
        table = ext;
        out.localized = true;
        // Reindex ring variables into the extended table.
        std::vector<size_t> reindexed;
        for (size_t v : out.ring_vars) reindexed.push_back(ext->index_of(sys.table->name(v)));
        for (size_t v : sys.witness->variables_used())
            reindexed.push_back(ext->index_of(sys.table->name(v)));
        reindexed.push_back(w);
        std::sort(reindexed.begin(), reindexed.end());
        reindexed.erase(std::unique(reindexed.begin(), reindexed.end()), reindexed.end());
        out.ring_vars = reindexed;
        out.localization_var = w;
    } else {
        if (sys.witness)
            for (size_t v : sys.witness->variables_used())
                if (ring.insert(v).second) out.ring_vars.push_back(v);
        std::sort(out.ring_vars.begin(), out.ring_vars.end());
        out.ring_vars.erase(std::unique(out.ring_vars.begin(), out.ring_vars.end()),
                            out.ring_vars.end());
    }

    std::vector<MPoly> basis;
    auto check_caps = [&](const MPoly& f) {
        if (f.degree() > degree_cap)
            throw cap_exceeded("Groebner degree cap " + std::to_string(degree_cap) +
                               " exceeded");
        if (basis.size() > basis_cap)
            throw cap_exceeded("Groebner basis size cap exceeded");
    };
    for (const auto& e : inputs) {
        MPoly nf = make_monic(normal_form(e, basis));
        if (nf.is_zero()) continue;
        check_caps(nf);
        basis.push_back(nf);
    }

    using Pair = std::tuple<long, size_t, size_t>;  // (lcm degree, i, j)
    std::set<Pair> pairs;
    auto lcm_degree = [&](size_t i, size_t j) {
        const Mono &a = basis[i].leading_mono(), &b = basis[j].leading_mono();
        long d = 0;
        for (size_t k = 0; k < a.size(); ++k) d += std::max(a[k], b[k]);
        return d;
    };
    auto queue_pairs_with = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.insert({lcm_degree(i, j), i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const Mono &a = basis[i].leading_mono(), &b = basis[j].leading_mono();
        if (mono_coprime(a, b)) continue;  // S-polynomial reduces to zero
        Mono lcm(a.size());
        for (size_t k = 0; k < a.size(); ++k) lcm[k] = std::max(a[k], b[k]);
        MPoly fa(table), fb(table);
        Mono qa(lcm), qb(lcm);
        for (size_t k = 0; k < lcm.size(); ++k) {
            qa[k] -= a[k];
            qb[k] -= b[k];
        }
        fa.add_term(qa, CycNum(1));
        fb.add_term(qb, CycNum(1));
        MPoly s = fa * basis[i] - fb * basis[j];
        MPoly nf = make_monic(normal_form(s, basis));
        if (nf.is_zero()) continue;
        check_caps(nf);
        basis.push_back(nf);
        queue_pairs_with(basis.size() - 1);
    }

    // Minimalize then tail-reduce for the unique reduced basis.
    std::vector<MPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
                if (basis[j].leading_mono() == basis[i].leading_mono() && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly nf = make_monic(normal_form(minimal[i], others));
        if (!nf.is_zero()) reduced.push_back(nf);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& x, const MPoly& y) {
        return mono_greater(*table, x.leading_mono(), y.leading_mono());
    });
    out.basis = std::move(reduced);
    out.reduced = true;

    // Self-checks: inputs reduce to zero, and every S-polynomial does too.
    for (const auto& e : inputs)
        if (!normal_form(e, out.basis).is_zero())
            throw std::logic_error("buchberger: input does not reduce to zero");
    for (size_t i = 0; i < out.basis.size(); ++i)
        for (size_t j = i + 1; j < out.basis.size(); ++j) {
            const Mono &a = out.basis[i].leading_mono(), &b = out.basis[j].leading_mono();
            if (mono_coprime(a, b)) continue;
            Mono lcm(a.size());
            for (size_t k = 0; k < a.size(); ++k) lcm[k] = std::max(a[k], b[k]);
            MPoly fa(table), fb(table);
            Mono qa(lcm), qb(lcm);
            for (size_t k = 0; k < lcm.size(); ++k) {
                qa[k] -= a[k];
                qb[k] -= b[k];
            }
            fa.add_term(qa, CycNum(1));
            fb.add_term(qb, CycNum(1));
            if (!normal_form(fa * out.basis[i] - fb * out.basis[j], out.basis).is_zero())
                throw std::logic_error("buchberger: S-polynomial check failed");
        }
    return out;
}

MPoly gb_reduce(const MPoly& f, const GroebnerBasis& gb) {
    MPoly g = f;
    if (!gb.basis.empty() && !f.table()->same_content(*gb.basis[0].table()))
        g = f.rebased(gb.basis[0].table());
    return normal_form(g, gb.basis);
}

long staircase_dimension(const GroebnerBasis& gb) {
    if (!gb.reduced) throw std::invalid_argument("staircase_dimension: basis not reduced");
    const auto& vars = gb.ring_vars;
    size_t k = vars.size();
    if (k > 26) throw cap_exceeded("staircase_dimension: too many variables");
    std::vector<uint64_t> supports;
    for (const auto& g : gb.basis) {
        uint64_t mask = 0;
        const Mono& lm = g.leading_mono();
        for (size_t idx = 0; idx < k; ++idx)
            if (lm[vars[idx]] > 0) mask |= uint64_t(1) << idx;
        if (mask == 0) return -1;  // unit ideal
        supports.push_back(mask);
    }
    long best = -1;
    for (uint64_t s = 0; s < (uint64_t(1) << k); ++s) {
        bool independent = true;
        for (uint64_t m : supports)
            if ((m & ~s) == 0) { independent = false; break; }
        if (!independent) continue;
        long size = static_cast<long>(__builtin_popcountll(s));
        best = std::max(best, size);
    }
    return best;
}

FamilyCheck verify_solution_family(const PolySystem& sys,
                                   const std::map<std::string, MPoly>& family,
                                   const RelationSet& rels) {
    // The family may introduce fresh free parameters; work in the widest table.
    VarTablePtr target = sys.table;
    for (const auto& [name, value] : family) {
        (void)name;
        if (value.table()->size() > target->size()) target = value.table();
    }
    std::map<size_t, MPoly> assignment;
    for (size_t v : sys.unknowns) {
        auto it = family.find(sys.table->name(v));
        if (it == family.end())
            throw std::invalid_argument("verify_solution_family: unknown " +
                                        sys.table->name(v) + " unassigned");
        assignment.emplace(target->index_of(sys.table->name(v)),
                           it->second.rebased(target));
    }
    std::vector<MPoly> rel_ext;
    for (const auto& r : rels.relations()) rel_ext.push_back(r.rebased(target));
    RelationSet rels2(rel_ext);
    for (const auto& eq : sys.equations) {
        MPoly residual = reduce_mod(eq.rebased(target).substituted(assignment), rels2);
        if (!residual.is_zero()) return {false, residual.to_string()};
    }
    return {true, ""};
}

}  // namespace cubics
