#include "cubics/driver.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

namespace cubics {

const char* kEngineVersion = "cubics 0.1.0";

namespace {

class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& witness) : std::runtime_error(witness) {}
};

// Execution context for one case run.
struct Context {
    const CaseRecord& rec;
    const RunOptions& opts;

    const VarTablePtr& table() const { return rec.table(); }

    MPoly parse(const std::string& text) const { return parse_poly(text, table()); }

    CycNum constant(const std::string& text) const {
        MPoly f = parse(text);
        if (!f.is_constant())
            throw CheckFailure("expected a constant: " + text);
        return f.constant_value();
    }

    // Parameter evaluation map from a JSON object {name: value}, expanding
    // foo -> foo_inv companions when present.
    std::map<size_t, CycNum> value_map(const Json& obj) const {
        std::map<size_t, CycNum> values;
        if (obj.is_null()) return values;
        for (const auto& [name, val] : obj.items()) {
            auto idx = table()->find(name);
            if (!idx) throw CheckFailure("unknown parameter " + name);
            CycNum v = constant(val.get<std::string>());
            values[*idx] = v;
            auto inv = table()->find(name + "_inv");
            if (inv) values[*inv] = v.inverse();
        }
        return values;
    }

    std::map<size_t, CycNum> case_params(const Json& args) const {
        Json merged = args.contains("params") ? args["params"] : Json::object();
        for (const auto& [k, v] : opts.params)
            merged[k] = v;  // command-line overrides win
        return value_map(merged);
    }

    MPoly cubic_at(const std::map<size_t, CycNum>& values) const {
        return rec.cubic().evaluated(values);
    }

    RelationSet rels_with_cubic(const MPoly& cubic) const {
        std::vector<MPoly> rels = rec.relation_polys;
        rels.push_back(cubic);
        return RelationSet(rels);
    }

    std::set<size_t> parameter_vars() const {
        std::set<size_t> out;
        for (size_t v : table()->indices_with_role(VarRole::Parameter)) out.insert(v);
        return out;
    }

    std::vector<CycNum> point_of(const Json& arr) const {
        std::vector<CycNum> p;
        for (const auto& c : arr) p.push_back(constant(c.get<std::string>()));
        return p;
    }

    std::vector<MPoly> poly_row(const Json& arr) const {
        std::vector<MPoly> p;
        for (const auto& c : arr) p.push_back(parse(c.get<std::string>()));
        return p;
    }

    size_t s_var() const { return table()->index_of("s"); }
    size_t t_var() const { return table()->index_of("t"); }

    PolyMatrix matrix_for(const GeneratorSpec& g, const Json& args) const {
        PolyMatrix m = g.action.mat;
        if (args.contains("sym_power")) {
            long d = args["sym_power"].get<long>();
            m = sym_power(m, d, s_var(), t_var(), rec.relations);
        }
        return m;
    }

    ScalarMatrix scalar_for(const GeneratorSpec& g, const Json& args,
                            const std::map<size_t, CycNum>& extra) const {
        PolyMatrix m = matrix_for(g, args);
        LinearAction tmp{g.label, m, rec.relations, g.action.det_witness, {}};
        return tmp.to_scalar(extra);
    }
};

std::string proj_point_str(const ProjPoint& p) { return p.to_string(); }

// ---------------------------------------------------------------- checks

std::string check_invariance(const Context& ctx, const Json& args) {
    const auto& g = ctx.rec.generator(args["generator"].get<std::string>());
    if (args.contains("ideal")) {
        std::vector<MPoly> ideal;
        for (const auto& p : args["ideal"]) ideal.push_back(ctx.parse(p.get<std::string>()));
        std::vector<MPoly> rels = ideal;
        for (const auto& r : ctx.rec.relation_polys) rels.push_back(r);
        RelationSet rset(rels);
        for (const auto& p : ideal) {
            MPoly moved = linear_change(p, g.action.mat, g.action.acting_vars);
            MPoly residual = reduce_mod(moved, rset);
            if (!residual.is_zero())
                throw CheckFailure("ideal not preserved; residual " + residual.to_string());
        }
        return "ideal preserved";
    }
    auto lambda = semi_invariance(ctx.rec.cubic(), g.action.mat, ctx.parameter_vars(),
                                  ctx.rec.relations, g.action.acting_vars);
    if (!lambda) throw CheckFailure("no multiplier exists");
    if (!(*lambda == MPoly::constant(ctx.table(), CycNum(1))))
        throw CheckFailure("multiplier " + lambda->to_string() + ", expected 1");
    return "strictly invariant";
}

std::string check_semi_invariance(const Context& ctx, const Json& args) {
    const auto& g = ctx.rec.generator(args["generator"].get<std::string>());
    MPoly f = args.contains("form") ? ctx.parse(args["form"].get<std::string>())
                                    : ctx.rec.cubic();
    std::vector<size_t> acting = g.action.acting_vars;
    if (args.contains("vars")) {
        acting.clear();
        for (const auto& v : args["vars"])
            acting.push_back(ctx.table()->index_of(v.get<std::string>()));
    }
    PolyMatrix m = ctx.matrix_for(g, args);
    auto lambda = semi_invariance(f, m, ctx.parameter_vars(), ctx.rec.relations, acting);
    if (!lambda) throw CheckFailure("no multiplier exists");
    MPoly expected = ctx.parse(args["multiplier"].get<std::string>());
    if (!(*lambda == expected))
        throw CheckFailure("multiplier " + lambda->to_string() + ", expected " +
                           expected.to_string());
    std::ostringstream note;
    note << "multiplier " << lambda->to_string();
    if (args.contains("pure_power_of")) {
        MPoly base = ctx.parse(args["pure_power_of"].get<std::string>());
        long k = 0;
        MPoly r = *lambda;
        while (!r.is_constant()) {
            auto q = divide_exact(r, base);
            if (!q) throw CheckFailure("multiplier is not a pure power of " +
                                       base.to_string());
            r = *q;
            ++k;
        }
        if (!r.is_constant() || !(r.constant_value() == CycNum(1)))
            throw CheckFailure("multiplier has a non-unit cofactor " + r.to_string());
        note << " = (" << base.to_string() << ")^" << k;
        if (args.contains("exponent") && args["exponent"].get<long>() != k)
            throw CheckFailure("exponent " + std::to_string(k) + ", expected " +
                               std::to_string(args["exponent"].get<long>()));
    }
    return note.str();
}

std::string check_singular_along(const Context& ctx, const Json& args) {
    const auto& curve = ctx.rec.curve(args["curve"].get<std::string>());
    std::vector<MPoly> polys;
    std::vector<size_t> coords;
    if (args.contains("polys")) {
        for (const auto& p : args["polys"]) {
            const auto& aux = ctx.rec.aux_poly(p.get<std::string>());
            polys.push_back(aux.poly);
            coords = aux.coords;
        }
    } else {
        polys.push_back(ctx.rec.cubic());
    }
    if (!singular_along(polys, curve.curve, coords))
        throw CheckFailure("a partial derivative does not vanish on the curve");
    return "singular along " + curve.label;
}

std::string check_curve_containment(const Context& ctx, const Json& args) {
    const auto& curve = ctx.rec.curve(args["curve"].get<std::string>());
    MPoly f = ctx.rec.cubic();
    std::vector<size_t> coords;
    if (args.contains("poly")) {
        const auto& aux = ctx.rec.aux_poly(args["poly"].get<std::string>());
        f = aux.poly;
        coords = aux.coords;
    }
    if (!curve_in_hypersurface(curve.curve, f, coords))
        throw CheckFailure("curve is not contained in the hypersurface");
    return "contained";
}

FiniteMatrixGroup close_from_args(const Context& ctx, const Json& args,
                                  long sym_override = -1) {
    std::map<size_t, CycNum> global;
    Json spec = args.contains("specialize") ? args["specialize"] : Json::object();
    if (args.contains("dihedral_n")) {
        unsigned n = ctx.opts.dihedral_n.value_or(args["dihedral_n"].get<unsigned>());
        spec["a"] = "zeta(" + std::to_string(n) + ")";
    }
    global = ctx.value_map(spec);
    std::vector<ScalarMatrix> gens;
    for (const auto& item : args["generators"]) {
        std::string label = item.is_string() ? item.get<std::string>()
                                             : item.at("label").get<std::string>();
        const auto& g = ctx.rec.generator(label);
        std::map<size_t, CycNum> values = global;
        if (item.is_object() && item.contains("specialize"))
            for (const auto& [k, v] : ctx.value_map(item["specialize"])) values[k] = v;
        Json margs = args;
        if (sym_override >= 0) margs["sym_power"] = sym_override;
        gens.push_back(ctx.scalar_for(g, margs, values));
    }
    return FiniteMatrixGroup::close(gens, 240);
}

std::string check_orbit(const Context& ctx, const Json& args) {
    auto group = close_from_args(ctx, args);
    if (args.contains("expected_group_order") &&
        group.order() != args["expected_group_order"].get<size_t>())
        throw CheckFailure("group order " + std::to_string(group.order()) +
                           ", expected " +
                           std::to_string(args["expected_group_order"].get<size_t>()));
    ProjPoint p{ctx.point_of(args["point"])};
    auto orb = orbit(group, p);
    std::vector<ProjPoint> expected;
    for (const auto& q : args["expected_points"])
        expected.push_back(ProjPoint{ctx.point_of(q)}.canonicalized());
    if (orb.size() != expected.size())
        throw CheckFailure("orbit has " + std::to_string(orb.size()) +
                           " points, expected " + std::to_string(expected.size()));
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& q : orb)
            if (q.proportional_to(e)) found = true;
        if (!found) throw CheckFailure("expected point " + e.to_string() +
                                       " is not in the orbit");
    }
    size_t stab = stabilizer_order(group, p);
    if (orb.size() * stab != group.order())
        throw CheckFailure("orbit-stabilizer mismatch: " + std::to_string(orb.size()) +
                           " * " + std::to_string(stab) +
                           " != " + std::to_string(group.order()));
    return "orbit of length " + std::to_string(orb.size()) +
           ", stabilizer of order " + std::to_string(stab);
}

std::string check_fixed_point(const Context& ctx, const Json& args) {
    auto params = ctx.case_params(args);
    std::vector<CycNum> coords = ctx.point_of(args["point"]);
    std::ostringstream note;

    if (args.contains("expect_image")) {
        const auto& g = ctx.rec.generator(args["generator"].get<std::string>());
        std::vector<MPoly> row;
        for (const auto& c : coords) row.push_back(MPoly::constant(ctx.table(), c));
        std::vector<MPoly> image = g.action.mat.apply_row(row);
        std::vector<MPoly> expected = ctx.poly_row(args["expect_image"]);
        if (expected.size() != image.size())
            throw CheckFailure("image dimension mismatch");
        bool some_nonzero = false;
        for (size_t i = 0; i < image.size(); ++i) {
            if (!reduce_mod(image[i], ctx.rec.relations).is_zero()) some_nonzero = true;
            for (size_t j = i + 1; j < image.size(); ++j) {
                MPoly cross = image[i] * expected[j] - image[j] * expected[i];
                if (!reduce_mod(cross, ctx.rec.relations).is_zero())
                    throw CheckFailure("image differs from the pinned value at " +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       ": " + cross.to_string());
            }
        }
        if (!some_nonzero) throw CheckFailure("image vanishes");
        note << "action pinned";
        return note.str();
    }

    ScalarMatrix m = ScalarMatrix::identity(coords.size());
    if (args.contains("generator")) {
        const auto& g = ctx.rec.generator(args["generator"].get<std::string>());
        m = ctx.scalar_for(g, args, params);
    }
    MPoly f = ctx.cubic_at(params);
    auto result = fixed_points_check(m, ProjPoint{coords}, f);
    auto expect_flag = [&](const char* key, bool actual, const char* what) {
        if (args.contains(key) && args[key].get<bool>() != actual)
            throw CheckFailure(std::string(what) + " = " + (actual ? "true" : "false") +
                               ", expected " + (args[key].get<bool>() ? "true" : "false"));
    };
    expect_flag("expect_fixed", result.fixed, "fixed");
    expect_flag("expect_on_variety", result.on_variety, "on_variety");
    expect_flag("expect_smooth", result.smooth, "smooth");
    note << "fixed=" << result.fixed << " on_variety=" << result.on_variety
         << " smooth=" << result.smooth;
    return note.str();
}

std::string check_no_common_fixed_point(const Context& ctx, const Json& args) {
    auto group = close_from_args(ctx, args);
    const auto& curve = ctx.rec.curve(args["curve"].get<std::string>());
    std::map<size_t, CycNum> global = ctx.value_map(
        args.contains("specialize") ? args["specialize"] : Json::object());
    std::ostringstream note;
    if (args.contains("element_data")) {
        for (const auto& item : args["element_data"]) {
            const auto& g = ctx.rec.generator(item.at("generator").get<std::string>());
            ScalarMatrix m = ctx.scalar_for(g, args, global);
            auto induced = induced_param_action(m, curve.curve);
            if (!induced)
                throw CheckFailure(g.label + " does not preserve the curve");
            if (item.contains("fixes")) {
                auto fps = fixed_parameter_points(*induced, ctx.rec.max_conductor);
                if (!fps.factored || fps.whole_line)
                    throw CheckFailure(g.label + ": fixed points not resolved");
                std::vector<ProjPoint> expected;
                for (const auto& q : item["fixes"])
                    expected.push_back(ProjPoint{ctx.point_of(q)}.canonicalized());
                if (fps.points.size() != expected.size())
                    throw CheckFailure(g.label + ": fixed-point count " +
                                       std::to_string(fps.points.size()));
                for (const auto& e : expected) {
                    bool found = false;
                    for (const auto& q : fps.points)
                        if (q.proportional_to(e)) found = true;
                    if (!found)
                        throw CheckFailure(g.label + " does not fix " + e.to_string());
                }
            }
            if (item.contains("maps")) {
                for (const auto& mv : item["maps"]) {
                    ProjPoint from{ctx.point_of(mv.at("from"))};
                    ProjPoint to{ctx.point_of(mv.at("to"))};
                    ProjPoint image = induced->apply(from);
                    if (!image.proportional_to(to))
                        throw CheckFailure(g.label + " sends " + from.to_string() +
                                           " to " + image.to_string() + ", expected " +
                                           to.to_string());
                }
            }
        }
    }
    auto result = common_fixed_point_on_curve(group, curve.curve, ctx.rec.max_conductor);
    std::string expect = args.contains("expect") ? args["expect"].get<std::string>()
                                                 : "none";
    using Status = CommonFixedPointResult::Status;
    if (expect == "none") {
        if (result.status != Status::None)
            throw CheckFailure("expected no common fixed point; got status " +
                               std::to_string(static_cast<int>(result.status)));
        note << "no common fixed point; " << result.witness;
    } else if (expect == "point") {
        if (result.status != Status::Point)
            throw CheckFailure("expected a common fixed point");
        note << "fixed parameter " << proj_point_str(result.parameter_point);
    } else if (expect == "whole-curve") {
        if (result.status != Status::WholeCurve)
            throw CheckFailure("expected the whole curve fixed");
        note << "whole curve";
    } else {
        throw CheckFailure("unknown expectation " + expect);
    }
    return note.str();
}

RationalMap composed_map(const MapSpec& outer, const MapSpec& inner) {
    if (inner.map.factors.size() != 1)
        throw CheckFailure("composition needs a single-factor inner map");
    const auto& comps = inner.map.factors[0];
    if (comps.size() != outer.source_vars.size())
        throw CheckFailure("composition dimension mismatch");
    std::map<size_t, MPoly> assignment;
    for (size_t i = 0; i < comps.size(); ++i)
        assignment.emplace(outer.source_vars[i], comps[i]);
    RationalMap out;
    out.label = outer.label + "∘" + inner.label;
    for (const auto& factor : outer.map.factors) {
        std::vector<MPoly> nf;
        for (const auto& c : factor) nf.push_back(c.substituted(assignment));
        out.factors.push_back(std::move(nf));
    }
    return out;
}

RelationSet map_modulus(const Context& ctx, const MapSpec& m) {
    auto geo = ctx.table()->indices_with_role(VarRole::Geometry);
    if (m.source_vars == geo) return ctx.rels_with_cubic(ctx.rec.cubic());
    return ctx.rec.relations;
}

std::string check_map_identity(const Context& ctx, const Json& args) {
    const auto& m1 = ctx.rec.map(args["map1"].get<std::string>());
    const auto& m2 = ctx.rec.map(args["map2"].get<std::string>());
    RationalMap rhs = m2.map;
    if (args.contains("compose_with"))
        rhs = composed_map(m2, ctx.rec.map(args["compose_with"].get<std::string>()));
    bool equal = maps_equal_mod(m1.map, rhs, map_modulus(ctx, m1));
    bool expect = args["expect"].get<bool>();
    if (equal != expect)
        throw CheckFailure(std::string("maps are ") + (equal ? "equal" : "different") +
                           ", expected the opposite");
    return equal ? "maps agree on the hypersurface" : "maps differ as expected";
}

std::string check_map_image_in(const Context& ctx, const Json& args) {
    const auto& m = ctx.rec.map(args["map"].get<std::string>());
    if (args.contains("point")) {
        // Excluded-point mode: the fiber system over the point is empty.
        if (m.map.factors.size() != 1) throw CheckFailure("single-factor maps only");
        const auto& comps = m.map.factors[0];
        std::vector<CycNum> p = ctx.point_of(args["point"]);
        if (p.size() != comps.size()) throw CheckFailure("point dimension mismatch");
        auto ext = VarTable::extended(ctx.table(), {{"pt_c", VarRole::Unknown}});
        MPoly c = MPoly::variable(ext, ext->index_of("pt_c"));
        PolySystem sys;
        sys.table = ext;
        sys.unknowns = {ext->index_of("pt_c")};
        for (size_t i = 0; i < comps.size(); ++i)
            sys.equations.push_back(comps[i].rebased(ext) -
                                    c * MPoly::constant(ext, p[i]));
        sys.witness = c;
        auto gb = buchberger(sys, /*localize=*/true);
        long dim = staircase_dimension(gb);
        std::string expect = args.contains("expect") ? args["expect"].get<std::string>()
                                                     : "excluded";
        if (expect == "excluded") {
            if (dim != -1)
                throw CheckFailure("point lies in the image closure; staircase dim " +
                                   std::to_string(dim));
            return "point excluded from the image";
        }
        if (dim == -1) throw CheckFailure("point not in the image");
        return "point attained";
    }
    bool exact = args.contains("modulo") && args["modulo"].get<std::string>() == "none";
    RelationSet modulus = exact ? RelationSet()
                                : ctx.rels_with_cubic(ctx.rec.cubic());
    std::vector<std::pair<MPoly, std::vector<size_t>>> targets;
    if (args.contains("target_polys")) {
        for (const auto& t : args["target_polys"]) {
            const auto& aux = ctx.rec.aux_poly(t.get<std::string>());
            targets.emplace_back(aux.poly, aux.coords);
        }
    } else {
        targets.emplace_back(ctx.rec.cubic(),
                             ctx.table()->indices_with_role(VarRole::Geometry));
    }
    const auto& comps = m.map.factors[0];
    for (const auto& [target, coords] : targets) {
        if (coords.size() != comps.size())
            throw CheckFailure("target coordinate count mismatch");
        std::map<size_t, MPoly> assignment;
        for (size_t i = 0; i < coords.size(); ++i) assignment.emplace(coords[i], comps[i]);
        MPoly pulled = target.substituted(assignment);
        MPoly residual = reduce_mod(pulled, modulus);
        if (!residual.is_zero())
            throw CheckFailure("pullback residual " + residual.to_string());
    }
    return exact ? "image relations hold identically"
                 : "image relations hold modulo the cubic";
}

std::string check_map_equivariance(const Context& ctx, const Json& args) {
    const auto& m = ctx.rec.map(args["map"].get<std::string>());
    std::string source_label = args.contains("source_action")
                                   ? args["source_action"].get<std::string>()
                                   : args["generator"].get<std::string>();
    const auto& g = ctx.rec.generator(source_label);
    std::vector<size_t> acting = g.action.acting_vars.empty() ? m.source_vars
                                                              : g.action.acting_vars;
    if (args.contains("expected_target")) {
        const auto& target = ctx.rec.generator(args["expected_target"].get<std::string>());
        RationalMap lhs, rhs;
        for (const auto& factor : m.map.factors) {
            std::vector<MPoly> moved;
            for (const auto& c : factor)
                moved.push_back(linear_change(c, g.action.mat, acting));
            lhs.factors.push_back(std::move(moved));
            rhs.factors.push_back(target.action.mat.apply_row(factor));
        }
        if (!maps_equal_mod(lhs, rhs, map_modulus(ctx, m)))
            throw CheckFailure("composite differs from the expected target action");
        return "equivariant with the declared target action";
    }
    auto params = ctx.case_params(args);
    MPoly cubic = ctx.cubic_at(params);
    std::map<size_t, CycNum> spec = ctx.value_map(
        args.contains("specialize") ? args["specialize"] : Json::object());
    ScalarMatrix gs = ctx.scalar_for(g, args, spec);
    std::vector<MPoly> rels = ctx.rec.relation_polys;
    rels.push_back(cubic);
    // The map may carry case parameters; evaluate them out first.
    RationalMap evaluated;
    for (const auto& factor : m.map.factors) {
        std::vector<MPoly> f;
        for (const auto& c : factor) f.push_back(c.evaluated(params));
        evaluated.factors.push_back(std::move(f));
    }
    auto result = transport_action(evaluated, gs, m.source_vars, RelationSet(rels));
    if (result.status == TransportResult::Status::NoSolution)
        throw CheckFailure("no induced action on the target exists");
    if (result.status == TransportResult::Status::Degenerate)
        throw CheckFailure("induced action is not unique up to scalar");
    std::ostringstream note;
    note << "induced target action";
    for (const auto& h : result.factor_actions) note << " " << h.to_string();
    return note.str();
}

std::string check_line_in_fibers(const Context& ctx, const Json& args) {
    std::vector<MPoly> p = ctx.poly_row(args["p"]);
    std::vector<MPoly> q = ctx.poly_row(args["q"]);
    MPoly constraint = ctx.parse(args["constraint"].get<std::string>());
    bool result = line_in_hypersurface(p, q, ctx.rec.cubic(),
                                       RelationSet({constraint}),
                                       ctx.s_var(), ctx.t_var());
    if (result != args["expect"].get<bool>())
        throw CheckFailure(std::string("line containment is ") +
                           (result ? "true" : "false") + ", expected the opposite");
    return result ? "fibers contain lines" : "fibers contain no lines";
}

std::string check_group_structure(const Context& ctx, const Json& args) {
    auto group = close_from_args(ctx, args);
    size_t expected_order = 0;
    std::string expected_name;
    if (args.contains("dihedral_n")) {
        unsigned n = ctx.opts.dihedral_n.value_or(args["dihedral_n"].get<unsigned>());
        unsigned k = args.contains("cyclic_factor") ? args["cyclic_factor"].get<unsigned>()
                                                    : 1;
        expected_order = 2ull * n * k;
        expected_name = k == 1 ? canonical_group_name("D" + std::to_string(n))
                               : canonical_group_name("C" + std::to_string(k) + " x D" +
                                                      std::to_string(n));
    }
    if (args.contains("expected_order"))
        expected_order = args["expected_order"].get<size_t>();
    if (args.contains("expected_name"))
        expected_name = canonical_group_name(args["expected_name"].get<std::string>());
    if (expected_order != 0 && group.order() != expected_order)
        throw CheckFailure("group order " + std::to_string(group.order()) +
                           ", expected " + std::to_string(expected_order));
    auto fp = fingerprint(group);
    std::string name = recognize(fp);
    if (!expected_name.empty() && name != expected_name)
        throw CheckFailure("recognized '" + name + "', expected '" + expected_name +
                           "' (" + fp.to_string() + ")");
    // Every element must preserve the cubic up to a scalar.
    size_t n_geo = ctx.table()->indices_with_role(VarRole::Geometry).size();
    if (group.dim() == n_geo) {
        for (const auto& elt : group.elements()) {
            PolyMatrix em(ctx.table(), group.dim());
            for (size_t i = 0; i < group.dim(); ++i)
                for (size_t j = 0; j < group.dim(); ++j)
                    em.at(i, j) = MPoly::constant(ctx.table(), elt.at(i, j));
            if (!semi_invariance(ctx.rec.cubic(), em, ctx.parameter_vars(),
                                 ctx.rec.relations))
                throw CheckFailure("a group element does not preserve the cubic: " +
                                   elt.to_string());
        }
    }
    if (args.contains("sym2_faithful") && args["sym2_faithful"].get<bool>()) {
        auto plane_group = close_from_args(ctx, args, /*sym_override=*/2);
        if (plane_group.order() != group.order())
            throw CheckFailure("induced plane action is not faithful: order " +
                               std::to_string(plane_group.order()));
    }
    return "order " + std::to_string(group.order()) + ", recognized " + name;
}

PolySystem system_from_args(const Context& ctx, const Json& args) {
    const auto& shape = ctx.rec.shape(args["shape"].get<std::string>());
    auto params = ctx.case_params(args);
    MPoly f = ctx.cubic_at(params);
    bool unknown_multiplier = true;
    if (args.contains("multiplier") && args["multiplier"].get<std::string>() == "one")
        unknown_multiplier = false;
    return invariance_system(f, shape.shape, unknown_multiplier, shape.witness);
}

std::string check_stabilizer_system(const Context& ctx, const Json& args) {
    PolySystem sys = system_from_args(ctx, args);
    std::ostringstream note;
    note << sys.equations.size() << " equations";
    if (args.contains("families")) {
        for (const auto& fam : args["families"]) {
            std::map<std::string, MPoly> assign;
            for (const auto& [k, v] : fam.at("assign").items())
                assign.emplace(k, parse_poly(v.get<std::string>(), sys.table));
            auto result = verify_solution_family(sys, assign, ctx.rec.relations);
            bool expect = fam.at("expect").get<bool>();
            std::string label = fam.at("label").get<std::string>();
            if (result.ok != expect) {
                if (expect)
                    throw CheckFailure("family '" + label + "' fails: residual " +
                                       result.residual);
                throw CheckFailure("family '" + label +
                                   "' unexpectedly satisfies the system");
            }
            if (!expect) note << "; '" << label << "' rejected (residual " <<
                result.residual << ")";
            else note << "; '" << label << "' verified";
        }
    }
    if (args.contains("expected_basis")) {
        bool localize = args.contains("localize") && args["localize"].get<bool>();
        auto gb = buchberger(sys, localize);
        VarTablePtr gt = gb.basis.empty() ? sys.table : gb.basis[0].table();
        std::vector<MPoly> expected;
        for (const auto& b : args["expected_basis"])
            expected.push_back(parse_poly(b.get<std::string>(), gt));
        RelationSet expected_set(expected);
        for (const auto& b : gb.basis)
            if (!reduce_mod(b, expected_set).is_zero())
                throw CheckFailure("computed basis element " + b.to_string() +
                                   " is not in the expected ideal");
        for (const auto& e : expected)
            if (!gb_reduce(e, gb).is_zero())
                throw CheckFailure("expected element " + e.to_string() +
                                   " is not in the computed ideal");
        note << "; reduced basis of " << gb.basis.size()
             << " elements matches the expected ideal";
    }
    return note.str();
}

std::string check_dimension(const Context& ctx, const Json& args) {
    PolySystem sys = system_from_args(ctx, args);
    bool localize = args.contains("localize") && args["localize"].get<bool>();
    auto gb = buchberger(sys, localize);
    long dim = staircase_dimension(gb);
    long expected = args["expected"].get<long>();
    if (dim != expected)
        throw CheckFailure("staircase dimension " + std::to_string(dim) +
                           ", expected " + std::to_string(expected));
    return "staircase dimension " + std::to_string(dim) + " (basis size " +
           std::to_string(gb.basis.size()) + ")";
}

std::string check_smooth_plane_cubic(const Context& ctx, const Json& args) {
    auto params = ctx.case_params(args);
    MPoly f = ctx.cubic_at(params);
    std::map<size_t, MPoly> kill;
    std::set<size_t> killed;
    for (const auto& v : args["slice_vars"]) {
        size_t idx = ctx.table()->index_of(v.get<std::string>());
        kill.emplace(idx, MPoly(ctx.table()));
        killed.insert(idx);
    }
    MPoly slice = f.substituted(kill);
    if (slice.degree({VarRole::Geometry}) != 3)
        throw CheckFailure("slice is not a cubic");
    std::vector<size_t> vars;
    for (size_t v : ctx.table()->indices_with_role(VarRole::Geometry))
        if (!killed.count(v)) vars.push_back(v);
    PolySystem sys;
    sys.table = ctx.table();
    sys.unknowns = vars;
    for (size_t v : vars) sys.equations.push_back(slice.derivative(v));
    auto gb = buchberger(sys, /*localize=*/false);
    long dim = staircase_dimension(gb);
    if (dim != 0)
        throw CheckFailure("Jacobian ideal has staircase dimension " +
                           std::to_string(dim) + "; the slice cubic is singular");
    return "slice cubic is smooth (Jacobian ideal zero-dimensional at the origin)";
}

std::string dispatch(const Context& ctx, const CheckDescriptor& check) {
    const Json& a = check.args;
    if (check.kind == "invariance") return check_invariance(ctx, a);
    if (check.kind == "semi-invariance") return check_semi_invariance(ctx, a);
    if (check.kind == "singular-along") return check_singular_along(ctx, a);
    if (check.kind == "curve-containment") return check_curve_containment(ctx, a);
    if (check.kind == "orbit") return check_orbit(ctx, a);
    if (check.kind == "fixed-point") return check_fixed_point(ctx, a);
    if (check.kind == "no-common-fixed-point") return check_no_common_fixed_point(ctx, a);
    if (check.kind == "map-identity") return check_map_identity(ctx, a);
    if (check.kind == "map-image-in") return check_map_image_in(ctx, a);
    if (check.kind == "map-equivariance") return check_map_equivariance(ctx, a);
    if (check.kind == "line-in-fibers") return check_line_in_fibers(ctx, a);
    if (check.kind == "group-structure") return check_group_structure(ctx, a);
    if (check.kind == "stabilizer-system") return check_stabilizer_system(ctx, a);
    if (check.kind == "dimension") return check_dimension(ctx, a);
    if (check.kind == "smooth-plane-cubic") return check_smooth_plane_cubic(ctx, a);
    throw CheckFailure("unknown check kind " + check.kind);
}

}  // namespace

VerificationReport run_case(const CaseRecord& rec, const RunOptions& opts) {
    VerificationReport report;
    report.engine = kEngineVersion;
    report.case_id = rec.id;
    report.claimed_group = rec.claimed_group;
    report.verdict_status = rec.verdict.status;
    if (opts.max_conductor && rec.max_conductor > *opts.max_conductor) {
        report.case_skipped = true;
        report.skip_reason = "requires conductor " + std::to_string(rec.max_conductor) +
                             ", limit is " + std::to_string(*opts.max_conductor);
        return report;
    }
    Context ctx{rec, opts};
    for (const auto& check : rec.checks) {
        CheckResult result;
        result.name = check.name;
        result.kind = check.kind;
        if (!opts.kind_filter.empty() && !opts.kind_filter.count(check.kind)) {
            result.status = "skipped";
            result.witness = "filtered";
            report.entries.push_back(std::move(result));
            ++report.skipped;
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        try {
            result.witness = dispatch(ctx, check);
            result.status = "pass";
            ++report.passed;
        } catch (const cap_exceeded& e) {
            result.status = "unresolved";
            result.witness = e.what();
            ++report.unresolved;
        } catch (const CheckFailure& e) {
            result.status = "fail";
            result.witness = e.what();
            ++report.failed;
        } catch (const std::exception& e) {
            result.status = "fail";
            result.witness = std::string("error: ") + e.what();
            ++report.failed;
        }
        auto end = std::chrono::steady_clock::now();
        result.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        report.entries.push_back(std::move(result));
        if (opts.stop_on_fail && report.failed > 0) break;
    }
    return report;
}

std::vector<VerificationReport> run_all(const RunOptions& opts) {
    std::vector<VerificationReport> reports;
    for (const auto& id : builtin_ids())
        reports.push_back(run_case(load_builtin(id), opts));
    return reports;
}

int aggregate_exit_code(const std::vector<VerificationReport>& reports) {
    bool any_fail = false, any_unresolved = false;
    for (const auto& r : reports) {
        if (r.failed > 0) any_fail = true;
        if (r.unresolved > 0) any_unresolved = true;
    }
    if (any_fail) return 1;
    if (any_unresolved) return 3;
    return 0;
}

Json VerificationReport::to_json(bool timings) const {
    Json doc;
    doc["engine"] = engine;
    doc["case"] = case_id;
    doc["claimed_group"] = claimed_group;
    doc["verdict"] = verdict_status;
    if (case_skipped) {
        doc["skipped"] = skip_reason;
        return doc;
    }
    Json checks = Json::array();
    for (const auto& e : entries) {
        Json jc;
        jc["name"] = e.name;
        jc["kind"] = e.kind;
        jc["status"] = e.status;
        if (!e.witness.empty()) jc["witness"] = e.witness;
        if (timings) jc["elapsed_ms"] = e.elapsed_ms;
        checks.push_back(jc);
    }
    doc["checks"] = checks;
    doc["summary"] = {{"pass", passed},
                      {"fail", failed},
                      {"skipped", skipped},
                      {"unresolved", unresolved}};
    return doc;
}

std::string VerificationReport::to_text(bool timings) const {
    std::ostringstream out;
    out << "case " << case_id << " (" << claimed_group << ", " << verdict_status
        << ")\n";
    if (case_skipped) {
        out << "  SKIPPED: " << skip_reason << "\n";
        return out.str();
    }
    for (const auto& e : entries) {
        std::string tag = e.status == "pass"         ? "PASS"
                          : e.status == "fail"       ? "FAIL"
                          : e.status == "unresolved" ? "UNRESOLVED"
                                                     : "SKIP";
        out << "  [" << tag << "] " << e.name << " (" << e.kind << ")";
        if (timings) out << " [" << e.elapsed_ms << " ms]";
        if (e.status != "pass" && !e.witness.empty()) out << "\n      " << e.witness;
        out << "\n";
    }
    out << "  summary: " << passed << " pass, " << failed << " fail, " << skipped
        << " skipped, " << unresolved << " unresolved\n";
    return out.str();
}

}  // namespace cubics
