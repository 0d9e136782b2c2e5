#include "cubics/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cubics {

namespace {

void require_keys(const Json& obj, const std::string& where,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
    if (!obj.is_object()) throw load_error(where + ": expected an object");
    for (const auto& k : required)
        if (!obj.contains(k)) throw load_error(where + ": missing key '" + k + "'");
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        if (std::find(required.begin(), required.end(), k) == required.end() &&
            std::find(optional.begin(), optional.end(), k) == optional.end())
            throw load_error(where + ": unknown key '" + k + "'");
    }
}

VarRole role_from_string(const std::string& s, const std::string& where) {
    if (s == "geometry") return VarRole::Geometry;
    if (s == "curve") return VarRole::Curve;
    if (s == "parameter") return VarRole::Parameter;
    throw load_error(where + ": invalid role '" + s + "'");
}

std::string role_to_string(VarRole r) {
    switch (r) {
        case VarRole::Geometry: return "geometry";
        case VarRole::Curve: return "curve";
        case VarRole::Unknown: return "unknown";
        case VarRole::Parameter: return "parameter";
    }
    return "parameter";
}

MPoly parse_in(const std::string& text, const VarTablePtr& table,
               const std::string& where) {
    try {
        return parse_poly(text, table);
    } catch (const parse_error& e) {
        throw load_error(where + ": " + e.what() + " in '" + text + "'");
    }
}

unsigned poly_conductor(const MPoly& f) {
    unsigned c = 1;
    for (const auto& [m, coeff] : f.terms()) {
        (void)m;
        c = std::lcm(c, coeff.conductor());
    }
    return c;
}

std::vector<size_t> coords_from(const Json& arr, const VarTablePtr& table,
                                const std::string& where) {
    std::vector<size_t> out;
    for (const auto& name : arr) {
        auto idx = table->find(name.get<std::string>());
        if (!idx) throw load_error(where + ": unknown variable " + name.get<std::string>());
        out.push_back(*idx);
    }
    return out;
}

const std::vector<std::string> kCheckKinds = {
    "invariance",        "semi-invariance", "singular-along",
    "curve-containment", "orbit",           "fixed-point",
    "no-common-fixed-point", "map-identity", "map-image-in",
    "map-equivariance",  "line-in-fibers",  "group-structure",
    "stabilizer-system", "dimension",       "smooth-plane-cubic"};

}  // namespace

const GeneratorSpec& CaseRecord::generator(const std::string& label) const {
    for (const auto& g : generators)
        if (g.label == label) return g;
    throw std::invalid_argument(id + ": no generator '" + label + "'");
}

const CurveSpec& CaseRecord::curve(const std::string& label) const {
    for (const auto& c : curves)
        if (c.label == label) return c;
    throw std::invalid_argument(id + ": no curve '" + label + "'");
}

const MapSpec& CaseRecord::map(const std::string& label) const {
    for (const auto& m : maps)
        if (m.label == label) return m;
    throw std::invalid_argument(id + ": no map '" + label + "'");
}

const AuxPoly& CaseRecord::aux_poly(const std::string& label) const {
    for (const auto& p : aux_polys)
        if (p.label == label) return p;
    throw std::invalid_argument(id + ": no auxiliary polynomial '" + label + "'");
}

const ShapeSpec& CaseRecord::shape(const std::string& label) const {
    for (const auto& s : shapes)
        if (s.label == label) return s;
    throw std::invalid_argument(id + ": no shape '" + label + "'");
}

namespace {

void validate_check(const CaseRecord& rec, const CheckDescriptor& check) {
    const std::string where = rec.id + ": check '" + check.name + "'";
    if (std::find(kCheckKinds.begin(), kCheckKinds.end(), check.kind) ==
        kCheckKinds.end())
        throw load_error(where + ": unknown kind '" + check.kind + "'");
    const Json& a = check.args;
    auto need = [&](const char* key) {
        if (!a.contains(key))
            throw load_error(where + ": missing argument '" + std::string(key) + "'");
    };
    auto gen_ref = [&](const Json& v) { rec.generator(v.get<std::string>()); };
    try {
        if (check.kind == "invariance" || check.kind == "semi-invariance") {
            need("generator");
            gen_ref(a["generator"]);
        } else if (check.kind == "singular-along" || check.kind == "curve-containment") {
            need("curve");
            rec.curve(a["curve"].get<std::string>());
            if (a.contains("polys"))
                for (const auto& p : a["polys"]) rec.aux_poly(p.get<std::string>());
        } else if (check.kind == "orbit" || check.kind == "group-structure" ||
                   check.kind == "no-common-fixed-point") {
            need("generators");
            for (const auto& g : a["generators"]) {
                if (g.is_string()) gen_ref(g);
                else gen_ref(g.at("label"));
            }
            if (check.kind == "no-common-fixed-point") {
                need("curve");
                rec.curve(a["curve"].get<std::string>());
            }
        } else if (check.kind == "fixed-point") {
            need("point");
            if (a.contains("generator")) gen_ref(a["generator"]);
        } else if (check.kind == "map-identity") {
            need("map1");
            need("map2");
            rec.map(a["map1"].get<std::string>());
            rec.map(a["map2"].get<std::string>());
            if (a.contains("compose_with")) rec.map(a["compose_with"].get<std::string>());
        } else if (check.kind == "map-image-in") {
            need("map");
            rec.map(a["map"].get<std::string>());
            if (a.contains("target_polys"))
                for (const auto& p : a["target_polys"]) rec.aux_poly(p.get<std::string>());
        } else if (check.kind == "map-equivariance") {
            need("map");
            rec.map(a["map"].get<std::string>());
            if (a.contains("generator")) gen_ref(a["generator"]);
            if (a.contains("source_action")) gen_ref(a["source_action"]);
            if (a.contains("expected_target")) gen_ref(a["expected_target"]);
            if (!a.contains("generator") && !a.contains("source_action"))
                throw load_error(where + ": needs generator or source_action");
        } else if (check.kind == "line-in-fibers") {
            need("p");
            need("q");
            need("constraint");
            need("expect");
        } else if (check.kind == "stabilizer-system" || check.kind == "dimension") {
            need("shape");
            rec.shape(a["shape"].get<std::string>());
            if (check.kind == "dimension") need("expected");
        } else if (check.kind == "smooth-plane-cubic") {
            need("slice_vars");
        }
    } catch (const std::invalid_argument& e) {
        throw load_error(where + ": " + e.what());
    }
}

}  // namespace

CaseRecord load_case_json(const Json& doc) {
    require_keys(doc, "case",
                 {"id", "ambient_dim", "max_conductor", "variables", "cubic",
                  "generators", "claimed_group", "verdict", "checks"},
                 {"parameters", "relations", "curves", "maps", "aux_polys", "shapes"});

    std::vector<std::pair<std::string, VarRole>> vars;
    for (const auto& v : doc["variables"]) {
        require_keys(v, "variable", {"name", "role"}, {});
        vars.emplace_back(v["name"].get<std::string>(),
                          role_from_string(v["role"].get<std::string>(), "variable"));
    }
    VarTablePtr table;
    try {
        table = VarTable::make(vars);
    } catch (const std::invalid_argument& e) {
        throw load_error(std::string("variables: ") + e.what());
    }

    std::string id = doc["id"].get<std::string>();
    MPoly cubic = parse_in(doc["cubic"].get<std::string>(), table, id + ": cubic");
    CaseRecord rec(table, cubic);
    rec.id = id;
    rec.ambient_dim = doc["ambient_dim"].get<size_t>();
    rec.max_conductor = doc["max_conductor"].get<unsigned>();

    size_t n_geo = table->indices_with_role(VarRole::Geometry).size();
    if (n_geo != rec.ambient_dim + 1)
        throw load_error(id + ": ambient_dim+1 must match the geometry variables");
    if (!cubic.is_homogeneous({VarRole::Geometry}) ||
        cubic.degree({VarRole::Geometry}) != 3)
        throw load_error(id + ": cubic must be homogeneous of degree 3");

    unsigned conductor = poly_conductor(cubic);

    if (doc.contains("parameters"))
        for (const auto& p : doc["parameters"]) {
            require_keys(p, "parameter", {"name"}, {"note"});
            std::string name = p["name"].get<std::string>();
            if (!table->find(name)) throw load_error(id + ": undeclared parameter " + name);
            rec.parameter_notes.emplace_back(
                name, p.contains("note") ? p["note"].get<std::string>() : "");
        }

    if (doc.contains("relations"))
        for (const auto& r : doc["relations"])
            rec.relation_polys.push_back(
                parse_in(r.get<std::string>(), table, id + ": relation"));
    rec.relations = RelationSet(rec.relation_polys);

    if (doc.contains("curves"))
        for (const auto& c : doc["curves"]) {
            require_keys(c, "curve", {"label", "components"}, {});
            CurveSpec spec;
            spec.label = c["label"].get<std::string>();
            spec.curve.label = spec.label;
            auto sv = table->find("s"), tv = table->find("t");
            if (!sv || !tv) throw load_error(id + ": curves need variables s, t");
            spec.curve.s_var = *sv;
            spec.curve.t_var = *tv;
            long degree = -1;
            bool nonzero = false;
            for (const auto& comp : c["components"]) {
                MPoly f = parse_in(comp.get<std::string>(), table, id + ": curve " + spec.label);
                conductor = std::lcm(conductor, poly_conductor(f));
                if (!f.is_zero()) {
                    nonzero = true;
                    if (degree == -1) degree = f.degree();
                    else if (f.degree() != degree)
                        throw load_error(id + ": curve " + spec.label +
                                         " components of unequal degree");
                }
                spec.curve.components.push_back(std::move(f));
            }
            if (!nonzero || degree < 1)
                throw load_error(id + ": curve " + spec.label + " must be nonconstant");
            rec.curves.push_back(std::move(spec));
        }

    for (const auto& g : doc["generators"]) {
        require_keys(g, "generator", {"label", "matrix", "det_witness"},
                     {"space", "vars", "multiplier", "source"});
        std::string label = g["label"].get<std::string>();
        for (const auto& other : rec.generators)
            if (other.label == label)
                throw load_error(id + ": duplicate generator label " + label);
        bool ambient = !g.contains("space") || g["space"].get<std::string>() == "ambient";
        if (g.contains("space") && g["space"].get<std::string>() != "ambient" &&
            g["space"].get<std::string>() != "aux")
            throw load_error(id + ": generator space must be ambient or aux");
        const auto& rows = g["matrix"];
        size_t dim = rows.size();
        PolyMatrix mat(table, dim);
        for (size_t i = 0; i < dim; ++i) {
            if (rows[i].size() != dim)
                throw load_error(id + ": generator " + label + " is not square");
            for (size_t j = 0; j < dim; ++j) {
                mat.at(i, j) = parse_in(rows[i][j].get<std::string>(), table,
                                        id + ": generator " + label);
                conductor = std::lcm(conductor, poly_conductor(mat.at(i, j)));
            }
        }
        MPoly witness = parse_in(g["det_witness"].get<std::string>(), table,
                                 id + ": det_witness of " + label);
        if (witness.is_zero())
            throw load_error(id + ": zero determinant witness for " + label);
        std::vector<size_t> acting;
        if (g.contains("vars")) acting = coords_from(g["vars"], table, id);
        GeneratorSpec spec{label, ambient,
                           LinearAction{label, std::move(mat), rec.relations,
                                        std::move(witness), std::move(acting)},
                           std::nullopt, ""};
        if (g.contains("source")) spec.source_note = g["source"].get<std::string>();
        if (g.contains("multiplier"))
            spec.expected_multiplier = parse_in(g["multiplier"].get<std::string>(), table,
                                                id + ": multiplier of " + label);
        if (spec.ambient) {
            if (spec.action.mat.dim() != n_geo)
                throw load_error(id + ": ambient generator " + label +
                                 " has wrong dimension");
            // Load-time invariance: a flipped sign in a matrix or in the cubic
            // fails right here.
            std::set<size_t> mult_vars;
            for (size_t v : table->indices_with_role(VarRole::Parameter))
                mult_vars.insert(v);
            auto lambda = semi_invariance(cubic, spec.action.mat, mult_vars,
                                          rec.relations);
            if (!lambda)
                throw load_error(id + ": generator " + label +
                                 " does not preserve the cubic up to a multiplier");
            if (spec.expected_multiplier && !(*lambda == *spec.expected_multiplier))
                throw load_error(id + ": generator " + label +
                                 " has multiplier " + lambda->to_string() +
                                 ", expected " + spec.expected_multiplier->to_string());
        }
        rec.generators.push_back(std::move(spec));
    }

    if (doc.contains("maps"))
        for (const auto& m : doc["maps"]) {
            require_keys(m, "map", {"label", "factors"}, {"source_vars", "claimed"});
            MapSpec spec;
            spec.label = m["label"].get<std::string>();
            spec.map.label = spec.label;
            spec.source_vars = m.contains("source_vars")
                                   ? coords_from(m["source_vars"], table, id)
                                   : table->indices_with_role(VarRole::Geometry);
            std::set<size_t> src(spec.source_vars.begin(), spec.source_vars.end());
            for (const auto& factor : m["factors"]) {
                std::vector<MPoly> comps;
                long degree = -1;
                bool nonzero_mod = false;
                for (const auto& comp : factor) {
                    MPoly f = parse_in(comp.get<std::string>(), table,
                                       id + ": map " + spec.label);
                    conductor = std::lcm(conductor, poly_conductor(f));
                    if (!f.is_zero()) {
                        long d = -1;
                        for (const auto& [mono, cf] : f.terms()) {
                            (void)cf;
                            long dm = 0;
                            for (size_t v : src) dm += mono[v];
                            if (d == -1) d = dm;
                            if (dm != d)
                                throw load_error(id + ": map " + spec.label +
                                                 " component not homogeneous");
                        }
                        if (degree == -1) degree = d;
                        else if (d != degree)
                            throw load_error(id + ": map " + spec.label +
                                             " components of unequal degree");
                        if (!reduce_mod(f, RelationSet({cubic})).is_zero())
                            nonzero_mod = true;
                    }
                    comps.push_back(std::move(f));
                }
                if (!nonzero_mod)
                    throw load_error(id + ": map " + spec.label +
                                     " vanishes on the hypersurface");
                spec.map.factors.push_back(std::move(comps));
            }
            if (m.contains("claimed"))
                for (const auto& c : m["claimed"]) spec.claimed.push_back(c.get<std::string>());
            rec.maps.push_back(std::move(spec));
        }

    if (doc.contains("aux_polys"))
        for (const auto& p : doc["aux_polys"]) {
            require_keys(p, "aux_poly", {"label", "poly"}, {"coords"});
            AuxPoly spec{p["label"].get<std::string>(),
                         parse_in(p["poly"].get<std::string>(), table,
                                  id + ": aux poly"),
                         {}};
            conductor = std::lcm(conductor, poly_conductor(spec.poly));
            if (p.contains("coords")) spec.coords = coords_from(p["coords"], table, id);
            rec.aux_polys.push_back(std::move(spec));
        }

    if (doc.contains("shapes"))
        for (const auto& s : doc["shapes"]) {
            require_keys(s, "shape", {"label", "entries", "witness"}, {});
            ShapeSpec spec;
            spec.label = s["label"].get<std::string>();
            const auto& rows = s["entries"];
            spec.shape.dim = rows.size();
            for (const auto& row : rows) {
                if (row.size() != spec.shape.dim)
                    throw load_error(id + ": shape " + spec.label + " is not square");
                for (const auto& e : row) {
                    std::string text = e.get<std::string>();
                    // A bare identifier that is not a declared variable names an
                    // unknown; anything else must parse to a constant.
                    bool identifier = !text.empty() &&
                                      (std::isalpha(static_cast<unsigned char>(text[0])) ||
                                       text[0] == '_');
                    for (char ch : text)
                        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                            identifier = false;
                    if (identifier && !table->find(text) && text.rfind("zeta", 0) != 0) {
                        spec.shape.entries.emplace_back(text);
                        continue;
                    }
                    MPoly c = parse_in(text, table, id + ": shape " + spec.label);
                    if (!c.is_constant())
                        throw load_error(id + ": shape " + spec.label +
                                         " entries must be constants or unknowns");
                    spec.shape.entries.emplace_back(c.constant_value());
                }
            }
            spec.shape.unknown_names();  // validates uniqueness and nonemptiness
            spec.witness = s["witness"].get<std::string>();
            rec.shapes.push_back(std::move(spec));
        }

    require_keys(doc["verdict"], "verdict", {"status", "reason"},
                 {"unirational", "notes"});
    rec.verdict.status = doc["verdict"]["status"].get<std::string>();
    {
        bool ok = false;
        for (const char* allowed :
             {"linearizable", "not-linearizable", "open", "unirational"})
            if (rec.verdict.status == allowed) ok = true;
        if (!ok) throw load_error(id + ": invalid verdict status " + rec.verdict.status);
    }
    rec.verdict.reason = doc["verdict"]["reason"].get<std::string>();
    if (doc["verdict"].contains("unirational"))
        rec.verdict.unirational = doc["verdict"]["unirational"].get<bool>();
    if (doc["verdict"].contains("notes"))
        for (const auto& n : doc["verdict"]["notes"])
            rec.verdict.notes.push_back(n.get<std::string>());

    rec.claimed_group = doc["claimed_group"].get<std::string>();

    if (conductor == 0 || rec.max_conductor % conductor != 0)
        throw load_error(id + ": conductors used (lcm " + std::to_string(conductor) +
                         ") not supported by max_conductor " +
                         std::to_string(rec.max_conductor));

    std::set<std::string> check_names;
    for (const auto& c : doc["checks"]) {
        require_keys(c, "check", {"name", "kind"},
                     {"generator", "generators", "curve", "point", "points", "polys",
                      "ideal", "multiplier", "pure_power_of", "exponent", "sym_power",
                      "specialize", "expected_points", "expected_group_order", "params",
                      "expect_fixed", "expect_on_variety", "expect_smooth",
                      "expect_image", "map", "map1", "map2", "compose_with",
                      "target_polys", "target_coords", "expect", "source_action",
                      "expected_target", "p", "q", "constraint", "expected_order",
                      "expected_name", "dihedral_n", "cyclic_factor", "sym2_faithful",
                      "element_data", "shape", "localize", "families",
                      "expected_basis", "expected", "slice_vars", "form", "vars",
                      "coords", "poly", "modulo", "multiplier_mode"});
        CheckDescriptor check;
        check.name = c["name"].get<std::string>();
        check.kind = c["kind"].get<std::string>();
        check.args = c;
        check.args.erase("name");
        check.args.erase("kind");
        if (!check_names.insert(check.name).second)
            throw load_error(id + ": duplicate check name " + check.name);
        validate_check(rec, check);
        rec.checks.push_back(std::move(check));
    }
    if (rec.checks.empty()) throw load_error(id + ": no checks");
    return rec;
}

CaseRecord load_case_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw load_error(std::string("invalid JSON: ") + e.what());
    }
    return load_case_json(doc);
}

CaseRecord load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw load_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_case_text(buf.str());
}

Json serialize_case(const CaseRecord& rec) {
    Json doc;
    doc["id"] = rec.id;
    doc["ambient_dim"] = rec.ambient_dim;
    doc["max_conductor"] = rec.max_conductor;
    Json vars = Json::array();
    for (size_t i = 0; i < rec.table()->size(); ++i) {
        if (rec.table()->role(i) == VarRole::Unknown) continue;
        vars.push_back({{"name", rec.table()->name(i)},
                        {"role", role_to_string(rec.table()->role(i))}});
    }
    doc["variables"] = vars;
    if (!rec.parameter_notes.empty()) {
        Json params = Json::array();
        for (const auto& [name, note] : rec.parameter_notes) {
            Json p;
            p["name"] = name;
            if (!note.empty()) p["note"] = note;
            params.push_back(p);
        }
        doc["parameters"] = params;
    }
    if (!rec.relation_polys.empty()) {
        Json rels = Json::array();
        for (const auto& r : rec.relation_polys) rels.push_back(r.to_string());
        doc["relations"] = rels;
    }
    doc["cubic"] = rec.cubic().to_string();
    if (!rec.curves.empty()) {
        Json curves = Json::array();
        for (const auto& c : rec.curves) {
            Json comps = Json::array();
            for (const auto& f : c.curve.components) comps.push_back(f.to_string());
            curves.push_back({{"label", c.label}, {"components", comps}});
        }
        doc["curves"] = curves;
    }
    Json gens = Json::array();
    for (const auto& g : rec.generators) {
        Json jg;
        jg["label"] = g.label;
        if (!g.ambient) jg["space"] = "aux";
        Json rows = Json::array();
        for (size_t i = 0; i < g.action.mat.dim(); ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < g.action.mat.dim(); ++j)
                row.push_back(g.action.mat.at(i, j).to_string());
            rows.push_back(row);
        }
        jg["matrix"] = rows;
        jg["det_witness"] = g.action.det_witness.to_string();
        if (!g.action.acting_vars.empty()) {
            Json av = Json::array();
            for (size_t v : g.action.acting_vars) av.push_back(rec.table()->name(v));
            jg["vars"] = av;
        }
        if (g.expected_multiplier) jg["multiplier"] = g.expected_multiplier->to_string();
        if (!g.source_note.empty()) jg["source"] = g.source_note;
        gens.push_back(jg);
    }
    doc["generators"] = gens;
    if (!rec.maps.empty()) {
        Json maps = Json::array();
        for (const auto& m : rec.maps) {
            Json jm;
            jm["label"] = m.label;
            Json sv = Json::array();
            for (size_t v : m.source_vars) sv.push_back(rec.table()->name(v));
            jm["source_vars"] = sv;
            Json factors = Json::array();
            for (const auto& f : m.map.factors) {
                Json comps = Json::array();
                for (const auto& c : f) comps.push_back(c.to_string());
                factors.push_back(comps);
            }
            jm["factors"] = factors;
            if (!m.claimed.empty()) jm["claimed"] = m.claimed;
            maps.push_back(jm);
        }
        doc["maps"] = maps;
    }
    if (!rec.aux_polys.empty()) {
        Json aux = Json::array();
        for (const auto& p : rec.aux_polys) {
            Json jp;
            jp["label"] = p.label;
            jp["poly"] = p.poly.to_string();
            if (!p.coords.empty()) {
                Json cs = Json::array();
                for (size_t v : p.coords) cs.push_back(rec.table()->name(v));
                jp["coords"] = cs;
            }
            aux.push_back(jp);
        }
        doc["aux_polys"] = aux;
    }
    if (!rec.shapes.empty()) {
        Json shapes = Json::array();
        for (const auto& s : rec.shapes) {
            Json rows = Json::array();
            for (size_t i = 0; i < s.shape.dim; ++i) {
                Json row = Json::array();
                for (size_t j = 0; j < s.shape.dim; ++j) {
                    const auto& e = s.shape.at(i, j);
                    if (const auto* name = std::get_if<std::string>(&e))
                        row.push_back(*name);
                    else
                        row.push_back(std::get<CycNum>(e).to_string());
                }
                rows.push_back(row);
            }
            shapes.push_back({{"label", s.label}, {"entries", rows}, {"witness", s.witness}});
        }
        doc["shapes"] = shapes;
    }
    doc["claimed_group"] = rec.claimed_group;
    Json verdict;
    verdict["status"] = rec.verdict.status;
    verdict["reason"] = rec.verdict.reason;
    verdict["unirational"] = rec.verdict.unirational;
    if (!rec.verdict.notes.empty()) verdict["notes"] = rec.verdict.notes;
    doc["verdict"] = verdict;
    Json checks = Json::array();
    for (const auto& c : rec.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["kind"] = c.kind;
        for (const auto& [k, v] : c.args.items()) jc[k] = v;
        checks.push_back(jc);
    }
    doc["checks"] = checks;
    return doc;
}

bool CaseRecord::equivalent_to(const CaseRecord& o) const {
    if (id != o.id || ambient_dim != o.ambient_dim || max_conductor != o.max_conductor)
        return false;
    if (!table_->same_content(*o.table_)) return false;
    if (!(cubic_ == o.cubic_.rebased(table_))) return false;
    if (generators.size() != o.generators.size() || curves.size() != o.curves.size() ||
        maps.size() != o.maps.size() || checks.size() != o.checks.size())
        return false;
    for (size_t i = 0; i < generators.size(); ++i) {
        const auto &a = generators[i], &b = o.generators[i];
        if (a.label != b.label || a.ambient != b.ambient) return false;
        if (a.action.mat.dim() != b.action.mat.dim()) return false;
        for (size_t r = 0; r < a.action.mat.dim(); ++r)
            for (size_t c = 0; c < a.action.mat.dim(); ++c)
                if (!(a.action.mat.at(r, c) == b.action.mat.at(r, c).rebased(table_)))
                    return false;
    }
    for (size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].label != o.curves[i].label) return false;
        if (curves[i].curve.components.size() != o.curves[i].curve.components.size())
            return false;
        for (size_t j = 0; j < curves[i].curve.components.size(); ++j)
            if (!(curves[i].curve.components[j] ==
                  o.curves[i].curve.components[j].rebased(table_)))
                return false;
    }
    for (size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].label != o.maps[i].label) return false;
        if (maps[i].map.factors.size() != o.maps[i].map.factors.size()) return false;
        for (size_t f = 0; f < maps[i].map.factors.size(); ++f) {
            if (maps[i].map.factors[f].size() != o.maps[i].map.factors[f].size())
                return false;
            for (size_t j = 0; j < maps[i].map.factors[f].size(); ++j)
                if (!(maps[i].map.factors[f][j] ==
                      o.maps[i].map.factors[f][j].rebased(table_)))
                    return false;
        }
    }
    for (size_t i = 0; i < checks.size(); ++i)
        if (checks[i].name != o.checks[i].name || checks[i].kind != o.checks[i].kind ||
            checks[i].args != o.checks[i].args)
            return false;
    return claimed_group == o.claimed_group && verdict.status == o.verdict.status;
}

CaseRecord load_builtin(const std::string& id) {
    return load_case_text(builtin_source(id));
}

}  // namespace cubics
