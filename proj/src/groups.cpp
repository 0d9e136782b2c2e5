#include "cubics/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cubics {

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<ScalarMatrix>& gens,
                                           size_t cap) {
    if (gens.empty()) throw std::invalid_argument("close: no generators");
    FiniteMatrixGroup g;
    g.dim_ = gens[0].dim();
    unsigned conductor = 1;
    for (const auto& m : gens) {
        if (m.dim() != g.dim_) throw std::invalid_argument("close: dimension mismatch");
        for (size_t i = 0; i < m.dim(); ++i)
            for (size_t j = 0; j < m.dim(); ++j)
                conductor = std::lcm(conductor, m.at(i, j).conductor());
    }
    g.conductor_ = conductor;

    std::map<std::string, size_t> index;
    auto add = [&](const ScalarMatrix& m) -> size_t {
        ScalarMatrix c = m.canonicalized();
        std::string k = c.key(conductor);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        if (g.elements_.size() >= cap)
            throw cap_exceeded("group closure exceeds cap " + std::to_string(cap) +
                               " (infinite or mis-specialized group?)");
        g.elements_.push_back(std::move(c));
        index.emplace(std::move(k), g.elements_.size() - 1);
        return g.elements_.size() - 1;
    };

    add(ScalarMatrix::identity(g.dim_));
    std::vector<ScalarMatrix> canon_gens;
    for (const auto& m : gens) {
        size_t idx = add(m);
        g.gens_.push_back(idx);
        canon_gens.push_back(g.elements_[idx]);
    }
    for (size_t head = 0; head < g.elements_.size(); ++head) {
        for (const auto& m : canon_gens) add(g.elements_[head] * m);
    }

    size_t n = g.elements_.size();
    g.cayley_.assign(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ScalarMatrix prod = (g.elements_[i] * g.elements_[j]).canonicalized();
            auto it = index.find(prod.key(conductor));
            if (it == index.end())
                throw std::logic_error("close: set not closed under products");
            g.cayley_[i][j] = it->second;
        }
    g.inverse_.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        bool found = false;
        for (size_t j = 0; j < n; ++j)
            if (g.cayley_[i][j] == 0) { g.inverse_[i] = j; found = true; break; }
        if (!found) throw std::logic_error("close: missing inverse");
    }
    return g;
}

size_t FiniteMatrixGroup::element_order(size_t i) const {
    size_t ord = 1;
    size_t cur = i;
    while (cur != 0) {
        cur = cayley_[cur][i];
        ++ord;
    }
    return ord;
}

bool FiniteMatrixGroup::abelian() const {
    for (size_t i = 0; i < order(); ++i)
        for (size_t j = i + 1; j < order(); ++j)
            if (cayley_[i][j] != cayley_[j][i]) return false;
    return true;
}

std::string GroupFingerprint::to_string() const {
    std::ostringstream out;
    out << "order=" << order << " abelian=" << (abelian ? "yes" : "no") << " orders{";
    bool first = true;
    for (const auto& [d, n] : order_histogram) {
        out << (first ? "" : ",") << d << ":" << n;
        first = false;
    }
    out << "} center=" << center_order << " derived=" << derived_order;
    return out.str();
}

GroupFingerprint fingerprint(const FiniteMatrixGroup& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    fp.abelian = g.abelian();
    for (size_t i = 0; i < g.order(); ++i) fp.order_histogram[g.element_order(i)]++;
    size_t center = 0;
    for (size_t i = 0; i < g.order(); ++i) {
        bool central = true;
        for (size_t j = 0; j < g.order() && central; ++j)
            if (g.multiply(i, j) != g.multiply(j, i)) central = false;
        if (central) ++center;
    }
    fp.center_order = center;
    // Derived subgroup: closure of all commutators inside the Cayley table.
    std::set<size_t> derived = {0};
    std::vector<size_t> comms;
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = 0; j < g.order(); ++j) {
            size_t c = g.multiply(g.multiply(g.inverse(i), g.inverse(j)),
                                  g.multiply(i, j));
            if (derived.insert(c).second) comms.push_back(c);
        }
    std::vector<size_t> queue(derived.begin(), derived.end());
    std::vector<size_t> gens(comms.begin(), comms.end());
    for (size_t head = 0; head < queue.size(); ++head) {
        for (size_t c : gens) {
            size_t p = g.multiply(queue[head], c);
            if (derived.insert(p).second) queue.push_back(p);
        }
    }
    fp.derived_order = derived.size();
    return fp;
}

namespace {

std::map<size_t, size_t> cyclic_hist(size_t n) {
    std::map<size_t, size_t> h;
    for (size_t d = 1; d <= n; ++d)
        if (n % d == 0) h[d] = euler_phi(static_cast<unsigned>(d));
    return h;
}

GroupFingerprint fp_cyclic(size_t n) {
    return {n, true, cyclic_hist(n), n, 1};
}

GroupFingerprint fp_dihedral(size_t n) {
    // Order 2n, n >= 3.
    GroupFingerprint fp;
    fp.order = 2 * n;
    fp.abelian = false;
    fp.order_histogram = cyclic_hist(n);
    fp.order_histogram[2] += n;
    fp.center_order = n % 2 == 0 ? 2 : 1;
    fp.derived_order = n % 2 == 0 ? n / 2 : n;
    return fp;
}

GroupFingerprint fp_klein() {
    return {4, true, {{1, 1}, {2, 3}}, 4, 1};
}

GroupFingerprint fp_named(const std::string& name) {
    if (name == "A4") return {12, false, {{1, 1}, {2, 3}, {3, 8}}, 1, 4};
    if (name == "S4") return {24, false, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, 1, 12};
    if (name == "A5") return {60, false, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}, 1, 60};
    throw std::logic_error("fp_named: " + name);
}

GroupFingerprint fp_product(const GroupFingerprint& a, const GroupFingerprint& b) {
    GroupFingerprint fp;
    fp.order = a.order * b.order;
    fp.abelian = a.abelian && b.abelian;
    for (const auto& [d1, n1] : a.order_histogram)
        for (const auto& [d2, n2] : b.order_histogram)
            fp.order_histogram[std::lcm(d1, d2)] += n1 * n2;
    fp.center_order = a.center_order * b.center_order;
    fp.derived_order = a.derived_order * b.derived_order;
    return fp;
}

std::string canonical_name(std::string name);

std::string canonical_name(std::string name) {
    // Collapse aliases coming from small coincidences.
    auto replace_all = [&](const std::string& from, const std::string& to) {
        size_t pos = 0;
        while ((pos = name.find(from, pos)) != std::string::npos) {
            name.replace(pos, from.size(), to);
            pos += to.size();
        }
    };
    replace_all("D1", "C2");
    replace_all("D2", "C2^2");
    replace_all("D3", "S3");
    if (name == "C2 x C2") name = "C2^2";
    return name;
}

struct Candidate {
    std::string name;
    GroupFingerprint fp;
};

std::vector<Candidate> candidates_for_order(size_t n) {
    std::vector<Candidate> out;
    auto add = [&](const std::string& name, GroupFingerprint fp) {
        out.push_back({canonical_name(name), std::move(fp)});
    };
    add("C" + std::to_string(n), fp_cyclic(n));
    if (n == 4) add("C2^2", fp_klein());
    if (n % 2 == 0 && n >= 6) add("D" + std::to_string(n / 2), fp_dihedral(n / 2));
    if (n == 6) add("S3", fp_dihedral(3));
    if (n == 12) add("A4", fp_named("A4"));
    if (n == 24) add("S4", fp_named("S4"));
    if (n == 60) add("A5", fp_named("A5"));
    for (size_t m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        size_t k = n / m;
        std::vector<Candidate> rights;
        if (k >= 2) rights.push_back({"C" + std::to_string(k), fp_cyclic(k)});
        if (k == 4) rights.push_back({"C2^2", fp_klein()});
        if (k % 2 == 0 && k >= 6)
            rights.push_back({canonical_name("D" + std::to_string(k / 2)), fp_dihedral(k / 2)});
        if (k == 6) rights.push_back({"S3", fp_dihedral(3)});
        if (k == 12) rights.push_back({"A4", fp_named("A4")});
        if (k == 24) rights.push_back({"S4", fp_named("S4")});
        if (k == 60) rights.push_back({"A5", fp_named("A5")});
        for (const auto& r : rights) {
            std::string nm = "C" + std::to_string(m) + " x " + r.name;
            // Coprime cyclic factors merge.
            if (r.name.size() > 1 && r.name[0] == 'C' && r.name.find(' ') == std::string::npos &&
                r.name.find('^') == std::string::npos) {
                size_t kk = std::stoul(r.name.substr(1));
                if (std::gcd(m, kk) == 1) nm = "C" + std::to_string(m * kk);
            }
            add(nm, fp_product(fp_cyclic(m), r.fp));
        }
    }
    return out;
}

}  // namespace

std::string canonical_group_name(const std::string& name) {
    return canonical_name(name);
}

std::string recognize(const GroupFingerprint& fp) {
    if (fp.order > 120) return "unrecognized";
    if (fp.order == 1) return "C1";
    std::set<std::string> matches;
    for (const auto& c : candidates_for_order(fp.order))
        if (c.fp == fp) matches.insert(c.name);
    if (matches.size() == 1) return *matches.begin();
    return "unrecognized";
}

std::vector<ProjPoint> orbit(const FiniteMatrixGroup& g, const ProjPoint& p) {
    std::vector<ProjPoint> out;
    for (const auto& m : g.elements()) {
        ProjPoint q = m.apply(p).canonicalized();
        bool seen = false;
        for (const auto& r : out)
            if (r.proportional_to(q)) { seen = true; break; }
        if (!seen) out.push_back(std::move(q));
    }
    return out;
}

size_t stabilizer_order(const FiniteMatrixGroup& g, const ProjPoint& p) {
    size_t count = 0;
    for (const auto& m : g.elements())
        if (m.apply(p).proportional_to(p)) ++count;
    return count;
}

CommonFixedPointResult common_fixed_point_on_curve(const FiniteMatrixGroup& g,
                                                   const CurveParam& c,
                                                   unsigned conductor) {
    CommonFixedPointResult result;
    std::vector<ScalarMatrix> induced;
    for (size_t i = 0; i < g.order(); ++i) {
        auto m = induced_param_action(g.element(i), c);
        if (!m) {
            result.status = CommonFixedPointResult::Status::CurveNotPreserved;
            result.witness = "element " + std::to_string(i) + " does not preserve the curve";
            return result;
        }
        induced.push_back(std::move(*m));
    }
    // Candidates from the first element with a factorable, finite fixed set.
    std::vector<ProjPoint> candidates;
    long source = -1;
    bool all_trivial = true;
    for (size_t i = 0; i < induced.size(); ++i) {
        ParamFixedPoints fps = fixed_parameter_points(induced[i], conductor);
        if (fps.whole_line) continue;
        all_trivial = false;
        if (!fps.factored) continue;
        candidates = fps.points;
        source = static_cast<long>(i);
        break;
    }
    if (all_trivial) {
        result.status = CommonFixedPointResult::Status::WholeCurve;
        result.parameter_point = ProjPoint{{CycNum(1), CycNum(0)}};
        result.witness = "every element acts trivially on the curve";
        return result;
    }
    if (source < 0) {
        result.status = CommonFixedPointResult::Status::Unresolved;
        result.witness = "no element with fixed points rational over the declared conductor";
        return result;
    }
    std::ostringstream cert;
    cert << "candidate fixed points of element " << source << ": ";
    for (const auto& p : candidates) cert << p.to_string() << " ";
    for (const auto& p : candidates) {
        bool fixed_by_all = true;
        for (size_t i = 0; i < induced.size() && fixed_by_all; ++i) {
            if (!induced[i].apply(p).proportional_to(p)) {
                cert << "; " << p.to_string() << " moved by element " << i;
                fixed_by_all = false;
            }
        }
        if (fixed_by_all) {
            result.status = CommonFixedPointResult::Status::Point;
            result.parameter_point = p;
            return result;
        }
    }
    result.status = CommonFixedPointResult::Status::None;
    result.witness = cert.str();
    return result;
}

FixedPointCheck fixed_points_check(const ScalarMatrix& g, const ProjPoint& p,
                                   const MPoly& f) {
    FixedPointCheck out;
    out.fixed = g.apply(p).proportional_to(p);
    auto geo = f.table()->indices_with_role(VarRole::Geometry);
    if (geo.size() != p.coords.size())
        throw std::invalid_argument("fixed_points_check: dimension mismatch");
    std::map<size_t, CycNum> values;
    for (size_t i = 0; i < geo.size(); ++i) values[geo[i]] = p.coords[i];
    MPoly at = f.evaluated(values);
    if (!at.is_constant())
        throw std::invalid_argument("fixed_points_check: polynomial has free parameters");
    out.on_variety = at.constant_value().is_zero();
    out.smooth = false;
    for (size_t v : geo) {
        MPoly d = f.derivative(v).evaluated(values);
        if (!d.constant_value().is_zero()) { out.smooth = true; break; }
    }
    return out;
}

}  // namespace cubics
