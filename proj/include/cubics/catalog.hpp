#pragma once

#include "cubics/groups.hpp"
#include "cubics/projalg.hpp"
#include "cubics/stabsolve.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cubics {

using Json = nlohmann::ordered_json;

struct GeneratorSpec {
    std::string label;
    bool ambient = true;
    LinearAction action;
    std::optional<MPoly> expected_multiplier;
    std::string source_note;  // e.g. "derived" for non-displayed generators
};

struct CurveSpec {
    std::string label;
    CurveParam curve;
};

struct MapSpec {
    std::string label;
    RationalMap map;
    std::vector<size_t> source_vars;
    std::vector<std::string> claimed;
};

struct AuxPoly {
    std::string label;
    MPoly poly;
    std::vector<size_t> coords;  // coordinate variables of its ambient space
};

struct ShapeSpec {
    std::string label;
    MatrixShape shape;
    std::string witness;
};

struct Verdict {
    std::string status;  // linearizable | not-linearizable | open | unirational
    std::string reason;
    bool unirational = false;
    std::vector<std::string> notes;
};

struct CheckDescriptor {
    std::string name;
    std::string kind;
    Json args;
};

class CaseRecord {
public:
    CaseRecord(VarTablePtr table, MPoly cubic)
        : table_(std::move(table)), cubic_(std::move(cubic)) {}

    std::string id;
    size_t ambient_dim = 4;
    unsigned max_conductor = 12;
    std::vector<std::pair<std::string, std::string>> parameter_notes;
    std::vector<MPoly> relation_polys;
    RelationSet relations;
    std::vector<CurveSpec> curves;
    std::vector<GeneratorSpec> generators;
    std::vector<MapSpec> maps;
    std::vector<AuxPoly> aux_polys;
    std::vector<ShapeSpec> shapes;
    std::string claimed_group;
    Verdict verdict;
    std::vector<CheckDescriptor> checks;

    const VarTablePtr& table() const { return table_; }
    const MPoly& cubic() const { return cubic_; }

    const GeneratorSpec& generator(const std::string& label) const;
    const CurveSpec& curve(const std::string& label) const;
    const MapSpec& map(const std::string& label) const;
    const AuxPoly& aux_poly(const std::string& label) const;
    const ShapeSpec& shape(const std::string& label) const;

    bool equivalent_to(const CaseRecord& o) const;

private:
    VarTablePtr table_;
    MPoly cubic_;
};

class load_error : public std::runtime_error {
public:
    explicit load_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse and fully validate a case document.  Generator semi-invariance is
/// enforced here: a transcription error in a matrix or the cubic fails the
/// load, which is the most valuable error in the system.
CaseRecord load_case_json(const Json& doc);
CaseRecord load_case_text(const std::string& text);
CaseRecord load_case_file(const std::string& path);

/// Canonical re-serialization; load(serialize(r)) is equivalent to r.
Json serialize_case(const CaseRecord& rec);

/// Built-in catalog.
std::vector<std::string> builtin_ids();
const std::string& builtin_source(const std::string& id);
CaseRecord load_builtin(const std::string& id);

}  // namespace cubics
