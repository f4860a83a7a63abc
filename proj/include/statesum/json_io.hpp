#ifndef STATESUM_JSON_IO_HPP
#define STATESUM_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "statesum/cech.hpp"
#include "statesum/holonomy.hpp"
#include "statesum/homs.hpp"
#include "statesum/labelings.hpp"
#include "statesum/presentation.hpp"
#include "statesum/simplicial_complex.hpp"

namespace statesum {

using nlohmann::json;

/// Complex files: {"name": str, "maximal_simplices": [[int,...],...]}.
json complex_to_json(const SimplicialComplex& k, const std::string& name);
ComplexPtr complex_from_json(const json& j, std::string* name_out = nullptr);

/// Labeled-data files share one shape:
///   {"nerve": <complex>, "kind": <kind>, "group": <spec>, "values": {...}}
/// with kinds bundle | connection (group elements on edges),
/// gerbe | gerbe-connection (abelian values on triangles),
/// abelian-bundle | edge-gauge (abelian values on edges),
/// vertex-gauge (group elements on vertices),
/// abelian-vertex-gauge (abelian values on vertices).
/// Keys are comma-joined canonical vertex tuples ("0,2"); abelian values are
/// "p/q" strings (arrays of strings for multi-component groups).
struct LabeledFile {
    std::string kind;
    std::optional<EdgeLabeling> edge;
    std::optional<TriangleLabeling> triangle;
    std::optional<AbelianEdgeLabeling> abelian_edge;
    std::optional<VertexGauge> vertex_gauge;
    std::optional<AbelianVertexGauge> abelian_vertex_gauge;

    ComplexPtr nerve() const;
};

LabeledFile labeled_from_json(const json& j);
json to_json(const EdgeLabeling& a, const std::string& kind);
json to_json(const TriangleLabeling& b, const std::string& kind);
json to_json(const AbelianEdgeLabeling& a, const std::string& kind);
json to_json(const VertexGauge& g);
json to_json(const AbelianVertexGauge& g);

json presentation_to_json(const Presentation& p);

/// Re-ingest an exported presentation: generators and relators only (no
/// complex or spanning-tree context).
Presentation presentation_from_json(const json& j);

/// Paths: {"basepoint": v, "steps": [[from,to],...]}.
json path_to_json(const EdgePath& p);
EdgePath path_from_json(const json& j);

/// Two-cycles: {"coefficients": {"i,j,k": int,...}}.
json twocycle_to_json(const TwoCycle& z);
TwoCycle twocycle_from_json(const json& j);

/// Group homs: {"group": spec, "images": [int,...]}.
json group_hom_to_json(const GroupHom& h);

/// Abelian homs: {"source": {"free_rank": r, "torsion": [d,...]},
///                "target": spec, "torsion_images": [...], "free_images": [...]}.
json abelian_hom_to_json(const AbelianHom& h);
AbelianHom abelian_hom_from_json(const json& j);

json abvalue_to_json(const CoeffGroup& g, const AbValue& v);
AbValue abvalue_from_json(const CoeffGroup& g, const json& j);

json int_to_json(const Int& n);
Int int_from_json(const json& j);

json finabelian_to_json(const FinAbelianGroup& g);
FinAbelianGroup finabelian_from_json(const json& j);

struct FixtureInfo {
    std::string name;
    std::string description;
    std::vector<std::vector<Vertex>> maximal;
};

/// The shipped complexes, in listing order.
const std::vector<FixtureInfo>& fixture_registry();
ComplexPtr fixture_complex(const std::string& name);

/// Strict file loading with MalformedInputError on I/O or parse failure.
json load_json_file(const std::string& path);

/// FNV-1a 64-bit digest in hex, for input fingerprints in run reports.
std::string fnv1a_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

}  // namespace statesum

#endif
