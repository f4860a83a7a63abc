#include "statesum/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "statesum/errors.hpp"

namespace statesum {

namespace {

std::string key_of(const std::vector<Vertex>& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ",";
        out << s[i];
    }
    return out.str();
}

std::vector<Vertex> parse_key(const std::string& key, std::size_t arity) {
    std::vector<Vertex> v;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int val = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            v.push_back(val);
        } catch (const std::exception&) {
            throw MalformedInputError("bad simplex key '" + key + "'");
        }
    }
    if (v.size() != arity) {
        throw MalformedInputError("simplex key '" + key + "' should list " +
                                  std::to_string(arity) + " vertices");
    }
    return v;
}

const json& require_field(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw MalformedInputError(std::string("missing field \"") + field + "\"");
    }
    return *it;
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw MalformedInputError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

}  // namespace

json complex_to_json(const SimplicialComplex& k, const std::string& name) {
    json j;
    j["name"] = name;
    json maximal = json::array();
    // Maximal simplices: those not a face of any higher simplex.
    for (int d = k.dimension(); d >= 0; --d) {
        for (const auto& s : k.simplices(d)) {
            bool is_face = false;
            for (const auto& bigger : k.simplices(d + 1)) {
                if (std::includes(bigger.begin(), bigger.end(), s.begin(), s.end())) {
                    is_face = true;
                    break;
                }
            }
            if (!is_face) maximal.push_back(s);
        }
    }
    j["maximal_simplices"] = maximal;
    return j;
}

ComplexPtr complex_from_json(const json& j, std::string* name_out) {
    if (!j.is_object()) throw MalformedInputError("complex must be a JSON object");
    if (name_out) {
        const json& name = require_field(j, "name");
        if (!name.is_string()) throw MalformedInputError("complex name must be a string");
        *name_out = name.get<std::string>();
    }
    const json& maximal = require_field(j, "maximal_simplices");
    if (!maximal.is_array()) throw MalformedInputError("maximal_simplices must be an array");
    std::vector<std::vector<Vertex>> tuples;
    for (const json& s : maximal) {
        if (!s.is_array()) throw MalformedInputError("simplex must be an array of vertices");
        std::vector<Vertex> tuple;
        for (const json& v : s) tuple.push_back(require_int(v, "vertex"));
        tuples.push_back(std::move(tuple));
    }
    return std::make_shared<SimplicialComplex>(build_complex(tuples));
}

ComplexPtr LabeledFile::nerve() const {
    if (edge) return edge->complex;
    if (triangle) return triangle->complex;
    if (abelian_edge) return abelian_edge->complex;
    if (vertex_gauge) return vertex_gauge->complex;
    if (abelian_vertex_gauge) return abelian_vertex_gauge->complex;
    throw PreconditionError("empty labeled file");
}

json abvalue_to_json(const CoeffGroup& g, const AbValue& v) {
    if (v.size() != g.components()) {
        throw PreconditionError("value arity does not match the coefficient group");
    }
    if (g.components() == 1) return rational_to_string(v[0]);
    json arr = json::array();
    for (const Rational& q : v) arr.push_back(rational_to_string(q));
    return arr;
}

AbValue abvalue_from_json(const CoeffGroup& g, const json& j) {
    AbValue v;
    auto one = [](const json& x) -> Rational {
        if (x.is_string()) return rational_from_string(x.get<std::string>());
        if (x.is_number_integer()) return Rational(x.get<long long>());
        throw MalformedInputError("abelian value must be a \"p/q\" string or integer");
    };
    if (j.is_array()) {
        for (const json& x : j) v.push_back(one(x));
    } else {
        v.push_back(one(j));
    }
    if (v.size() != g.components()) {
        throw MalformedInputError("abelian value lists " + std::to_string(v.size()) +
                                  " components, group " + g.describe() + " has " +
                                  std::to_string(g.components()));
    }
    return g.reduce(v);
}

namespace {

json labeled_header(const ComplexPtr& k, const std::string& kind, const std::string& group) {
    json j;
    j["nerve"] = complex_to_json(*k, "nerve");
    j["kind"] = kind;
    j["group"] = group;
    return j;
}

}  // namespace

json to_json(const EdgeLabeling& a, const std::string& kind) {
    a.validate();
    json j = labeled_header(a.complex, kind, a.group->name());
    json values = json::object();
    for (const auto& [e, v] : a.values) values[key_of({e.first, e.second})] = v;
    j["values"] = values;
    return j;
}

json to_json(const TriangleLabeling& b, const std::string& kind) {
    b.validate();
    json j = labeled_header(b.complex, kind, b.group.describe());
    json values = json::object();
    for (const auto& [t, v] : b.values) values[key_of(t)] = abvalue_to_json(b.group, v);
    j["values"] = values;
    return j;
}

json to_json(const AbelianEdgeLabeling& a, const std::string& kind) {
    a.validate();
    json j = labeled_header(a.complex, kind, a.group.describe());
    json values = json::object();
    for (const auto& [e, v] : a.values) {
        values[key_of({e.first, e.second})] = abvalue_to_json(a.group, v);
    }
    j["values"] = values;
    return j;
}

json to_json(const VertexGauge& g) {
    g.validate();
    json j = labeled_header(g.complex, "vertex-gauge", g.group->name());
    json values = json::object();
    for (std::size_t v = 0; v < g.values.size(); ++v) {
        values[std::to_string(v)] = g.values[v];
    }
    j["values"] = values;
    return j;
}

json to_json(const AbelianVertexGauge& g) {
    g.validate();
    json j = labeled_header(g.complex, "abelian-vertex-gauge", g.group.describe());
    json values = json::object();
    for (std::size_t v = 0; v < g.values.size(); ++v) {
        values[std::to_string(v)] = abvalue_to_json(g.group, g.values[v]);
    }
    j["values"] = values;
    return j;
}

LabeledFile labeled_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInputError("labeled file must be a JSON object");
    const json& kind_j = require_field(j, "kind");
    if (!kind_j.is_string()) throw MalformedInputError("kind must be a string");
    std::string kind = kind_j.get<std::string>();
    ComplexPtr nerve = complex_from_json(require_field(j, "nerve"), nullptr);
    const json& group_j = require_field(j, "group");
    if (!group_j.is_string()) throw MalformedInputError("group must be a spec string");
    std::string group_spec = group_j.get<std::string>();
    const json& values = require_field(j, "values");
    if (!values.is_object()) throw MalformedInputError("values must be an object");

    LabeledFile out;
    out.kind = kind;
    if (kind == "bundle" || kind == "connection") {
        EdgeLabeling a;
        a.complex = nerve;
        a.group = std::make_shared<FiniteGroup>(group_from_spec(group_spec));
        for (const auto& [key, val] : values.items()) {
            std::vector<Vertex> e = parse_key(key, 2);
            a.set(e[0], e[1], require_int(val, "edge value"));
        }
        a.validate();
        out.edge = std::move(a);
    } else if (kind == "gerbe" || kind == "gerbe-connection") {
        TriangleLabeling b;
        b.complex = nerve;
        b.group = parse_coeff_spec(group_spec);
        for (const auto& [key, val] : values.items()) {
            std::vector<Vertex> t = parse_key(key, 3);
            b.set(t[0], t[1], t[2], abvalue_from_json(b.group, val));
        }
        b.validate();
        out.triangle = std::move(b);
    } else if (kind == "abelian-bundle" || kind == "edge-gauge") {
        AbelianEdgeLabeling a;
        a.complex = nerve;
        a.group = parse_coeff_spec(group_spec);
        for (const auto& [key, val] : values.items()) {
            std::vector<Vertex> e = parse_key(key, 2);
            a.set(e[0], e[1], abvalue_from_json(a.group, val));
        }
        a.validate();
        out.abelian_edge = std::move(a);
    } else if (kind == "vertex-gauge") {
        VertexGauge g;
        g.complex = nerve;
        g.group = std::make_shared<FiniteGroup>(group_from_spec(group_spec));
        g.values.assign(static_cast<std::size_t>(nerve->vertex_count()), g.group->identity());
        std::vector<char> seen(g.values.size(), 0);
        for (const auto& [key, val] : values.items()) {
            std::vector<Vertex> v = parse_key(key, 1);
            if (v[0] < 0 || v[0] >= nerve->vertex_count()) {
                throw MalformedInputError("gauge key names vertex " + key +
                                          " outside the complex");
            }
            g.values[static_cast<std::size_t>(v[0])] = require_int(val, "gauge value");
            seen[static_cast<std::size_t>(v[0])] = 1;
        }
        for (std::size_t v = 0; v < seen.size(); ++v) {
            if (!seen[v]) {
                throw MalformedInputError("gauge misses vertex " + std::to_string(v));
            }
        }
        g.validate();
        out.vertex_gauge = std::move(g);
    } else if (kind == "abelian-vertex-gauge") {
        AbelianVertexGauge g;
        g.complex = nerve;
        g.group = parse_coeff_spec(group_spec);
        g.values.assign(static_cast<std::size_t>(nerve->vertex_count()), g.group.zero());
        std::vector<char> seen(g.values.size(), 0);
        for (const auto& [key, val] : values.items()) {
            std::vector<Vertex> v = parse_key(key, 1);
            if (v[0] < 0 || v[0] >= nerve->vertex_count()) {
                throw MalformedInputError("gauge key names vertex " + key +
                                          " outside the complex");
            }
            g.values[static_cast<std::size_t>(v[0])] = abvalue_from_json(g.group, val);
            seen[static_cast<std::size_t>(v[0])] = 1;
        }
        for (std::size_t v = 0; v < seen.size(); ++v) {
            if (!seen[v]) {
                throw MalformedInputError("gauge misses vertex " + std::to_string(v));
            }
        }
        g.validate();
        out.abelian_vertex_gauge = std::move(g);
    } else {
        throw MalformedInputError("unknown kind '" + kind + "'");
    }
    return out;
}

json presentation_to_json(const Presentation& p) {
    json j;
    j["generators"] = p.generators;
    json relators = json::array();
    for (const Word& r : p.relators) relators.push_back(r);
    j["relators"] = relators;
    return j;
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.generators = require_int(require_field(j, "generators"), "generators");
    if (p.generators < 0) throw MalformedInputError("negative generator count");
    const json& relators = require_field(j, "relators");
    if (!relators.is_array()) throw MalformedInputError("relators must be an array");
    for (const json& r : relators) {
        if (!r.is_array()) throw MalformedInputError("relator must be an array of letters");
        Word w;
        for (const json& letter : r) {
            int l = require_int(letter, "relator letter");
            if (l == 0 || std::abs(l) > p.generators) {
                throw MalformedInputError("relator letter " + std::to_string(l) +
                                          " references no generator");
            }
            w.push_back(l);
        }
        p.relators.push_back(std::move(w));
    }
    return p;
}

json path_to_json(const EdgePath& p) {
    json j;
    j["basepoint"] = p.basepoint;
    json steps = json::array();
    for (const auto& s : p.steps) steps.push_back(json::array({s.from, s.to}));
    j["steps"] = steps;
    return j;
}

EdgePath path_from_json(const json& j) {
    EdgePath p;
    p.basepoint = require_int(require_field(j, "basepoint"), "basepoint");
    const json& steps = require_field(j, "steps");
    if (!steps.is_array()) throw MalformedInputError("steps must be an array");
    for (const json& s : steps) {
        if (!s.is_array() || s.size() != 2) {
            throw MalformedInputError("each step must be a [from,to] pair");
        }
        p.steps.push_back({require_int(s[0], "step endpoint"), require_int(s[1], "step endpoint")});
    }
    return p;
}

json twocycle_to_json(const TwoCycle& z) {
    json j;
    json coeffs = json::object();
    for (const auto& [t, c] : z.coefficients()) coeffs[key_of(t)] = int_to_json(c);
    j["coefficients"] = coeffs;
    return j;
}

TwoCycle twocycle_from_json(const json& j) {
    TwoCycle z;
    const json& coeffs = require_field(j, "coefficients");
    if (!coeffs.is_object()) throw MalformedInputError("coefficients must be an object");
    for (const auto& [key, val] : coeffs.items()) {
        std::vector<Vertex> t = parse_key(key, 3);
        z.add(t, int_from_json(val));
    }
    return z;
}

json group_hom_to_json(const GroupHom& h) {
    json j;
    j["group"] = h.group ? h.group->name() : "";
    j["images"] = h.images;
    return j;
}

json finabelian_to_json(const FinAbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank();
    json torsion = json::array();
    for (const Int& d : g.factors()) torsion.push_back(int_to_json(d));
    j["torsion"] = torsion;
    j["pretty"] = g.describe();
    return j;
}

FinAbelianGroup finabelian_from_json(const json& j) {
    int rank = require_int(require_field(j, "free_rank"), "free_rank");
    const json& torsion = require_field(j, "torsion");
    if (!torsion.is_array()) throw MalformedInputError("torsion must be an array");
    std::vector<Int> factors;
    for (const json& d : torsion) factors.push_back(int_from_json(d));
    return FinAbelianGroup::from_factors(factors, rank);
}

json abelian_hom_to_json(const AbelianHom& h) {
    json j;
    j["source"] = finabelian_to_json(h.source);
    j["target"] = h.target.describe();
    json torsion = json::array();
    for (const AbValue& v : h.torsion_images) torsion.push_back(abvalue_to_json(h.target, v));
    j["torsion_images"] = torsion;
    json free = json::array();
    for (const AbValue& v : h.free_images) free.push_back(abvalue_to_json(h.target, v));
    j["free_images"] = free;
    return j;
}

AbelianHom abelian_hom_from_json(const json& j) {
    AbelianHom h;
    h.source = finabelian_from_json(require_field(j, "source"));
    const json& target = require_field(j, "target");
    if (!target.is_string()) throw MalformedInputError("target must be a group spec string");
    h.target = parse_coeff_spec(target.get<std::string>());
    const json& torsion = require_field(j, "torsion_images");
    if (!torsion.is_array()) throw MalformedInputError("torsion_images must be an array");
    for (const json& v : torsion) h.torsion_images.push_back(abvalue_from_json(h.target, v));
    const json& free = require_field(j, "free_images");
    if (!free.is_array()) throw MalformedInputError("free_images must be an array");
    for (const json& v : free) h.free_images.push_back(abvalue_from_json(h.target, v));
    validate_abelian_hom(h);
    return h;
}

json int_to_json(const Int& n) {
    static const Int kMin = std::numeric_limits<std::int64_t>::min();
    static const Int kMax = std::numeric_limits<std::int64_t>::max();
    if (n >= kMin && n <= kMax) return n.convert_to<std::int64_t>();
    return n.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string& s = j.get<std::string>();
        std::string digits = s;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw MalformedInputError("bad integer '" + s + "'");
        }
        return Int(s);
    }
    throw MalformedInputError("expected an integer");
}

const std::vector<FixtureInfo>& fixture_registry() {
    static const std::vector<FixtureInfo> fixtures = {
        {"circle", "3-vertex circle S^1", {{0, 1}, {1, 2}, {0, 2}}},
        {"sphere", "boundary of the 3-simplex, a 2-sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}},
        {"s3",
         "boundary of the 4-simplex, a 3-sphere",
         {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}}},
        {"torus",
         "9-vertex 3x3 grid torus",
         {{0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 3}, {2, 3, 5},
          {3, 4, 7}, {3, 6, 7}, {4, 5, 8}, {4, 7, 8}, {3, 5, 6}, {5, 6, 8},
          {1, 6, 7}, {0, 1, 6}, {2, 7, 8}, {1, 2, 7}, {0, 6, 8}, {0, 2, 8}}},
        {"rp2",
         "6-vertex real projective plane",
         {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
          {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}}},
    };
    return fixtures;
}

ComplexPtr fixture_complex(const std::string& name) {
    for (const FixtureInfo& f : fixture_registry()) {
        if (f.name == name) {
            return std::make_shared<SimplicialComplex>(build_complex(f.maximal));
        }
    }
    throw MalformedInputError("unknown fixture '" + name + "'");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedInputError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a_hex(buf.str());
}

}  // namespace statesum
