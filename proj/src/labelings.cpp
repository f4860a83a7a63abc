#include "statesum/labelings.hpp"

#include <algorithm>

#include "statesum/errors.hpp"

namespace statesum {

namespace {

std::string edge_name(Vertex a, Vertex b) {
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string tri_name(const Simplex& s) {
    return "{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
           std::to_string(s[2]) + "}";
}

}  // namespace

EdgeLabeling EdgeLabeling::identity(ComplexPtr k, GroupPtr g) {
    EdgeLabeling a;
    a.complex = std::move(k);
    a.group = std::move(g);
    for (const auto& e : a.complex->simplices(1)) {
        a.values[{e[0], e[1]}] = a.group->identity();
    }
    return a;
}

int EdgeLabeling::value(Vertex a, Vertex b) const {
    if (!complex->has_edge(a, b)) throw UnknownSimplexError("no edge " + edge_name(a, b));
    auto it = values.find(make_edge(a, b));
    if (it == values.end()) throw MalformedInputError("edge " + edge_name(a, b) + " is unlabeled");
    return a < b ? it->second : group->inv(it->second);
}

void EdgeLabeling::set(Vertex a, Vertex b, int element) {
    if (!complex->has_edge(a, b)) throw UnknownSimplexError("no edge " + edge_name(a, b));
    if (element < 0 || element >= group->order()) {
        throw MalformedInputError("group element index out of range");
    }
    values[make_edge(a, b)] = a < b ? element : group->inv(element);
}

void EdgeLabeling::validate() const {
    if (!complex || !group) throw PreconditionError("labeling lacks complex or group");
    for (const auto& e : complex->simplices(1)) {
        auto it = values.find({e[0], e[1]});
        if (it == values.end()) {
            throw MalformedInputError("edge " + edge_name(e[0], e[1]) + " is unlabeled");
        }
        if (it->second < 0 || it->second >= group->order()) {
            throw MalformedInputError("group element index out of range on edge " +
                                      edge_name(e[0], e[1]));
        }
    }
    for (const auto& [e, v] : values) {
        (void)v;
        if (!complex->has_edge(e.first, e.second)) {
            throw UnknownSimplexError("labeled non-edge " + edge_name(e.first, e.second));
        }
    }
}

TriangleLabeling TriangleLabeling::zero(ComplexPtr k, CoeffGroup g) {
    TriangleLabeling b;
    b.complex = std::move(k);
    b.group = std::move(g);
    for (const auto& t : b.complex->simplices(2)) b.values[t] = b.group.zero();
    return b;
}

AbValue TriangleLabeling::value(Vertex i, Vertex j, Vertex k) const {
    OrientedSimplex os = OrientedSimplex::from_tuple({i, j, k});
    Simplex s = os.canonical();
    if (!complex->contains(s)) throw UnknownSimplexError("no triangle " + tri_name(s));
    auto it = values.find(s);
    if (it == values.end()) throw MalformedInputError("triangle " + tri_name(s) + " is unlabeled");
    return os.sign > 0 ? it->second : group.negate(it->second);
}

void TriangleLabeling::set(Vertex i, Vertex j, Vertex k, const AbValue& v) {
    OrientedSimplex os = OrientedSimplex::from_tuple({i, j, k});
    Simplex s = os.canonical();
    if (!complex->contains(s)) throw UnknownSimplexError("no triangle " + tri_name(s));
    AbValue canon = group.reduce(v);
    values[s] = os.sign > 0 ? canon : group.negate(canon);
}

void TriangleLabeling::validate() const {
    if (!complex) throw PreconditionError("labeling lacks a complex");
    for (const auto& t : complex->simplices(2)) {
        auto it = values.find(t);
        if (it == values.end()) throw MalformedInputError("triangle " + tri_name(t) + " is unlabeled");
        group.reduce(it->second);
    }
    for (const auto& [s, v] : values) {
        (void)v;
        if (!complex->contains(s)) throw UnknownSimplexError("labeled non-triangle " + tri_name(s));
    }
}

AbelianEdgeLabeling AbelianEdgeLabeling::zero(ComplexPtr k, CoeffGroup g) {
    AbelianEdgeLabeling a;
    a.complex = std::move(k);
    a.group = std::move(g);
    for (const auto& e : a.complex->simplices(1)) a.values[{e[0], e[1]}] = a.group.zero();
    return a;
}

AbValue AbelianEdgeLabeling::value(Vertex a, Vertex b) const {
    if (!complex->has_edge(a, b)) throw UnknownSimplexError("no edge " + edge_name(a, b));
    auto it = values.find(make_edge(a, b));
    if (it == values.end()) throw MalformedInputError("edge " + edge_name(a, b) + " is unlabeled");
    return a < b ? it->second : group.negate(it->second);
}

void AbelianEdgeLabeling::set(Vertex a, Vertex b, const AbValue& v) {
    if (!complex->has_edge(a, b)) throw UnknownSimplexError("no edge " + edge_name(a, b));
    AbValue canon = group.reduce(v);
    values[make_edge(a, b)] = a < b ? canon : group.negate(canon);
}

void AbelianEdgeLabeling::validate() const {
    if (!complex) throw PreconditionError("labeling lacks a complex");
    for (const auto& e : complex->simplices(1)) {
        auto it = values.find({e[0], e[1]});
        if (it == values.end()) {
            throw MalformedInputError("edge " + edge_name(e[0], e[1]) + " is unlabeled");
        }
        group.reduce(it->second);
    }
    for (const auto& [e, v] : values) {
        (void)v;
        if (!complex->has_edge(e.first, e.second)) {
            throw UnknownSimplexError("labeled non-edge " + edge_name(e.first, e.second));
        }
    }
}

VertexGauge VertexGauge::identity(ComplexPtr k, GroupPtr g) {
    VertexGauge lam;
    lam.complex = std::move(k);
    lam.group = std::move(g);
    lam.values.assign(static_cast<std::size_t>(lam.complex->vertex_count()),
                      lam.group->identity());
    return lam;
}

void VertexGauge::validate() const {
    if (!complex || !group) throw PreconditionError("gauge lacks complex or group");
    if (static_cast<int>(values.size()) != complex->vertex_count()) {
        throw MalformedInputError("gauge must assign one element to every vertex");
    }
    for (int v : values) {
        if (v < 0 || v >= group->order()) {
            throw MalformedInputError("group element index out of range in gauge");
        }
    }
}

TriangleLabeling delta_labeling(const AbelianEdgeLabeling& lambda) {
    lambda.validate();
    TriangleLabeling out;
    out.complex = lambda.complex;
    out.group = lambda.group;
    for (const auto& t : lambda.complex->simplices(2)) {
        AbValue v = lambda.group.sub(lambda.value(t[0], t[1]), lambda.value(t[0], t[2]));
        v = lambda.group.add(v, lambda.value(t[1], t[2]));
        out.values[t] = v;
    }
    return out;
}

}  // namespace statesum
