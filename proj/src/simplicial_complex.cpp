#include "statesum/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "statesum/errors.hpp"

namespace statesum {

OrientedSimplex OrientedSimplex::from_tuple(const std::vector<Vertex>& tuple) {
    std::vector<std::size_t> perm(tuple.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return tuple[a] < tuple[b]; });
    int sign = 1;
    // Count inversions by selection: parity of the sorting permutation.
    std::vector<std::size_t> p = perm;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != i) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < perm.size(); ++i) {
        if (tuple[perm[i - 1]] == tuple[perm[i]]) {
            throw MalformedInputError("simplex repeats a vertex");
        }
    }
    return OrientedSimplex{tuple, sign};
}

Simplex OrientedSimplex::canonical() const {
    Simplex s = vertices;
    std::sort(s.begin(), s.end());
    return s;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> kEmpty;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::count(int d) const { return simplices(d).size(); }

bool SimplicialComplex::contains(const Simplex& canonical) const {
    return index_of(canonical) >= 0;
}

int SimplicialComplex::index_of(const Simplex& canonical) const {
    int d = static_cast<int>(canonical.size()) - 1;
    if (d < 0 || d >= static_cast<int>(index_.size())) return -1;
    const auto& m = index_[static_cast<std::size_t>(d)];
    auto it = m.find(canonical);
    return it == m.end() ? -1 : it->second;
}

bool SimplicialComplex::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    Edge e = make_edge(a, b);
    return contains({e.first, e.second});
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f;
    for (const auto& level : by_dim_) f.push_back(static_cast<int>(level.size()));
    return f;
}

Int SimplicialComplex::euler_characteristic() const {
    Int chi = 0;
    int sign = 1;
    for (const auto& level : by_dim_) {
        chi += sign * static_cast<int>(level.size());
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::is_connected() const {
    if (vertex_count_ == 0) return true;
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count_));
    for (const auto& e : simplices(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertex_count_;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && by_dim_ == other.by_dim_;
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal) {
    if (maximal.empty()) throw MalformedInputError("complex has no simplices");
    std::set<Simplex> closed;
    Vertex max_vertex = -1;
    for (const auto& tuple : maximal) {
        if (tuple.empty()) throw MalformedInputError("empty simplex");
        OrientedSimplex os = OrientedSimplex::from_tuple(tuple);
        Simplex s = os.canonical();
        for (Vertex v : s) {
            if (v < 0) throw MalformedInputError("negative vertex id");
            max_vertex = std::max(max_vertex, v);
        }
        // Enumerate all nonempty subsets as faces.
        std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
            }
            closed.insert(std::move(face));
        }
    }
    std::vector<char> present(static_cast<std::size_t>(max_vertex + 1), 0);
    for (const auto& s : closed) {
        if (s.size() == 1) present[static_cast<std::size_t>(s[0])] = 1;
    }
    for (std::size_t v = 0; v < present.size(); ++v) {
        if (!present[v]) {
            throw MalformedInputError("vertex ids must be dense 0..V-1; missing " +
                                      std::to_string(v));
        }
    }

    SimplicialComplex k;
    k.vertex_count_ = static_cast<int>(max_vertex + 1);
    for (const auto& s : closed) {
        std::size_t d = s.size() - 1;
        if (d >= k.by_dim_.size()) {
            k.by_dim_.resize(d + 1);
            k.index_.resize(d + 1);
        }
        k.by_dim_[d].push_back(s);
    }
    // std::set iteration is already lexicographic within each dimension.
    for (std::size_t d = 0; d < k.by_dim_.size(); ++d) {
        for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) {
            k.index_[d][k.by_dim_[d][i]] = static_cast<int>(i);
        }
    }
    return k;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 1) throw PreconditionError("boundary_matrix requires d >= 1");
    std::size_t rows = k.count(d - 1);
    std::size_t cols = k.count(d);
    IntMatrix b(rows, cols);
    const auto& top = k.simplices(d);
    for (std::size_t j = 0; j < cols; ++j) {
        const Simplex& s = top[j];
        for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
            Simplex face;
            for (std::size_t t = 0; t < s.size(); ++t) {
                if (t != i) face.push_back(s[t]);
            }
            int r = k.index_of(face);
            if (r < 0) throw PreconditionError("complex not closed under faces");
            b.at(static_cast<std::size_t>(r), j) += (i % 2 == 0 ? 1 : -1);
        }
    }
    return b;
}

bool EdgePath::is_loop() const {
    if (steps.empty()) return true;
    return steps.front().from == basepoint && steps.back().to == basepoint;
}

void validate_path(const SimplicialComplex& k, const EdgePath& p) {
    Vertex at = p.basepoint;
    if (at < 0 || at >= k.vertex_count()) {
        throw MalformedInputError("basepoint outside vertex range");
    }
    for (const auto& s : p.steps) {
        if (s.from != at) throw MalformedInputError("path steps do not chain");
        if (!k.has_edge(s.from, s.to)) {
            throw UnknownSimplexError("path uses a non-edge {" + std::to_string(s.from) +
                                      "," + std::to_string(s.to) + "}");
        }
        at = s.to;
    }
}

EdgePath simplify_path(const EdgePath& p) {
    std::vector<EdgeStep> stack;
    for (const auto& s : p.steps) {
        if (!stack.empty() && stack.back().from == s.to && stack.back().to == s.from) {
            stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    return EdgePath{p.basepoint, std::move(stack)};
}

void TwoCycle::add(const std::vector<Vertex>& triangle, const Int& coefficient) {
    if (triangle.size() != 3) throw MalformedInputError("two-chain term is not a triangle");
    OrientedSimplex os = OrientedSimplex::from_tuple(triangle);
    Simplex s = os.canonical();
    Int& c = coeffs_[s];
    c += coefficient * os.sign;
    if (c == 0) coeffs_.erase(s);
}

TwoCycle TwoCycle::operator-() const { return scaled(-1); }

TwoCycle TwoCycle::operator+(const TwoCycle& other) const {
    TwoCycle out = *this;
    for (const auto& [s, c] : other.coeffs_) {
        Int& acc = out.coeffs_[s];
        acc += c;
        if (acc == 0) out.coeffs_.erase(s);
    }
    return out;
}

TwoCycle TwoCycle::scaled(const Int& n) const {
    TwoCycle out;
    if (n == 0) return out;
    for (const auto& [s, c] : coeffs_) out.coeffs_[s] = c * n;
    return out;
}

std::vector<Int> TwoCycle::dense(const SimplicialComplex& k) const {
    std::vector<Int> v(k.count(2), Int(0));
    for (const auto& [s, c] : coeffs_) {
        int idx = k.index_of(s);
        if (idx < 0) throw UnknownSimplexError("two-chain supported outside the complex");
        v[static_cast<std::size_t>(idx)] = c;
    }
    return v;
}

TwoCycle TwoCycle::from_dense(const SimplicialComplex& k, const std::vector<Int>& v) {
    if (v.size() != k.count(2)) throw PreconditionError("dense two-chain has wrong length");
    TwoCycle z;
    const auto& tris = k.simplices(2);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) z.coeffs_[tris[i]] = v[i];
    }
    return z;
}

bool is_cycle(const SimplicialComplex& k, const TwoCycle& z) {
    std::map<Simplex, Int> edge_sum;
    for (const auto& [s, c] : z.coefficients()) {
        if (!k.contains(s)) throw UnknownSimplexError("two-chain supported outside the complex");
        // Faces of {a<b<c}: {b,c} +, {a,c} -, {a,b} +.
        edge_sum[{s[1], s[2]}] += c;
        edge_sum[{s[0], s[2]}] -= c;
        edge_sum[{s[0], s[1]}] += c;
    }
    for (const auto& [e, c] : edge_sum) {
        (void)e;
        if (c != 0) return false;
    }
    return true;
}

}  // namespace statesum
