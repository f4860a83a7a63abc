#include "statesum/presentation.hpp"

#include <algorithm>
#include <queue>

#include "statesum/errors.hpp"
#include "statesum/smith.hpp"

namespace statesum {

Word free_reduce(const Word& w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Word invert_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& letter : out) letter = -letter;
    return out;
}

Word concat_reduced(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

namespace {

/// Strip conjugating prefix/suffix pairs: x w x^{-1} ~ w as a relator.
Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

}  // namespace

Presentation present_pi1(ComplexPtr k, Vertex basepoint) {
    if (!k) throw PreconditionError("null complex");
    if (basepoint < 0 || basepoint >= k->vertex_count()) {
        throw MalformedInputError("basepoint " + std::to_string(basepoint) +
                                  " is not a vertex of the complex");
    }
    if (!k->is_connected()) throw DisconnectedError("pi1 requires a connected complex");
    if (k->dimension() < 1) throw PreconditionError("pi1 requires dimension >= 1");

    int nv = k->vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(nv));
    for (const auto& e : k->simplices(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    Presentation p;
    p.complex = std::move(k);
    p.basepoint = basepoint;
    p.tree_parent.assign(static_cast<std::size_t>(nv), -1);
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    std::queue<Vertex> q;
    q.push(basepoint);
    seen[static_cast<std::size_t>(basepoint)] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                p.tree_parent[static_cast<std::size_t>(w)] = v;
                p.tree_edges.insert(make_edge(v, w));
                q.push(w);
            }
        }
    }

    for (const auto& e : p.complex->simplices(1)) {
        Edge edge{e[0], e[1]};
        if (!p.tree_edges.count(edge)) {
            p.edge_to_generator[edge] = p.generators++;
            p.generator_edges.push_back(edge);
        }
    }

    auto edge_word = [&](Vertex a, Vertex b) -> Word {
        Edge edge = make_edge(a, b);
        if (p.tree_edges.count(edge)) return {};
        int g = p.edge_to_generator.at(edge);
        return {a < b ? g + 1 : -(g + 1)};
    };
    for (const auto& t : p.complex->simplices(2)) {
        Word w = edge_word(t[0], t[1]);
        Word w2 = edge_word(t[1], t[2]);
        w.insert(w.end(), w2.begin(), w2.end());
        Word w3 = invert_word(edge_word(t[0], t[2]));
        w.insert(w.end(), w3.begin(), w3.end());
        w = free_reduce(w);
        if (!w.empty()) p.relators.push_back(std::move(w));
    }
    return p;
}

Word word_of_path(const Presentation& p, const EdgePath& path) {
    validate_path(*p.complex, path);
    if (path.basepoint != p.basepoint || !path.is_loop()) {
        throw PreconditionError("path is not a loop at the presentation basepoint");
    }
    Word w;
    for (const auto& s : path.steps) {
        Edge edge = make_edge(s.from, s.to);
        if (p.tree_edges.count(edge)) continue;
        auto it = p.edge_to_generator.find(edge);
        if (it == p.edge_to_generator.end()) {
            throw PreconditionError("edge has no generator in this presentation");
        }
        w.push_back(s.from < s.to ? it->second + 1 : -(it->second + 1));
    }
    return free_reduce(w);
}

Presentation simplify_presentation(Presentation p, int effort) {
    int budget = effort;
    auto spend = [&]() {
        if (budget <= 0) return false;
        --budget;
        return true;
    };

    bool changed = true;
    while (changed && budget > 0) {
        changed = false;

        for (auto& r : p.relators) {
            Word reduced = cyclic_reduce(r);
            if (reduced != r) {
                if (!spend()) break;
                r = std::move(reduced);
                changed = true;
            }
        }

        std::vector<Word> kept;
        for (auto& r : p.relators) {
            if (r.empty()) {
                changed = true;
                continue;
            }
            bool dup = false;
            for (const auto& k : kept) {
                if (k == r || k == invert_word(r)) {
                    dup = true;
                    break;
                }
            }
            if (dup && spend()) {
                changed = true;
                continue;
            }
            kept.push_back(std::move(r));
        }
        p.relators = std::move(kept);

        // Generator elimination: a relator containing some generator exactly
        // once lets us solve for that generator and drop both.
        int found_r = -1, found_g = 0, found_pos = 0;
        for (std::size_t ri = 0; ri < p.relators.size() && found_r < 0; ++ri) {
            std::vector<int> occur(static_cast<std::size_t>(p.generators), 0);
            for (int letter : p.relators[ri]) ++occur[static_cast<std::size_t>(std::abs(letter) - 1)];
            for (std::size_t pos = 0; pos < p.relators[ri].size(); ++pos) {
                int g = std::abs(p.relators[ri][pos]) - 1;
                if (occur[static_cast<std::size_t>(g)] == 1) {
                    found_r = static_cast<int>(ri);
                    found_g = g;
                    found_pos = static_cast<int>(pos);
                    break;
                }
            }
        }
        if (found_r >= 0 && spend()) {
            const Word& r = p.relators[static_cast<std::size_t>(found_r)];
            // Rotate so the solved letter leads: r ~ g^e u, hence g = u^{-1} when
            // e = +1 and g = u when e = -1.
            Word rotated(r.begin() + found_pos, r.end());
            rotated.insert(rotated.end(), r.begin(), r.begin() + found_pos);
            int eps = rotated.front() > 0 ? 1 : -1;
            Word u(rotated.begin() + 1, rotated.end());
            Word sub = eps == 1 ? invert_word(u) : u;

            std::vector<Word> next;
            for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
                if (static_cast<int>(ri) == found_r) continue;
                Word w;
                for (int letter : p.relators[ri]) {
                    if (std::abs(letter) - 1 == found_g) {
                        Word piece = letter > 0 ? sub : invert_word(sub);
                        w.insert(w.end(), piece.begin(), piece.end());
                    } else {
                        w.push_back(letter);
                    }
                }
                next.push_back(free_reduce(w));
            }
            for (auto& w : next) {
                for (int& letter : w) {
                    if (std::abs(letter) - 1 > found_g) letter -= letter > 0 ? 1 : -1;
                }
            }
            p.relators = std::move(next);
            if (found_g < static_cast<int>(p.generator_edges.size())) {
                p.generator_edges.erase(p.generator_edges.begin() + found_g);
            }
            p.edge_to_generator.clear();
            for (std::size_t g = 0; g < p.generator_edges.size(); ++g) {
                p.edge_to_generator[p.generator_edges[g]] = static_cast<int>(g);
            }
            --p.generators;
            changed = true;
        }
    }
    return p;
}

FinAbelianGroup abelianization(const Presentation& p) {
    IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.generators));
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (int letter : p.relators[r]) {
            m.at(r, static_cast<std::size_t>(std::abs(letter) - 1)) += letter > 0 ? 1 : -1;
        }
    }
    SmithForm snf = smith_normal_form(m);
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < snf.rank(); ++i) {
        if (snf.d.at(i, i) > 1) torsion.push_back(snf.d.at(i, i));
    }
    return FinAbelianGroup::from_factors(torsion,
                                         p.generators - static_cast<int>(snf.rank()));
}

SimplyConnectedCheck check_simply_connected(const Presentation& p, int effort) {
    FinAbelianGroup ab = abelianization(p);
    if (!ab.is_trivial()) {
        return {false, "pi1 is nontrivial: abelianization is " + ab.describe()};
    }
    Presentation s = simplify_presentation(p, effort);
    if (s.generators == 0) return {true, ""};
    return {false, "perfect presentation did not simplify to the trivial one within budget " +
                       std::to_string(effort)};
}

std::vector<Vertex> tree_path_vertices(const Presentation& p, Vertex v) {
    std::vector<Vertex> back;
    Vertex at = v;
    while (at != p.basepoint) {
        back.push_back(at);
        at = p.tree_parent[static_cast<std::size_t>(at)];
        if (at < 0) throw PreconditionError("vertex not reached by the spanning tree");
    }
    back.push_back(p.basepoint);
    std::reverse(back.begin(), back.end());
    return back;
}

EdgePath generator_loop(const Presentation& p, int generator) {
    if (generator < 0 || generator >= static_cast<int>(p.generator_edges.size())) {
        throw PreconditionError("generator index out of range");
    }
    Edge e = p.generator_edges[static_cast<std::size_t>(generator)];
    EdgePath path;
    path.basepoint = p.basepoint;
    std::vector<Vertex> to_tail = tree_path_vertices(p, e.first);
    for (std::size_t i = 0; i + 1 < to_tail.size(); ++i) {
        path.steps.push_back({to_tail[i], to_tail[i + 1]});
    }
    path.steps.push_back({e.first, e.second});
    std::vector<Vertex> to_head = tree_path_vertices(p, e.second);
    for (std::size_t i = to_head.size(); i-- > 1;) {
        path.steps.push_back({to_head[i], to_head[i - 1]});
    }
    return path;
}

}  // namespace statesum
