#include "statesum/homs.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "statesum/errors.hpp"
#include "statesum/homology.hpp"

namespace statesum {

int eval_word(const FiniteGroup& g, const Word& w, const std::vector<int>& images) {
    int acc = g.identity();
    for (int letter : w) {
        int img = images[static_cast<std::size_t>(std::abs(letter) - 1)];
        acc = g.mul(acc, letter > 0 ? img : g.inv(img));
    }
    return acc;
}

bool satisfies_relators(const Presentation& p, const FiniteGroup& g,
                        const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != p.generators) {
        throw MalformedInputError("image list length does not match generator count");
    }
    for (const Word& r : p.relators) {
        if (eval_word(g, r, images) != g.identity()) return false;
    }
    return true;
}

namespace {

struct SearchPlan {
    std::vector<int> order;                        // position -> generator
    std::vector<std::vector<const Word*>> checks;  // relators ready at position
};

SearchPlan make_plan(const Presentation& p) {
    SearchPlan plan;
    std::vector<int> occur(static_cast<std::size_t>(p.generators), 0);
    for (const Word& r : p.relators) {
        for (int letter : r) ++occur[static_cast<std::size_t>(std::abs(letter) - 1)];
    }
    plan.order.resize(static_cast<std::size_t>(p.generators));
    for (int i = 0; i < p.generators; ++i) plan.order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
        return occur[static_cast<std::size_t>(a)] > occur[static_cast<std::size_t>(b)];
    });
    std::vector<int> position(static_cast<std::size_t>(p.generators), 0);
    for (int pos = 0; pos < p.generators; ++pos) {
        position[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(pos)])] = pos;
    }
    plan.checks.resize(static_cast<std::size_t>(std::max(p.generators, 1)));
    for (const Word& r : p.relators) {
        int last = -1;
        for (int letter : r) {
            last = std::max(last, position[static_cast<std::size_t>(std::abs(letter) - 1)]);
        }
        if (last >= 0) plan.checks[static_cast<std::size_t>(last)].push_back(&r);
    }
    return plan;
}

struct SubtreeResult {
    Int count = 0;
    std::vector<std::vector<int>> images;
};

void search(const Presentation& p, const FiniteGroup& g, const SearchPlan& plan, int pos,
            std::vector<int>& images, bool collect, SubtreeResult& out) {
    if (pos == p.generators) {
        ++out.count;
        if (collect) out.images.push_back(images);
        return;
    }
    int gen = plan.order[static_cast<std::size_t>(pos)];
    for (int img = 0; img < g.order(); ++img) {
        images[static_cast<std::size_t>(gen)] = img;
        bool ok = true;
        for (const Word* r : plan.checks[static_cast<std::size_t>(pos)]) {
            if (eval_word(g, *r, images) != g.identity()) {
                ok = false;
                break;
            }
        }
        if (ok) search(p, g, plan, pos + 1, images, collect, out);
    }
}

int effective_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

HomEnumeration enumerate_homs(const Presentation& p, GroupPtr g, EnumMode mode, int threads) {
    if (!g) throw PreconditionError("null group");
    const FiniteGroup& grp = *g;
    bool collect = mode == EnumMode::kCollect;
    HomEnumeration result;

    if (p.generators == 0) {
        result.count = 1;
        if (collect) result.homs.push_back(GroupHom{g, {}});
        return result;
    }

    SearchPlan plan = make_plan(p);
    int nthreads = effective_threads(threads);

    if (nthreads <= 1 || p.generators < 1 || grp.order() < 2) {
        SubtreeResult sub;
        std::vector<int> images(static_cast<std::size_t>(p.generators), 0);
        search(p, grp, plan, 0, images, collect, sub);
        result.count = sub.count;
        if (collect) {
            for (auto& im : sub.images) result.homs.push_back(GroupHom{g, std::move(im)});
        }
        return result;
    }

    // Split on the first assigned generator's image; workers pull images from
    // a shared counter. Per-image results are merged in image order, so the
    // outcome matches the sequential run exactly.
    int first_gen = plan.order[0];
    std::vector<SubtreeResult> per_image(static_cast<std::size_t>(grp.order()));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int img = next.fetch_add(1);
            if (img >= grp.order()) return;
            std::vector<int> images(static_cast<std::size_t>(p.generators), 0);
            images[static_cast<std::size_t>(first_gen)] = img;
            bool ok = true;
            for (const Word* r : plan.checks[0]) {
                if (eval_word(grp, *r, images) != grp.identity()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                search(p, grp, plan, 1, images, collect,
                       per_image[static_cast<std::size_t>(img)]);
            }
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(nthreads, grp.order());
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& sub : per_image) {
        result.count += sub.count;
        if (collect) {
            for (auto& im : sub.images) result.homs.push_back(GroupHom{g, std::move(im)});
        }
    }
    return result;
}

Int dw_invariant(const SimplicialComplex& k, GroupPtr g, int threads) {
    auto shared = std::make_shared<SimplicialComplex>(k);
    Presentation p = present_pi1(shared, 0);
    return enumerate_homs(p, std::move(g), EnumMode::kCountOnly, threads).count;
}

YetterResult yetter_invariant(const SimplicialComplex& k, const FinAbelianGroup& h) {
    if (!h.is_finite()) throw UnsupportedError("Yetter target must be finite");
    if (!k.is_connected()) throw DisconnectedError("yetter_invariant requires a connected complex");
    YetterResult r;
    r.h2 = k.dimension() >= 2 ? homology(k, 2) : FinAbelianGroup();
    r.invariant = count_abelian_homs(r.h2, h);
    if (k.dimension() < 1) {
        r.verified_simply_connected = true;
        return r;
    }
    auto shared = std::make_shared<SimplicialComplex>(k);
    SimplyConnectedCheck check = check_simply_connected(present_pi1(shared, 0));
    r.verified_simply_connected = check.verified;
    if (!check.verified) r.warning = "unverified: " + check.reason;
    return r;
}

void validate_abelian_hom(const AbelianHom& h) {
    if (h.torsion_images.size() != h.source.factors().size() ||
        h.free_images.size() != static_cast<std::size_t>(h.source.free_rank())) {
        throw MalformedInputError("abelian hom image counts do not match the source group");
    }
    for (std::size_t i = 0; i < h.torsion_images.size(); ++i) {
        AbValue v = h.target.reduce(h.torsion_images[i]);
        if (!h.target.is_zero(h.target.scale(h.source.factors()[i], v))) {
            throw NoSolutionError("torsion generator of order " + h.source.factors()[i].str() +
                                  " maps to an element not killed by it");
        }
    }
    for (const AbValue& v : h.free_images) h.target.reduce(v);
}

}  // namespace statesum
