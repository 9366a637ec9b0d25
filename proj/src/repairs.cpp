#include <algorithm>
#include <bit>

#include "pagebook/embedder_ops.hpp"

namespace pagebook {

namespace {

// (subscript, cycle index) of every chord at cycle[i], by subscript.
std::vector<std::pair<int, int>> chords_at(const CycleContext& ctx, size_t i) {
    std::vector<std::pair<int, int>> out;
    for (size_t s = 0; s < ctx.inner[i].size(); ++s) {
        auto it = std::find(ctx.cycle.begin(), ctx.cycle.end(), ctx.inner[i][s]);
        if (it != ctx.cycle.end()) out.push_back({static_cast<int>(s) + 1, static_cast<int>(it - ctx.cycle.begin())});
    }
    return out;
}

void replace_neighbour(EmbeddedGraph& g, int v, int from, int to) {
    for (int& u : g.rotation[v])
        if (u == from) u = to;
}

}  // namespace

bool violates_ip5(const CycleContext& ctx) {
    if (ctx.cycle.size() < 4) return false;
    const int deg = ctx.closure_degree(0);
    const size_t c = chords_at(ctx, 0).size();
    return (deg == 4 && c == 1) || (deg == 5 && (c == 1 || c == 2));
}

Ip5Repair ensure_ip5(const CycleContext& ctx) {
    Ip5Repair rep;
    if (!violates_ip5(ctx)) return rep;
    rep.applies = true;
    const int k = static_cast<int>(ctx.cycle.size());
    const int deg = ctx.closure_degree(0);
    auto chords = chords_at(ctx, 0);
    int start;
    if (chords.size() == 1) {
        start = chords[0].second;
        if (deg == 4) rep.sub_case = "1.1";
        else rep.sub_case = chords[0].first == 2 ? "2.1" : chords[0].first == 1 ? "2.2" : "2.3";
    } else {
        int lo = std::min(chords[0].second, chords[1].second);
        int hi = std::max(chords[0].second, chords[1].second);
        if (chords[0].first == 1 && chords[1].first == 3) {
            rep.sub_case = "3.1";
            start = lo;
        } else {
            rep.sub_case = chords[0].first == 1 ? "3.2" : "3.3";
            start = hi;
        }
    }
    rep.path = {0, start};
    int q = start;
    while (true) {
        int best = -1;
        for (auto [s, y] : chords_at(ctx, static_cast<size_t>(q)))
            if (y > q + 1) best = std::max(best, y);
        if (best < 0) break;
        rep.path.push_back(best);
        q = best;
    }
    rep.j = q;
    for (int i = 0; i <= q; ++i) rep.c_left.push_back(ctx.cycle[i]);
    for (size_t t = rep.path.size() - 1; t-- > 1;) rep.c_left.push_back(ctx.cycle[rep.path[t]]);
    for (int i = q; i < k; ++i) rep.c_right.push_back(ctx.cycle[i]);
    rep.c_right.push_back(ctx.cycle[0]);
    for (size_t t = 1; t + 1 < rep.path.size(); ++t) rep.c_right.push_back(ctx.cycle[rep.path[t]]);
    for (int i = 1; i <= q; ++i) rep.new_order.push_back(ctx.cycle[i]);
    rep.new_order.push_back(ctx.cycle[0]);
    for (int i = q + 1; i < k; ++i) rep.new_order.push_back(ctx.cycle[i]);
    return rep;
}

Ip4Augmentation ensure_ip4(const EmbeddedGraph& g, const std::vector<int>& outer_cycle) {
    Ip4Augmentation aug;
    aug.original_n = g.n();
    aug.augmented = g;
    aug.outer_cycle = outer_cycle;
    for (int v : outer_cycle)
        if (g.degree(v) <= 4) return aug;
    aug.applies = true;
    std::vector<int> cyc = outer_cycle;
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn + 1, cyc.end());
    const size_t k = cyc.size();
    const int vm = cyc[k - 1], v1 = cyc[0];
    aug.vm = vm;
    CycleContext ctx = make_cycle_context(g, cyc);
    if (ctx.inner[k - 1].size() != 3) throw EmbedError("outer vertex " + std::to_string(vm) + " lacks three inner edges");
    // b1 is the inner edge nearest v1, the one rerouted to the outermost helper.
    for (int s = 0; s < 3; ++s) aug.b[s] = ctx.inner[k - 1][2 - s];
    BlockForest forest = contract_bridgeless(g, ctx.interior);
    int mask = 0;
    for (const auto& m : mark_edges(ctx, forest))
        if (m.cycle_index == static_cast<int>(k - 1)) mask |= 1 << (3 - m.subscript);
    if (mask == 7) aug.proof_case = 1;
    else if (mask == 3 || mask == 5) aug.proof_case = 2;
    else if (mask == 1) aug.proof_case = 3;
    else if (mask == 0) aug.proof_case = 4;
    else aug.proof_case = 0;

    EmbeddedGraph& a = aug.augmented;
    const int n = g.n();
    const int b1 = aug.b[0], b2 = aug.b[1], b3 = aug.b[2];
    const int vprev = cyc[k - 2];
    if (aug.proof_case == 1 || aug.proof_case == 2) {
        const int h1 = n, h2 = n + 1, h3 = n + 2;
        a.rotation.resize(static_cast<size_t>(n) + 3);
        a.rotation[vm] = {h1, h2, b2, b3, vprev};
        a.rotation[h1] = {h2, vm};
        a.rotation[h2] = {h3, vm, h1};
        a.rotation[h3] = {v1, b1, h2};
        replace_neighbour(a, v1, vm, h3);
        replace_neighbour(a, b1, vm, h3);
        aug.outer_cycle = cyc;
        aug.outer_cycle.insert(aug.outer_cycle.end(), {h1, h2, h3});
    } else {
        const int h = n;
        a.rotation.resize(static_cast<size_t>(n) + 1);
        a.rotation[vm] = {v1, b1, h, vprev};
        a.rotation[h] = {vm, b2, b3};
        replace_neighbour(a, b2, vm, h);
        replace_neighbour(a, b3, vm, h);
        aug.outer_cycle = cyc;
    }
    try {
        validate(a);
    } catch (const GraphError& e) {
        throw EmbedError(std::string("outer-cycle augmentation broke the embedding: ") + e.what());
    }
    return aug;
}

BookEmbedding contract_ip4(const Ip4Augmentation& aug, const BookEmbedding& augmented_book) {
    if (!aug.applies) return augmented_book;
    const int n = aug.original_n;
    BookEmbedding out;
    for (int v : augmented_book.order)
        if (v < n) out.order.push_back(v);
    const int vm = aug.vm;
    for (const auto& [e, p] : augmented_book.pages) {
        int u = e.u, v = e.v;
        if (u >= n && v >= n) continue;
        if ((u == vm && v >= n) || (v == vm && u >= n)) continue;
        if (u >= n) u = vm;
        if (v >= n) v = vm;
        out.pages[make_edge(u, v)] = p;
    }
    auto set = [&](int b, int p) { out.pages[make_edge(vm, b)] = p; };
    if (aug.proof_case == 3) {
        set(aug.b[2], 2);
        set(aug.b[1], 3);
        set(aug.b[0], 3);
    } else if (aug.proof_case == 4) {
        set(aug.b[2], 2);
        set(aug.b[1], 2);
    }
    return out;
}

void relocate_to_p3(LayoutState& state, int v, int vr, int anchor, const Roles& roles) {
    auto it = state.pages.find(make_edge(v, vr));
    if (it == state.pages.end() || it->second != roles.p1)
        throw EmbedError("relocation: edge " + std::to_string(v) + "-" + std::to_string(vr) + " is not on p1");
    if (anchor >= 0) {
        auto a = std::find(state.order.begin(), state.order.end(), anchor);
        if (a == state.order.end()) throw EmbedError("relocation: anchor " + std::to_string(anchor) + " not on spine");
        state.order.erase(a);
        auto r = std::find(state.order.begin(), state.order.end(), vr);
        if (r == state.order.end()) throw EmbedError("relocation: vertex " + std::to_string(vr) + " not on spine");
        state.order.insert(r + 1, anchor);
    }
    it->second = roles.p3;
}

}  // namespace pagebook
