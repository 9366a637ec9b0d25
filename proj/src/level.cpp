#include "level.hpp"

#include <algorithm>
#include <set>

namespace pagebook {

LevelEmbedder::LevelEmbedder(const EmbeddedGraph& g, EmbedStats& stats, LevelOptions opt)
    : g_(g), stats_(stats), opt_(opt) {
    mirror_ = g;
    for (auto& r : mirror_.rotation) std::reverse(r.begin(), r.end());
}

void LevelEmbedder::run(const std::vector<int>& cycle) {
    if (g_.n() > 0) spine_.ensure(g_.n() - 1);
    for (int v : cycle) spine_.push_back(v);
    work_.push_back(make_cycle_context(g_, cycle));
    while (!work_.empty()) {
        CycleContext ctx = std::move(work_.back());
        work_.pop_back();
        process(std::move(ctx));
    }
}

std::vector<int> LevelEmbedder::order() const {
    std::vector<int> out;
    for (int x : spine_.to_vector()) {
        if (x >= g_.n()) throw EmbedError("block-vertex placeholder " + std::to_string(x) + " left on the spine");
        out.push_back(x);
    }
    if (static_cast<int>(out.size()) != g_.n())
        throw EmbedError("spine holds " + std::to_string(out.size()) + " of " + std::to_string(g_.n()) + " vertices");
    return out;
}

void LevelEmbedder::propose(int u, int v, int page, const std::string& why, int depth) {
    proposals_[make_edge(u, v)] = page;
    origins_[make_edge(u, v)] = why + "@" + std::to_string(depth);
}

std::vector<long> LevelEmbedder::window_positions(const CycleContext& ctx) const {
    std::vector<long> pos(static_cast<size_t>(spine_.capacity()), -1);
    long p = 0;
    for (int x = spine_.front(); x >= 0; x = spine_.next(x)) pos[x] = ctx.reversed ? -p++ : p++;
    return pos;
}

void LevelEmbedder::process(CycleContext ctx) {
    const EmbeddedGraph& g = ctx.mirrored ? mirror_ : g_;
    ++stats_.levels;
    stats_.max_depth = std::max(stats_.max_depth, ctx.depth);
    const size_t k = ctx.cycle.size();
    const bool rev = ctx.reversed;
    for (size_t i = 0; i + 1 < k; ++i) propose(ctx.cycle[i], ctx.cycle[i + 1], ctx.roles.p1, "path", ctx.depth);
    propose(ctx.cycle[0], ctx.cycle[k - 1], ctx.roles.p3, "closing", ctx.depth);

    if (opt_.ip5 && violates_ip5(ctx)) {
        Ip5Repair rep = ensure_ip5(ctx);
        if (rep.j == static_cast<int>(k) - 1) {
            ++stats_.ip5_skipped;
        } else {
            const int w1 = ctx.cycle[0];
            spine_.remove(w1);
            spine_.place_right(rev, ctx.cycle[rep.j], w1);
            std::vector<std::vector<int>> inner;
            for (size_t i = 1; i <= static_cast<size_t>(rep.j); ++i) inner.push_back(ctx.inner[i]);
            inner.push_back(ctx.inner[0]);
            for (size_t i = rep.j + 1; i < k; ++i) inner.push_back(ctx.inner[i]);
            ctx.cycle = rep.new_order;
            ctx.inner = std::move(inner);
            ++stats_.ip5_repairs;
        }
    }
    records_.push_back({ctx.cycle, ctx.interior, rev});

    BlockForest forest = contract_bridgeless(g, ctx.interior);
    ++stats_.forest_checks;
    if (!forest_is_acyclic(forest)) ++stats_.forest_failures;
    const auto marks = mark_edges(ctx, forest);
    std::vector<int> mask(k, 0);
    std::vector<std::array<int, 4>> anchor_at(k, {-1, -1, -1, -1});
    for (const auto& m : marks) {
        mask[m.cycle_index] |= 1 << (m.subscript - 1);
        anchor_at[m.cycle_index][m.subscript] = m.node;
    }

    std::vector<int> token(forest.nodes.size(), -1);
    for (size_t a = 0; a < forest.nodes.size(); ++a)
        token[a] = forest.nodes[a].vertices.size() == 1 ? forest.nodes[a].vertices[0] : spine_.add_node();
    auto token_of = [&](int node) { return token[node]; };

    std::vector<int> index_of_cycle(static_cast<size_t>(g_.n()), -1);
    for (size_t i = 0; i < k; ++i) index_of_cycle[ctx.cycle[i]] = static_cast<int>(i);

    for (size_t i = 0; i < k; ++i) {
        const int v = ctx.cycle[i];
        const int deg = ctx.closure_degree(i);
        if (deg == 2) continue;
        const bool is_last = i + 1 == k;
        Placement pl;
        try {
            pl = place_cycle_vertex(mask[i], deg, is_last);
        } catch (const EmbedError& e) {
            if (!is_last) throw EmbedError(std::string(e.what()) + "; " + ctx.describe());
            ++stats_.ip4_inner_fallbacks;
            pl = place_cycle_vertex(mask[i], deg, false);
        }
        ++stats_.cases[pl.case_id];
        std::vector<int> right = pl.right, left = pl.left;
        if (i == 0 && opt_.clamp_v1 && !left.empty()) {
            right.insert(right.end(), left.begin(), left.end());
            left.clear();
            ++stats_.clamps;
        }
        if (is_last && !right.empty()) {
            left.insert(left.end(), right.begin(), right.end());
            right.clear();
            ++stats_.clamps;
        }
        int cur = v;
        for (int s : right) {
            int t = token_of(anchor_at[i][s]);
            spine_.place_right(rev, cur, t);
            cur = t;
        }
        cur = v;
        for (auto s = left.rbegin(); s != left.rend(); ++s) {
            int t = token_of(anchor_at[i][*s]);
            spine_.place_left(rev, cur, t);
            cur = t;
        }
        for (size_t s = 1; s <= ctx.inner[i].size(); ++s) {
            int u = ctx.inner[i][s - 1];
            int j = index_of_cycle[u];
            if (j >= 0 && j < static_cast<int>(i)) continue;
            if (j >= 0) propose(v, u, ctx.roles.p3, "chord", ctx.depth);
            else propose(v, u, ctx.roles.page(pl.role[s]), "case" + pl.sub + ((mask[i] >> (s - 1)) & 1 ? "m" : "u"), ctx.depth);
        }
    }

    // Anchored trees.
    std::vector<char> is_anchor(forest.nodes.size(), 0);
    for (size_t a = 0; a < forest.nodes.size(); ++a) is_anchor[a] = forest.nodes[a].role == BlockRole::anchor;
    const auto trees = anchored_trees(forest);
    std::map<int, Edge> parent_bridge;
    if (!trees.empty()) {
        auto pos = window_positions(ctx);
        ++stats_.aux_checks;
        std::vector<int> tree_order;
        try {
            tree_order = order_anchored_trees(trees, [&](int node) { return pos[token_of(node)]; });
        } catch (const EmbedError& e) {
            ++stats_.aux_failures;
            throw EmbedError(std::string(e.what()) + "; " + ctx.describe());
        }
        const ForestRotation frot = forest_rotation(g, forest);
        for (int t : tree_order) {
            const auto& tree = trees[t];
            if (tree.anchors.empty()) throw EmbedError("anchored tree without anchors; " + ctx.describe());
            pos = window_positions(ctx);
            int root = tree.anchors[0];
            for (int a : tree.anchors)
                if (pos[token_of(a)] < pos[token_of(root)]) root = a;
            auto sorted_anchors = [&](const std::vector<int>& seq) {
                long last = 0;
                bool first = true;
                for (int x : seq) {
                    if (!is_anchor[x]) continue;
                    long p = pos[token_of(x)];
                    if (!first && p < last) return false;
                    last = p;
                    first = false;
                }
                return true;
            };
            std::map<int, Edge> pb_a, pb_b;
            auto seq = anchored_tree_dfs(tree, frot, root, opt_.dfs_ccw_first, &pb_a);
            if (!sorted_anchors(seq)) {
                auto alt = anchored_tree_dfs(tree, frot, root, !opt_.dfs_ccw_first, &pb_b);
                if (sorted_anchors(alt)) {
                    seq = std::move(alt);
                    pb_a = std::move(pb_b);
                    ++stats_.dfs_mirrored;
                } else {
                    ++stats_.dfs_unsorted;
                }
            }
            if (seq.size() != tree.anchors.size() + tree.ancillaries.size())
                throw EmbedError("anchored tree walk missed nodes; " + ctx.describe());
            for (auto& [node, e] : pb_a)
                if (!is_anchor[node]) parent_bridge[node] = e;
            place_anchored_tree(spine_, rev, seq, is_anchor, token_of);
        }
        pos = window_positions(ctx);
        for (const auto& tree : trees)
            for (int x : tree.ancillaries) {
                ++stats_.sandwich_checks;
                bool below = false, above = false;
                for (int a : tree.anchors) {
                    below = below || pos[token_of(a)] < pos[token_of(x)];
                    above = above || pos[token_of(a)] > pos[token_of(x)];
                }
                if (!below || !above) ++stats_.sandwich_failures;
            }
    }
    for (const Edge& b : forest.bridges) propose(b.u, b.v, ctx.roles.p2, "bridge", ctx.depth);

    {
        auto pos = window_positions(ctx);
        const long lo = pos[ctx.cycle.front()], hi = pos[ctx.cycle.back()];
        for (size_t a = 0; a < forest.nodes.size(); ++a) {
            int t = token_of(static_cast<int>(a));
            if (!spine_.linked(t)) throw EmbedError("forest node " + std::to_string(a) + " was never placed; " + ctx.describe());
            ++stats_.window_checks;
            if (pos[t] <= lo || pos[t] >= hi) ++stats_.window_failures;
        }
    }

    // Expand multi-vertex block-vertices into their boundary cycles.
    for (size_t a = 0; a < forest.nodes.size(); ++a) {
        const auto& node = forest.nodes[a];
        if (node.vertices.size() < 2) continue;
        int w0 = -1, z = -1;
        if (is_anchor[a]) {
            for (const auto& m : marks)
                if (m.node == static_cast<int>(a)) {
                    w0 = m.endpoint;
                    z = ctx.cycle[m.cycle_index];
                }
        } else {
            auto it = parent_bridge.find(static_cast<int>(a));
            if (it == parent_bridge.end()) throw EmbedError("ancillary without parent bridge; " + ctx.describe());
            const Edge e = it->second;
            bool u_in = std::binary_search(node.vertices.begin(), node.vertices.end(), e.u);
            w0 = u_in ? e.u : e.v;
            z = u_in ? e.v : e.u;
        }
        // Anchor boundaries run against the parent's sense so that their
        // edges to the cycle nest; ancillaries flip the frame instead.
        const bool child_mirrored = is_anchor[a] ? !ctx.mirrored : ctx.mirrored;
        const EmbeddedGraph& cg = child_mirrored ? mirror_ : g_;
        BoundaryLayout lay = expand_block_vertex(cg, node.vertices, w0, z, node.role);
        if (lay.kind == LayoutKind::anchor_blocked) ++stats_.blocked_anchors;
        if (lay.kind == LayoutKind::anchor_double_blocked) ++stats_.double_blocked;
        if (opt_.swap_block_rule && lay.kind != LayoutKind::ancillary) {
            auto& c = lay.subcycles[0].cycle;
            if (lay.kind == LayoutKind::anchor_default) std::rotate(c.begin(), c.end() - 1, c.end());
            else std::rotate(c.begin(), c.begin() + 1, c.end());
            lay.root_order = c;
        }
        const int tok = token_of(static_cast<int>(a));
        for (int x : lay.root_order) spine_.place_left(rev, tok, x);
        spine_.remove(tok);
        const bool child_rev = rev != lay.flips_frame;
        for (size_t s = 1; s < lay.subcycles.size(); ++s) {
            const auto& sc = lay.subcycles[s];
            int cur = sc.cycle.back();
            for (size_t t = sc.cycle.size() - 1; t-- > 0;) {
                spine_.place_left(child_rev, cur, sc.cycle[t]);
                cur = sc.cycle[t];
            }
            ++stats_.tangency_subcycles;
        }
        for (const auto& sc : lay.subcycles) {
            CycleContext child = make_cycle_context(cg, sc.cycle);
            child.mirrored = child_mirrored;
            for (int v : child.interior)
                if (!std::binary_search(node.vertices.begin(), node.vertices.end(), v))
                    throw EmbedError("subcycle interior leaves its block; " + child.describe());
            child.roles = ctx.roles.child();
            child.reversed = child_rev;
            child.depth = ctx.depth + 1;
            work_.push_back(std::move(child));
        }
    }
}

}  // namespace pagebook
