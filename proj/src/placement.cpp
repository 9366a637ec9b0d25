#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <sstream>

#include "pagebook/embedder_ops.hpp"

namespace pagebook {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

// Neighbour after u around v restricted to vertices with in_set[] set.
int succ_in(const EmbeddedGraph& g, const std::vector<char>& in_set, int v, int u) {
    const auto& r = g.rotation[v];
    int s = g.slot(v, u);
    for (size_t t = 1; t <= r.size(); ++t) {
        int w = r[(static_cast<size_t>(s) + t) % r.size()];
        if (in_set[w]) return w;
    }
    return u;
}

// Boundary walk of the face of g[in_set] that contains the edge (w0, z)
// with z outside the set; starts w0 -> w1 and runs counterclockwise.
std::vector<int> outer_walk(const EmbeddedGraph& g, const std::vector<char>& in_set, int w0, int z) {
    int w1 = succ_in(g, in_set, w0, z);
    std::vector<int> walk{w0};
    int u = w0, v = w1;
    const size_t limit = 4 * g.rotation.size() * 5 + 8;
    while (true) {
        if (walk.size() > limit) throw EmbedError("boundary walk does not close at vertex " + std::to_string(w0));
        int w = succ_in(g, in_set, v, u);
        u = v;
        v = w;
        if (u == w0 && v == w1) break;
        walk.push_back(u);
    }
    return walk;
}

// Neighbours of c met counterclockwise strictly after `from` and before `to`.
std::vector<int> sector(const EmbeddedGraph& g, int c, int from, int to) {
    std::vector<int> out;
    const auto& r = g.rotation[c];
    int s = g.slot(c, from);
    for (size_t t = 1; t < r.size(); ++t) {
        int w = r[(static_cast<size_t>(s) + t) % r.size()];
        if (w == to) break;
        out.push_back(w);
    }
    return out;
}

}  // namespace

std::string CycleContext::describe() const {
    std::ostringstream out;
    out << "cycle=[" << join(cycle) << "] interior=[" << join(interior) << "] roles=(" << roles.p1 << ','
        << roles.p2 << ',' << roles.p3 << ") reversed=" << reversed << " depth=" << depth;
    return out.str();
}

CycleContext make_cycle_context(const EmbeddedGraph& g, const std::vector<int>& ccw_cycle) {
    CycleContext ctx;
    ctx.cycle = ccw_cycle;
    const size_t k = ccw_cycle.size();
    if (k < 3) throw EmbedError("cycle of length " + std::to_string(k) + " has no interior side");
    std::vector<char> on_cycle(static_cast<size_t>(g.n()), 0);
    for (int v : ccw_cycle) on_cycle[v] = 1;
    ctx.inner.resize(k);
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::vector<int> stack;
    for (size_t i = 0; i < k; ++i) {
        int v = ccw_cycle[i];
        int nx = ccw_cycle[(i + 1) % k];
        int pv = ccw_cycle[(i + k - 1) % k];
        if (!g.has_edge(v, nx)) throw EmbedError("cycle edge " + std::to_string(v) + "-" + std::to_string(nx) + " missing");
        ctx.inner[i] = sector(g, v, nx, pv);
        std::reverse(ctx.inner[i].begin(), ctx.inner[i].end());
        for (int u : ctx.inner[i])
            if (!on_cycle[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ctx.interior.push_back(v);
        for (int u : g.rotation[v])
            if (!on_cycle[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    std::sort(ctx.interior.begin(), ctx.interior.end());
    return ctx;
}

std::vector<MarkedEdge> mark_edges(const CycleContext& ctx, const BlockForest& forest) {
    std::vector<MarkedEdge> marks;
    std::vector<int> mark_of(forest.nodes.size(), -1);
    for (size_t i = 0; i < ctx.cycle.size(); ++i)
        for (size_t s = 0; s < ctx.inner[i].size(); ++s) {
            int u = ctx.inner[i][s];
            if (u < 0 || u >= static_cast<int>(forest.node_of.size())) continue;
            int node = forest.node_of[u];
            if (node < 0 || forest.nodes[node].role != BlockRole::anchor) continue;
            int& m = mark_of[node];
            if (m < 0) {
                m = static_cast<int>(marks.size());
                marks.push_back({node, static_cast<int>(i), static_cast<int>(s) + 1, u});
            } else if (marks[m].cycle_index == static_cast<int>(i)) {
                marks[m].subscript = static_cast<int>(s) + 1;
                marks[m].endpoint = u;
            }
        }
    for (size_t a = 0; a < forest.nodes.size(); ++a)
        if (forest.nodes[a].role == BlockRole::anchor && mark_of[a] < 0)
            throw EmbedError("anchor node " + std::to_string(a) + " has no neighbour on the cycle; " + ctx.describe());
    std::sort(marks.begin(), marks.end(), [](const MarkedEdge& x, const MarkedEdge& y) { return x.node < y.node; });
    return marks;
}

Placement place_cycle_vertex(int mask, int deg, bool is_last) {
    const int e = deg - 2;
    auto fail = [&]() {
        return EmbedError("unclassifiable cycle vertex: marks=" + std::to_string(mask) + " degree=" +
                          std::to_string(deg) + " last=" + std::to_string(is_last));
    };
    if (deg < 2 || deg > 5 || mask < 0 || (mask >> e) != 0) throw fail();
    Placement p;
    if (e == 0) return p;
    if (mask == 0) {
        p.case_id = 4;
        p.sub = "4";
        for (int s = 1; s <= e; ++s) p.role[s] = 2;
        return p;
    }
    for (int s = 1; s <= e; ++s) p.role[s] = 3;
    const int count = std::popcount(static_cast<unsigned>(mask));
    if (count == 3) {
        if (is_last) throw fail();
        p.case_id = 1;
        p.sub = "1";
        p.right = {1, 2, 3};
        return p;
    }
    if (count == 2) {
        p.case_id = 2;
        if (deg == 4) {
            p.sub = is_last ? "2(deg4,last)" : "2(deg4)";
            (is_last ? p.left : p.right) = {1, 2};
            return p;
        }
        if (is_last) throw fail();
        if (mask == 6) {
            p.sub = "2(i)";
            p.left = {2, 3};
        } else if (mask == 5) {
            p.sub = "2(ii)";
            p.right = {1};
            p.left = {3};
        } else {
            p.sub = "2(iii)";
            p.right = {1, 2};
        }
        return p;
    }
    p.case_id = 3;
    const int s = std::countr_zero(static_cast<unsigned>(mask)) + 1;
    if (deg == 3) {
        p.sub = is_last ? "3(deg3,last)" : "3(deg3)";
        (is_last ? p.left : p.right) = {1};
        return p;
    }
    if (deg == 4) {
        if (is_last) {
            p.left = {s};
            if (s == 1) {
                p.sub = "3(deg4,last,e1)";
                p.role[2] = 2;
            } else {
                p.sub = "3(deg4,last,e2)";
            }
        } else if (s == 1) {
            p.sub = "3(deg4,e1)";
            p.right = {1};
        } else {
            p.sub = "3(deg4,e2)";
            p.left = {2};
        }
        return p;
    }
    if (is_last) throw fail();
    if (s == 1) {
        p.sub = "3(i)";
        p.right = {1};
    } else if (s == 2) {
        p.sub = "3(ii)";
        p.left = {2};
        p.role[3] = 2;
    } else {
        p.sub = "3(iii)";
        p.left = {3};
    }
    return p;
}

std::vector<AnchoredTree> anchored_trees(const BlockForest& forest) {
    const size_t m = forest.nodes.size();
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : forest.forest_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp(m, -1);
    std::vector<AnchoredTree> trees;
    for (size_t s = 0; s < m; ++s) {
        if (comp[s] >= 0 || forest.nodes[s].role != BlockRole::ancillary) continue;
        AnchoredTree t;
        std::set<int> anchors;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = static_cast<int>(trees.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            t.ancillaries.push_back(x);
            for (int y : adj[x]) {
                if (forest.nodes[y].role == BlockRole::anchor) {
                    anchors.insert(y);
                } else if (comp[y] < 0) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
            }
        }
        std::sort(t.ancillaries.begin(), t.ancillaries.end());
        t.anchors.assign(anchors.begin(), anchors.end());
        trees.push_back(std::move(t));
    }
    return trees;
}

std::vector<int> order_anchored_trees(const std::vector<AnchoredTree>& trees,
                                      const std::function<long(int)>& anchor_position) {
    const size_t t = trees.size();
    std::vector<std::vector<long>> pos(t);
    for (size_t i = 0; i < t; ++i) {
        for (int a : trees[i].anchors) pos[i].push_back(anchor_position(a));
        std::sort(pos[i].begin(), pos[i].end());
    }
    std::vector<std::vector<int>> out(t);
    std::vector<int> indeg(t, 0);
    for (size_t a = 0; a < t; ++a)
        for (size_t b = 0; b < t; ++b) {
            if (a == b || pos[b].size() < 2) continue;
            bool arc = false;
            for (long p : pos[a]) {
                if (p <= pos[b].front() || p >= pos[b].back()) continue;
                if (std::binary_search(pos[b].begin(), pos[b].end(), p)) continue;
                arc = true;
                break;
            }
            if (arc) {
                out[a].push_back(static_cast<int>(b));
                ++indeg[b];
            }
        }
    auto key = [&](int i) { return std::make_pair(pos[i].empty() ? 0L : pos[i].front(), i); };
    std::priority_queue<std::pair<long, int>, std::vector<std::pair<long, int>>, std::greater<>> ready;
    for (size_t i = 0; i < t; ++i)
        if (indeg[i] == 0) ready.push(key(static_cast<int>(i)));
    std::vector<int> order;
    while (!ready.empty()) {
        int i = ready.top().second;
        ready.pop();
        order.push_back(i);
        for (int j : out[i])
            if (--indeg[j] == 0) ready.push(key(j));
    }
    if (order.size() != t) throw EmbedError("auxiliary digraph of anchored trees has a cycle");
    return order;
}

ForestRotation forest_rotation(const EmbeddedGraph& g, const BlockForest& forest) {
    ForestRotation fr;
    fr.around.resize(forest.nodes.size());
    std::vector<char> in_node(static_cast<size_t>(g.n()), 0);
    for (size_t id = 0; id < forest.nodes.size(); ++id) {
        const auto& node = forest.nodes[id];
        auto other = [&](int u) {
            int o = u < static_cast<int>(forest.node_of.size()) ? forest.node_of[u] : -1;
            return o >= 0 && o != static_cast<int>(id) ? o : -1;
        };
        if (node.vertices.size() == 1) {
            int v = node.vertices[0];
            for (int u : g.rotation[v])
                if (other(u) >= 0) fr.around[id].push_back({other(u), make_edge(v, u)});
            continue;
        }
        int x = -1, z = -1;
        for (int v : node.vertices) {
            for (int u : g.rotation[v])
                if (other(u) >= 0) {
                    x = v;
                    z = u;
                    break;
                }
            if (x >= 0) break;
        }
        if (x < 0) continue;
        for (int v : node.vertices) in_node[v] = 1;
        auto walk = outer_walk(g, in_node, x, z);
        const size_t L = walk.size();
        for (size_t i = 0; i < L; ++i) {
            int c = walk[i];
            int pv = walk[(i + L - 1) % L];
            int nx = walk[(i + 1) % L];
            for (int u : sector(g, c, pv, nx))
                if (other(u) >= 0) fr.around[id].push_back({other(u), make_edge(c, u)});
        }
        for (int v : node.vertices) in_node[v] = 0;
    }
    return fr;
}

std::vector<int> anchored_tree_dfs(const AnchoredTree& tree, const ForestRotation& rot, int root, bool ccw,
                                   std::map<int, Edge>* parent_bridge) {
    std::set<int> anchors(tree.anchors.begin(), tree.anchors.end());
    std::set<int> ancillaries(tree.ancillaries.begin(), tree.ancillaries.end());
    auto in_tree = [&](int x) { return anchors.count(x) || ancillaries.count(x); };
    std::vector<int> seq;
    struct Item {
        int node;
        int parent;
        Edge bridge;
    };
    std::vector<Item> stack{{root, -1, {}}};
    std::set<int> visited;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (visited.count(it.node)) continue;
        visited.insert(it.node);
        seq.push_back(it.node);
        if (parent_bridge && it.parent >= 0) (*parent_bridge)[it.node] = it.bridge;
        if (it.parent >= 0 && anchors.count(it.node)) continue;  // anchors other than the root are leaves
        const auto& around = rot.around[it.node];
        const size_t d = around.size();
        size_t start = 0;
        if (it.parent >= 0)
            for (size_t i = 0; i < d; ++i)
                if (around[i].second == it.bridge) start = i;
        std::vector<std::pair<int, Edge>> children;
        for (size_t t = 1; t <= d; ++t) {
            size_t i = ccw ? (start + t) % d : (start + d - t) % d;
            if (it.parent < 0) i = ccw ? (t - 1) : (d - t) % d;
            const auto& [nb, br] = around[i];
            if (nb == it.parent && br == it.bridge) continue;
            if (!in_tree(nb) || visited.count(nb)) continue;
            if (anchors.count(it.node) && anchors.count(nb)) continue;
            children.push_back(around[i]);
        }
        for (auto c = children.rbegin(); c != children.rend(); ++c) stack.push_back({c->first, it.node, c->second});
    }
    return seq;
}

void place_anchored_tree(Spine& spine, bool reversed, const std::vector<int>& dfs,
                         const std::vector<char>& is_anchor, const std::function<int(int)>& token_of) {
    int cursor = -1;
    for (int node : dfs) {
        int tok = token_of(node);
        if (is_anchor[node]) {
            cursor = tok;
            continue;
        }
        if (cursor < 0) throw EmbedError("anchored tree sequence does not start at an anchor");
        spine.place_right(reversed, cursor, tok);
        cursor = tok;
    }
}

BoundaryLayout expand_block_vertex(const EmbeddedGraph& g, const std::vector<int>& block, int w0, int z,
                                   BlockRole kind) {
    BoundaryLayout lay;
    std::vector<char> in_block(static_cast<size_t>(g.n()), 0);
    for (int v : block) in_block[v] = 1;
    if (!in_block[w0] || in_block[z] || !g.has_edge(w0, z))
        throw EmbedError("block expansion needs an edge leaving the block at w0=" + std::to_string(w0));
    lay.walk = outer_walk(g, in_block, w0, z);
    const auto& walk = lay.walk;
    const size_t L = walk.size();

    // Split the closed walk into simple subcycles.
    std::vector<std::vector<int>> cycles;
    std::vector<int> stack;
    std::vector<int> at(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i <= L; ++i) {
        int v = walk[i % L];
        if (at[v] >= 0) {
            std::vector<int> c(stack.begin() + at[v], stack.end());
            for (size_t t = static_cast<size_t>(at[v]) + 1; t < stack.size(); ++t) at[stack[t]] = -1;
            stack.resize(static_cast<size_t>(at[v]) + 1);
            cycles.push_back(std::move(c));
            continue;
        }
        at[v] = static_cast<int>(stack.size());
        stack.push_back(v);
    }
    for (auto& c : cycles)
        if (c.size() < 3) throw EmbedError("block boundary has a subcycle of length " + std::to_string(c.size()));
    int root = -1;
    for (size_t c = 0; c < cycles.size() && root < 0; ++c) {
        const auto& cy = cycles[c];
        for (size_t i = 0; i < cy.size(); ++i)
            if (cy[i] == w0 && cy[(i + 1) % cy.size()] == walk[1 % L]) root = static_cast<int>(c);
    }
    if (root < 0) throw EmbedError("block boundary: no subcycle holds the edge leaving w0=" + std::to_string(w0));

    // Root subcycle starting at w0.
    std::vector<int> r = cycles[root];
    std::rotate(r.begin(), std::find(r.begin(), r.end(), w0), r.end());
    const int w1 = r[1];
    const int wm = r.back();
    std::vector<int> child_cycle;
    if (kind == BlockRole::anchor) {
        auto ext = sector(g, w0, wm, w1);
        std::vector<int> outside;
        for (int u : ext)
            if (!in_block[u]) outside.push_back(u);
        size_t j = std::find(outside.begin(), outside.end(), z) - outside.begin();
        if (outside.size() <= 1 || j + 1 == outside.size()) {
            lay.kind = LayoutKind::anchor_default;
        } else if (j == 0) {
            lay.kind = LayoutKind::anchor_blocked;
        } else {
            lay.kind = LayoutKind::anchor_double_blocked;
        }
        if (lay.kind == LayoutKind::anchor_default) {
            child_cycle.assign(r.begin() + 1, r.end());
            child_cycle.push_back(w0);
            lay.root_order = child_cycle;
        } else {
            child_cycle = r;
            lay.root_order = r;
        }
    } else {
        lay.kind = LayoutKind::ancillary;
        child_cycle.assign(r.begin() + 1, r.end());
        child_cycle.push_back(w0);
        lay.root_order.assign(child_cycle.rbegin(), child_cycle.rend());
        lay.flips_frame = true;
    }
    lay.subcycles.push_back({child_cycle, -1, -1});

    // Tangency tree by BFS from the root subcycle; children end at the vertex
    // they share with their parent.
    std::vector<std::vector<int>> cycles_at(static_cast<size_t>(g.n()));
    for (size_t c = 0; c < cycles.size(); ++c)
        for (int v : cycles[c]) cycles_at[v].push_back(static_cast<int>(c));
    std::vector<int> layout_index(cycles.size(), -1);
    layout_index[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int x : lay.subcycles[layout_index[c]].cycle)
            for (int d : cycles_at[x]) {
                if (layout_index[d] >= 0) continue;
                std::vector<int> cy = cycles[d];
                auto it = std::find(cy.begin(), cy.end(), x);
                std::rotate(cy.begin(), it + 1, cy.end());
                layout_index[d] = static_cast<int>(lay.subcycles.size());
                lay.subcycles.push_back({cy, layout_index[c], x});
                q.push(d);
            }
    }
    return lay;
}

}  // namespace pagebook
