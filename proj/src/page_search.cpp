#include <algorithm>
#include <numeric>

#include "pagebook/embedder_ops.hpp"

namespace pagebook {

namespace {

// DSATUR backtracking on one conflict component, preferring each edge's
// proposed page.
class ComponentColorer {
public:
    ComponentColorer(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes,
                     const std::vector<int>& proposal, int k, std::uint64_t budget)
        : adj_(adj), nodes_(nodes), proposal_(proposal), k_(k), budget_(budget) {}

    bool run(std::vector<int>& color) {
        color_ = &color;
        for (int v : nodes_) color[v] = -1;
        blocked_.assign(adj_.size(), std::vector<int>());
        for (int v : nodes_) blocked_[v].assign(static_cast<size_t>(k_), 0);
        return search(static_cast<int>(nodes_.size()));
    }
    std::uint64_t nodes = 0;

private:
    bool search(int remaining) {
        if (remaining == 0) return true;
        if (++nodes > budget_) return false;
        std::vector<int>& color = *color_;
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : nodes_) {
            if (color[v] >= 0) continue;
            int sat = 0;
            for (int c = 0; c < k_; ++c)
                if (blocked_[v][c]) ++sat;
            if (sat < best_sat) continue;
            int deg = 0;
            for (int u : adj_[v])
                if (color[u] < 0) ++deg;
            if (sat > best_sat || deg > best_deg) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_sat >= k_) return false;
        int first = proposal_[best] - 1;
        for (int t = 0; t < k_; ++t) {
            int c = t == 0 ? first : (t <= first ? t - 1 : t);
            if (c < 0 || c >= k_ || blocked_[best][c]) continue;
            color[best] = c;
            for (int u : adj_[best]) ++blocked_[u][c];
            if (search(remaining - 1)) return true;
            for (int u : adj_[best]) --blocked_[u][c];
            color[best] = -1;
            if (nodes > budget_) return false;
        }
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    const std::vector<int>& nodes_;
    const std::vector<int>& proposal_;
    int k_;
    std::uint64_t budget_;
    std::vector<int>* color_ = nullptr;
    std::vector<std::vector<int>> blocked_;
};

}  // namespace

PageSearchResult complete_pages(const std::vector<int>& pos, const std::vector<Edge>& edges,
                                const std::vector<int>& proposal, int k, std::uint64_t budget) {
    PageSearchResult res;
    const size_t m = edges.size();
    std::vector<int> lo(m), hi(m);
    for (size_t i = 0; i < m; ++i) {
        lo[i] = std::min(pos[edges[i].u], pos[edges[i].v]);
        hi[i] = std::max(pos[edges[i].u], pos[edges[i].v]);
    }
    std::vector<int> by_lo(m);
    std::iota(by_lo.begin(), by_lo.end(), 0);
    std::sort(by_lo.begin(), by_lo.end(), [&](int a, int b) { return lo[a] < lo[b]; });
    std::vector<std::vector<int>> adj(m);
    for (size_t x = 0; x < m; ++x) {
        int i = by_lo[x];
        for (size_t y = x + 1; y < m; ++y) {
            int j = by_lo[y];
            if (lo[j] >= hi[i]) break;
            if (lo[j] > lo[i] && hi[j] > hi[i]) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    std::vector<int> proposal_fixed(proposal);
    for (auto& p : proposal_fixed)
        if (p < 1 || p > k) p = 1;
    std::vector<char> bad(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (int j : adj[i])
            if (static_cast<int>(i) < j && proposal_fixed[i] == proposal_fixed[j]) {
                ++res.conflicts;
                bad[i] = bad[j] = 1;
            }
    std::vector<int> color(m);
    for (size_t i = 0; i < m; ++i) color[i] = proposal_fixed[i] - 1;
    if (res.conflicts > 0) {
        std::vector<int> comp(m, -1);
        for (size_t s = 0; s < m; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> nodes{static_cast<int>(s)};
            comp[s] = static_cast<int>(s);
            bool has_bad = bad[s];
            for (size_t h = 0; h < nodes.size(); ++h)
                for (int u : adj[nodes[h]])
                    if (comp[u] < 0) {
                        comp[u] = static_cast<int>(s);
                        nodes.push_back(u);
                        has_bad = has_bad || bad[u];
                    }
            if (!has_bad) continue;
            ComponentColorer cc(adj, nodes, proposal_fixed, k, budget);
            bool ok = cc.run(color);
            res.nodes += cc.nodes;
            if (!ok) return res;
        }
    }
    res.pages.resize(m);
    for (size_t i = 0; i < m; ++i) {
        res.pages[i] = color[i] + 1;
        if (res.pages[i] != proposal[i]) ++res.changed;
    }
    res.ok = true;
    return res;
}

}  // namespace pagebook
