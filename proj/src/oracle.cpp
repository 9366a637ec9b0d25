#include "pagebook/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace pagebook {

namespace {

// Interleaving test written independently of the verifier: exactly one
// endpoint of y lies strictly inside x and the edges share no endpoint.
bool interleave(int x1, int x2, int y1, int y2) {
    if (x1 > x2) std::swap(x1, x2);
    if (x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2) return false;
    bool in1 = x1 < y1 && y1 < x2;
    bool in2 = x1 < y2 && y2 < x2;
    return in1 != in2;
}

// Exact k-colouring by DSATUR backtracking on a graph of at most 64 nodes
// restricted to the node set `active`.
class MaskColorer {
public:
    explicit MaskColorer(const std::vector<std::uint64_t>& adj) : adj_(adj) {}

    bool colorable(std::uint64_t active, int k, std::vector<int>* colors) {
        if (k < 0) return false;
        if (active == 0) {
            if (colors) colors->assign(adj_.size(), -1);
            return true;
        }
        if (k == 0) return false;
        active_ = active;
        k_ = k;
        classes_.assign(static_cast<size_t>(k), 0);
        color_.assign(adj_.size(), -1);
        bool ok = search(active);
        if (ok && colors) *colors = color_;
        return ok;
    }

    std::uint64_t nodes = 0;

private:
    bool search(std::uint64_t uncolored) {
        ++nodes;
        if (uncolored == 0) return true;
        int best = -1, best_sat = -1, best_deg = -1;
        for (std::uint64_t m = uncolored; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int sat = 0;
            for (int c = 0; c < k_; ++c)
                if (adj_[v] & classes_[c]) ++sat;
            int deg = std::popcount(adj_[v] & uncolored);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_sat >= k_) return false;
        std::uint64_t rest = uncolored & ~(std::uint64_t{1} << best);
        bool tried_empty = false;
        for (int c = 0; c < k_; ++c) {
            if (adj_[best] & classes_[c]) continue;
            if (classes_[c] == 0) {
                if (tried_empty) continue;
                tried_empty = true;
            }
            classes_[c] |= std::uint64_t{1} << best;
            color_[best] = c;
            if (search(rest)) return true;
            classes_[c] &= ~(std::uint64_t{1} << best);
            color_[best] = -1;
        }
        return false;
    }

    const std::vector<std::uint64_t>& adj_;
    std::uint64_t active_ = 0;
    int k_ = 0;
    std::vector<std::uint64_t> classes_;
    std::vector<int> color_;
};

// General exact colouring for FixedOrderPages (no 64 node limit).
class ListColorer {
public:
    explicit ListColorer(const std::vector<std::vector<int>>& adj)
        : adj_(adj), color_(adj.size(), -1), sat_count_(adj.size()) {}

    bool colorable(int k) {
        k_ = k;
        std::fill(color_.begin(), color_.end(), -1);
        for (auto& s : sat_count_) s.assign(static_cast<size_t>(k), 0);
        used_ = 0;
        return search(static_cast<int>(adj_.size()));
    }
    const std::vector<int>& colors() const { return color_; }

private:
    bool search(int remaining) {
        if (remaining == 0) return true;
        int best = -1, best_sat = -1, best_deg = -1;
        for (size_t v = 0; v < adj_.size(); ++v) {
            if (color_[v] >= 0) continue;
            int sat = 0;
            for (int c = 0; c < k_; ++c)
                if (sat_count_[v][c]) ++sat;
            int deg = 0;
            for (int u : adj_[v])
                if (color_[u] < 0) ++deg;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = static_cast<int>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_sat >= k_) return false;
        int limit = std::min(k_, used_ + 1);
        for (int c = 0; c < limit; ++c) {
            if (sat_count_[best][c]) continue;
            color_[best] = c;
            int saved_used = used_;
            used_ = std::max(used_, c + 1);
            for (int u : adj_[best]) ++sat_count_[u][c];
            if (search(remaining - 1)) return true;
            for (int u : adj_[best]) --sat_count_[u][c];
            used_ = saved_used;
            color_[best] = -1;
        }
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> color_;
    std::vector<std::vector<int>> sat_count_;
    int k_ = 0;
    int used_ = 0;
};

}  // namespace

FixedOrderPages min_pages_fixed_order(const std::vector<int>& order, const std::vector<Edge>& edges) {
    FixedOrderPages out;
    if (edges.empty()) return out;
    int max_v = 0;
    for (int v : order) max_v = std::max(max_v, v);
    for (const auto& e : edges) max_v = std::max({max_v, e.u, e.v});
    std::vector<int> pos(static_cast<size_t>(max_v) + 1, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (const auto& e : edges)
        if (pos[e.u] < 0 || pos[e.v] < 0) throw OracleError("edge endpoint missing from order");
    const size_t m = edges.size();
    std::vector<std::vector<int>> adj(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (interleave(pos[edges[i].u], pos[edges[i].v], pos[edges[j].u], pos[edges[j].v])) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
    ListColorer colorer(adj);
    for (int k = 1;; ++k)
        if (colorer.colorable(k)) {
            out.pages = k;
            for (size_t i = 0; i < m; ++i) out.assignment[make_edge(edges[i].u, edges[i].v)] = colorer.colors()[i] + 1;
            return out;
        }
}

OracleResult min_pages(const EmbeddedGraph& g, int limit_n) {
    const int n = g.n();
    if (n > limit_n)
        throw OracleError("instance too large: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit_n));
    OracleResult res;
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > 64) throw OracleError("instance too large: more than 64 edges");
    for (int v = 0; v < n; ++v) res.witness.order.push_back(v);
    if (m == 0) return res;

    // Edges become fully placed once their later endpoint is placed.
    std::vector<std::vector<int>> closes(static_cast<size_t>(n));
    std::vector<int> pos(static_cast<size_t>(n), -1);
    std::vector<std::uint64_t> adj(static_cast<size_t>(m), 0);
    MaskColorer colorer(adj);
    int best = m + 1;
    std::vector<int> best_order;
    std::vector<int> best_colors;
    std::vector<int> order;
    std::uint64_t placed_edges = 0;
    std::vector<char> used(static_cast<size_t>(n), 0);

    auto place = [&](int v) -> std::uint64_t {
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
        used[v] = 1;
        std::uint64_t added = 0;
        for (int i = 0; i < m; ++i) {
            const Edge& e = edges[i];
            if ((e.u != v && e.v != v) || pos[e.u] < 0 || pos[e.v] < 0) continue;
            added |= std::uint64_t{1} << i;
        }
        for (std::uint64_t a = added; a; a &= a - 1) {
            int i = std::countr_zero(a);
            for (std::uint64_t p = placed_edges; p; p &= p - 1) {
                int j = std::countr_zero(p);
                if (interleave(pos[edges[i].u], pos[edges[i].v], pos[edges[j].u], pos[edges[j].v])) {
                    adj[i] |= std::uint64_t{1} << j;
                    adj[j] |= std::uint64_t{1} << i;
                }
            }
            placed_edges |= std::uint64_t{1} << i;
        }
        return added;
    };
    auto unplace = [&](int v, std::uint64_t added) {
        placed_edges &= ~added;
        for (std::uint64_t a = added; a; a &= a - 1) {
            int i = std::countr_zero(a);
            adj[i] = 0;
        }
        for (int j = 0; j < m; ++j) adj[j] &= placed_edges;
        pos[v] = -1;
        used[v] = 0;
        order.pop_back();
    };

    auto search = [&](auto&& self) -> void {
        ++res.explored;
        if (best == 1) return;
        if (static_cast<int>(order.size()) == n) {
            if (n >= 3 && order[1] > order[n - 1]) return;  // reflection of another order
            std::vector<int> colors;
            if (!colorer.colorable(placed_edges, best - 1, &colors)) return;
            int k = best - 1;
            while (k > 1 && colorer.colorable(placed_edges, k - 1, &colors)) --k;
            colorer.colorable(placed_edges, k, &colors);
            best = k;
            best_order = order;
            best_colors = colors;
            return;
        }
        if (best <= m && !colorer.colorable(placed_edges, best - 1, nullptr)) return;
        for (int v = 1; v < n; ++v) {
            if (used[v]) continue;
            auto added = place(v);
            self(self);
            unplace(v, added);
        }
    };
    place(0);
    search(search);

    res.min_pages = best;
    res.witness.order = best_order;
    for (int i = 0; i < m; ++i) res.witness.pages[edges[i]] = best_colors[i] + 1;
    return res;
}

}  // namespace pagebook
