#include "pagebook/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pagebook {

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::crossing: return "crossing";
        case ViolationKind::missing_edge: return "missing_edge";
        case ViolationKind::extra_edge: return "extra_edge";
        case ViolationKind::bad_page: return "bad_page";
        case ViolationKind::bad_order: return "bad_order";
    }
    return "unknown";
}

std::string Violation::describe() const {
    std::ostringstream out;
    out << to_string(kind) << ':';
    switch (kind) {
        case ViolationKind::crossing:
            out << " (" << a.u << ',' << a.v << ") x (" << b.u << ',' << b.v << ')';
            break;
        case ViolationKind::bad_order: out << " vertex " << a.u; break;
        default: out << " (" << a.u << ',' << a.v << ')'; break;
    }
    return out.str();
}

bool edges_cross(int pa, int pb, int pc, int pd) {
    if (pa > pb) std::swap(pa, pb);
    if (pc > pd) std::swap(pc, pd);
    if (pa > pc) {
        std::swap(pa, pc);
        std::swap(pb, pd);
    }
    return pa < pc && pc < pb && pb < pd;
}

VerifierReport check(const EmbeddedGraph& g, const BookEmbedding& b, int max_pages) {
    VerifierReport rep;
    const int n = g.n();
    std::vector<int> pos(static_cast<size_t>(n), -1);
    std::vector<char> listed(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < b.order.size(); ++i) {
        int v = b.order[i];
        if (v < 0 || v >= n || listed[v]) {
            rep.violations.push_back({ViolationKind::bad_order, {v, v}, {}});
            continue;
        }
        listed[v] = 1;
        pos[v] = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v)
        if (!listed[v]) rep.violations.push_back({ViolationKind::bad_order, {v, v}, {}});

    auto edges = g.edges();
    std::set<Edge> graph_edges(edges.begin(), edges.end());
    for (const auto& e : edges)
        if (!b.pages.count(e)) rep.violations.push_back({ViolationKind::missing_edge, e, {}});
    struct Placed {
        Edge e;
        int page;
    };
    std::vector<Placed> placed;
    for (const auto& [e, p] : b.pages) {
        if (!graph_edges.count(e)) {
            rep.violations.push_back({ViolationKind::extra_edge, e, {}});
            continue;
        }
        if (p < 1 || p > max_pages) {
            rep.violations.push_back({ViolationKind::bad_page, e, {}});
            continue;
        }
        if (pos[e.u] >= 0 && pos[e.v] >= 0) placed.push_back({e, p});
    }
    for (size_t i = 0; i < placed.size(); ++i)
        for (size_t j = i + 1; j < placed.size(); ++j) {
            if (placed[i].page != placed[j].page) continue;
            const Edge& x = placed[i].e;
            const Edge& y = placed[j].e;
            if (edges_cross(pos[x.u], pos[x.v], pos[y.u], pos[y.v]))
                rep.violations.push_back({ViolationKind::crossing, x, y});
        }
    rep.ok = rep.violations.empty();
    return rep;
}

std::vector<long long> crossing_count_per_page(const BookEmbedding& b, const EmbeddedGraph& g) {
    auto pos = b.positions(g.n());
    int pages = std::max(3, b.page_count());
    std::vector<long long> counts(static_cast<size_t>(pages), 0);
    std::vector<std::pair<Edge, int>> placed;
    for (const auto& [e, p] : b.pages)
        if (p >= 1 && e.u >= 0 && e.v >= 0 && e.u < g.n() && e.v < g.n() && pos[e.u] >= 0 && pos[e.v] >= 0)
            placed.emplace_back(e, p);
    for (size_t i = 0; i < placed.size(); ++i)
        for (size_t j = i + 1; j < placed.size(); ++j) {
            if (placed[i].second != placed[j].second) continue;
            const Edge& x = placed[i].first;
            const Edge& y = placed[j].first;
            if (edges_cross(pos[x.u], pos[x.v], pos[y.u], pos[y.v])) ++counts[placed[i].second - 1];
        }
    return counts;
}

}  // namespace pagebook
