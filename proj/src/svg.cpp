#include "pagebook/svg.hpp"

#include <algorithm>
#include <sstream>

namespace pagebook {

namespace {

constexpr int kStep = 40;

const char* page_style(int page) {
    switch (page) {
        case 1: return "stroke=\"#1f77b4\"";
        case 2: return "stroke=\"#d62728\" stroke-dasharray=\"8 4\"";
        default: return "stroke=\"#2ca02c\" stroke-dasharray=\"2 3\"";
    }
}

}  // namespace

std::string render_svg(const EmbeddedGraph& g, const BookEmbedding& b) {
    const int n = g.n();
    if (static_cast<int>(b.order.size()) != n) throw GraphError("embedding orders " + std::to_string(b.order.size()) +
                                                                " vertices, graph has " + std::to_string(n));
    const auto pos = b.positions(n);
    for (int v = 0; v < n; ++v)
        if (pos[v] < 0) throw GraphError("vertex " + std::to_string(v) + " missing from the spine order");
    for (const auto& [e, p] : b.pages) {
        if (e.u < 0 || e.v >= n || !g.has_edge(e.u, e.v))
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
        if (p < 1 || p > 3) throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " on page " +
                                             std::to_string(p));
    }
    for (const Edge& e : g.edges())
        if (!b.pages.count(e))
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has no page");

    int up = 0, down = 0;
    for (const auto& [e, p] : b.pages) {
        int r = std::abs(pos[e.u] - pos[e.v]) * kStep / 2;
        (p == 3 ? down : up) = std::max(p == 3 ? down : up, r);
    }
    const int width = (n + 1) * kStep;
    const int top = up + kStep / 2, bottom = down + kStep / 2;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << top + bottom
        << "\" viewBox=\"0 " << -top << ' ' << width << ' ' << top + bottom << "\">\n";
    out << "<line x1=\"0\" y1=\"0\" x2=\"" << width << "\" y2=\"0\" stroke=\"#999999\"/>\n";
    for (const auto& [e, p] : b.pages) {
        int a = std::min(pos[e.u], pos[e.v]), c = std::max(pos[e.u], pos[e.v]);
        int x1 = (a + 1) * kStep, x2 = (c + 1) * kStep, r = (c - a) * kStep / 2;
        out << "<path d=\"M " << x1 << " 0 A " << r << ' ' << r << " 0 0 " << (p == 3 ? 0 : 1) << ' ' << x2
            << " 0\" fill=\"none\" " << page_style(p) << " data-edge=\"" << e.u << ' ' << e.v << "\" data-page=\""
            << p << "\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        int x = (i + 1) * kStep;
        out << "<circle cx=\"" << x << "\" cy=\"0\" r=\"4\" fill=\"#000000\"/>\n";
        out << "<text x=\"" << x + 5 << "\" y=\"-6\" font-size=\"11\" font-family=\"monospace\">" << b.order[i]
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pagebook
