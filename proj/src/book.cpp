#include "pagebook/book.hpp"

#include <algorithm>
#include <sstream>

namespace pagebook {

int BookEmbedding::page_count() const {
    int p = 0;
    for (const auto& [e, page] : pages) p = std::max(p, page);
    return p;
}

std::vector<int> BookEmbedding::positions(int n) const {
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] >= 0 && order[i] < n) pos[order[i]] = static_cast<int>(i);
    return pos;
}

std::string write_embedding(const BookEmbedding& b) {
    std::ostringstream out;
    out << "order:";
    for (int v : b.order) out << ' ' << v;
    out << '\n';
    for (const auto& [e, p] : b.pages) out << e.u << ' ' << e.v << ' ' << p << '\n';
    return out.str();
}

BookEmbedding parse_embedding(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_order = false;
    BookEmbedding b;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::string line = raw.substr(first);
        if (!have_order) {
            if (line.rfind("order:", 0) != 0) throw GraphError("expected \"order:\" line", lineno);
            std::istringstream os(line.substr(6));
            std::string tok;
            while (os >> tok) {
                size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    throw GraphError("bad vertex token \"" + tok + "\"", lineno);
                }
                if (used != tok.size()) throw GraphError("bad vertex token \"" + tok + "\"", lineno);
                b.order.push_back(v);
            }
            have_order = true;
            continue;
        }
        std::istringstream es(line);
        long long u = 0, v = 0, p = 0;
        std::string extra;
        if (!(es >> u >> v >> p) || (es >> extra)) throw GraphError("expected \"u v p\"", lineno);
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (b.pages.count(e)) throw GraphError("edge listed twice", lineno);
        b.pages[e] = static_cast<int>(p);
    }
    if (!have_order) throw GraphError("missing \"order:\" line");
    return b;
}

std::vector<int> page_edge_counts(const BookEmbedding& b) {
    std::vector<int> counts(static_cast<size_t>(std::max(0, b.page_count())), 0);
    for (const auto& [e, p] : b.pages)
        if (p >= 1) ++counts[p - 1];
    return counts;
}

}  // namespace pagebook
