// Book embeddings: a spine order plus a page per edge.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pagebook/graph.hpp"

namespace pagebook {

struct BookEmbedding {
    std::vector<int> order;            // vertices from left to right
    std::map<Edge, int> pages;         // keyed by (min, max); pages are 1-based

    int page_count() const;            // largest page used, 0 when there are no edges
    std::vector<int> positions(int n) const;  // vertex -> spine index, -1 if absent
    friend bool operator==(const BookEmbedding&, const BookEmbedding&) = default;
};

// "order: i1 ... in" followed by one "u v p" line per edge, edges sorted.
std::string write_embedding(const BookEmbedding& b);
// Throws GraphError (with line numbers) on malformed input.
BookEmbedding parse_embedding(const std::string& text);

// Number of edges per page; index 0 is page 1. Sized to the largest page.
std::vector<int> page_edge_counts(const BookEmbedding& b);

}  // namespace pagebook
