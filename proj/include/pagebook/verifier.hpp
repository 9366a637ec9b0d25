// Independent checker for book embeddings.
#pragma once

#include <string>
#include <vector>

#include "pagebook/book.hpp"
#include "pagebook/graph.hpp"

namespace pagebook {

enum class ViolationKind { crossing, missing_edge, extra_edge, bad_page, bad_order };

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    // crossing: the two edges; missing/extra/bad_page: the edge; bad_order:
    // the offending vertex (b unused).
    Edge a{};
    Edge b{};
    std::string describe() const;
};

struct VerifierReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Strict interleaving L(a)<L(c)<L(b)<L(d) after normalising each edge.
bool edges_cross(int pa, int pb, int pc, int pd);

// Checks that order is a permutation of the vertices, that the page map
// covers exactly the edges of g with pages in 1..max_pages, and that no two
// edges on one page cross. Pairwise O(E^2).
VerifierReport check(const EmbeddedGraph& g, const BookEmbedding& b, int max_pages = 3);

// Same-page crossing pairs per page (index 0 is page 1), sized to max(3,
// largest page). Edges whose endpoints are not on the spine are skipped.
std::vector<long long> crossing_count_per_page(const BookEmbedding& b, const EmbeddedGraph& g);

}  // namespace pagebook
