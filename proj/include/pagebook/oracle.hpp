// Exact page numbers for small graphs by exhaustive search.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pagebook/book.hpp"
#include "pagebook/graph.hpp"

namespace pagebook {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FixedOrderPages {
    int pages = 0;
    std::map<Edge, int> assignment;  // pages 1..pages
};

// Chromatic number of the conflict graph of the edges under the given spine
// order (two edges conflict when their endpoints strictly interleave).
FixedOrderPages min_pages_fixed_order(const std::vector<int>& order, const std::vector<Edge>& edges);

struct OracleResult {
    int min_pages = 0;
    BookEmbedding witness;
    std::uint64_t explored = 0;  // search nodes visited
};

inline constexpr int kDefaultOracleLimit = 10;

// Minimum page number over all spine orders. Orders are enumerated with
// vertex 0 first and reflections skipped; partial orders are cut once the
// conflict graph of fully placed edges needs as many pages as the best
// order found so far. Throws OracleError when g.n() > limit_n.
OracleResult min_pages(const EmbeddedGraph& g, int limit_n = kDefaultOracleLimit);

}  // namespace pagebook
