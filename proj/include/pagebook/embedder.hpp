// Three-page book embedding of planar graphs with maximum degree 5.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pagebook/book.hpp"
#include "pagebook/graph.hpp"

namespace pagebook {

// Internal invariant breach. what() names the violated property and carries
// a serialized description of the cycle being processed.
class EmbedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EmbedStats {
    // Cycle vertices handled by each placement case (index 1..4).
    std::array<long, 5> cases{};
    long levels = 0;
    int max_depth = 0;
    long ip4_repairs = 0;                 // outer-cycle augmentations
    std::array<long, 5> ip4_case{};       // by case, index 0 = pattern outside cases 1-4
    long ip5_repairs = 0;                 // separating-path rearrangements
    long ip5_skipped = 0;                 // violations where the path reached v_k
    long double_blocked = 0;                     // anchor boundaries blocked on both sides
    long blocked_anchors = 0;             // anchor boundaries with w0 leftmost
    long tangency_subcycles = 0;          // non-root subcycles of block boundaries
    long relocations = 0;                 // p1 -> p3 relocations
    long clamps = 0;                      // anchors kept inside the v1..vk window
    long ip4_inner_fallbacks = 0;         // inner cycles whose v_k has closure degree 5
    long dfs_mirrored = 0;                // anchored trees walked clockwise
    long dfs_unsorted = 0;                // anchored trees whose leaves are not in spine order
    long page_conflicts = 0;              // proposed same-page crossings before completion
    long page_changes = 0;                // edges whose page differs from the proposal
    std::uint64_t page_search_nodes = 0;
    int attempts = 0;                     // layout variants tried (1 = first succeeded)
    long rejected_attempts = 0;           // variants abandoned before a valid book
    // Structural invariant checks and failures.
    long aux_checks = 0, aux_failures = 0;
    long sandwich_checks = 0, sandwich_failures = 0;
    long window_checks = 0, window_failures = 0;
    long ip3_checks = 0, ip3_failures = 0;
    long forest_checks = 0, forest_failures = 0;

    void merge(const EmbedStats& o);
    void merge_checks(const EmbedStats& o);  // check counters only
    std::string summary() const;
};

struct EmbedResult {
    BookEmbedding book;
    EmbedStats stats;
};

// Validates g (degree <= 5, genus 0) and returns a verified embedding on at
// most three pages. Throws GraphError for invalid input, EmbedError if an
// internal invariant fails.
EmbedResult embed_book_with_stats(const EmbeddedGraph& g);
BookEmbedding embed_book(const EmbeddedGraph& g);

}  // namespace pagebook
