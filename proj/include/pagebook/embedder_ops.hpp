// Building blocks of the recursive embedder, exposed for testing.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pagebook/book.hpp"
#include "pagebook/embedder.hpp"
#include "pagebook/graph.hpp"

namespace pagebook {

// Doubly linked spine. Node ids below the graph's vertex count are vertices;
// larger ids are placeholders for block-vertices awaiting expansion.
class Spine {
public:
    int add_node();
    void ensure(int id);
    void push_back(int x);
    void insert_after(int at, int x);
    void insert_before(int at, int x);
    void remove(int x);
    bool linked(int x) const { return x >= 0 && x < static_cast<int>(linked_.size()) && linked_[x]; }
    int next(int x) const { return next_[x]; }
    int prev(int x) const { return prev_[x]; }
    int front() const { return head_; }
    int capacity() const { return static_cast<int>(prev_.size()); }
    std::vector<int> to_vector() const;

    // Placement relative to a frame whose left-to-right direction is
    // reversed on the real spine when `reversed` is set.
    void place_right(bool reversed, int at, int x) { reversed ? insert_before(at, x) : insert_after(at, x); }
    void place_left(bool reversed, int at, int x) { reversed ? insert_after(at, x) : insert_before(at, x); }

private:
    std::vector<int> prev_, next_;
    std::vector<char> linked_;
    int head_ = -1, tail_ = -1;
};

// Real page numbers playing the roles p1 (cycle path), p2 (forest, Case 4)
// and p3 (closing edge, chords, cycle-to-anchor edges) at one level.
struct Roles {
    int p1 = 1, p2 = 2, p3 = 3;
    // Roles inside a block boundary: its path edges go on the parent's p2
    // and its closing edge on the parent's p1.
    Roles child() const { return {p2, p3, p1}; }
    int page(int role) const { return role == 1 ? p1 : role == 2 ? p2 : p3; }
};

struct CycleContext {
    std::vector<int> cycle;               // v1..vk in spine order
    std::vector<std::vector<int>> inner;  // per cycle vertex: e1, e2, e3 (neighbours inside the cycle)
    std::vector<int> interior;            // vertices strictly inside, sorted
    Roles roles;
    bool reversed = false;
    bool mirrored = false;  // rotations read clockwise at this level
    int depth = 0;

    int closure_degree(size_t i) const { return 2 + static_cast<int>(inner[i].size()); }
    std::string describe() const;
};

// Builds the context of a simple cycle given counterclockwise (interior on
// the left when walking v1 -> v2). inner[i] lists the neighbours of cycle[i]
// inside the cycle in clockwise order, so e1 is the one nearest the
// predecessor.
CycleContext make_cycle_context(const EmbeddedGraph& g, const std::vector<int>& ccw_cycle);

struct MarkedEdge {
    int node = -1;         // forest node (an anchor)
    int cycle_index = -1;  // index of v_{l,a} in ctx.cycle
    int subscript = 0;     // 1..3
    int endpoint = -1;     // vertex of the anchor's block
};

// One marked edge per anchor: the edge to its leftmost cycle neighbour, the
// one with the largest subscript when there are several.
std::vector<MarkedEdge> mark_edges(const CycleContext& ctx, const BlockForest& forest);

struct Placement {
    int case_id = 0;           // 1..4, 0 for closure degree 2
    std::string sub;           // sub-case label, e.g. "3(ii)"
    std::vector<int> right;    // subscripts of anchors placed directly right, left to right
    std::vector<int> left;     // subscripts of anchors placed directly left, left to right
    std::array<int, 4> role{}; // role (2 or 3) of e_s at index s
};

// Placement directives for a cycle vertex classified by which of e1..e3 are
// marked (bit s-1 for e_s), its closure degree and whether it is v_k.
// Throws EmbedError for configurations outside the four cases.
Placement place_cycle_vertex(int marked_mask, int closure_degree, bool is_last);

// Anchored trees: each tree of ancillaries together with the anchors
// adjacent to it.
struct AnchoredTree {
    std::vector<int> anchors;      // forest node ids
    std::vector<int> ancillaries;  // forest node ids
};
std::vector<AnchoredTree> anchored_trees(const BlockForest& forest);

// Arc T1 -> T2 when an anchor of T1 lies strictly between two consecutive
// anchors of T2. Returns a topological order, ties by smallest anchor
// position. Throws EmbedError if the digraph has a cycle.
std::vector<int> order_anchored_trees(const std::vector<AnchoredTree>& trees,
                                      const std::function<long(int)>& anchor_position);

// Counterclockwise cyclic order of the bridges around each forest node.
struct ForestRotation {
    // per node: (neighbouring node, bridge) in counterclockwise order
    std::vector<std::vector<std::pair<int, Edge>>> around;
};
ForestRotation forest_rotation(const EmbeddedGraph& g, const BlockForest& forest);

// Depth-first order of an anchored tree from `root`, children taken
// counterclockwise (or clockwise when ccw is false) from the parent bridge.
// parent_bridge receives, for every non-root node, the bridge to its parent.
std::vector<int> anchored_tree_dfs(const AnchoredTree& tree, const ForestRotation& rot, int root, bool ccw,
                                   std::map<int, Edge>* parent_bridge = nullptr);

// Inserts the ancillaries of a DFS sequence: each run of ancillaries goes
// directly right of the anchor preceding it in the sequence.
void place_anchored_tree(Spine& spine, bool reversed, const std::vector<int>& dfs,
                         const std::vector<char>& is_anchor, const std::function<int(int)>& token_of);

enum class LayoutKind { anchor_default, anchor_blocked, anchor_double_blocked, ancillary };

struct Subcycle {
    std::vector<int> cycle;  // counterclockwise, v1..vk as laid out
    int parent = -1;         // parent subcycle in the tangency tree
    int shared = -1;         // vertex shared with the parent
};

struct BoundaryLayout {
    LayoutKind kind = LayoutKind::anchor_default;
    std::vector<int> walk;                 // w0 w1 ... wm, counterclockwise
    std::vector<int> root_order;           // root subcycle, left to right in the parent frame
    bool flips_frame = false;              // child frame reversed relative to the parent
    std::vector<Subcycle> subcycles;       // [0] is the root, the rest in BFS order
};

// Outer boundary of the block with vertex set `block` seen from the edge
// (w0, z), z outside the block, and the layout of its subcycles.
BoundaryLayout expand_block_vertex(const EmbeddedGraph& g, const std::vector<int>& block, int w0, int z,
                                   BlockRole kind);

struct Ip5Repair {
    bool applies = false;
    std::string sub_case;           // "1.1", "2.1", "2.2", "3.1", "3.2"
    std::vector<int> path;          // cycle indices of the separating path, starting at 0
    int j = -1;                     // cycle index where the path ends
    std::vector<int> c_left;        // w1..wj then the path back
    std::vector<int> c_right;       // wj..wm, w1
    std::vector<int> new_order;     // cycle after moving w1 directly right of wj
};

bool violates_ip5(const CycleContext& ctx);
// Separating path and rearranged cycle for a v1 that violates IP-5.
Ip5Repair ensure_ip5(const CycleContext& ctx);

struct Ip4Augmentation {
    bool applies = false;
    int proof_case = 0;             // 1..4, 0 for a marking pattern outside them
    int vm = -1;
    std::array<int, 3> b{{-1, -1, -1}};  // inner neighbours of vm, b[0] nearest v1
    EmbeddedGraph augmented;
    std::vector<int> outer_cycle;   // outer cycle of the augmented graph, v1..vk
    int original_n = 0;
};

// outer_cycle is counterclockwise. When every outer vertex has degree 5,
// picks v_k as the smallest vertex id and augments the graph so that a
// vertex of degree <= 4 becomes v_k.
Ip4Augmentation ensure_ip4(const EmbeddedGraph& g, const std::vector<int>& outer_cycle);

// Maps an embedding of the augmented graph back onto the original graph.
// The returned page map is a proposal; helper edges are dropped and edges
// rerouted through helpers take the pages the repair prescribes.
BookEmbedding contract_ip4(const Ip4Augmentation& aug, const BookEmbedding& augmented_book);

struct LayoutState {
    std::vector<int> order;
    std::map<Edge, int> pages;
};

// Moves (v, vr) from page p1 to p3; when `anchor` >= 0 the anchor is first
// moved directly right of vr. Throws EmbedError when (v, vr) is not on p1.
void relocate_to_p3(LayoutState& state, int v, int vr, int anchor, const Roles& roles = {});

struct PageSearchResult {
    bool ok = false;
    std::vector<int> pages;
    long conflicts = 0;  // same-page crossings among the proposals
    long changed = 0;
    std::uint64_t nodes = 0;
};

// Finds a crossing-free assignment into `k` pages for the given positions,
// trying the proposed page of every edge first. Exact per conflict
// component up to the node budget.
PageSearchResult complete_pages(const std::vector<int>& pos, const std::vector<Edge>& edges,
                                const std::vector<int>& proposal, int k, std::uint64_t budget);

}  // namespace pagebook
