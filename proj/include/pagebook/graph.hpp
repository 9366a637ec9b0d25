// Embedded planar graphs given by rotation systems, plus the structural
// decompositions the embedder needs.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pagebook {

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Raised for malformed documents and invalid rotation systems. line is the
// 1-based document line the problem was found on, or 0 when not applicable.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg, int line = 0);
    int line() const { return line_; }

private:
    int line_;
};

// rotation[v] lists the neighbours of v in counterclockwise order.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    explicit EmbeddedGraph(int n) : rotation(static_cast<size_t>(n)) {}

    int n() const { return static_cast<int>(rotation.size()); }
    int degree(int v) const { return static_cast<int>(rotation[v].size()); }
    int edge_count() const;
    int max_degree() const;

    // Index of u in rotation[v], or -1.
    int slot(int v, int u) const;
    bool has_edge(int u, int v) const { return slot(u, v) >= 0; }
    // Neighbour following / preceding u counterclockwise around v.
    int succ(int v, int u) const;
    int pred(int v, int u) const;

    // All edges, sorted by (min endpoint, max endpoint).
    std::vector<Edge> edges() const;

    std::vector<std::vector<int>> rotation;
};

struct ValidateOptions {
    int max_degree = 5;
    bool check_planar = true;
};

// Throws GraphError on self loops, duplicate neighbours, asymmetric
// adjacency, degree above the bound or a rotation that is not genus 0.
void validate(const EmbeddedGraph& g, const ValidateOptions& opt = {});

EmbeddedGraph parse_rotation_graph(const std::string& text, const ValidateOptions& opt = {});
std::string write_rotation_graph(const EmbeddedGraph& g);

// A face is the vertex sequence x0 x1 ... of its boundary walk, meaning the
// darts x0->x1, x1->x2, ..., x_last->x0. Darts are traced with
// next(u->v) = v->succ(v,u), so the face lies to the right of every dart
// and the unbounded face of a drawing is walked counterclockwise.
struct FaceSet {
    std::vector<std::vector<int>> faces;
    int outer_face_id = -1;  // choose_outer_face(g, *this)
};

FaceSet trace_faces(const EmbeddedGraph& g);

// Number of connected components, isolated vertices included.
int count_components(const EmbeddedGraph& g);
// Component id per vertex, ids assigned in order of smallest vertex.
std::vector<int> component_ids(const EmbeddedGraph& g);

bool face_is_simple(const std::vector<int>& face);
// True when the face is a simple cycle and no edge of g joins two of its
// vertices other than the boundary edges themselves.
bool face_is_chordless(const EmbeddedGraph& g, const std::vector<int>& face);

struct OuterFaceChoice {
    int face_id = -1;
    bool chordless = false;
};

// Scans faces by increasing length (ties by lowest id) and returns the first
// chordless one; if none exists returns the first simple face (or face 0)
// with chordless = false.
OuterFaceChoice choose_outer_face(const EmbeddedGraph& g, const FaceSet& faces);

struct Block {
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;    // sorted
    int parent = -1;            // parent block in the block-cut tree
    int cut_vertex = -1;        // vertex shared with the parent block
};

// Blocks of every component. Within a component the first block listed is
// the root of its block-cut tree and every other block appears after its
// parent.
std::vector<Block> biconnected_components(const EmbeddedGraph& g);

// Rotation of g restricted to the given vertices, relabelled 0..k-1 in the
// order given. local_to_global is the given vertex list.
struct Subgraph {
    EmbeddedGraph graph;
    std::vector<int> local_to_global;
};
Subgraph induced_subgraph(const EmbeddedGraph& g, const std::vector<int>& vertices);
// Rotation restricted to an explicit edge set (all endpoints kept, relabelled).
Subgraph edge_subgraph(const EmbeddedGraph& g, const std::vector<int>& vertices,
                       const std::vector<Edge>& edges);

std::vector<Edge> find_bridges(const EmbeddedGraph& g);

enum class BlockRole { anchor, ancillary };

struct BlockNode {
    std::vector<int> vertices;  // sorted global ids
    BlockRole role = BlockRole::ancillary;
};

// Contraction of the 2-edge-connected components of g[interior].
struct BlockForest {
    std::vector<BlockNode> nodes;
    // Bridges of g[interior]; forest_edges[i] joins the nodes of bridges[i].
    std::vector<Edge> bridges;
    std::vector<std::pair<int, int>> forest_edges;
    std::vector<int> node_of;  // size g.n(), -1 outside the interior
};

// A node is an anchor when one of its vertices has a neighbour in g outside
// the interior set.
BlockForest contract_bridgeless(const EmbeddedGraph& g, const std::vector<int>& interior);

bool forest_is_acyclic(const BlockForest& f);

}  // namespace pagebook
