#include "pagebook/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace pagebook {

GraphError::GraphError(const std::string& msg, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
      line_(line) {}

int EmbeddedGraph::edge_count() const {
    size_t total = 0;
    for (const auto& r : rotation) total += r.size();
    return static_cast<int>(total / 2);
}

int EmbeddedGraph::max_degree() const {
    int d = 0;
    for (const auto& r : rotation) d = std::max(d, static_cast<int>(r.size()));
    return d;
}

int EmbeddedGraph::slot(int v, int u) const {
    const auto& r = rotation[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    return -1;
}

int EmbeddedGraph::succ(int v, int u) const {
    int s = slot(v, u);
    if (s < 0) throw GraphError("succ: " + std::to_string(u) + " is not a neighbour of " + std::to_string(v));
    const auto& r = rotation[v];
    return r[(static_cast<size_t>(s) + 1) % r.size()];
}

int EmbeddedGraph::pred(int v, int u) const {
    int s = slot(v, u);
    if (s < 0) throw GraphError("pred: " + std::to_string(u) + " is not a neighbour of " + std::to_string(v));
    const auto& r = rotation[v];
    return r[(static_cast<size_t>(s) + r.size() - 1) % r.size()];
}

std::vector<Edge> EmbeddedGraph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n(); ++v)
        for (int u : rotation[v])
            if (v < u) out.push_back({v, u});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_structure(const EmbeddedGraph& g, const ValidateOptions& opt,
                     const std::vector<int>* line_of = nullptr) {
    auto line = [&](int v) { return line_of ? (*line_of)[v] : 0; };
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
        const auto& r = g.rotation[v];
        std::vector<int> seen(r.begin(), r.end());
        for (int u : r) {
            if (u < 0 || u >= n)
                throw GraphError("neighbor index " + std::to_string(u) + " out of range at vertex " +
                                     std::to_string(v),
                                 line(v));
            if (u == v) throw GraphError("self loop at vertex " + std::to_string(v), line(v));
        }
        std::sort(seen.begin(), seen.end());
        auto dup = std::adjacent_find(seen.begin(), seen.end());
        if (dup != seen.end())
            throw GraphError("duplicate edge " + std::to_string(v) + "-" + std::to_string(*dup) +
                                 " in rotation list",
                             line(v));
        if (static_cast<int>(r.size()) > opt.max_degree)
            throw GraphError("vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(r.size()) + ": degree > " +
                                 std::to_string(opt.max_degree),
                             line(v));
    }
    for (int v = 0; v < n; ++v)
        for (int u : g.rotation[v])
            if (g.slot(u, v) < 0)
                throw GraphError("asymmetric adjacency: " + std::to_string(v) + " lists " +
                                     std::to_string(u) + " but not vice versa",
                                 line(v));
}

}  // namespace

int count_components(const EmbeddedGraph& g) {
    auto ids = component_ids(g);
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<int> component_ids(const EmbeddedGraph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()), -1);
    int next = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.rotation[v])
                if (comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

FaceSet trace_faces(const EmbeddedGraph& g) {
    const int n = g.n();
    std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
    // back[d] = slot of the reverse dart at the head of dart d.
    std::vector<int> back(static_cast<size_t>(offset[n]), -1);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            int u = g.rotation[v][i];
            int s = g.slot(u, v);
            if (s < 0) throw GraphError("asymmetric adjacency at " + std::to_string(v));
            back[offset[v] + i] = s;
        }
    std::vector<char> used(back.size(), 0);
    FaceSet fs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            if (used[offset[v] + i]) continue;
            std::vector<int> face;
            int cv = v, ci = i;
            while (!used[offset[cv] + ci]) {
                used[offset[cv] + ci] = 1;
                face.push_back(cv);
                int head = g.rotation[cv][ci];
                int s = back[offset[cv] + ci];
                int deg = g.degree(head);
                ci = (s + 1) % deg;
                cv = head;
            }
            if (cv != v || ci != i) throw GraphError("face tracing did not close");
            fs.faces.push_back(std::move(face));
        }
    int isolated = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) ++isolated;
    long long euler = static_cast<long long>(n) - g.edge_count() +
                      static_cast<long long>(fs.faces.size()) + isolated;
    if (euler != 2LL * count_components(g)) throw GraphError("embedding is not genus 0");
    fs.outer_face_id = choose_outer_face(g, fs).face_id;
    return fs;
}

void validate(const EmbeddedGraph& g, const ValidateOptions& opt) {
    check_structure(g, opt);
    if (opt.check_planar) {
        try {
            trace_faces(g);
        } catch (const GraphError&) {
            throw GraphError("non-planar embedding");
        }
    }
}

EmbeddedGraph parse_rotation_graph(const std::string& text, const ValidateOptions& opt) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    EmbeddedGraph g;
    std::vector<int> line_of;
    std::vector<char> seen;
    int rows = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::string line = raw.substr(first);
        if (!have_header) {
            std::istringstream hs(line);
            std::string extra;
            if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
                throw GraphError("expected header \"n m\"", lineno);
            g = EmbeddedGraph(n);
            line_of.assign(static_cast<size_t>(n), 0);
            seen.assign(static_cast<size_t>(n), 0);
            have_header = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw GraphError("expected \"i: neighbours\"", lineno);
        std::istringstream vs(line.substr(0, colon));
        int v = -1;
        std::string extra;
        if (!(vs >> v) || (vs >> extra)) throw GraphError("bad vertex index", lineno);
        if (v < 0 || v >= n) throw GraphError("vertex index " + std::to_string(v) + " out of range", lineno);
        if (seen[v]) throw GraphError("vertex " + std::to_string(v) + " listed twice", lineno);
        seen[v] = 1;
        line_of[v] = lineno;
        ++rows;
        std::istringstream ns(line.substr(colon + 1));
        std::string tok;
        while (ns >> tok) {
            size_t used = 0;
            int u = 0;
            try {
                u = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw GraphError("bad neighbour token \"" + tok + "\"", lineno);
            }
            if (used != tok.size()) throw GraphError("bad neighbour token \"" + tok + "\"", lineno);
            g.rotation[v].push_back(u);
        }
    }
    if (!have_header) throw GraphError("missing header \"n m\"");
    if (rows != n) throw GraphError("expected " + std::to_string(n) + " vertex lines, found " + std::to_string(rows));
    check_structure(g, opt, &line_of);
    if (g.edge_count() != m)
        throw GraphError("header declares " + std::to_string(m) + " edges but rotation lists give " +
                         std::to_string(g.edge_count()));
    if (opt.check_planar) {
        try {
            trace_faces(g);
        } catch (const GraphError&) {
            throw GraphError("non-planar embedding");
        }
    }
    return g;
}

std::string write_rotation_graph(const EmbeddedGraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.n(); ++v) {
        out << v << ':';
        for (int u : g.rotation[v]) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

bool face_is_simple(const std::vector<int>& face) {
    std::vector<int> s(face);
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool face_is_chordless(const EmbeddedGraph& g, const std::vector<int>& face) {
    if (!face_is_simple(face)) return false;
    const size_t k = face.size();
    if (k <= 3) return true;
    std::vector<std::pair<int, int>> pos;  // (vertex, index on the face)
    for (size_t i = 0; i < k; ++i) pos.push_back({face[i], static_cast<int>(i)});
    std::sort(pos.begin(), pos.end());
    for (size_t i = 0; i < k; ++i)
        for (int u : g.rotation[face[i]]) {
            auto it = std::lower_bound(pos.begin(), pos.end(), std::make_pair(u, -1));
            if (it == pos.end() || it->first != u) continue;
            size_t d = (static_cast<size_t>(it->second) + k - i) % k;
            if (d != 1 && d != k - 1) return false;
        }
    return true;
}

OuterFaceChoice choose_outer_face(const EmbeddedGraph& g, const FaceSet& faces) {
    std::vector<int> ids(faces.faces.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return faces.faces[a].size() < faces.faces[b].size();
    });
    for (int id : ids)
        if (face_is_chordless(g, faces.faces[id])) return {id, true};
    for (int id : ids)
        if (face_is_simple(faces.faces[id])) return {id, false};
    return {ids.empty() ? -1 : ids.front(), false};
}

std::vector<Block> biconnected_components(const EmbeddedGraph& g) {
    const int n = g.n();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<Block> all;
    std::vector<int> comp_root_blocks;  // index into all where a component starts
    int timer = 0;
    struct Frame {
        int v, parent, next;
    };
    std::vector<Edge> estack;
    // Blocks are emitted in post order; the block-cut tree is rebuilt below.
    std::vector<std::vector<int>> comp_blocks;
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0 || g.degree(s) == 0) continue;
        comp_blocks.emplace_back();
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < g.degree(f.v)) {
                int u = g.rotation[f.v][f.next++];
                if (u == f.parent) continue;
                if (disc[u] < 0) {
                    estack.push_back(make_edge(f.v, u));
                    disc[u] = low[u] = timer++;
                    st.push_back({u, f.v, 0});
                } else if (disc[u] < disc[f.v]) {
                    estack.push_back(make_edge(f.v, u));
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                int v = f.v, p = f.parent;
                st.pop_back();
                if (p < 0) continue;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    Block b;
                    Edge stop = make_edge(p, v);
                    while (true) {
                        Edge e = estack.back();
                        estack.pop_back();
                        b.edges.push_back(e);
                        if (e == stop) break;
                    }
                    for (auto& e : b.edges) {
                        b.vertices.push_back(e.u);
                        b.vertices.push_back(e.v);
                    }
                    std::sort(b.vertices.begin(), b.vertices.end());
                    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
                    std::sort(b.edges.begin(), b.edges.end());
                    comp_blocks.back().push_back(static_cast<int>(all.size()));
                    all.push_back(std::move(b));
                }
            }
        }
    }
    // Root each component's block-cut tree at the block holding the
    // component's smallest vertex (lowest block index on ties) and list
    // blocks in BFS order.
    std::vector<Block> out;
    std::vector<std::vector<int>> blocks_of(static_cast<size_t>(n));
    for (const auto& cb : comp_blocks) {
        for (int b : cb)
            for (int v : all[b].vertices) blocks_of[v].push_back(b);
        int root = cb.front();
        int best_v = n;
        for (int b : cb)
            if (all[b].vertices.front() < best_v) {
                best_v = all[b].vertices.front();
                root = b;
            }
        std::vector<int> new_index(all.size(), -1);
        std::queue<int> q;
        q.push(root);
        new_index[root] = static_cast<int>(out.size());
        out.push_back(all[root]);
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int v : all[b].vertices)
                for (int c : blocks_of[v]) {
                    if (new_index[c] >= 0) continue;
                    new_index[c] = static_cast<int>(out.size());
                    Block child = all[c];
                    child.parent = new_index[b];
                    child.cut_vertex = v;
                    out.push_back(std::move(child));
                    q.push(c);
                }
        }
        for (int b : cb)
            for (int v : all[b].vertices) blocks_of[v].clear();
    }
    return out;
}

Subgraph induced_subgraph(const EmbeddedGraph& g, const std::vector<int>& vertices) {
    Subgraph s;
    s.local_to_global = vertices;
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    s.graph = EmbeddedGraph(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int u : g.rotation[vertices[i]])
            if (local[u] >= 0) s.graph.rotation[i].push_back(local[u]);
    return s;
}

Subgraph edge_subgraph(const EmbeddedGraph& g, const std::vector<int>& vertices,
                       const std::vector<Edge>& edges) {
    Subgraph s;
    s.local_to_global = vertices;
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> sorted(edges);
    for (auto& e : sorted) e = make_edge(e.u, e.v);
    std::sort(sorted.begin(), sorted.end());
    s.graph = EmbeddedGraph(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int u : g.rotation[vertices[i]])
            if (local[u] >= 0 && std::binary_search(sorted.begin(), sorted.end(), make_edge(vertices[i], u)))
                s.graph.rotation[i].push_back(local[u]);
    return s;
}

std::vector<Edge> find_bridges(const EmbeddedGraph& g) {
    const int n = g.n();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<Edge> out;
    int timer = 0;
    struct Frame {
        int v, parent, next;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < g.degree(f.v)) {
                int u = g.rotation[f.v][f.next++];
                if (u == f.parent) continue;
                if (disc[u] < 0) {
                    disc[u] = low[u] = timer++;
                    st.push_back({u, f.v, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                int v = f.v, p = f.parent;
                st.pop_back();
                if (p < 0) continue;
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p]) out.push_back(make_edge(p, v));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BlockForest contract_bridgeless(const EmbeddedGraph& g, const std::vector<int>& interior) {
    BlockForest f;
    f.node_of.assign(static_cast<size_t>(g.n()), -1);
    if (interior.empty()) return f;
    std::vector<int> sorted(interior);
    std::sort(sorted.begin(), sorted.end());
    Subgraph h = induced_subgraph(g, sorted);
    auto local_bridges = find_bridges(h.graph);
    auto is_bridge = [&](int a, int b) {
        return std::binary_search(local_bridges.begin(), local_bridges.end(), make_edge(a, b));
    };
    const int k = h.graph.n();
    std::vector<int> comp(static_cast<size_t>(k), -1);
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(f.nodes.size());
        f.nodes.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            f.nodes[id].vertices.push_back(h.local_to_global[v]);
            for (int u : h.graph.rotation[v])
                if (comp[u] < 0 && !is_bridge(v, u)) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(f.nodes[id].vertices.begin(), f.nodes[id].vertices.end());
    }
    for (int v = 0; v < k; ++v) f.node_of[h.local_to_global[v]] = comp[v];
    for (const auto& e : local_bridges) {
        f.bridges.push_back(make_edge(h.local_to_global[e.u], h.local_to_global[e.v]));
        f.forest_edges.emplace_back(comp[e.u], comp[e.v]);
    }
    for (auto& node : f.nodes)
        for (int v : node.vertices)
            for (int u : g.rotation[v])
                if (f.node_of[u] < 0) node.role = BlockRole::anchor;
    return f;
}

bool forest_is_acyclic(const BlockForest& f) {
    std::vector<int> parent(f.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : f.forest_edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace pagebook
