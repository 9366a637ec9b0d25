#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pagebook/generator.hpp"
#include "pagebook/graph.hpp"

using namespace pagebook;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_rotation_graph(text);
    } catch (const GraphError& e) {
        return e.what();
    }
    return "";
}

int error_line(const std::string& text) {
    try {
        parse_rotation_graph(text);
    } catch (const GraphError& e) {
        return e.line();
    }
    return -1;
}

// Face count by a separate walk over darts kept in a map, used to confirm
// Euler counts without trace_faces.
int count_faces_slow(const EmbeddedGraph& g) {
    std::set<std::pair<int, int>> unused;
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.rotation[v]) unused.insert({v, u});
    int faces = 0;
    while (!unused.empty()) {
        auto [a, b] = *unused.begin();
        ++faces;
        while (unused.erase({a, b})) {
            const auto& r = g.rotation[b];
            auto it = std::find(r.begin(), r.end(), a);
            int c = (it + 1 == r.end()) ? r.front() : *(it + 1);
            a = b;
            b = c;
        }
    }
    return faces;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Cube drawn as an outer square 0..3 around an inner square 4..7.
EmbeddedGraph drawn_cube() {
    std::vector<std::pair<double, double>> xy{{-2, -2}, {2, -2}, {2, 2}, {-2, 2},
                                              {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    return from_planar_coords(xy, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                                   {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

EmbeddedGraph path_graph(int n) {
    EmbeddedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) {
        g.rotation[i].push_back(i + 1);
        g.rotation[i + 1].push_back(i);
    }
    return g;
}

}  // namespace

TEST_CASE("parse keeps rotation lists in document order") {
    auto g = parse_rotation_graph("3 3\n0: 1 2\n1: 2 0\n2: 0 1\n");
    CHECK(g.n() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.rotation[1] == std::vector<int>{2, 0});
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse skips comments and blank lines") {
    auto g = parse_rotation_graph("# k4\n4 6\n\n0: 1 2 3\n1: 0 3 2\n# middle\n2: 0 1 3\n3: 0 2 1\n");
    CHECK(g.n() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    CHECK_NOTHROW(validate(g));
}

TEST_CASE("parse errors carry the offending line") {
    CHECK(error_of("3 3\n0: 1 1\n1: 0\n2:\n").find("duplicate edge") != std::string::npos);
    CHECK(error_line("3 3\n0: 1 1\n1: 0\n2:\n") == 2);
    CHECK(error_of("2 1\n0: 5\n1: 0\n").find("out of range") != std::string::npos);
    CHECK(error_of("3 2\n0: 1 2\n1: 0\n2:\n").find("asymmetric adjacency") != std::string::npos);
    CHECK(error_line("3 2\n0: 1 2\n1: 0\n2:\n") == 2);
    CHECK(error_of("2 1\n0: x\n1: 0\n").find("bad neighbour token") != std::string::npos);
    CHECK(error_of("2 1\n0: 1\n").find("expected 2 vertex lines") != std::string::npos);
    CHECK(error_of("2 5\n0: 1\n1: 0\n").find("header declares 5 edges") != std::string::npos);
    CHECK(error_of("").find("missing header") != std::string::npos);
    CHECK(error_of("x y\n").find("expected header") != std::string::npos);
    CHECK(error_line("# c\n2 1\n0: 1\n0: 1\n") == 4);
}

TEST_CASE("degree above five is rejected") {
    std::string text = "7 6\n0: 1 2 3 4 5 6\n";
    for (int v = 1; v <= 6; ++v) text += std::to_string(v) + ": 0\n";
    std::string err = error_of(text);
    CHECK(err.find("degree > 5") != std::string::npos);
    CHECK(error_line(text) == 2);
    ValidateOptions loose;
    loose.max_degree = 6;
    CHECK_NOTHROW(parse_rotation_graph(text, loose));
}

TEST_CASE("rotation of genus one is rejected as non-planar") {
    // K5 minus edge 3-4 with every rotation sorted ascending.
    EmbeddedGraph g(5);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            if (u != v && !(std::min(u, v) == 3 && std::max(u, v) == 4)) g.rotation[v].push_back(u);
    const int euler = g.n() - g.edge_count() + count_faces_slow(g);
    REQUIRE(euler != 2);
    CHECK_THROWS_WITH_AS(validate(g), "non-planar embedding", GraphError);
    CHECK(error_of(write_rotation_graph(g)) == "non-planar embedding");
}

TEST_CASE("faces of small graphs") {
    auto tri = trace_faces(cycle_graph(3));
    REQUIRE(tri.faces.size() == 2);
    CHECK(tri.faces[0].size() == 3);
    CHECK(tri.faces[1].size() == 3);

    auto path = trace_faces(path_graph(3));
    REQUIRE(path.faces.size() == 1);
    CHECK(path.faces[0].size() == 4);
}

TEST_CASE("cube faces match a hand enumeration") {
    const auto g = drawn_cube();
    const auto fs = trace_faces(g);
    std::set<std::set<int>> got;
    for (const auto& f : fs.faces) {
        CHECK(f.size() == 4);
        got.insert(as_set(f));
    }
    std::set<std::set<int>> want{{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5},
                                 {1, 2, 5, 6}, {2, 3, 6, 7}, {0, 3, 4, 7}};
    CHECK(got == want);
}

TEST_CASE("face darts keep the face on the right") {
    // Counterclockwise triangle: its interior face is walked 0->2->1.
    std::vector<std::pair<double, double>> xy{{0, 0}, {1, 0}, {0, 1}};
    auto g = from_planar_coords(xy, {{0, 1}, {1, 2}, {0, 2}});
    auto fs = trace_faces(g);
    bool inner = false, outer = false;
    for (const auto& f : fs.faces) {
        auto r = f;
        std::rotate(r.begin(), std::find(r.begin(), r.end(), 0), r.end());
        if (r == std::vector<int>{0, 2, 1}) inner = true;
        if (r == std::vector<int>{0, 1, 2}) outer = true;
    }
    CHECK(inner);
    CHECK(outer);
}

TEST_CASE("every dart lies on one face and Euler holds on the corpus") {
    for (int n : {10, 20, 50}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            GenSpec spec;
            spec.n = n;
            spec.seed = seed;
            const auto g = gen(spec);
            const auto fs = trace_faces(g);
            std::map<std::pair<int, int>, int> seen;
            size_t total = 0;
            for (const auto& f : fs.faces) {
                total += f.size();
                for (size_t i = 0; i < f.size(); ++i) ++seen[{f[i], f[(i + 1) % f.size()]}];
            }
            CHECK(total == 2 * static_cast<size_t>(g.edge_count()));
            for (const auto& [dart, count] : seen) CHECK(count == 1);
            CHECK(static_cast<int>(fs.faces.size()) == count_faces_slow(g));
        }
    }
}

TEST_CASE("outer face choice prefers short chordless faces") {
    auto oct = canned("octahedron");
    auto fs = trace_faces(oct);
    auto c = choose_outer_face(oct, fs);
    CHECK(c.chordless);
    CHECK(fs.faces[c.face_id].size() == 3);
    CHECK(fs.outer_face_id == c.face_id);

    auto k4 = canned("k4");
    auto k4c = choose_outer_face(k4, trace_faces(k4));
    CHECK(k4c.chordless);

    // W5: the rim is chordless too, but the triangles are shorter.
    auto w5 = canned("w5");
    auto wf = trace_faces(w5);
    auto wc = choose_outer_face(w5, wf);
    CHECK(wc.chordless);
    CHECK(wf.faces[wc.face_id].size() == 3);
    bool rim_chordless = false;
    for (const auto& f : wf.faces)
        if (f.size() == 5) rim_chordless = face_is_chordless(w5, f);
    CHECK(rim_chordless);
}

TEST_CASE("chorded faces are recognised") {
    // Square 0..3 with chord 0-2 drawn outside, so face 0 1 2 3 has a chord.
    EmbeddedGraph g(4);
    g.rotation = {{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}};
    REQUIRE_NOTHROW(validate(g));
    CHECK(face_is_chordless(g, {0, 1, 2}));
    CHECK_FALSE(face_is_chordless(g, {0, 1, 2, 3}));
    CHECK_FALSE(face_is_simple({0, 1, 0, 2}));
}

TEST_CASE("block decomposition") {
    auto two = biconnected_components(canned("two-triangles"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].edges.size() == 3);
    CHECK(two[1].edges.size() == 3);
    CHECK(two[1].parent == 0);
    CHECK(two[1].cut_vertex == 2);

    auto k4 = canned("k4");
    auto one = biconnected_components(k4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(one[0].edges == k4.edges());

    auto p4 = biconnected_components(path_graph(4));
    REQUIRE(p4.size() == 3);
    for (const auto& b : p4) CHECK(b.edges.size() == 1);
}

TEST_CASE("blocks partition the edges and keep planar rotations") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenSpec spec;
        spec.n = 40;
        spec.seed = seed;
        const auto g = gen(spec);
        const auto blocks = biconnected_components(g);
        std::map<Edge, int> owner;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].parent >= 0) CHECK(blocks[i].parent < static_cast<int>(i));
            for (const auto& e : blocks[i].edges) ++owner[e];
            Subgraph sub = induced_subgraph(g, blocks[i].vertices);
            CHECK(sub.graph.edge_count() == static_cast<int>(blocks[i].edges.size()));
            CHECK_NOTHROW(validate(sub.graph));
            const int euler = sub.graph.n() - sub.graph.edge_count() + count_faces_slow(sub.graph);
            CHECK(euler == 2);
        }
        CHECK(owner.size() == static_cast<size_t>(g.edge_count()));
        for (const auto& [e, c] : owner) CHECK(c == 1);
    }
}

TEST_CASE("bridges") {
    CHECK(find_bridges(path_graph(3)) == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(find_bridges(canned("two-triangles")).empty());
    CHECK(find_bridges(canned("cube")).empty());
}

TEST_CASE("contraction of bridgeless components") {
    auto empty = contract_bridgeless(canned("k4"), {});
    CHECK(empty.nodes.empty());
    CHECK(empty.forest_edges.empty());

    // Interior of K4 seen from face 0 1 2 is the single vertex 3.
    auto k4 = contract_bridgeless(canned("k4"), {3});
    REQUIRE(k4.nodes.size() == 1);
    CHECK(k4.nodes[0].role == BlockRole::anchor);

    // Two triangles joined by the bridge 2-3, all inside a big triangle.
    std::vector<std::pair<double, double>> xy{{-3, 0}, {-2, 1}, {-1, 0}, {1, 0}, {2, 1}, {3, 0},
                                              {0, 10}, {-10, -5}, {10, -5}};
    auto g = from_planar_coords(xy, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5},
                                     {6, 7}, {7, 8}, {6, 8}, {0, 7}, {5, 8}});
    auto tri = contract_bridgeless(g, {0, 1, 2});
    CHECK(tri.nodes.size() == 1);
    CHECK(tri.forest_edges.empty());
    auto both = contract_bridgeless(g, {0, 1, 2, 3, 4, 5});
    REQUIRE(both.nodes.size() == 2);
    CHECK(both.forest_edges.size() == 1);
    CHECK(both.bridges == std::vector<Edge>{{2, 3}});
    CHECK(both.nodes[0].role == BlockRole::anchor);
    CHECK(both.nodes[1].role == BlockRole::anchor);
    CHECK(forest_is_acyclic(both));
}

TEST_CASE("contraction yields a forest for every face interior on the corpus") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenSpec spec;
        spec.n = 30;
        spec.seed = seed;
        const auto g = gen(spec);
        const auto fs = trace_faces(g);
        for (const auto& f : fs.faces) {
            std::vector<char> on(static_cast<size_t>(g.n()), 0);
            for (int v : f) on[v] = 1;
            std::vector<int> interior;
            for (int v = 0; v < g.n(); ++v)
                if (!on[v]) interior.push_back(v);
            CHECK(forest_is_acyclic(contract_bridgeless(g, interior)));
        }
    }
}

TEST_CASE("graph text round trip") {
    for (const auto& name : canned_names()) {
        const auto g = canned(name);
        const auto back = parse_rotation_graph(write_rotation_graph(g));
        CHECK(back.rotation == g.rotation);
    }
    GenSpec spec;
    spec.n = 60;
    spec.seed = 3;
    const auto g = gen(spec);
    CHECK(parse_rotation_graph(write_rotation_graph(g)).rotation == g.rotation);
}

TEST_CASE("succ and pred walk the rotation") {
    auto g = canned("k4");
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.rotation[v]) {
            CHECK(g.pred(v, g.succ(v, u)) == u);
            CHECK(g.has_edge(u, v));
        }
    CHECK_THROWS_AS(g.succ(0, 0), GraphError);
}
