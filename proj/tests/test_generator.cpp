#include <doctest.h>

#include <algorithm>

#include "pagebook/embedder_ops.hpp"
#include "pagebook/generator.hpp"
#include "pagebook/graph.hpp"

using namespace pagebook;

namespace {

std::vector<int> degree_histogram(const EmbeddedGraph& g) {
    std::vector<int> h(6, 0);
    for (int v = 0; v < g.n(); ++v) ++h[g.degree(v)];
    return h;
}

GenSpec random_spec(int n, std::uint64_t seed) {
    GenSpec s;
    s.n = n;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("platonic solids") {
    auto ico = canned("icosahedron");
    CHECK(ico.n() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < ico.n(); ++v) CHECK(ico.degree(v) == 5);
    CHECK_NOTHROW(validate(ico));

    GenSpec by_name;
    by_name.family = "platonic";
    by_name.name = "icosahedron";
    CHECK(gen(by_name).rotation == ico.rotation);

    struct Solid {
        int n, m, deg;
    };
    for (auto [n, m, deg] : {Solid{4, 6, 3}, Solid{6, 12, 4}, Solid{8, 12, 3}, Solid{12, 30, 5}, Solid{20, 30, 3}}) {
        GenSpec s;
        s.family = "platonic";
        s.n = n;
        auto g = gen(s);
        CHECK(g.n() == n);
        CHECK(g.edge_count() == m);
        CHECK(g.max_degree() == deg);
        CHECK(trace_faces(g).faces.size() == static_cast<size_t>(2 - n + m));
    }
}

TEST_CASE("grid family") {
    GenSpec s;
    s.family = "grid";
    s.n = 9;
    auto g = gen(s);
    CHECK(g.n() == 9);
    CHECK(g.edge_count() == 12);
    CHECK(g.max_degree() == 4);
    CHECK(biconnected_components(g).size() == 1);
    CHECK_NOTHROW(validate(g));
}

TEST_CASE("cycle families") {
    GenSpec s;
    s.family = "cycle";
    s.n = 7;
    auto c = gen(s);
    CHECK(c.edge_count() == 7);
    CHECK(c.max_degree() == 2);

    s.family = "cycle-with-chords";
    s.n = 12;
    s.seed = 5;
    auto g = gen(s);
    CHECK(g.n() == 12);
    CHECK(g.edge_count() > 12);
    CHECK(g.max_degree() <= 5);
    CHECK_NOTHROW(validate(g));

    s.n = 2;
    CHECK_THROWS_AS(gen(s), GenError);
    s.family = "cycle";
    CHECK_THROWS_AS(gen(s), GenError);
}

TEST_CASE("random n=50 seed=7 has a fixed degree histogram") {
    auto g = gen(random_spec(50, 7));
    CHECK_NOTHROW(validate(g));
    CHECK(g.n() == 50);
    CHECK(g.edge_count() == 98);
    CHECK(degree_histogram(g) == std::vector<int>{0, 0, 0, 14, 26, 10});
}

TEST_CASE("random graphs are valid, degree-capped and reproducible") {
    for (int n : {5, 10, 20, 50, 100}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto a = gen(random_spec(n, seed));
            auto b = gen(random_spec(n, seed));
            CHECK(a.rotation == b.rotation);
            CHECK(a.n() == n);
            CHECK(a.max_degree() <= 5);
            CHECK_NOTHROW(validate(a));
        }
    }
    CHECK(gen(random_spec(30, 1)).rotation != gen(random_spec(30, 2)).rotation);
}

TEST_CASE("random family produces blocks joined at cut vertices") {
    int multi_block = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        if (biconnected_components(gen(random_spec(50, seed))).size() > 1) ++multi_block;
    CHECK(multi_block > 0);
}

TEST_CASE("canned instances") {
    for (const auto& name : canned_names()) {
        auto g = canned(name);
        CHECK_NOTHROW(validate(g));
        CHECK(g.max_degree() <= 5);
    }
    CHECK(canned("k4").n() == 4);
    CHECK(canned("ip4-trigger").rotation == canned("icosahedron").rotation);
    CHECK(biconnected_components(canned("two-triangles")).size() == 2);
    CHECK_THROWS_AS(canned("k5"), GenError);

    GenSpec bad;
    bad.family = "nope";
    CHECK_THROWS_AS(gen(bad), GenError);
}

TEST_CASE("ip5-trigger has a degree-4 cycle vertex with one chord") {
    auto g = canned("ip5-trigger");
    // Inner square 3 4 5 6 counterclockwise, read from v1 = 4.
    auto ctx = make_cycle_context(g, {4, 5, 6, 3});
    CHECK(ctx.closure_degree(0) == 4);
    int chords = 0;
    for (int u : ctx.inner[0])
        if (std::find(ctx.cycle.begin(), ctx.cycle.end(), u) != ctx.cycle.end()) ++chords;
    CHECK(chords == 1);
    CHECK(violates_ip5(ctx));
}

TEST_CASE("planar coordinates give counterclockwise rotations") {
    std::vector<std::pair<double, double>> xy{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto g = from_planar_coords(xy, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(g.rotation[0] == std::vector<int>{1, 2, 3, 4});
}
