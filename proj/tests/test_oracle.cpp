#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pagebook/generator.hpp"
#include "pagebook/oracle.hpp"
#include "pagebook/verifier.hpp"

using namespace pagebook;

namespace {

// Page number by plain enumeration: every permutation, every assignment of
// up to `max_k` pages. Only usable for a handful of edges.
int brute_page_number(const EmbeddedGraph& g, int max_k) {
    const auto edges = g.edges();
    const size_t m = edges.size();
    if (m == 0) return 0;
    std::vector<int> order(static_cast<size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    int best = max_k + 1;
    do {
        std::vector<int> pos(order.size());
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> conflicts;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (edges_cross(pos[edges[i].u], pos[edges[i].v], pos[edges[j].u], pos[edges[j].v]))
                    conflicts.push_back({static_cast<int>(i), static_cast<int>(j)});
        for (int k = 1; k < best; ++k) {
            long total = 1;
            for (size_t i = 1; i < m; ++i) total *= k;  // first edge fixed to page 0
            bool found = false;
            for (long code = 0; code < total && !found; ++code) {
                std::vector<int> page(m, 0);
                long c = code;
                for (size_t i = 1; i < m; ++i) {
                    page[i] = static_cast<int>(c % k);
                    c /= k;
                }
                found = std::none_of(conflicts.begin(), conflicts.end(),
                                     [&](auto p) { return page[p.first] == page[p.second]; });
            }
            if (found) {
                best = k;
                break;
            }
        }
    } while (std::next_permutation(order.begin(), order.end()) && best > 1);
    return best;
}

EmbeddedGraph relabel(const EmbeddedGraph& g, const std::vector<int>& perm) {
    EmbeddedGraph h(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.rotation[v]) h.rotation[perm[v]].push_back(perm[u]);
    return h;
}

}  // namespace

TEST_CASE("fixed order: cycle in cyclic order needs one page") {
    auto r = min_pages_fixed_order({0, 1, 2, 3}, cycle_graph(4).edges());
    CHECK(r.pages == 1);
    CHECK(r.assignment.size() == 4);
}

TEST_CASE("fixed order: K4 needs two pages under every order") {
    const auto edges = canned("k4").edges();
    std::vector<int> order{0, 1, 2, 3};
    do {
        CHECK(min_pages_fixed_order(order, edges).pages == 2);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("fixed order: pairwise crossing matching needs one page per edge") {
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> order(2 * static_cast<size_t>(k));
        std::iota(order.begin(), order.end(), 0);
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i) edges.push_back({i, i + k});
        auto r = min_pages_fixed_order(order, edges);
        CHECK(r.pages == k);
        std::set<int> used;
        for (const auto& [e, p] : r.assignment) used.insert(p);
        CHECK(static_cast<int>(used.size()) == k);
    }
}

TEST_CASE("known page numbers") {
    CHECK(min_pages(canned("c6")).min_pages == 1);
    CHECK(min_pages(canned("triangle")).min_pages == 1);
    CHECK(min_pages(canned("k4")).min_pages == 2);
    CHECK(min_pages(canned("w5")).min_pages == 2);
}

TEST_CASE("octahedron needs two pages") {
    const auto g = canned("octahedron");
    const auto r = min_pages(g);
    CHECK(r.min_pages == 2);
    CHECK(check(g, r.witness).ok);
    CHECK(r.witness.page_count() == 2);
    CHECK(brute_page_number(g, 3) == 2);
}

TEST_CASE("oracle agrees with plain enumeration on small graphs") {
    std::vector<EmbeddedGraph> graphs{canned("triangle"), canned("k4"), canned("c4"), canned("w5"),
                                      canned("two-triangles")};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        GenSpec spec;
        spec.n = 6;
        spec.seed = seed;
        graphs.push_back(gen(spec));
    }
    for (const auto& g : graphs) {
        const auto r = min_pages(g);
        CHECK(r.min_pages == brute_page_number(g, 3));
        CHECK(check(g, r.witness, r.min_pages).ok);
    }
}

TEST_CASE("page number is invariant under relabelling") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        GenSpec spec;
        spec.n = 8;
        spec.seed = seed;
        const auto g = gen(spec);
        const int k = min_pages(g).min_pages;
        CHECK(k <= 3);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> perm(static_cast<size_t>(g.n()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto h = relabel(g, perm);
            const auto r = min_pages(h);
            CHECK(r.min_pages == k);
            CHECK(check(h, r.witness, k).ok);
        }
    }
}

TEST_CASE("instances above the limit are refused") {
    CHECK_THROWS_AS(min_pages(canned("icosahedron")), OracleError);
    CHECK_THROWS_AS(min_pages(canned("cube"), 7), OracleError);
    CHECK(min_pages(canned("cube"), 8).min_pages == 2);
}
