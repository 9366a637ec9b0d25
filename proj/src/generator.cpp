#include "pagebook/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace pagebook {

namespace {

using Vec3 = std::array<double, 3>;

std::vector<int> rotate_to_min(std::vector<int> r) {
    auto it = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), it, r.end());
    return r;
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Convex polyhedron centred at the origin: edges join vertices at minimum
// distance; rotations are counterclockwise seen from outside.
EmbeddedGraph polyhedron(const std::vector<Vec3>& pts) {
    const int n = static_cast<int>(pts.size());
    double best = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best = std::min(best, std::sqrt(dot(sub(pts[i], pts[j]), sub(pts[i], pts[j]))));
    EmbeddedGraph g(n);
    for (int i = 0; i < n; ++i) {
        const Vec3& p = pts[i];
        Vec3 ref{1, 0, 0};
        if (std::fabs(p[0]) > 0.9 * std::sqrt(dot(p, p))) ref = {0, 1, 0};
        Vec3 e1 = cross(ref, p);
        Vec3 e2 = cross(p, e1);
        std::vector<std::pair<double, int>> nb;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Vec3 d = sub(pts[j], p);
            if (std::fabs(std::sqrt(dot(d, d)) - best) > 1e-6 * best) continue;
            nb.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), j);
        }
        std::sort(nb.begin(), nb.end());
        std::vector<int> r;
        for (auto& [a, j] : nb) r.push_back(j);
        g.rotation[i] = rotate_to_min(r);
    }
    return g;
}

EmbeddedGraph platonic(const std::string& name) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    if (name == "k4" || name == "tetrahedron") {
        pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    } else if (name == "octahedron") {
        pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    } else if (name == "cube") {
        for (int i = 0; i < 8; ++i) pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    } else if (name == "icosahedron") {
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0}) {
                pts.push_back({0, s1, s2 * phi});
                pts.push_back({s1, s2 * phi, 0});
                pts.push_back({s2 * phi, 0, s1});
            }
    } else if (name == "dodecahedron") {
        for (int i = 0; i < 8; ++i) pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0}) {
                pts.push_back({0, s1 / phi, s2 * phi});
                pts.push_back({s1 / phi, s2 * phi, 0});
                pts.push_back({s2 * phi, 0, s1 / phi});
            }
    } else {
        throw GenError("unknown platonic solid \"" + name + "\"");
    }
    return polyhedron(pts);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

void insert_after(std::vector<int>& r, int after, int x) {
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, x);
}

void erase_value(std::vector<int>& r, int x) { r.erase(std::find(r.begin(), r.end(), x)); }

// Triangulation by random insertion into inner faces, degree-reducing edge
// flips, then deletion of edges at the highest-degree vertices.
EmbeddedGraph random_graph(int n, std::uint64_t seed) {
    if (n < 3) throw GenError("random family needs n >= 3");
    std::mt19937_64 rng(seed);
    EmbeddedGraph g(n);
    g.rotation[0] = {1, 2};
    g.rotation[1] = {2, 0};
    g.rotation[2] = {0, 1};
    // Inner faces (a, b, c) with succ(b, a) = c.
    std::vector<std::array<int, 3>> faces{{0, 2, 1}};
    for (int x = 3; x < n; ++x) {
        size_t fi = draw(rng, faces.size());
        auto [a, b, c] = faces[fi];
        g.rotation[x] = {a, c, b};
        insert_after(g.rotation[b], a, x);
        insert_after(g.rotation[c], b, x);
        insert_after(g.rotation[a], c, x);
        faces[fi] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
    }
    // Flip (u,v) into (x,y) when that lowers the larger degree below 6.
    const int attempts = 40 * n;
    for (int t = 0; t < attempts; ++t) {
        if (g.max_degree() <= 5) break;
        int u = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
        if (g.degree(u) <= 5) continue;
        int v = g.rotation[u][draw(rng, static_cast<std::uint64_t>(g.degree(u)))];
        int x = g.succ(v, u);
        int y = g.succ(u, v);
        if (x == y || g.succ(x, v) != u || g.succ(y, u) != v) continue;
        if (g.has_edge(x, y)) continue;
        if (g.degree(x) >= 5 || g.degree(y) >= 5 || g.degree(v) <= 3) continue;
        erase_value(g.rotation[u], v);
        erase_value(g.rotation[v], u);
        insert_after(g.rotation[y], u, x);
        insert_after(g.rotation[x], v, y);
    }
    while (g.max_degree() > 5) {
        int v = 0;
        for (int i = 1; i < n; ++i)
            if (g.degree(i) > g.degree(v)) v = i;
        int u = -1;
        for (int w : g.rotation[v])
            if (u < 0 || g.degree(w) > g.degree(u) || (g.degree(w) == g.degree(u) && w < u)) u = w;
        erase_value(g.rotation[v], u);
        erase_value(g.rotation[u], v);
    }
    return g;
}

// Cycle 0..n-1 with random non-crossing chords; vertices sit on a circle so
// rotation[i] is its neighbour list sorted by (j - i) mod n.
EmbeddedGraph cycle_with_chords(int n, std::uint64_t seed) {
    if (n < 3) throw GenError("cycle families need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    std::vector<int> deg(static_cast<size_t>(n), 2);
    const int attempts = 3 * n;
    for (int t = 0; t < attempts && n > 3; ++t) {
        int a = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
        Edge e = make_edge(a, b);
        if (e.v - e.u < 2 || (e.u == 0 && e.v == n - 1)) continue;
        if (deg[e.u] >= 5 || deg[e.v] >= 5) continue;
        bool ok = true;
        for (const auto& f : edges) {
            if (f == e) {
                ok = false;
                break;
            }
            bool shared = f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
            if (shared) continue;
            bool in1 = e.u < f.u && f.u < e.v;
            bool in2 = e.u < f.v && f.v < e.v;
            if (in1 != in2) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        edges.push_back(e);
        ++deg[e.u];
        ++deg[e.v];
    }
    EmbeddedGraph g(n);
    for (const auto& e : edges) {
        g.rotation[e.u].push_back(e.v);
        g.rotation[e.v].push_back(e.u);
    }
    for (int i = 0; i < n; ++i)
        std::sort(g.rotation[i].begin(), g.rotation[i].end(), [&](int x, int y) {
            return (x - i + n) % n < (y - i + n) % n;
        });
    return g;
}

}  // namespace

EmbeddedGraph from_planar_coords(const std::vector<std::pair<double, double>>& xy,
                                 const std::vector<Edge>& edges) {
    const int n = static_cast<int>(xy.size());
    std::vector<std::vector<std::pair<double, int>>> nb(static_cast<size_t>(n));
    for (const auto& e : edges) {
        auto [x1, y1] = xy[e.u];
        auto [x2, y2] = xy[e.v];
        nb[e.u].emplace_back(std::atan2(y2 - y1, x2 - x1), e.v);
        nb[e.v].emplace_back(std::atan2(y1 - y2, x1 - x2), e.u);
    }
    EmbeddedGraph g(n);
    for (int v = 0; v < n; ++v) {
        std::sort(nb[v].begin(), nb[v].end());
        std::vector<int> r;
        for (auto& [a, u] : nb[v]) r.push_back(u);
        if (!r.empty()) r = rotate_to_min(r);
        g.rotation[v] = r;
    }
    return g;
}

EmbeddedGraph cycle_graph(int n) {
    if (n < 3) throw GenError("cycle families need n >= 3");
    EmbeddedGraph g(n);
    for (int i = 0; i < n; ++i) g.rotation[i] = {(i + 1) % n, (i + n - 1) % n};
    for (auto& r : g.rotation) r = rotate_to_min(r);
    return g;
}

EmbeddedGraph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw GenError("grid needs at least one row and column");
    std::vector<std::pair<double, double>> xy;
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            xy.emplace_back(c, r);
            int id = r * cols + c;
            if (c + 1 < cols) edges.push_back({id, id + 1});
            if (r + 1 < rows) edges.push_back({id, id + cols});
        }
    return from_planar_coords(xy, edges);
}

EmbeddedGraph gen(const GenSpec& spec) {
    const std::string& f = spec.family;
    if (f == "random") return random_graph(spec.n, spec.seed);
    if (f == "cycle") return cycle_graph(spec.n);
    if (f == "cycle-with-chords") return cycle_with_chords(spec.n, spec.seed);
    if (f == "grid") {
        if (spec.n < 1) throw GenError("grid family needs n >= 1");
        int rows = static_cast<int>(std::floor(std::sqrt(static_cast<double>(spec.n))));
        return grid_graph(rows, spec.n / rows);
    }
    if (f == "platonic") {
        if (!spec.name.empty()) return platonic(spec.name);
        switch (spec.n) {
            case 4: return platonic("k4");
            case 6: return platonic("octahedron");
            case 8: return platonic("cube");
            case 12: return platonic("icosahedron");
            case 20: return platonic("dodecahedron");
            default: throw GenError("no platonic solid with " + std::to_string(spec.n) + " vertices");
        }
    }
    throw GenError("unknown family \"" + f + "\"");
}

std::vector<std::string> canned_names() {
    return {"triangle", "k4", "cube", "octahedron", "icosahedron", "dodecahedron",
            "w5", "two-triangles", "ip5-trigger", "ip4-trigger", "c4", "c6"};
}

EmbeddedGraph canned(const std::string& name) {
    if (name == "triangle") return cycle_graph(3);
    if (name == "c4") return cycle_graph(4);
    if (name == "c6") return cycle_graph(6);
    if (name == "k4" || name == "cube" || name == "octahedron" || name == "icosahedron" ||
        name == "dodecahedron")
        return platonic(name);
    if (name == "ip4-trigger") return platonic("icosahedron");
    if (name == "w5") {
        // Hub 0 inside the rim 1..5.
        std::vector<std::pair<double, double>> xy{{0, 0}};
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            double a = 2.0 * M_PI * i / 5.0;
            xy.emplace_back(std::cos(a), std::sin(a));
            edges.push_back({0, i + 1});
            edges.push_back(make_edge(i + 1, (i + 1) % 5 + 1));
        }
        return from_planar_coords(xy, edges);
    }
    if (name == "two-triangles") {
        std::vector<std::pair<double, double>> xy{{-2, 0}, {-1, 1}, {0, 0}, {1, 1}, {2, 0}};
        return from_planar_coords(xy, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    }
    if (name == "ip5-trigger") {
        // Outer triangle 0,1,2 around a square 3,4,5,6 with chord 4-6 and an
        // inner vertex 7 in triangle 4,5,6. The square's boundary vertex after
        // its attachment vertex 3 has degree 4 and one chord inside the square.
        std::vector<std::pair<double, double>> xy{{0, 10}, {-10, -8}, {10, -8}, {-3, -3},
                                                  {3, -3}, {3, 3},    {-3, 3},  {1.5, 1.5}};
        std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6},
                                {4, 6}, {4, 7}, {5, 7}, {6, 7}, {1, 3}, {2, 5}, {0, 6}};
        return from_planar_coords(xy, edges);
    }
    throw GenError("unknown canned instance \"" + name + "\"");
}

}  // namespace pagebook
