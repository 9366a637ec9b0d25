// Seeded instance generation and canned instances.
//
// Randomness comes from std::mt19937_64 seeded with GenSpec::seed; bounded
// draws use `engine() % bound`, so corpora are identical across standard
// libraries.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pagebook/graph.hpp"

namespace pagebook {

class GenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// family: "random" (degree-capped triangulation), "grid" (rows = floor(sqrt
// n), cols = n / rows), "platonic" (by name, or by vertex count 4/6/8/12/20),
// "cycle" and "cycle-with-chords" (outerplanar).
struct GenSpec {
    std::string family = "random";
    int n = 0;
    std::uint64_t seed = 0;
    std::string name;  // platonic solid name
};

EmbeddedGraph gen(const GenSpec& spec);

// triangle, k4, cube, octahedron, icosahedron, dodecahedron, w5,
// two-triangles, ip5-trigger, ip4-trigger, c4, c6.
EmbeddedGraph canned(const std::string& name);
std::vector<std::string> canned_names();

EmbeddedGraph cycle_graph(int n);
EmbeddedGraph grid_graph(int rows, int cols);

// Rotation from straight-line coordinates: neighbours sorted by angle,
// counterclockwise, each list starting at its smallest neighbour id.
EmbeddedGraph from_planar_coords(const std::vector<std::pair<double, double>>& xy,
                                 const std::vector<Edge>& edges);

}  // namespace pagebook
