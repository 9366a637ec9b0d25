// Arc-diagram rendering of book embeddings.
#pragma once

#include <string>

#include "pagebook/book.hpp"
#include "pagebook/graph.hpp"

namespace pagebook {

// Deterministic SVG: spine on y = 0, pages 1 and 2 as arcs above it (solid
// and dashed), page 3 below (dotted), one labelled dot per vertex. Throws
// GraphError when the embedding does not match g.
std::string render_svg(const EmbeddedGraph& g, const BookEmbedding& b);

}  // namespace pagebook
