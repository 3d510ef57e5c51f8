#pragma once

#include <string>

#include "halin_book/book.hpp"
#include "halin_book/graph.hpp"
#include "halin_book/io.hpp"

namespace halin_book {

/// Arc diagram: vertices on a horizontal line in spine order, one colour per
/// page, each edge a semicircle above the line, and a page legend.
std::string render_svg(const Graph& g, const BookEmbedding& emb, const Labels& labels);

/// Undirected DOT graph; every edge carries page=<k> and a page colour.
std::string render_dot(const Graph& g, const BookEmbedding& emb, const Labels& labels);

}  // namespace halin_book
