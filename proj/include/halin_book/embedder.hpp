#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "halin_book/book.hpp"
#include "halin_book/halin.hpp"

namespace halin_book {

/// Page count the constructive embedding achieves: 4 for cubic Halin graphs,
/// Δ otherwise.
std::size_t theorem_pages(std::size_t max_degree);

/// Matching book embedding of W_m (hub 0, rim 1..m-1) in Δ(W_m) pages for
/// m >= 5 and 4 pages for W_4 = K_4.
BookEmbedding embed_wheel(std::size_t m);

/// Which of the two cyclic arrangements of x, w', y the spine shows.
enum class Orientation {
  XThenY = 1,  // ..., x, ..., w', ..., y, ...
  YThenX = 2,  // ..., y, ..., w', ..., x, ...
};

/// Rotates the spine so that x, w', y (or y, w', x) read left to right. Page
/// contents are untouched.
std::pair<BookEmbedding, Orientation> normalize_for_expansion(const BookEmbedding& emb,
                                                              VertexId x, VertexId contracted,
                                                              VertexId y);

/// Reassigns the `movable` edges over the existing pages until no page has
/// a crossing or a shared vertex. Edges of `movable` that are on no page are
/// placed as well. Throws ConstructionFailure when no assignment exists.
BookEmbedding repair_pages(const BookEmbedding& emb, const std::vector<Edge>& movable);

/// Undoes one fan contraction on an embedding of the contracted graph.
/// rec.pages must say which pages carry w'u, w'x and w'y.
BookEmbedding expand_embedding(const BookEmbedding& contracted, const ExpansionRecord& rec,
                               std::size_t target_pages);

enum class ExpansionCase {
  Wheel,              // star base case
  Cubic,              // Δ(H) = 3, fan of two leaves
  MaxDegreeCenter,    // Δ(H') >= 4 and deg(w) = Δ(H)
  LowDegreeCenter,    // deg(w) < Δ(H)
  CubicToMaxDegree,   // Δ(H') = 3 and deg(w) = Δ(H) >= 4
};

/// One level of the recursion, innermost (the wheel) first.
struct EmbedStep {
  HalinGraph graph;
  BookEmbedding embedding;
  ExpansionCase kind;
  Orientation orientation = Orientation::XThenY;
  bool repaired = false;
};

struct EmbedTrace {
  std::vector<EmbedStep> steps;
};

/// Matching book embedding of h in theorem_pages(Δ(h)) pages, certified by the
/// validator before it is returned.
BookEmbedding embed_halin(const HalinGraph& h, EmbedTrace* trace = nullptr);

}  // namespace halin_book
