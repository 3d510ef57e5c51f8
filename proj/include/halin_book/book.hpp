#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "halin_book/graph.hpp"

namespace halin_book {

/// A book embedding: circular spine order plus one edge list per page.
/// Nothing here enforces validity; see validate().
struct BookEmbedding {
  CircularOrder spine;
  std::vector<std::vector<Edge>> pages;

  std::size_t page_count() const noexcept { return pages.size(); }
  std::optional<std::size_t> page_of(const Edge& e) const;
  /// Sorts each page so equal embeddings compare equal.
  void normalize_pages();

  friend bool operator==(const BookEmbedding&, const BookEmbedding&) = default;
};

/// Same page assignment on a rotated or reflected spine.
BookEmbedding with_spine(const BookEmbedding& emb, CircularOrder spine);

}  // namespace halin_book
