#include "halin_book/book.hpp"

#include <algorithm>

namespace halin_book {

std::optional<std::size_t> BookEmbedding::page_of(const Edge& e) const {
  for (std::size_t p = 0; p < pages.size(); ++p)
    if (std::find(pages[p].begin(), pages[p].end(), e) != pages[p].end()) return p;
  return std::nullopt;
}

void BookEmbedding::normalize_pages() {
  for (auto& page : pages) std::sort(page.begin(), page.end());
}

BookEmbedding with_spine(const BookEmbedding& emb, CircularOrder spine) {
  return BookEmbedding{std::move(spine), emb.pages};
}

}  // namespace halin_book
