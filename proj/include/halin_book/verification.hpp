#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "halin_book/book.hpp"
#include "halin_book/graph.hpp"

namespace halin_book {

struct Crossing {
  std::size_t page;
  Edge first;
  Edge second;
};

struct MatchingViolation {
  std::size_t page;
  VertexId vertex;
  std::size_t incident_edges;
};

/// Every reason an embedding fails to be a matching book embedding.
struct ValidationReport {
  std::vector<Crossing> crossings;
  std::vector<MatchingViolation> matching_violations;
  /// Graph edges on no page, on several pages, or page edges not in the graph.
  std::vector<Edge> missing_or_duplicate_edges;

  bool clean() const noexcept {
    return crossings.empty() && matching_violations.empty() && missing_or_duplicate_edges.empty();
  }
};

/// Exhaustive check of `emb` against `g`. Throws ContractViolation when the
/// spine is not a permutation of g's vertices.
ValidationReport validate(const Graph& g, const BookEmbedding& emb);

/// Graph on the edges of `g`: two edges conflict when they share a vertex or
/// cross on `spine`. Proper colourings are exactly the page assignments.
class ConflictGraph {
public:
  ConflictGraph(const Graph& g, const CircularOrder& spine);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Edge>& nodes() const noexcept { return nodes_; }
  bool conflicts(std::size_t i, std::size_t j) const { return matrix_[i * size() + j] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }

private:
  std::vector<Edge> nodes_;
  std::vector<char> matrix_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Size of a greedily grown clique; a lower bound on the chromatic number.
std::size_t greedy_clique_bound(const ConflictGraph& cg);

/// Proper colouring with at most `colours` colours, or nullopt if none exists.
std::optional<std::vector<std::size_t>> colour_within(const ConflictGraph& cg,
                                                      std::size_t colours);

struct OracleLimits {
  std::size_t max_vertices = 10;
  std::size_t max_edges = 24;

  /// Defaults, with HALIN_BOOK_ORACLE_LIMIT (if set) replacing max_vertices.
  static OracleLimits from_environment();
};

/// Fewest pages for a fixed circular spine.
std::size_t min_pages_for_spine(const Graph& g, const CircularOrder& spine,
                                const OracleLimits& limits = {});

struct ExactResult {
  std::size_t pages;
  BookEmbedding witness;
};

/// Matching book thickness by search over all circular spines up to rotation
/// and reflection.
ExactResult exact_mbt(const Graph& g, const OracleLimits& limits = {});

bool is_dispersable(const Graph& g, const OracleLimits& limits = {});

}  // namespace halin_book
