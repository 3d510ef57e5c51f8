#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace halin_book {

struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);

/// Undirected edge, endpoints stored smaller label first.
class Edge {
public:
  Edge(VertexId a, VertexId b);

  VertexId first() const noexcept { return a_; }
  VertexId second() const noexcept { return b_; }
  bool touches(VertexId v) const noexcept { return a_ == v || b_ == v; }
  bool shares_vertex(const Edge& other) const noexcept {
    return touches(other.a_) || touches(other.b_);
  }
  VertexId other(VertexId v) const;

  friend auto operator<=>(const Edge&, const Edge&) = default;

private:
  VertexId a_;
  VertexId b_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Simple undirected graph. Vertices and edges are kept sorted and unique.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  static Graph from_pairs(std::size_t vertex_count,
                          std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(const Edge& e) const;
  std::size_t degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Returns a copy with `e` added.
  Graph with_edge(const Edge& e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

/// A cyclic sequence of distinct vertices (the printing cycle of a spine).
class CircularOrder {
public:
  CircularOrder() = default;
  explicit CircularOrder(std::vector<VertexId> sequence);

  const std::vector<VertexId>& sequence() const noexcept { return sequence_; }
  std::size_t size() const noexcept { return sequence_.size(); }
  bool contains(VertexId v) const;
  /// Position of `v` in the current linear cut; throws ContractViolation if absent.
  std::size_t position(VertexId v) const;

  /// Linear cut starting at the smallest vertex. Rotation-equivalent orders
  /// have the same canonical cut.
  CircularOrder canonical_cut() const;

  friend bool operator==(const CircularOrder&, const CircularOrder&) = default;

private:
  std::vector<VertexId> sequence_;
};

/// Builds a CircularOrder from raw labels.
CircularOrder make_order(std::initializer_list<std::uint32_t> labels);

CircularOrder rotate(const CircularOrder& order, long long shift);
CircularOrder reflect(const CircularOrder& order);

/// True iff the chords e1 and e2 cross on the circle. Both edges must be
/// vertex-disjoint and present in the order.
bool interleaves(const CircularOrder& order, const Edge& e1, const Edge& e2);

/// Same predicate on precomputed spine positions (no checks).
inline bool interleaves_at(std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) {
  if (a1 > b1) std::swap(a1, b1);
  const bool in2a = a1 < a2 && a2 < b1;
  const bool in2b = a1 < b2 && b2 < b1;
  return in2a != in2b;
}

std::size_t max_degree(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g);

/// Exact chromatic index by backtracking over the Vizing range [Δ, Δ+1].
/// Throws GuardExceeded when the graph has more than `edge_guard` edges.
std::size_t chromatic_index(const Graph& g, std::size_t edge_guard = 40);

// Small named graphs used throughout the tests and the oracle commands.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace halin_book

template <>
struct std::hash<halin_book::VertexId> {
  std::size_t operator()(halin_book::VertexId v) const noexcept { return v.value; }
};
