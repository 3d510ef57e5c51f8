#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halin_book/graph.hpp"

namespace halin_book {

/// A plane Halin graph H = T ∪ C: a homeomorphically irreducible tree T plus
/// the cycle C through its leaves in planar order, stored cut at its smallest
/// leaf. Instances are only built through make_halin and always satisfy every
/// structural invariant.
class HalinGraph {
public:
  const std::vector<Edge>& tree_edges() const noexcept { return tree_edges_; }
  const CircularOrder& leaf_cycle() const noexcept { return leaf_cycle_; }
  /// E(T) ∪ E(C) over V(T).
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<VertexId>& interior() const noexcept { return interior_; }
  const std::vector<VertexId>& vertices() const noexcept { return graph_.vertices(); }

  std::size_t tree_degree(VertexId v) const;
  std::vector<VertexId> tree_neighbors(VertexId v) const;
  bool is_leaf(VertexId v) const;
  bool is_wheel() const noexcept { return interior_.size() == 1; }
  std::size_t max_degree() const { return halin_book::max_degree(graph_); }

  friend bool operator==(const HalinGraph&, const HalinGraph&) = default;

private:
  friend HalinGraph make_halin(std::vector<VertexId>, std::vector<Edge>, CircularOrder);
  HalinGraph() = default;

  std::vector<Edge> tree_edges_;
  CircularOrder leaf_cycle_;
  Graph graph_;
  std::vector<VertexId> interior_;
};

/// Validates (tree, leaf cycle) and returns the Halin graph. Throws
/// InvalidHalin listing every violated invariant.
HalinGraph make_halin(std::vector<VertexId> vertices, std::vector<Edge> tree_edges,
                      CircularOrder leaf_cycle);
/// Vertex set taken from the tree edges.
HalinGraph make_halin(std::vector<Edge> tree_edges, CircularOrder leaf_cycle);

/// W_m: hub 0, leaves 1..m-1 in cycle order.
HalinGraph wheel(std::size_t m);
/// Double star a=0, b=1 with leaves x=2, y=3 on a and z=4, w=5 on b;
/// cycle (x, z, w, y).
HalinGraph triangular_prism();

/// Pages carrying w'u, w'x and w'y in the embedding of the contracted graph.
struct HostPages {
  std::size_t of_u = 0;
  std::size_t of_x = 0;
  std::size_t of_y = 0;

  friend bool operator==(const HostPages&, const HostPages&) = default;
};

/// What is needed to undo one fan contraction.
struct ExpansionRecord {
  VertexId contracted;             // w'
  VertexId center;                 // w
  std::vector<VertexId> fan;       // v_1..v_k in leaf-cycle order
  VertexId third_neighbor;         // u
  VertexId cycle_predecessor;      // x
  VertexId cycle_successor;        // y
  std::optional<HostPages> pages;  // filled by the embedder

  std::size_t k() const noexcept { return fan.size(); }
};

/// Neighbour of an endpoint of a longest tree path, ties broken by the
/// smallest (endpoint, neighbour) label pair. Throws ContractViolation when T
/// is a star.
VertexId pick_fan_center(const HalinGraph& h);

/// Replaces w and its leaf neighbours by a single new leaf w' (smallest unused
/// label) attached to w's only interior neighbour.
std::pair<HalinGraph, ExpansionRecord> contract_fan(const HalinGraph& h, VertexId w);

/// Structural inverse of contract_fan.
HalinGraph expand_fan(const HalinGraph& contracted, const ExpansionRecord& rec);

/// Reproducible pseudo-random Halin graph with `interior_count` interior
/// vertices. Non-root interior vertices get 2..max_child children; the root
/// gets 3..max_child+1.
HalinGraph random_halin(std::size_t interior_count, std::size_t max_child, std::uint64_t seed);

/// Canonical string of the plane structure, invariant under relabelling and
/// under rotation/reflection of the leaf cycle.
std::string canonical_form(const HalinGraph& h);

/// Restartable stream of all plane Halin graphs with at most `max_vertices`
/// vertices, one per dihedral class, ordered by vertex count.
class HalinEnumeration {
public:
  static constexpr std::size_t kDefaultGuard = 10;

  explicit HalinEnumeration(std::size_t max_vertices, std::size_t guard = kDefaultGuard);

  std::optional<HalinGraph> next();
  void restart();

private:
  void fill_buffer();

  std::size_t max_vertices_;
  std::size_t current_size_ = 3;
  std::vector<HalinGraph> buffer_;
  std::size_t cursor_ = 0;
};

/// Convenience: drains a fresh HalinEnumeration.
std::vector<HalinGraph> enumerate_halin(std::size_t max_vertices,
                                        std::size_t guard = HalinEnumeration::kDefaultGuard);

}  // namespace halin_book
