#include "halin_book/halin.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "halin_book/errors.hpp"

namespace halin_book {

namespace {

using Adjacency = std::unordered_map<VertexId, std::vector<VertexId>>;

Adjacency adjacency_of(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
  Adjacency adj;
  for (auto v : vertices) adj[v];
  for (const auto& e : edges) {
    adj[e.first()].push_back(e.second());
    adj[e.second()].push_back(e.first());
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
  return adj;
}

std::string label(VertexId v) { return std::to_string(v.value); }

// Leaves reachable from `start` without crossing back over `from`.
std::vector<VertexId> leaves_behind(const Adjacency& adj, VertexId start, VertexId from) {
  std::vector<VertexId> leaves;
  std::vector<std::pair<VertexId, VertexId>> stack{{start, from}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    const auto& ns = adj.at(v);
    if (ns.size() == 1) leaves.push_back(v);
    for (auto n : ns)
      if (n != parent) stack.emplace_back(n, v);
  }
  return leaves;
}

// True iff the given leaves occupy one contiguous arc of the cycle.
bool contiguous_on_cycle(const CircularOrder& cycle, const std::vector<VertexId>& subset) {
  const auto n = cycle.size();
  if (subset.empty() || subset.size() >= n) return true;
  std::unordered_set<VertexId> in(subset.begin(), subset.end());
  std::size_t boundaries = 0;
  const auto& seq = cycle.sequence();
  for (std::size_t i = 0; i < n; ++i)
    if (in.count(seq[i]) && !in.count(seq[(i + 1) % n])) ++boundaries;
  return boundaries == 1;
}

}  // namespace

std::size_t HalinGraph::tree_degree(VertexId v) const {
  return static_cast<std::size_t>(std::count_if(
      tree_edges_.begin(), tree_edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<VertexId> HalinGraph::tree_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& e : tree_edges_)
    if (e.touches(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool HalinGraph::is_leaf(VertexId v) const { return leaf_cycle_.contains(v); }

HalinGraph make_halin(std::vector<VertexId> vertices, std::vector<Edge> tree_edges,
                      CircularOrder leaf_cycle) {
  std::vector<std::string> issues;

  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    issues.push_back("duplicate vertex label");
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(tree_edges.begin(), tree_edges.end());
  if (std::adjacent_find(tree_edges.begin(), tree_edges.end()) != tree_edges.end())
    issues.push_back("duplicate tree edge");
  tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());

  const std::set<VertexId> declared(vertices.begin(), vertices.end());
  bool endpoints_ok = true;
  for (const auto& e : tree_edges) {
    for (auto v : {e.first(), e.second()}) {
      if (!declared.count(v)) {
        issues.push_back("tree edge endpoint " + label(v) + " is not a declared vertex");
        endpoints_ok = false;
      }
    }
  }

  if (vertices.size() < 4)
    issues.push_back("tree has " + std::to_string(vertices.size()) +
                     " vertices; at least 4 are required");

  bool is_tree = endpoints_ok && !vertices.empty() && tree_edges.size() + 1 == vertices.size();
  Adjacency adj;
  if (endpoints_ok) {
    adj = adjacency_of(vertices, tree_edges);
    if (is_tree) {
      std::set<VertexId> seen{vertices.front()};
      std::vector<VertexId> stack{vertices.front()};
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto n : adj[v])
          if (seen.insert(n).second) stack.push_back(n);
      }
      is_tree = seen.size() == vertices.size();
    }
  }
  if (!is_tree) issues.push_back("tree edges do not form a tree spanning all declared vertices");

  std::vector<VertexId> leaves;
  std::vector<VertexId> interior;
  if (is_tree) {
    for (auto v : vertices) {
      const auto d = adj[v].size();
      if (d == 1)
        leaves.push_back(v);
      else
        interior.push_back(v);
      if (d == 2) issues.push_back("interior vertex " + label(v) + " has tree degree 2");
    }
    std::vector<VertexId> cyc = leaf_cycle.sequence();
    std::sort(cyc.begin(), cyc.end());
    if (cyc != leaves) issues.push_back("leaf cycle does not list exactly the leaves of the tree");
  }

  const bool structure_ok = issues.empty();
  if (structure_ok) {
    for (const auto& e : tree_edges) {
      auto side = leaves_behind(adj, e.first(), e.second());
      if (!contiguous_on_cycle(leaf_cycle, side)) {
        std::ostringstream os;
        os << "leaves on one side of tree edge " << e
           << " are not contiguous on the leaf cycle";
        issues.push_back(os.str());
      }
    }
  }

  std::vector<Edge> all = tree_edges;
  if (structure_ok) {
    const auto& seq = leaf_cycle.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      Edge c(seq[i], seq[(i + 1) % seq.size()]);
      if (std::binary_search(tree_edges.begin(), tree_edges.end(), c)) {
        std::ostringstream os;
        os << "cycle edge " << c << " duplicates a tree edge";
        issues.push_back(os.str());
      }
      all.push_back(c);
    }
  }

  if (!issues.empty()) throw InvalidHalin(std::move(issues));

  HalinGraph h;
  h.graph_ = Graph(vertices, std::move(all));
  h.tree_edges_ = std::move(tree_edges);
  h.leaf_cycle_ = leaf_cycle.canonical_cut();
  h.interior_ = std::move(interior);
  return h;
}

HalinGraph make_halin(std::vector<Edge> tree_edges, CircularOrder leaf_cycle) {
  std::set<VertexId> vs;
  for (const auto& e : tree_edges) {
    vs.insert(e.first());
    vs.insert(e.second());
  }
  return make_halin(std::vector<VertexId>(vs.begin(), vs.end()), std::move(tree_edges),
                    std::move(leaf_cycle));
}

HalinGraph wheel(std::size_t m) {
  if (m < 4) throw ContractViolation("wheel W_m needs m >= 4");
  std::vector<Edge> spokes;
  std::vector<VertexId> rim;
  for (std::uint32_t i = 1; i < m; ++i) {
    spokes.emplace_back(VertexId{0}, VertexId{i});
    rim.push_back(VertexId{i});
  }
  return make_halin(std::move(spokes), CircularOrder(std::move(rim)));
}

HalinGraph triangular_prism() {
  const VertexId a{0}, b{1}, x{2}, y{3}, z{4}, w{5};
  return make_halin({Edge(a, b), Edge(a, x), Edge(a, y), Edge(b, z), Edge(b, w)},
                    CircularOrder({x, z, w, y}));
}

VertexId pick_fan_center(const HalinGraph& h) {
  if (h.is_wheel()) throw ContractViolation("underlying tree is a star; use the wheel base case");
  const auto adj = adjacency_of(h.vertices(), h.tree_edges());

  auto eccentricity = [&](VertexId src) {
    std::unordered_map<VertexId, std::size_t> dist{{src, 0}};
    std::vector<VertexId> frontier{src};
    std::size_t far = 0;
    while (!frontier.empty()) {
      std::vector<VertexId> next;
      for (auto v : frontier)
        for (auto n : adj.at(v))
          if (dist.emplace(n, dist[v] + 1).second) {
            next.push_back(n);
            far = std::max(far, dist[n]);
          }
      frontier = std::move(next);
    }
    return far;
  };

  std::unordered_map<VertexId, std::size_t> ecc;
  std::size_t diameter = 0;
  for (auto v : h.leaf_cycle().sequence()) {
    ecc[v] = eccentricity(v);
    diameter = std::max(diameter, ecc[v]);
  }
  // Leaves are visited in label order; each leaf has exactly one neighbour,
  // so the first leaf at full eccentricity gives the smallest pair.
  auto leaves = h.leaf_cycle().sequence();
  std::sort(leaves.begin(), leaves.end());
  for (auto v : leaves)
    if (ecc[v] == diameter) return adj.at(v).front();
  throw ContractViolation("no longest path found");  // unreachable for a valid tree
}

std::pair<HalinGraph, ExpansionRecord> contract_fan(const HalinGraph& h, VertexId w) {
  if (h.is_leaf(w) || !h.graph().has_vertex(w))
    throw ContractViolation("fan center must be an interior vertex");

  std::vector<VertexId> leaf_nbrs;
  std::vector<VertexId> interior_nbrs;
  for (auto n : h.tree_neighbors(w)) (h.is_leaf(n) ? leaf_nbrs : interior_nbrs).push_back(n);
  if (interior_nbrs.size() != 1)
    throw ContractViolation("fan center must have exactly one interior tree neighbour");
  if (leaf_nbrs.size() < 2) throw ContractViolation("fan center needs at least two leaves");

  const std::unordered_set<VertexId> fan_set(leaf_nbrs.begin(), leaf_nbrs.end());
  const auto& seq = h.leaf_cycle().sequence();
  const auto n = seq.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (fan_set.count(seq[i]) && !fan_set.count(seq[(i + n - 1) % n])) {
      if (start != n) throw ContractViolation("fan leaves are not consecutive on the cycle");
      start = i;
    }
  }
  if (start == n) throw ContractViolation("fan leaves cover the whole cycle");

  ExpansionRecord rec;
  rec.center = w;
  rec.third_neighbor = interior_nbrs.front();
  for (std::size_t j = 0; j < leaf_nbrs.size(); ++j) rec.fan.push_back(seq[(start + j) % n]);
  rec.cycle_predecessor = seq[(start + n - 1) % n];
  rec.cycle_successor = seq[(start + leaf_nbrs.size()) % n];
  if (rec.cycle_predecessor == rec.cycle_successor)
    throw ContractViolation("cycle neighbours x and y of the fan coincide");

  std::unordered_set<VertexId> removed(fan_set);
  removed.insert(w);
  std::vector<VertexId> kept;
  for (auto v : h.vertices())
    if (!removed.count(v)) kept.push_back(v);
  std::uint32_t fresh = 0;
  while (std::binary_search(kept.begin(), kept.end(), VertexId{fresh})) ++fresh;
  rec.contracted = VertexId{fresh};

  std::vector<Edge> tree;
  for (const auto& e : h.tree_edges())
    if (!e.touches(w)) tree.push_back(e);
  tree.emplace_back(rec.contracted, rec.third_neighbor);
  kept.push_back(rec.contracted);

  std::vector<VertexId> cycle;
  for (std::size_t j = 0; j + leaf_nbrs.size() < n; ++j)
    cycle.push_back(seq[(start + leaf_nbrs.size() + j) % n]);
  cycle.push_back(rec.contracted);

  return {make_halin(std::move(kept), std::move(tree), CircularOrder(std::move(cycle))),
          std::move(rec)};
}

HalinGraph expand_fan(const HalinGraph& contracted, const ExpansionRecord& rec) {
  const auto wp = rec.contracted;
  if (!contracted.is_leaf(wp)) throw ContractViolation("contracted vertex is not a leaf");
  std::vector<VertexId> vs;
  for (auto v : contracted.vertices())
    if (v != wp) vs.push_back(v);
  vs.push_back(rec.center);
  vs.insert(vs.end(), rec.fan.begin(), rec.fan.end());

  std::vector<Edge> tree;
  for (const auto& e : contracted.tree_edges())
    if (!e.touches(wp)) tree.push_back(e);
  tree.emplace_back(rec.center, rec.third_neighbor);
  for (auto v : rec.fan) tree.emplace_back(rec.center, v);

  std::vector<VertexId> cycle;
  for (auto v : contracted.leaf_cycle().sequence()) {
    if (v == wp)
      cycle.insert(cycle.end(), rec.fan.begin(), rec.fan.end());
    else
      cycle.push_back(v);
  }
  return make_halin(std::move(vs), std::move(tree), CircularOrder(std::move(cycle)));
}

HalinGraph random_halin(std::size_t interior_count, std::size_t max_child, std::uint64_t seed) {
  if (interior_count < 1) throw ContractViolation("random_halin: interior_count must be >= 1");
  if (max_child < 3) throw ContractViolation("random_halin: max_child must be >= 3");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  // Interior skeleton: node i > 0 hangs below an earlier node with spare room.
  std::vector<std::vector<std::size_t>> interior_children(interior_count);
  auto capacity = [&](std::size_t v) { return v == 0 ? max_child + 1 : max_child; };
  for (std::size_t i = 1; i < interior_count; ++i) {
    std::vector<std::size_t> open;
    for (std::size_t p = 0; p < i; ++p)
      if (interior_children[p].size() < capacity(p)) open.push_back(p);
    interior_children[open[uniform(0, open.size() - 1)]].push_back(i);
  }

  // Children are either interior indices or leaves (encoded as npos).
  constexpr auto kLeaf = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> children(interior_count);
  for (std::size_t v = 0; v < interior_count; ++v) {
    const std::size_t min_children = v == 0 ? 3 : 2;
    const auto have = interior_children[v].size();
    const auto total = uniform(std::max(min_children, have), capacity(v));
    children[v] = interior_children[v];
    children[v].resize(total, kLeaf);
    std::shuffle(children[v].begin(), children[v].end(), rng);
  }

  std::vector<Edge> tree;
  std::vector<VertexId> cycle;
  std::uint32_t next_label = 0;
  // Iterative preorder; labels follow visiting order.
  struct Frame {
    std::size_t node;
    VertexId id;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{0, VertexId{next_label++}, 0}};
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.next_child == children[top.node].size()) {
      stack.pop_back();
      continue;
    }
    const auto child = children[top.node][top.next_child++];
    const VertexId id{next_label++};
    tree.emplace_back(top.id, id);
    if (child == kLeaf)
      cycle.push_back(id);
    else
      stack.push_back({child, id, 0});
  }
  return make_halin(std::move(tree), CircularOrder(std::move(cycle)));
}

std::string canonical_form(const HalinGraph& h) {
  const auto adj = adjacency_of(h.vertices(), h.tree_edges());
  const auto& cyc = h.leaf_cycle().sequence();
  const auto n = cyc.size();
  std::unordered_map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[cyc[i]] = i;

  std::string best;
  for (std::size_t root = 0; root < n; ++root) {
    for (bool mirrored : {false, true}) {
      auto key_of = [&](VertexId leaf) {
        const auto i = index.at(leaf);
        return mirrored ? (root + n - i) % n : (i + n - root) % n;
      };
      // Post-order: each node's encoding is its children's, sorted by the
      // earliest leaf position below them.
      std::unordered_map<VertexId, std::pair<std::size_t, std::string>> enc;
      struct Frame {
        VertexId v, parent;
        bool expanded;
      };
      std::vector<Frame> stack{{cyc[root], cyc[root], false}};
      while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        if (!f.expanded) {
          stack.push_back({f.v, f.parent, true});
          for (auto c : adj.at(f.v))
            if (c != f.parent) stack.push_back({c, f.v, false});
          continue;
        }
        std::vector<std::pair<std::size_t, std::string>> kids;
        for (auto c : adj.at(f.v))
          if (c != f.parent) kids.push_back(std::move(enc.at(c)));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        std::size_t min_key = h.is_leaf(f.v) ? key_of(f.v) : n;
        for (auto& [k, str] : kids) {
          min_key = std::min(min_key, k);
          s += str;
        }
        s += ")";
        enc[f.v] = {min_key, std::move(s)};
      }
      auto& candidate = enc.at(cyc[root]).second;
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

namespace {

// Ordered trees in which every node has 0 or >= 2 children, as preorder
// child-count sequences; trees[s] holds those with s nodes.
using PlaneTrees = std::vector<std::vector<std::vector<std::size_t>>>;

void append_forests(const PlaneTrees& trees, std::size_t remaining, std::size_t count,
                    const std::vector<std::size_t>& prefix,
                    std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    if (count < 2) return;
    std::vector<std::size_t> tree{count};
    tree.insert(tree.end(), prefix.begin(), prefix.end());
    out.push_back(std::move(tree));
    return;
  }
  for (std::size_t s = 1; s <= remaining; ++s) {
    for (const auto& sub : trees[s]) {
      auto next = prefix;
      next.insert(next.end(), sub.begin(), sub.end());
      append_forests(trees, remaining - s, count + 1, next, out);
    }
  }
}

PlaneTrees reduced_plane_trees(std::size_t max_size) {
  PlaneTrees trees(max_size + 1);
  if (max_size >= 1) trees[1].push_back({0});
  for (std::size_t size = 3; size <= max_size; ++size)
    append_forests(trees, size - 1, 0, {}, trees[size]);
  return trees;
}

// A reduced plane tree hung below an extra root leaf; labels in preorder.
HalinGraph halin_from_plane_tree(const std::vector<std::size_t>& preorder) {
  std::vector<Edge> tree;
  std::vector<VertexId> cycle{VertexId{0}};
  std::vector<std::pair<VertexId, std::size_t>> open{{VertexId{0}, 1}};  // (id, children left)
  std::uint32_t next = 1;
  for (auto kids : preorder) {
    const VertexId id{next++};
    while (open.back().second == 0) open.pop_back();
    tree.emplace_back(open.back().first, id);
    --open.back().second;
    if (kids == 0)
      cycle.push_back(id);
    else
      open.emplace_back(id, kids);
  }
  return make_halin(std::move(tree), CircularOrder(std::move(cycle)));
}

}  // namespace

HalinEnumeration::HalinEnumeration(std::size_t max_vertices, std::size_t guard)
    : max_vertices_(max_vertices) {
  if (max_vertices > guard) {
    std::ostringstream os;
    os << "enumeration of Halin graphs up to " << max_vertices << " vertices exceeds the guard of "
       << guard;
    throw GuardExceeded(os.str());
  }
}

void HalinEnumeration::restart() {
  current_size_ = 3;
  buffer_.clear();
  cursor_ = 0;
}

void HalinEnumeration::fill_buffer() {
  buffer_.clear();
  cursor_ = 0;
  while (buffer_.empty() && current_size_ < max_vertices_) {
    ++current_size_;
    std::set<std::string> seen;
    const auto trees = reduced_plane_trees(current_size_ - 1);
    for (const auto& t : trees[current_size_ - 1]) {
      auto h = halin_from_plane_tree(t);
      if (seen.insert(canonical_form(h)).second) buffer_.push_back(std::move(h));
    }
  }
}

std::optional<HalinGraph> HalinEnumeration::next() {
  if (cursor_ == buffer_.size()) fill_buffer();
  if (cursor_ == buffer_.size()) return std::nullopt;
  return buffer_[cursor_++];
}

std::vector<HalinGraph> enumerate_halin(std::size_t max_vertices, std::size_t guard) {
  HalinEnumeration stream(max_vertices, guard);
  std::vector<HalinGraph> out;
  while (auto h = stream.next()) out.push_back(std::move(*h));
  return out;
}

}  // namespace halin_book
