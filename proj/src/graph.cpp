#include "halin_book/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "halin_book/errors.hpp"

namespace halin_book {

InvalidHalin::InvalidHalin(std::vector<std::string> issues)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "invalid Halin graph:";
        for (const auto& issue : issues) os << "\n  - " << issue;
        return os.str();
      }()),
      issues_(std::move(issues)) {}

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

Edge::Edge(VertexId a, VertexId b) : a_(std::min(a, b)), b_(std::max(a, b)) {
  if (a == b) throw ContractViolation("edge endpoints must be distinct");
}

VertexId Edge::other(VertexId v) const {
  if (v == a_) return b_;
  if (v == b_) return a_;
  throw ContractViolation("vertex is not an endpoint of the edge");
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.first() << ',' << e.second() << ')';
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ContractViolation("duplicate vertex");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ContractViolation("parallel edge");
  for (const auto& e : edges_) {
    if (!has_vertex(e.first()) || !has_vertex(e.second()))
      throw ContractViolation("edge endpoint not in vertex set");
  }
}

Graph Graph::from_pairs(std::size_t vertex_count,
                        std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs) {
  std::vector<VertexId> vs(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) vs[i] = VertexId{static_cast<std::uint32_t>(i)};
  std::vector<Edge> es;
  for (auto [a, b] : pairs) es.emplace_back(VertexId{a}, VertexId{b});
  return Graph(std::move(vs), std::move(es));
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& e : edges_)
    if (e.touches(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::with_edge(const Edge& e) const {
  auto es = edges_;
  es.push_back(e);
  return Graph(vertices_, std::move(es));
}

CircularOrder::CircularOrder(std::vector<VertexId> sequence) : sequence_(std::move(sequence)) {
  auto sorted = sequence_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractViolation("circular order repeats a vertex");
}

bool CircularOrder::contains(VertexId v) const {
  return std::find(sequence_.begin(), sequence_.end(), v) != sequence_.end();
}

std::size_t CircularOrder::position(VertexId v) const {
  auto it = std::find(sequence_.begin(), sequence_.end(), v);
  if (it == sequence_.end()) {
    std::ostringstream os;
    os << "vertex " << v << " is not on the circular order";
    throw ContractViolation(os.str());
  }
  return static_cast<std::size_t>(it - sequence_.begin());
}

CircularOrder CircularOrder::canonical_cut() const {
  if (sequence_.empty()) return *this;
  auto smallest = std::min_element(sequence_.begin(), sequence_.end());
  return rotate(*this, smallest - sequence_.begin());
}

CircularOrder make_order(std::initializer_list<std::uint32_t> labels) {
  std::vector<VertexId> seq;
  for (auto l : labels) seq.push_back(VertexId{l});
  return CircularOrder(std::move(seq));
}

CircularOrder rotate(const CircularOrder& order, long long shift) {
  const auto n = static_cast<long long>(order.size());
  if (n == 0) return order;
  const auto s = ((shift % n) + n) % n;
  auto seq = order.sequence();
  std::rotate(seq.begin(), seq.begin() + s, seq.end());
  return CircularOrder(std::move(seq));
}

CircularOrder reflect(const CircularOrder& order) {
  auto seq = order.sequence();
  std::reverse(seq.begin(), seq.end());
  return CircularOrder(std::move(seq));
}

bool interleaves(const CircularOrder& order, const Edge& e1, const Edge& e2) {
  if (e1.shares_vertex(e2))
    throw ContractViolation("crossing is only defined for vertex-disjoint edges");
  return interleaves_at(order.position(e1.first()), order.position(e1.second()),
                        order.position(e2.first()), order.position(e2.second()));
}

namespace {

std::unordered_map<VertexId, std::size_t> degree_table(const Graph& g) {
  std::unordered_map<VertexId, std::size_t> deg;
  for (auto v : g.vertices()) deg[v] = 0;
  for (const auto& e : g.edges()) {
    ++deg[e.first()];
    ++deg[e.second()];
  }
  return deg;
}

// Backtracking edge colouring with a fixed palette. Colours above the highest
// one in use are interchangeable, so only one fresh colour is ever tried.
class EdgeColouring {
public:
  EdgeColouring(const Graph& g, std::size_t colours) : colours_(colours) {
    auto deg = degree_table(g);
    order_ = g.edges();
    std::stable_sort(order_.begin(), order_.end(), [&](const Edge& a, const Edge& b) {
      return deg[a.first()] + deg[a.second()] > deg[b.first()] + deg[b.second()];
    });
    std::size_t idx = 0;
    for (auto v : g.vertices()) index_[v] = idx++;
    used_.assign(idx, std::vector<bool>(colours, false));
  }

  bool solve() { return place(0, 0); }

private:
  bool place(std::size_t i, std::size_t in_use) {
    if (i == order_.size()) return true;
    const auto a = index_[order_[i].first()];
    const auto b = index_[order_[i].second()];
    const auto limit = std::min(colours_, in_use + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (used_[a][c] || used_[b][c]) continue;
      used_[a][c] = used_[b][c] = true;
      if (place(i + 1, std::max(in_use, c + 1))) return true;
      used_[a][c] = used_[b][c] = false;
    }
    return false;
  }

  std::size_t colours_;
  std::vector<Edge> order_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<bool>> used_;
};

}  // namespace

std::size_t max_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw ContractViolation("max_degree of an empty graph");
  std::size_t best = 0;
  for (const auto& [v, d] : degree_table(g)) best = std::max(best, d);
  return best;
}

bool is_regular(const Graph& g) {
  auto deg = degree_table(g);
  if (deg.empty()) return true;
  const auto d0 = deg.begin()->second;
  return std::all_of(deg.begin(), deg.end(), [d0](const auto& kv) { return kv.second == d0; });
}

bool is_bipartite(const Graph& g) {
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : g.edges()) {
    adj[e.first()].push_back(e.second());
    adj[e.second()].push_back(e.first());
  }
  std::unordered_map<VertexId, int> side;
  for (auto start : g.vertices()) {
    if (side.count(start)) continue;
    side[start] = 0;
    std::queue<VertexId> q;
    q.push(start);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : adj[v]) {
        auto it = side.find(w);
        if (it == side.end()) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (it->second == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t chromatic_index(const Graph& g, std::size_t edge_guard) {
  if (g.edge_count() > edge_guard) {
    std::ostringstream os;
    os << "chromatic_index: " << g.edge_count() << " edges exceeds the guard of " << edge_guard;
    throw GuardExceeded(os.str());
  }
  if (g.edge_count() == 0) return 0;
  for (auto k = max_degree(g);; ++k) {
    EdgeColouring search(g, k);
    if (search.solve()) return k;
  }
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ContractViolation("cycle needs at least 3 vertices");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    vs.push_back(VertexId{i});
    es.emplace_back(VertexId{i}, VertexId{static_cast<std::uint32_t>((i + 1) % n)});
  }
  return Graph(std::move(vs), std::move(es));
}

Graph complete_graph(std::size_t n) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    vs.push_back(VertexId{i});
    for (std::uint32_t j = 0; j < i; ++j) es.emplace_back(VertexId{j}, VertexId{i});
  }
  return Graph(std::move(vs), std::move(es));
}

Graph star_graph(std::size_t leaves) {
  std::vector<VertexId> vs{VertexId{0}};
  std::vector<Edge> es;
  for (std::uint32_t i = 1; i <= leaves; ++i) {
    vs.push_back(VertexId{i});
    es.emplace_back(VertexId{0}, VertexId{i});
  }
  return Graph(std::move(vs), std::move(es));
}

}  // namespace halin_book
