#include "halin_book/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>

#include "halin_book/errors.hpp"

namespace halin_book {

namespace {

void require_spine_matches(const Graph& g, const CircularOrder& spine) {
  auto seq = spine.sequence();
  std::sort(seq.begin(), seq.end());
  if (seq != g.vertices())
    throw ContractViolation("spine is not a permutation of the graph's vertices");
}

std::unordered_map<VertexId, std::size_t> positions(const CircularOrder& spine) {
  std::unordered_map<VertexId, std::size_t> pos;
  const auto& seq = spine.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
  return pos;
}

void require_edge_guard(const Graph& g, const OracleLimits& limits) {
  if (g.edge_count() > limits.max_edges) {
    std::ostringstream os;
    os << g.edge_count() << " edges exceeds the oracle guard of " << limits.max_edges;
    throw GuardExceeded(os.str());
  }
}

// DSATUR backtracking for a fixed palette.
class DsaturSearch {
public:
  DsaturSearch(const ConflictGraph& cg, std::size_t colours)
      : cg_(cg),
        colours_(colours),
        colour_(cg.size(), kNone),
        blocked_(cg.size(), std::vector<std::size_t>(colours, 0)),
        saturation_(cg.size(), 0) {}

  std::optional<std::vector<std::size_t>> run() {
    if (cg_.size() == 0) return colour_;
    if (colours_ == 0) return std::nullopt;
    if (place(0, 0)) return colour_;
    return std::nullopt;
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t select() const {
    std::size_t best = kNone;
    std::size_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < cg_.size(); ++v) {
      if (colour_[v] != kNone) continue;
      std::size_t deg = 0;
      for (auto n : cg_.neighbors(v))
        if (colour_[n] == kNone) ++deg;
      if (best == kNone || saturation_[v] > best_sat ||
          (saturation_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(std::size_t v, std::size_t c) {
    colour_[v] = c;
    for (auto n : cg_.neighbors(v))
      if (blocked_[n][c]++ == 0) ++saturation_[n];
  }

  void unassign(std::size_t v) {
    const auto c = colour_[v];
    colour_[v] = kNone;
    for (auto n : cg_.neighbors(v))
      if (--blocked_[n][c] == 0) --saturation_[n];
  }

  bool place(std::size_t coloured, std::size_t in_use) {
    if (coloured == cg_.size()) return true;
    const auto v = select();
    if (saturation_[v] == colours_) return false;
    // Unused colours are interchangeable: try only the first fresh one.
    const auto limit = std::min(colours_, in_use + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (blocked_[v][c] != 0) continue;
      assign(v, c);
      if (place(coloured + 1, std::max(in_use, c + 1))) return true;
      unassign(v);
    }
    return false;
  }

  const ConflictGraph& cg_;
  std::size_t colours_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<std::size_t>> blocked_;
  std::vector<std::size_t> saturation_;
};

BookEmbedding embedding_from_colouring(const ConflictGraph& cg, const CircularOrder& spine,
                                       const std::vector<std::size_t>& colour, std::size_t k) {
  BookEmbedding emb{spine, std::vector<std::vector<Edge>>(k)};
  for (std::size_t i = 0; i < cg.size(); ++i) emb.pages[colour[i]].push_back(cg.nodes()[i]);
  emb.normalize_pages();
  return emb;
}

}  // namespace

ValidationReport validate(const Graph& g, const BookEmbedding& emb) {
  require_spine_matches(g, emb.spine);
  ValidationReport report;

  std::map<Edge, std::size_t> seen;
  for (const auto& page : emb.pages)
    for (const auto& e : page) ++seen[e];
  for (const auto& e : g.edges())
    if (seen[e] != 1) report.missing_or_duplicate_edges.push_back(e);
  for (const auto& [e, count] : seen)
    if (count > 0 && !g.has_edge(e)) report.missing_or_duplicate_edges.push_back(e);

  const auto pos = positions(emb.spine);
  for (std::size_t p = 0; p < emb.pages.size(); ++p) {
    const auto& page = emb.pages[p];
    std::map<VertexId, std::size_t> incidence;
    for (const auto& e : page) {
      ++incidence[e.first()];
      ++incidence[e.second()];
    }
    for (const auto& [v, count] : incidence)
      if (count > 1) report.matching_violations.push_back({p, v, count});

    for (std::size_t i = 0; i < page.size(); ++i) {
      for (std::size_t j = i + 1; j < page.size(); ++j) {
        const auto &a = page[i], &b = page[j];
        if (a.shares_vertex(b) || !g.has_edge(a) || !g.has_edge(b)) continue;
        if (interleaves_at(pos.at(a.first()), pos.at(a.second()), pos.at(b.first()),
                           pos.at(b.second())))
          report.crossings.push_back({p, a, b});
      }
    }
  }
  return report;
}

ConflictGraph::ConflictGraph(const Graph& g, const CircularOrder& spine)
    : nodes_(g.edges()), matrix_(nodes_.size() * nodes_.size(), 0), adjacency_(nodes_.size()) {
  require_spine_matches(g, spine);
  const auto pos = positions(spine);
  const auto n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto &a = nodes_[i], &b = nodes_[j];
      const bool clash =
          a.shares_vertex(b) || interleaves_at(pos.at(a.first()), pos.at(a.second()),
                                               pos.at(b.first()), pos.at(b.second()));
      if (!clash) continue;
      matrix_[i * n + j] = matrix_[j * n + i] = 1;
      adjacency_[i].push_back(j);
      adjacency_[j].push_back(i);
    }
  }
}

std::size_t greedy_clique_bound(const ConflictGraph& cg) {
  std::size_t best = cg.size() == 0 ? 0 : 1;
  for (std::size_t start = 0; start < cg.size(); ++start) {
    std::vector<std::size_t> clique{start};
    auto candidates = cg.neighbors(start);
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return cg.neighbors(a).size() > cg.neighbors(b).size();
    });
    for (auto c : candidates) {
      if (std::all_of(clique.begin(), clique.end(),
                      [&](std::size_t m) { return cg.conflicts(c, m); }))
        clique.push_back(c);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

std::optional<std::vector<std::size_t>> colour_within(const ConflictGraph& cg,
                                                      std::size_t colours) {
  return DsaturSearch(cg, colours).run();
}

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* raw = std::getenv("HALIN_BOOK_ORACLE_LIMIT")) {
    char* end = nullptr;
    const auto value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) limits.max_vertices = value;
  }
  return limits;
}

std::size_t min_pages_for_spine(const Graph& g, const CircularOrder& spine,
                                const OracleLimits& limits) {
  require_edge_guard(g, limits);
  ConflictGraph cg(g, spine);
  for (auto k = greedy_clique_bound(cg);; ++k)
    if (colour_within(cg, k)) return k;
}

ExactResult exact_mbt(const Graph& g, const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    std::ostringstream os;
    os << g.vertex_count() << " vertices exceeds the oracle guard of " << limits.max_vertices;
    throw GuardExceeded(os.str());
  }
  require_edge_guard(g, limits);
  if (g.vertex_count() == 0) return {0, BookEmbedding{}};

  const std::size_t lower = max_degree(g);
  std::optional<ExactResult> best;

  // Smallest vertex pinned first (rotation); second entry below last entry
  // (reflection).
  auto rest = std::vector<VertexId>(g.vertices().begin() + 1, g.vertices().end());
  do {
    if (rest.size() >= 2 && rest.front() > rest.back()) continue;
    std::vector<VertexId> seq{g.vertices().front()};
    seq.insert(seq.end(), rest.begin(), rest.end());
    CircularOrder spine(std::move(seq));
    ConflictGraph cg(g, spine);
    const auto ceiling = best ? best->pages : cg.size() + 1;
    for (auto k = std::max(lower, greedy_clique_bound(cg)); k < ceiling; ++k) {
      if (auto colouring = colour_within(cg, k)) {
        best = ExactResult{k, embedding_from_colouring(cg, spine, *colouring, k)};
        break;
      }
    }
    if (best && best->pages == lower) break;
  } while (std::next_permutation(rest.begin(), rest.end()));

  return std::move(*best);
}

bool is_dispersable(const Graph& g, const OracleLimits& limits) {
  return exact_mbt(g, limits).pages == max_degree(g);
}

}  // namespace halin_book
