#include "halin_book/embedder.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "halin_book/errors.hpp"
#include "halin_book/io.hpp"
#include "halin_book/verification.hpp"

namespace halin_book {

namespace {

using Positions = std::unordered_map<VertexId, std::size_t>;

Positions positions(const CircularOrder& spine) {
  Positions pos;
  const auto& seq = spine.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
  return pos;
}

bool clashes(const Edge& a, const Edge& b, const Positions& pos) {
  return a.shares_vertex(b) || interleaves_at(pos.at(a.first()), pos.at(a.second()),
                                              pos.at(b.first()), pos.at(b.second()));
}

bool fits(const std::vector<Edge>& page, const Edge& e, const Positions& pos) {
  return std::none_of(page.begin(), page.end(),
                      [&](const Edge& other) { return other != e && clashes(e, other, pos); });
}

bool pages_clean(const BookEmbedding& emb, const Positions& pos) {
  for (const auto& page : emb.pages)
    for (std::size_t i = 0; i < page.size(); ++i)
      for (std::size_t j = i + 1; j < page.size(); ++j)
        if (clashes(page[i], page[j], pos)) return false;
  return true;
}

std::string describe(const BookEmbedding& emb) {
  return embedding_to_json(emb).dump();
}

BookEmbedding relabel(const BookEmbedding& emb, const std::unordered_map<VertexId, VertexId>& to) {
  std::vector<VertexId> seq;
  for (auto v : emb.spine.sequence()) seq.push_back(to.at(v));
  BookEmbedding out{CircularOrder(std::move(seq)), {}};
  for (const auto& page : emb.pages) {
    auto& dst = out.pages.emplace_back();
    for (const auto& e : page) dst.emplace_back(to.at(e.first()), to.at(e.second()));
  }
  out.normalize_pages();
  return out;
}

// Assigns each group (edges that must share a page) to some page where all
// its edges fit, first fit with backtracking.
bool place_groups(BookEmbedding& emb, const std::vector<std::vector<Edge>>& groups,
                  std::size_t next, const Positions& pos) {
  if (next == groups.size()) return true;
  const auto& group = groups[next];
  for (auto& page : emb.pages) {
    const bool ok = std::all_of(group.begin(), group.end(), [&](const Edge& e) {
      return fits(page, e, pos) && std::all_of(group.begin(), group.end(), [&](const Edge& f) {
               return e == f || !clashes(e, f, pos);
             });
    });
    if (!ok) continue;
    page.insert(page.end(), group.begin(), group.end());
    if (place_groups(emb, groups, next + 1, pos)) return true;
    page.erase(page.end() - static_cast<std::ptrdiff_t>(group.size()), page.end());
  }
  return false;
}

bool place_edges(BookEmbedding& emb, const std::vector<Edge>& edges, std::size_t next,
                 const Positions& pos) {
  if (next == edges.size()) return true;
  for (auto& page : emb.pages) {
    if (!fits(page, edges[next], pos)) continue;
    page.push_back(edges[next]);
    if (place_edges(emb, edges, next + 1, pos)) return true;
    page.pop_back();
  }
  return false;
}

// Chords inside the spliced block never meet chords with no endpoint in it.
void require_block_locality(const BookEmbedding& emb, const std::vector<VertexId>& block,
                            const Positions& pos) {
  const std::unordered_set<VertexId> in_block(block.begin(), block.end());
  const auto inside = [&](const Edge& e) {
    return in_block.count(e.first()) && in_block.count(e.second());
  };
  const auto outside = [&](const Edge& e) {
    return !in_block.count(e.first()) && !in_block.count(e.second());
  };
  for (const auto& page : emb.pages)
    for (const auto& a : page)
      for (const auto& b : page)
        if (inside(a) && outside(b) && clashes(a, b, pos))
          throw ConstructionFailure("block locality violated during expansion", describe(emb));
}

struct Expansion {
  BookEmbedding embedding;
  bool repaired = false;
};

Expansion expand_impl(const BookEmbedding& contracted, const ExpansionRecord& rec,
                      std::size_t target_pages) {
  if (!rec.pages) throw ContractViolation("expansion record has no host pages");
  const auto k = rec.k();
  if (k < 2) throw ContractViolation("fan needs at least two leaves");
  const std::size_t needed = std::max<std::size_t>(k == 2 ? 4 : k + 1, contracted.page_count());
  if (target_pages < needed) {
    std::ostringstream os;
    os << "expansion of a " << k << "-leaf fan needs at least " << needed << " pages, got "
       << target_pages;
    throw ContractViolation(os.str());
  }

  const auto wp = rec.contracted;
  const auto w = rec.center;
  const auto u = rec.third_neighbor;
  const auto x = rec.cycle_predecessor;
  const auto y = rec.cycle_successor;
  const auto& hosts = *rec.pages;
  const auto v = [&](std::size_t i) { return rec.fan[i - 1]; };  // 1-based, as v_1..v_k

  if (contracted.page_of(Edge(wp, u)) != hosts.of_u ||
      contracted.page_of(Edge(wp, x)) != hosts.of_x ||
      contracted.page_of(Edge(wp, y)) != hosts.of_y)
    throw ContractViolation("host pages do not match the contracted embedding");

  // Spine: v_c, ..., v_1, w, v_{c+1}, ..., v_k in place of w'.
  const auto split = (k + 1) / 2;
  std::vector<VertexId> block;
  for (auto i = split; i >= 1; --i) block.push_back(v(i));
  block.push_back(w);
  for (auto i = split + 1; i <= k; ++i) block.push_back(v(i));

  std::vector<VertexId> seq;
  for (auto s : contracted.spine.sequence()) {
    if (s == wp)
      seq.insert(seq.end(), block.begin(), block.end());
    else
      seq.push_back(s);
  }
  BookEmbedding out{CircularOrder(std::move(seq)), contracted.pages};
  out.pages.resize(target_pages);
  for (auto& page : out.pages)
    std::erase_if(page, [&](const Edge& e) { return e.touches(wp); });

  std::vector<std::pair<std::size_t, Edge>> fixed{
      {hosts.of_u, Edge(w, u)}, {hosts.of_x, Edge(v(1), x)}, {hosts.of_y, Edge(v(k), y)}};
  std::vector<std::vector<Edge>> groups;
  if (k == 2) {
    fixed.emplace_back(hosts.of_x, Edge(w, v(2)));
    fixed.emplace_back(hosts.of_y, Edge(w, v(1)));
    groups.push_back({Edge(v(1), v(2))});
  } else {
    fixed.emplace_back(hosts.of_u, Edge(v(1), v(2)));
    fixed.emplace_back(hosts.of_x, Edge(w, v(k)));
    fixed.emplace_back(hosts.of_y, Edge(w, v(k - 1)));
    for (std::size_t i = 4; i <= k + 1; ++i)
      groups.push_back({Edge(w, v(i - 3)), Edge(v(i - 2), v(i - 1))});
  }
  for (const auto& [page, e] : fixed) out.pages[page].push_back(e);

  const auto pos = positions(out.spine);

  std::vector<Edge> added;
  for (const auto& [page, e] : fixed) added.push_back(e);
  for (const auto& g : groups) added.insert(added.end(), g.begin(), g.end());

  bool clean = std::all_of(fixed.begin(), fixed.end(), [&](const auto& pe) {
    return fits(out.pages[pe.first], pe.second, pos);
  });
  if (clean) clean = place_groups(out, groups, 0, pos);
  if (clean) require_block_locality(out, block, pos);
  if (!clean) {
    for (auto& page : out.pages)
      std::erase_if(page, [&](const Edge& e) {
        return std::find(added.begin(), added.end(), e) != added.end();
      });
    for (const auto& [page, e] : fixed) out.pages[page].push_back(e);
    out.normalize_pages();
    return {repair_pages(out, added), true};
  }
  out.normalize_pages();
  return {std::move(out), false};
}

BookEmbedding embed_recursive(const HalinGraph& h, EmbedTrace* trace) {
  const auto pages = theorem_pages(h.max_degree());

  if (h.is_wheel()) {
    const auto m = h.vertices().size();
    std::unordered_map<VertexId, VertexId> to{{VertexId{0}, h.interior().front()}};
    const auto& rim = h.leaf_cycle().sequence();
    for (std::uint32_t i = 1; i < m; ++i) to[VertexId{i}] = rim[i - 1];
    auto emb = relabel(embed_wheel(m), to);
    if (trace) trace->steps.push_back({h, emb, ExpansionCase::Wheel});
    return emb;
  }

  const auto w = pick_fan_center(h);
  auto [reduced, rec] = contract_fan(h, w);
  const auto sub = embed_recursive(reduced, trace);
  auto [normalized, orientation] = normalize_for_expansion(sub, rec.cycle_predecessor,
                                                           rec.contracted, rec.cycle_successor);
  rec.pages = HostPages{*normalized.page_of(Edge(rec.contracted, rec.third_neighbor)),
                        *normalized.page_of(Edge(rec.contracted, rec.cycle_predecessor)),
                        *normalized.page_of(Edge(rec.contracted, rec.cycle_successor))};

  const auto delta = h.max_degree();
  const auto deg_w = rec.k() + 1;
  ExpansionCase kind;
  if (delta == 3)
    kind = ExpansionCase::Cubic;
  else if (deg_w < delta)
    kind = ExpansionCase::LowDegreeCenter;
  else if (reduced.max_degree() == 3)
    kind = ExpansionCase::CubicToMaxDegree;
  else
    kind = ExpansionCase::MaxDegreeCenter;

  auto expanded = expand_impl(normalized, rec, pages);
  const auto report = validate(h.graph(), expanded.embedding);
  if (!report.clean())
    throw ConstructionFailure("expanded embedding failed validation", graph_to_json(h).dump());
  if (trace)
    trace->steps.push_back({h, expanded.embedding, kind, orientation, expanded.repaired});
  return std::move(expanded.embedding);
}

}  // namespace

std::size_t theorem_pages(std::size_t max_degree) { return max_degree == 3 ? 4 : max_degree; }

BookEmbedding embed_wheel(std::size_t m) {
  if (m < 4) throw ContractViolation("wheel W_m needs m >= 4");
  const auto v = [](std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; };
  const VertexId hub{0};

  if (m == 4) {
    // K_4 on spine (u, v1, v2, v3): the two non-crossing perfect matchings,
    // then the crossing diagonals one per page.
    BookEmbedding emb{CircularOrder({hub, v(1), v(2), v(3)}),
                      {{Edge(hub, v(1)), Edge(v(2), v(3))},
                       {Edge(hub, v(3)), Edge(v(1), v(2))},
                       {Edge(hub, v(2))},
                       {Edge(v(1), v(3))}}};
    emb.normalize_pages();
    return emb;
  }

  const auto split = (m - 1) / 2;
  std::vector<VertexId> seq;
  for (auto i = split; i >= 1; --i) seq.push_back(v(i));
  seq.push_back(hub);
  for (auto i = split + 1; i <= m - 1; ++i) seq.push_back(v(i));

  BookEmbedding emb{CircularOrder(std::move(seq)), {}};
  for (std::size_t i = 1; i <= m - 3; ++i)
    emb.pages.push_back({Edge(hub, v(i)), Edge(v(i + 1), v(i + 2))});
  emb.pages.push_back({Edge(hub, v(m - 2)), Edge(v(m - 1), v(1))});
  emb.pages.push_back({Edge(hub, v(m - 1)), Edge(v(1), v(2))});
  emb.normalize_pages();
  return emb;
}

std::pair<BookEmbedding, Orientation> normalize_for_expansion(const BookEmbedding& emb,
                                                              VertexId x, VertexId contracted,
                                                              VertexId y) {
  if (x == contracted || x == y || contracted == y)
    throw ContractViolation("x, w' and y must be distinct");
  const auto n = emb.spine.size();
  const auto px = emb.spine.position(x);
  const auto pw = emb.spine.position(contracted);
  const auto py = emb.spine.position(y);

  const auto ahead = [n](std::size_t from, std::size_t to) { return (to + n - from) % n; };
  const auto orientation =
      ahead(px, pw) < ahead(px, py) ? Orientation::XThenY : Orientation::YThenX;

  const bool already = orientation == Orientation::XThenY ? (px < pw && pw < py)
                                                          : (py < pw && pw < px);
  if (already) return {emb, orientation};
  const auto start = orientation == Orientation::XThenY ? px : py;
  return {with_spine(emb, rotate(emb.spine, static_cast<long long>(start))), orientation};
}

BookEmbedding repair_pages(const BookEmbedding& emb, const std::vector<Edge>& movable) {
  const auto pos = positions(emb.spine);
  const bool all_placed = std::all_of(movable.begin(), movable.end(), [&](const Edge& e) {
    return emb.page_of(e).has_value();
  });
  if (all_placed && pages_clean(emb, pos)) return emb;

  BookEmbedding out = emb;
  for (auto& page : out.pages)
    std::erase_if(page, [&](const Edge& e) {
      return std::find(movable.begin(), movable.end(), e) != movable.end();
    });
  if (!pages_clean(out, pos))
    throw ConstructionFailure("repair_pages: conflicts remain among immovable edges",
                              describe(emb));

  auto order = movable;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (!place_edges(out, order, 0, pos)) {
    std::ostringstream os;
    os << "repair_pages: no assignment of " << order.size() << " movable edges fits in "
       << out.page_count() << " pages";
    throw ConstructionFailure(os.str(), describe(emb));
  }
  out.normalize_pages();
  return out;
}

BookEmbedding expand_embedding(const BookEmbedding& contracted, const ExpansionRecord& rec,
                               std::size_t target_pages) {
  return expand_impl(contracted, rec, target_pages).embedding;
}

BookEmbedding embed_halin(const HalinGraph& h, EmbedTrace* trace) {
  auto emb = embed_recursive(h, trace);
  const auto report = validate(h.graph(), emb);
  if (!report.clean() || emb.page_count() != theorem_pages(h.max_degree()))
    throw ConstructionFailure("embedding failed certification", graph_to_json(h).dump());
  return emb;
}

}  // namespace halin_book
