#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "halin_book/embedder.hpp"
#include "halin_book/errors.hpp"
#include "halin_book/verification.hpp"

using namespace halin_book;

namespace {

VertexId V(std::uint32_t i) { return VertexId{i}; }

bool same_page(const BookEmbedding& emb, const Edge& a, const Edge& b) {
  return emb.page_of(a).has_value() && emb.page_of(a) == emb.page_of(b);
}

// Contracted embedding of h's first fan, normalized with host pages filled in.
struct Prepared {
  HalinGraph reduced;
  ExpansionRecord rec;
  BookEmbedding sub;
};

Prepared prepare(const HalinGraph& h) {
  auto [reduced, rec] = contract_fan(h, pick_fan_center(h));
  auto [sub, orientation] = normalize_for_expansion(embed_halin(reduced), rec.cycle_predecessor,
                                                    rec.contracted, rec.cycle_successor);
  rec.pages = HostPages{*sub.page_of(Edge(rec.contracted, rec.third_neighbor)),
                        *sub.page_of(Edge(rec.contracted, rec.cycle_predecessor)),
                        *sub.page_of(Edge(rec.contracted, rec.cycle_successor))};
  return {reduced, rec, sub};
}

// Hub a=0 with leaves 2..5 and neighbour b=1; b has leaves 6..8.
HalinGraph two_hubs_5_4() {
  return make_halin({Edge(V(0), V(1)), Edge(V(0), V(2)), Edge(V(0), V(3)), Edge(V(0), V(4)),
                     Edge(V(0), V(5)), Edge(V(1), V(6)), Edge(V(1), V(7)), Edge(V(1), V(8))},
                    make_order({2, 3, 4, 5, 6, 7, 8}));
}

}  // namespace

TEST_CASE("embed_wheel page counts and validity") {
  for (std::size_t m = 4; m <= 12; ++m) {
    CAPTURE(m);
    const auto emb = embed_wheel(m);
    CHECK(validate(wheel(m).graph(), emb).clean());
    CHECK(emb.page_count() == (m == 4 ? 4 : m - 1));
  }
  CHECK_THROWS_AS(embed_wheel(3), ContractViolation);
}

TEST_CASE("embed_wheel(5) follows the page table") {
  const auto emb = embed_wheel(5);
  CHECK(emb.spine == make_order({2, 1, 0, 3, 4}));
  const VertexId u{0};
  CHECK(same_page(emb, Edge(u, V(1)), Edge(V(2), V(3))));
  CHECK(same_page(emb, Edge(u, V(2)), Edge(V(3), V(4))));
  CHECK(same_page(emb, Edge(u, V(3)), Edge(V(4), V(1))));
  CHECK(same_page(emb, Edge(u, V(4)), Edge(V(1), V(2))));
}

TEST_CASE("the K4 witness is optimal") {
  CHECK(exact_mbt(wheel(4).graph()).pages == 4);
  CHECK(embed_wheel(4).page_count() == 4);
}

TEST_CASE("normalize_for_expansion") {
  const auto emb = embed_wheel(6);  // spine 2 1 0 3 4 5
  SUBCASE("already x ... w' ... y") {
    auto [out, o] = normalize_for_expansion(emb, V(1), V(3), V(5));
    CHECK(o == Orientation::XThenY);
    CHECK(out == emb);
  }
  SUBCASE("reflection swaps the cases") {
    auto [out, o] = normalize_for_expansion(with_spine(emb, reflect(emb.spine)), V(1), V(3), V(5));
    CHECK(o == Orientation::YThenX);
    const auto& s = out.spine;
    CHECK(s.position(V(5)) < s.position(V(3)));
    CHECK(s.position(V(3)) < s.position(V(1)));
  }
  SUBCASE("wrapped order gets rotated") {
    auto [out, o] = normalize_for_expansion(emb, V(4), V(2), V(0));
    CHECK(o == Orientation::XThenY);
    CHECK(out.spine.sequence().front() == V(4));
    CHECK(out.pages == emb.pages);
  }
  CHECK_THROWS_AS(normalize_for_expansion(emb, V(1), V(9), V(5)), ContractViolation);
  CHECK_THROWS_AS(normalize_for_expansion(emb, V(1), V(1), V(5)), ContractViolation);
}

TEST_CASE("normalize_for_expansion preserves validity on random embeddings") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = random_halin(1 + seed % 5, 3 + seed % 3, seed);
    auto emb = embed_halin(h);
    emb = with_spine(emb, rotate(emb.spine, static_cast<long long>(rng() % emb.spine.size())));
    if (rng() % 2) emb = with_spine(emb, reflect(emb.spine));
    auto leaves = h.leaf_cycle().sequence();
    std::shuffle(leaves.begin(), leaves.end(), rng);
    auto [out, o] = normalize_for_expansion(emb, leaves[0], leaves[1], leaves[2]);
    CHECK(validate(h.graph(), out).clean());
    CHECK(out.page_count() == emb.page_count());
  }
}

TEST_CASE("expand_embedding: prism from K4 follows the two-leaf table") {
  const auto prism = triangular_prism();
  const auto p = prepare(prism);
  REQUIRE(p.rec.k() == 2);
  const auto emb = expand_embedding(p.sub, p.rec, 4);
  CHECK(validate(prism.graph(), emb).clean());
  CHECK(emb.page_count() == 4);

  const auto& r = p.rec;
  const auto& hosts = *r.pages;
  const auto w = r.center, u = r.third_neighbor, x = r.cycle_predecessor, y = r.cycle_successor;
  const auto v1 = r.fan[0], v2 = r.fan[1];
  CHECK(emb.page_of(Edge(w, u)) == hosts.of_u);
  CHECK(emb.page_of(Edge(v1, x)) == hosts.of_x);
  CHECK(emb.page_of(Edge(v2, y)) == hosts.of_y);
  CHECK(emb.page_of(Edge(w, v2)) == hosts.of_x);
  CHECK(emb.page_of(Edge(w, v1)) == hosts.of_y);
  const std::set<std::size_t> used{hosts.of_u, hosts.of_x, hosts.of_y};
  CHECK_FALSE(used.count(*emb.page_of(Edge(v1, v2))));

  // Spine block v1, w, v2 sits where w' was.
  const auto& s = emb.spine;
  const auto n = s.size();
  CHECK((s.position(w) + n - s.position(v1)) % n == 1);
  CHECK((s.position(v2) + n - s.position(w)) % n == 1);

  CHECK(exact_mbt(prism.graph()).pages == 4);
}

TEST_CASE("expand_embedding: a fan at a maximum-degree centre") {
  // u=0 with leaves 2,3,4 and neighbour w=1 carrying five leaves 5..9.
  const auto h = make_halin({Edge(V(0), V(1)), Edge(V(0), V(2)), Edge(V(0), V(3)),
                             Edge(V(0), V(4)), Edge(V(1), V(5)), Edge(V(1), V(6)),
                             Edge(V(1), V(7)), Edge(V(1), V(8)), Edge(V(1), V(9))},
                            make_order({2, 3, 4, 5, 6, 7, 8, 9}));
  REQUIRE(h.max_degree() == 6);
  auto [reduced, rec] = contract_fan(h, V(1));
  REQUIRE(rec.k() == 5);
  auto [sub, o] = normalize_for_expansion(embed_halin(reduced), rec.cycle_predecessor,
                                          rec.contracted, rec.cycle_successor);
  rec.pages = HostPages{*sub.page_of(Edge(rec.contracted, rec.third_neighbor)),
                        *sub.page_of(Edge(rec.contracted, rec.cycle_predecessor)),
                        *sub.page_of(Edge(rec.contracted, rec.cycle_successor))};
  const auto emb = expand_embedding(sub, rec, rec.k() + 1);
  CHECK(validate(h.graph(), emb).clean());
  CHECK(emb.page_count() == h.max_degree());

  const auto w = rec.center;
  const auto v = [&](std::size_t i) { return rec.fan[i - 1]; };
  const auto k = rec.k();
  CHECK(same_page(emb, Edge(w, rec.third_neighbor), Edge(v(1), v(2))));
  CHECK(same_page(emb, Edge(w, v(k)), Edge(v(1), rec.cycle_predecessor)));
  CHECK(same_page(emb, Edge(w, v(k - 1)), Edge(v(k), rec.cycle_successor)));
  for (std::size_t i = 4; i <= k + 1; ++i)
    CHECK(same_page(emb, Edge(w, v(i - 3)), Edge(v(i - 2), v(i - 1))));

  // Spine block v3 v2 v1 w v4 v5.
  std::vector<VertexId> block{v(3), v(2), v(1), w, v(4), v(5)};
  const auto start = emb.spine.position(block.front());
  const auto n = emb.spine.size();
  for (std::size_t j = 0; j < block.size(); ++j)
    CHECK(emb.spine.sequence()[(start + j) % n] == block[j]);
}

TEST_CASE("expand_embedding preconditions") {
  const auto p = prepare(triangular_prism());
  CHECK_THROWS_AS(expand_embedding(p.sub, p.rec, 3), ContractViolation);
  auto missing = p.rec;
  missing.pages.reset();
  CHECK_THROWS_AS(expand_embedding(p.sub, missing, 4), ContractViolation);
  auto wrong = p.rec;
  std::swap(wrong.pages->of_u, wrong.pages->of_x);
  CHECK_THROWS_AS(expand_embedding(p.sub, wrong, 4), ContractViolation);
}

TEST_CASE("repair_pages") {
  const auto emb = embed_wheel(6);
  SUBCASE("valid input is returned unchanged") {
    CHECK(repair_pages(emb, {emb.pages[0].front()}) == emb);
  }
  SUBCASE("a conflicting edge moves to a free page") {
    auto bad = emb;
    bad.pages.emplace_back();
    const Edge spoke(V(0), V(4));
    const auto from = *bad.page_of(spoke);
    std::erase(bad.pages[from], spoke);
    bad.pages[0].push_back(spoke);
    REQUIRE_FALSE(validate(wheel(6).graph(), bad).clean());
    const auto fixed = repair_pages(bad, {spoke});
    CHECK(validate(wheel(6).graph(), fixed).clean());
    CHECK(fixed.page_count() == bad.page_count());
  }
  SUBCASE("no assignment within the page count") {
    BookEmbedding k4{make_order({0, 1, 2, 3}), {{}, {}, {}}};
    CHECK_THROWS_AS(repair_pages(k4, complete_graph(4).edges()), ConstructionFailure);
  }
}

TEST_CASE("repair_pages with every edge movable agrees with the fixed-spine oracle") {
  std::mt19937_64 rng(23);
  for (const auto& h : enumerate_halin(8)) {
    const auto& g = h.graph();
    auto spine = g.vertices();
    std::shuffle(spine.begin(), spine.end(), rng);
    const CircularOrder order(spine);
    const auto needed = min_pages_for_spine(g, order);

    BookEmbedding enough{order, std::vector<std::vector<Edge>>(needed)};
    enough.pages[0] = g.edges();
    CHECK(validate(g, repair_pages(enough, g.edges())).clean());

    BookEmbedding too_few{order, std::vector<std::vector<Edge>>(needed - 1)};
    too_few.pages[0] = g.edges();
    CHECK_THROWS_AS(repair_pages(too_few, g.edges()), ConstructionFailure);
  }
}

TEST_CASE("embed_halin examples") {
  CHECK(embed_halin(wheel(8)).page_count() == 7);
  CHECK(embed_halin(triangular_prism()).page_count() == 4);

  const auto h = two_hubs_5_4();
  REQUIRE(h.max_degree() == 5);
  const auto emb = embed_halin(h);
  CHECK(emb.page_count() == 5);
  CHECK(validate(h.graph(), emb).clean());
  CHECK(exact_mbt(h.graph()).pages == 5);
}

TEST_CASE("embed_halin trace: depth, cases and spine symmetry") {
  std::set<ExpansionCase> seen;
  auto check_trace = [&](const HalinGraph& h) {
    EmbedTrace trace;
    const auto emb = embed_halin(h, &trace);
    REQUIRE(trace.steps.size() == h.interior().size());
    CHECK(trace.steps.front().kind == ExpansionCase::Wheel);
    CHECK(trace.steps.back().embedding == emb);
    for (std::size_t i = 1; i < trace.steps.size(); ++i)
      CHECK(trace.steps[i].graph.interior().size() == trace.steps[i - 1].graph.interior().size() + 1);
    for (const auto& step : trace.steps) {
      seen.insert(step.kind);
      CHECK_FALSE(step.repaired);
      const auto& g = step.graph.graph();
      REQUIRE(validate(g, step.embedding).clean());
      CHECK(step.embedding.page_count() == theorem_pages(step.graph.max_degree()));
      const auto& s = step.embedding.spine;
      CHECK(validate(g, with_spine(step.embedding, reflect(s))).clean());
      for (long long r = 1; r < static_cast<long long>(s.size()); ++r)
        REQUIRE(validate(g, with_spine(step.embedding, rotate(s, r))).clean());
    }
  };
  for (const auto& h : enumerate_halin(9)) check_trace(h);
  for (std::uint64_t seed = 0; seed < 150; ++seed)
    check_trace(random_halin(1 + seed % 8, 3 + seed % 4, seed));

  CHECK(seen.count(ExpansionCase::Wheel));
  CHECK(seen.count(ExpansionCase::Cubic));
  CHECK(seen.count(ExpansionCase::MaxDegreeCenter));
  CHECK(seen.count(ExpansionCase::LowDegreeCenter));
  CHECK(seen.count(ExpansionCase::CubicToMaxDegree));
}

TEST_CASE("embed_halin over a larger random corpus") {
  for (std::uint64_t seed = 1000; seed < 1600; ++seed) {
    const auto h = random_halin(1 + seed % 15, 3 + seed % 5, seed);
    const auto emb = embed_halin(h);
    REQUIRE(validate(h.graph(), emb).clean());
    REQUIRE(emb.page_count() == theorem_pages(h.max_degree()));
  }
}
