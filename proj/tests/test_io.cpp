#include "doctest.h"
#include "halin_book/embedder.hpp"
#include "halin_book/errors.hpp"
#include "halin_book/io.hpp"
#include "halin_book/verification.hpp"

using namespace halin_book;

TEST_CASE("halin documents round-trip over the small corpus") {
  auto corpus = enumerate_halin(9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) corpus.push_back(random_halin(8, 4, seed));
  for (const auto& h : corpus) {
    const auto text = graph_to_json(h).dump();
    const auto back = halin_from_document(parse_graph_document(text));
    CHECK(back.graph == h);
    CHECK(graph_to_json(back.graph).dump() == text);

    const auto emb = embed_halin(h);
    const auto etext = embedding_to_json(emb).dump();
    const auto eback = embedding_from_document(parse_embedding_document(etext), back.labels);
    CHECK(validate(h.graph(), eback).clean());
    CHECK(eback.page_count() == emb.page_count());
    CHECK(embedding_to_json(eback).dump() == etext);
  }
}

TEST_CASE("named labels follow declaration order") {
  const std::string text = R"({"schema_version":1,"vertices":["hub","a","b","c"],
    "tree_edges":[["hub","a"],["hub","b"],["hub","c"]],"leaf_cycle":["a","b","c"]})";
  const auto parsed = halin_from_document(parse_graph_document(text));
  CHECK(parsed.graph == wheel(4));
  CHECK(parsed.labels.id("hub") == VertexId{0});
  CHECK(parsed.labels.name(VertexId{3}) == "c");
  CHECK_THROWS_AS(parsed.labels.id("d"), DocumentError);

  const Labels numeric(std::vector<std::string>{"7", "3", "10"});
  CHECK(numeric.id("10") == VertexId{10});
  const Labels mixed(std::vector<std::string>{"7", "03"});
  CHECK(mixed.id("03") == VertexId{1});
}

TEST_CASE("generic documents") {
  const std::string text =
      R"({"schema_version":1,"vertices":["0","1","2","3"],"edges":[["0","1"],["1","2"],["2","3"],["3","0"]]})";
  const auto doc = parse_graph_document(text);
  CHECK(doc.is_generic());
  const auto parsed = graph_from_document(doc);
  CHECK(parsed.graph == cycle_graph(4));
  CHECK_THROWS_AS(halin_from_document(doc), DocumentError);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_graph_document("{"), DocumentError);
  CHECK_THROWS_AS(parse_graph_document("[]"), DocumentError);
  CHECK_THROWS_AS(parse_graph_document(R"({"schema_version":2,"vertices":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_embedding_document(R"({"schema_version":1,"spine":[1,2]})"),
                  DocumentError);

  // degree-2 interior vertex
  const std::string path = R"({"schema_version":1,"vertices":["0","1","2","3","4"],
    "tree_edges":[["0","1"],["0","2"],["0","3"],["3","4"]],"leaf_cycle":["1","2","4"]})";
  CHECK_THROWS_AS(halin_from_document(parse_graph_document(path)), InvalidHalin);

  const std::string dup = R"({"schema_version":1,"vertices":["0","1","2","3"],
    "tree_edges":[["0","1"],["0","2"],["0","3"]],"leaf_cycle":["1","2","2"]})";
  CHECK_THROWS(halin_from_document(parse_graph_document(dup)));

  const auto labels = Labels::numeric(wheel(4).vertices());
  const std::string stray = R"({"schema_version":1,"spine":["0","1","2","9"],"pages":[]})";
  CHECK_THROWS_AS(embedding_from_document(parse_embedding_document(stray), labels),
                  DocumentError);
}
