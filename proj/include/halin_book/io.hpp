#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "halin_book/book.hpp"
#include "halin_book/graph.hpp"
#include "halin_book/halin.hpp"

namespace halin_book {

inline constexpr int kSchemaVersion = 1;

using LabelPair = std::pair<std::string, std::string>;

/// Halin input (tree_edges + leaf_cycle) or, for the oracle commands, a
/// generic graph (edges).
struct GraphDocument {
  int schema_version = kSchemaVersion;
  std::vector<std::string> vertices;
  std::vector<LabelPair> tree_edges;
  std::vector<std::string> leaf_cycle;
  std::vector<LabelPair> edges;

  bool is_generic() const noexcept { return tree_edges.empty() && !edges.empty(); }
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

struct EmbeddingDocument {
  int schema_version = kSchemaVersion;
  std::vector<std::string> spine;
  std::vector<std::vector<LabelPair>> pages;

  friend bool operator==(const EmbeddingDocument&, const EmbeddingDocument&) = default;
};

void to_json(nlohmann::json& j, const GraphDocument& doc);
void from_json(const nlohmann::json& j, GraphDocument& doc);
void to_json(nlohmann::json& j, const EmbeddingDocument& doc);
void from_json(const nlohmann::json& j, EmbeddingDocument& doc);

/// Bidirectional map between document labels and vertex ids. When every
/// label is a plain decimal number the id is that number; otherwise ids
/// follow declaration order.
class Labels {
public:
  Labels() = default;
  explicit Labels(const std::vector<std::string>& names);
  /// Decimal labels for the given ids.
  static Labels numeric(const std::vector<VertexId>& ids);

  VertexId id(const std::string& name) const;
  std::string name(VertexId v) const;
  std::vector<VertexId> ids() const;

private:
  std::unordered_map<std::string, VertexId> ids_;
  std::unordered_map<VertexId, std::string> names_;
};

GraphDocument to_document(const HalinGraph& h, const Labels& labels);
GraphDocument to_document(const Graph& g, const Labels& labels);
EmbeddingDocument to_document(const BookEmbedding& emb, const Labels& labels);

struct ParsedHalin {
  HalinGraph graph;
  Labels labels;
};

struct ParsedGraph {
  Graph graph;
  Labels labels;
};

/// Throws DocumentError for label problems and InvalidHalin for structural
/// ones.
ParsedHalin halin_from_document(const GraphDocument& doc);
/// Generic documents use `edges`; Halin documents contribute T ∪ C.
ParsedGraph graph_from_document(const GraphDocument& doc);
BookEmbedding embedding_from_document(const EmbeddingDocument& doc, const Labels& labels);

/// Parses one JSON document; DocumentError on malformed input.
GraphDocument parse_graph_document(const std::string& text);
EmbeddingDocument parse_embedding_document(const std::string& text);

nlohmann::json graph_to_json(const HalinGraph& h);
nlohmann::json embedding_to_json(const BookEmbedding& emb);

}  // namespace halin_book
