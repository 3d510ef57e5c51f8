#include "halin_book/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "halin_book/errors.hpp"

namespace halin_book {

using nlohmann::json;

namespace {

json pairs_to_json(const std::vector<LabelPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

std::vector<LabelPair> pairs_from_json(const json& j, const char* field) {
  std::vector<LabelPair> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw DocumentError(std::string(field) + ": every entry must be a pair of labels");
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

void check_schema(const json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const auto version = j.value("schema_version", 0);
  if (version != kSchemaVersion)
    throw DocumentError("unsupported schema_version " + std::to_string(version));
}

bool is_decimal(const std::string& s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), ::isdigit) &&
         (s == "0" || s.front() != '0');
}

std::vector<LabelPair> named(const std::vector<Edge>& edges, const Labels& labels) {
  std::vector<LabelPair> out;
  for (const auto& e : edges) out.emplace_back(labels.name(e.first()), labels.name(e.second()));
  return out;
}

std::vector<Edge> resolved(const std::vector<LabelPair>& pairs, const Labels& labels) {
  std::vector<Edge> out;
  for (const auto& [a, b] : pairs) {
    const auto ia = labels.id(a), ib = labels.id(b);
    if (ia == ib) throw DocumentError("edge (" + a + "," + b + ") is a loop");
    out.emplace_back(ia, ib);
  }
  return out;
}

std::vector<VertexId> resolved(const std::vector<std::string>& names, const Labels& labels) {
  std::vector<VertexId> out;
  for (const auto& n : names) out.push_back(labels.id(n));
  return out;
}

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw DocumentError(std::string(what) + " repeats label " + n);
}

}  // namespace

void to_json(json& j, const GraphDocument& doc) {
  j = json{{"schema_version", doc.schema_version}, {"vertices", doc.vertices}};
  if (doc.is_generic()) {
    j["edges"] = pairs_to_json(doc.edges);
  } else {
    j["tree_edges"] = pairs_to_json(doc.tree_edges);
    j["leaf_cycle"] = doc.leaf_cycle;
  }
}

void from_json(const json& j, GraphDocument& doc) {
  check_schema(j);
  doc.schema_version = kSchemaVersion;
  doc.vertices = j.at("vertices").get<std::vector<std::string>>();
  doc.tree_edges = pairs_from_json(j.value("tree_edges", json::array()), "tree_edges");
  doc.leaf_cycle = j.value("leaf_cycle", std::vector<std::string>{});
  doc.edges = pairs_from_json(j.value("edges", json::array()), "edges");
}

void to_json(json& j, const EmbeddingDocument& doc) {
  json pages = json::array();
  for (const auto& page : doc.pages) pages.push_back(pairs_to_json(page));
  j = json{{"schema_version", doc.schema_version}, {"spine", doc.spine}, {"pages", pages}};
}

void from_json(const json& j, EmbeddingDocument& doc) {
  check_schema(j);
  doc.schema_version = kSchemaVersion;
  doc.spine = j.at("spine").get<std::vector<std::string>>();
  doc.pages.clear();
  for (const auto& page : j.at("pages")) doc.pages.push_back(pairs_from_json(page, "pages"));
}

Labels::Labels(const std::vector<std::string>& names) {
  require_unique(names, "vertex list");
  const bool numeric = std::all_of(names.begin(), names.end(), is_decimal);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const VertexId id{numeric ? static_cast<std::uint32_t>(std::stoul(names[i]))
                              : static_cast<std::uint32_t>(i)};
    ids_[names[i]] = id;
    names_[id] = names[i];
  }
}

Labels Labels::numeric(const std::vector<VertexId>& ids) {
  std::vector<std::string> names;
  for (auto v : ids) names.push_back(std::to_string(v.value));
  return Labels(names);
}

VertexId Labels::id(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw DocumentError("unknown vertex label '" + name + "'");
  return it->second;
}

std::string Labels::name(VertexId v) const {
  auto it = names_.find(v);
  return it == names_.end() ? std::to_string(v.value) : it->second;
}

std::vector<VertexId> Labels::ids() const {
  std::vector<VertexId> out;
  for (const auto& [v, n] : names_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

GraphDocument to_document(const HalinGraph& h, const Labels& labels) {
  GraphDocument doc;
  for (auto v : h.vertices()) doc.vertices.push_back(labels.name(v));
  doc.tree_edges = named(h.tree_edges(), labels);
  for (auto v : h.leaf_cycle().sequence()) doc.leaf_cycle.push_back(labels.name(v));
  return doc;
}

GraphDocument to_document(const Graph& g, const Labels& labels) {
  GraphDocument doc;
  for (auto v : g.vertices()) doc.vertices.push_back(labels.name(v));
  doc.edges = named(g.edges(), labels);
  return doc;
}

EmbeddingDocument to_document(const BookEmbedding& emb, const Labels& labels) {
  EmbeddingDocument doc;
  const auto spine = emb.spine.canonical_cut();
  for (auto v : spine.sequence()) doc.spine.push_back(labels.name(v));
  for (auto page : emb.pages) {
    std::sort(page.begin(), page.end());
    doc.pages.push_back(named(page, labels));
  }
  return doc;
}

ParsedHalin halin_from_document(const GraphDocument& doc) {
  if (doc.is_generic())
    throw DocumentError("expected a Halin document (tree_edges + leaf_cycle), got a generic graph");
  Labels labels(doc.vertices);
  require_unique(doc.leaf_cycle, "leaf_cycle");
  auto h = make_halin(resolved(doc.vertices, labels), resolved(doc.tree_edges, labels),
                      CircularOrder(resolved(doc.leaf_cycle, labels)));
  return {std::move(h), std::move(labels)};
}

ParsedGraph graph_from_document(const GraphDocument& doc) {
  if (!doc.is_generic()) {
    auto parsed = halin_from_document(doc);
    return {parsed.graph.graph(), std::move(parsed.labels)};
  }
  Labels labels(doc.vertices);
  auto edges = resolved(doc.edges, labels);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw DocumentError("edge list contains a parallel edge");
  return {Graph(resolved(doc.vertices, labels), std::move(edges)), std::move(labels)};
}

BookEmbedding embedding_from_document(const EmbeddingDocument& doc, const Labels& labels) {
  require_unique(doc.spine, "spine");
  BookEmbedding emb{CircularOrder(resolved(doc.spine, labels)), {}};
  for (const auto& page : doc.pages) emb.pages.push_back(resolved(page, labels));
  emb.normalize_pages();
  return emb;
}

GraphDocument parse_graph_document(const std::string& text) {
  try {
    return json::parse(text).get<GraphDocument>();
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed graph document: ") + e.what());
  }
}

EmbeddingDocument parse_embedding_document(const std::string& text) {
  try {
    return json::parse(text).get<EmbeddingDocument>();
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed embedding document: ") + e.what());
  }
}

json graph_to_json(const HalinGraph& h) {
  return to_document(h, Labels::numeric(h.vertices()));
}

json embedding_to_json(const BookEmbedding& emb) {
  return to_document(emb, Labels::numeric(emb.spine.sequence()));
}

}  // namespace halin_book
