#include "halin_book/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "halin_book/embedder.hpp"
#include "halin_book/errors.hpp"
#include "halin_book/io.hpp"
#include "halin_book/render.hpp"
#include "halin_book/verification.hpp"

namespace halin_book::cli {

namespace {

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw DocumentError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw DocumentError("cannot write " + path);
  file << text;
}

// Writes the instance next to other counterexamples; the name is a hash of
// the content so reruns overwrite rather than accumulate.
std::string save_counterexample(const std::string& dir, const std::string& instance) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : instance) hash = (hash ^ c) * 1099511628211ull;
  std::ostringstream name;
  name << "counterexample-" << std::hex << std::setw(16) << std::setfill('0') << hash << ".json";
  std::filesystem::create_directories(dir);
  const auto path = (std::filesystem::path(dir) / name.str()).string();
  write_text(path, instance + "\n");
  return path;
}

OracleLimits limits_for(const std::optional<std::size_t>& limit) {
  auto limits = OracleLimits::from_environment();
  if (limit) limits.max_vertices = *limit;
  return limits;
}

void report_violations(const ValidationReport& report, const Labels& labels, std::ostream& os) {
  auto edge = [&](const Edge& e) {
    return "(" + labels.name(e.first()) + "," + labels.name(e.second()) + ")";
  };
  for (const auto& c : report.crossings)
    os << "crossing on page " << c.page << ": " << edge(c.first) << " x " << edge(c.second)
       << "\n";
  for (const auto& m : report.matching_violations)
    os << "matching violation on page " << m.page << ": vertex " << labels.name(m.vertex)
       << " has " << m.incident_edges << " edges\n";
  for (const auto& e : report.missing_or_duplicate_edges)
    os << "edge " << edge(e) << " is missing, duplicated, or not in the graph\n";
}

struct Certificate {
  ParsedGraph graph;
  BookEmbedding embedding;
  ValidationReport report;
};

Certificate load_certificate(const std::string& graph_path, const std::string& embedding_path,
                             std::istream& in) {
  auto parsed = graph_from_document(parse_graph_document(read_text(graph_path, in)));
  auto emb = embedding_from_document(
      parse_embedding_document(read_text(embedding_path, in)), parsed.labels);
  auto spine = emb.spine.sequence();
  std::sort(spine.begin(), spine.end());
  if (spine != parsed.graph.vertices())
    throw DocumentError("spine does not list every vertex of the graph exactly once");
  auto report = validate(parsed.graph, emb);
  return {std::move(parsed), std::move(emb), std::move(report)};
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvalidHalin& e) {
    err << "error: input is not a valid Halin graph\n";
    for (const auto& issue : e.issues()) err << "  - " << issue << "\n";
    return kBadInput;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "; rerun with --limit to raise the guard\n";
    return kGuardExceeded;
  }
}

}  // namespace

int cmd_gen(const GenOptions& opts, Streams io) {
  return guarded(io.err, [&] {
    auto emit = [&](const HalinGraph& h) { io.out << graph_to_json(h).dump() << "\n"; };
    if (opts.kind == "wheel") {
      emit(wheel(opts.parameter));
    } else if (opts.kind == "prism") {
      emit(triangular_prism());
    } else if (opts.kind == "random") {
      emit(random_halin(opts.parameter, opts.max_child, opts.seed));
    } else if (opts.kind == "enumerate") {
      const auto guard = std::max(HalinEnumeration::kDefaultGuard, opts.limit.value_or(0));
      HalinEnumeration stream(opts.parameter, guard);
      while (auto h = stream.next()) emit(*h);
    } else {
      io.err << "error: unknown generator '" << opts.kind
             << "' (expected wheel, prism, random or enumerate)\n";
      return static_cast<int>(kBadInput);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_embed(const std::string& graph_path, const std::string& counterexample_dir, Streams io) {
  return guarded(io.err, [&] {
    const auto parsed = halin_from_document(parse_graph_document(read_text(graph_path, io.in)));
    try {
      const auto emb = embed_halin(parsed.graph);
      io.out << nlohmann::json(to_document(emb, parsed.labels)).dump() << "\n";
      return static_cast<int>(kOk);
    } catch (const ConstructionFailure& e) {
      const auto path = save_counterexample(counterexample_dir, e.instance());
      io.err << "error: " << e.what() << "\ncounterexample saved to " << path << "\n";
      return static_cast<int>(kConstructionFailure);
    }
  });
}

int cmd_verify(const std::string& graph_path, const std::string& embedding_path, Streams io) {
  return guarded(io.err, [&] {
    const auto cert = load_certificate(graph_path, embedding_path, io.in);
    if (cert.report.clean()) {
      io.out << "VALID " << cert.embedding.page_count() << " pages\n";
      return static_cast<int>(kOk);
    }
    io.out << "INVALID\n";
    report_violations(cert.report, cert.graph.labels, io.out);
    return static_cast<int>(kInvalidCertificate);
  });
}

int cmd_mbt(const MbtOptions& opts, Streams io) {
  return guarded(io.err, [&] {
    const auto doc = parse_graph_document(read_text(opts.graph_path, io.in));
    if (!opts.generic && doc.is_generic())
      throw DocumentError("generic graph documents need --no-halin");
    auto parsed = opts.generic ? graph_from_document(doc) : [&] {
      auto h = halin_from_document(doc);
      return ParsedGraph{h.graph.graph(), std::move(h.labels)};
    }();
    const auto result = exact_mbt(parsed.graph, limits_for(opts.limit));
    io.out << result.pages << "\n";
    if (opts.witness_path)
      write_text(*opts.witness_path,
                 nlohmann::json(to_document(result.witness, parsed.labels)).dump() + "\n");
    return static_cast<int>(kOk);
  });
}

int cmd_theorem_check(const TheoremCheckOptions& opts, Streams io) {
  return guarded(io.err, [&] {
    const auto limits = limits_for(opts.limit);
    const auto guard = std::max(HalinEnumeration::kDefaultGuard, opts.limit.value_or(0));
    HalinEnumeration stream(opts.max_vertices, guard);

    io.out << std::setw(5) << "graph" << std::setw(4) << "n" << std::setw(4) << "Δ"
           << std::setw(7) << "pages" << std::setw(9) << "formula" << std::setw(5) << "mbt"
           << "  result\n";
    std::size_t total = 0, failures = 0;
    while (auto h = stream.next()) {
      ++total;
      const auto n = h->vertices().size();
      const auto delta = h->max_degree();
      const auto formula = theorem_pages(delta);
      std::string pages = "-", mbt = "-", problem;
      try {
        const auto emb = embed_halin(*h);
        pages = std::to_string(emb.page_count());
        if (!validate(h->graph(), emb).clean())
          problem = "embedding failed validation";
        else if (emb.page_count() != formula)
          problem = "page count differs from the formula";
      } catch (const ConstructionFailure& e) {
        problem = e.what();
      }
      if (n <= limits.max_vertices && h->graph().edge_count() <= limits.max_edges) {
        const auto exact = exact_mbt(h->graph(), limits).pages;
        mbt = std::to_string(exact);
        if (problem.empty() && exact != formula) problem = "oracle disagrees with the formula";
      }
      io.out << std::setw(5) << total << std::setw(4) << n << std::setw(3) << delta
             << std::setw(7) << pages << std::setw(9) << formula << std::setw(5) << mbt << "  "
             << (problem.empty() ? "PASS" : "FAIL") << "\n";
      if (!problem.empty()) {
        ++failures;
        const auto path = save_counterexample(opts.counterexample_dir, graph_to_json(*h).dump());
        io.err << "graph " << total << ": " << problem << " (saved to " << path << ")\n";
      }
    }
    if (failures == 0) {
      io.out << "PASS: " << total << " graphs\n";
      return static_cast<int>(kOk);
    }
    io.out << "FAIL: " << failures << " of " << total << " graphs\n";
    return static_cast<int>(kInvalidCertificate);
  });
}

int cmd_render(const std::string& graph_path, const std::string& embedding_path,
               const std::string& format, Streams io) {
  return guarded(io.err, [&] {
    if (format != "svg" && format != "dot")
      throw DocumentError("unknown format '" + format + "' (expected svg or dot)");
    const auto cert = load_certificate(graph_path, embedding_path, io.in);
    if (!cert.report.clean()) {
      io.err << "error: refusing to render an invalid embedding\n";
      report_violations(cert.report, cert.graph.labels, io.err);
      return static_cast<int>(kInvalidCertificate);
    }
    const auto& [graph, labels] = cert.graph;
    io.out << (format == "svg" ? render_svg(graph, cert.embedding, labels)
                               : render_dot(graph, cert.embedding, labels));
    return static_cast<int>(kOk);
  });
}

}  // namespace halin_book::cli
