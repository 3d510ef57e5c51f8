#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace halin_book::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidCertificate = 1,
  kBadInput = 2,
  kConstructionFailure = 3,
  kGuardExceeded = 4,
};

/// Where commands read "-" from and write to.
struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct GenOptions {
  std::string kind;  // wheel | prism | random | enumerate
  std::size_t parameter = 0;
  std::uint64_t seed = 0;
  std::size_t max_child = 4;
  std::optional<std::size_t> limit;
};

struct MbtOptions {
  std::string graph_path;
  bool generic = false;
  std::optional<std::size_t> limit;
  std::optional<std::string> witness_path;
};

struct TheoremCheckOptions {
  std::size_t max_vertices = 9;
  std::optional<std::size_t> limit;
  std::string counterexample_dir = ".";
};

int cmd_gen(const GenOptions& opts, Streams io);
int cmd_embed(const std::string& graph_path, const std::string& counterexample_dir, Streams io);
int cmd_verify(const std::string& graph_path, const std::string& embedding_path, Streams io);
int cmd_mbt(const MbtOptions& opts, Streams io);
int cmd_theorem_check(const TheoremCheckOptions& opts, Streams io);
int cmd_render(const std::string& graph_path, const std::string& embedding_path,
               const std::string& format, Streams io);

}  // namespace halin_book::cli
