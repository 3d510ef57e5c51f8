#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "halin_book/commands.hpp"

namespace cli = halin_book::cli;

int main(int argc, char** argv) {
  CLI::App app{"Matching book embeddings of Halin graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::optional<std::size_t> limit;
  std::optional<std::string> witness;
  std::string format = "svg";
  app.add_option("--seed", seed, "Seed for random generation");
  app.add_option("--limit", limit, "Vertex guard for the exact oracle and enumeration");
  app.add_option("--witness", witness, "Write the optimal embedding found by mbt here");
  app.add_option("--format", format, "Render format")->check(CLI::IsMember({"svg", "dot"}));

  cli::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit Halin graph documents");
  gen_cmd->add_option("kind", gen.kind, "wheel | prism | random | enumerate")->required();
  gen_cmd->add_option("parameter", gen.parameter,
                      "wheel: m; random: interior vertices; enumerate: max vertices");
  gen_cmd->add_option("--max-child", gen.max_child, "random: most children per vertex");

  std::string graph_path, embedding_path;
  std::string counterexample_dir = ".";
  auto* embed_cmd = app.add_subcommand("embed", "Construct an optimal matching book embedding");
  embed_cmd->add_option("graph", graph_path, "Halin graph document, - for stdin")->required();
  embed_cmd->add_option("--counterexample-dir", counterexample_dir);

  auto* verify_cmd = app.add_subcommand("verify", "Check an embedding against a graph");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("embedding", embedding_path)->required();

  cli::MbtOptions mbt;
  auto* mbt_cmd = app.add_subcommand("mbt", "Exact matching book thickness by search");
  mbt_cmd->add_option("graph", mbt.graph_path)->required();
  mbt_cmd->add_flag("--no-halin", mbt.generic, "Read a generic vertices + edges document");

  cli::TheoremCheckOptions check;
  auto* check_cmd =
      app.add_subcommand("theorem-check", "Embed, verify and compare every small Halin graph");
  check_cmd->add_option("--max-vertices", check.max_vertices)->default_val(9);
  check_cmd->add_option("--counterexample-dir", check.counterexample_dir);

  auto* render_cmd = app.add_subcommand("render", "Draw a verified embedding");
  render_cmd->add_option("graph", graph_path)->required();
  render_cmd->add_option("embedding", embedding_path)->required();

  CLI11_PARSE(app, argc, argv);

  cli::Streams io{std::cin, std::cout, std::cerr};
  if (*gen_cmd) {
    gen.seed = seed;
    gen.limit = limit;
    return cli::cmd_gen(gen, io);
  }
  if (*embed_cmd) return cli::cmd_embed(graph_path, counterexample_dir, io);
  if (*verify_cmd) return cli::cmd_verify(graph_path, embedding_path, io);
  if (*mbt_cmd) {
    mbt.limit = limit;
    mbt.witness_path = witness;
    return cli::cmd_mbt(mbt, io);
  }
  if (*check_cmd) {
    check.limit = limit;
    return cli::cmd_theorem_check(check, io);
  }
  return cli::cmd_render(graph_path, embedding_path, format, io);
}
