#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "treecolor/constructions.hpp"
#include "treecolor/embedder.hpp"
#include "treecolor/hypergraph.hpp"
#include "treecolor/hypertree.hpp"
#include "treecolor/io.hpp"
#include "treecolor/oracles.hpp"
#include "treecolor/ramsey.hpp"

namespace {

using namespace treecolor;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

int cmd_validate_tree(const std::string& path) {
  Hypergraph h = load_hypergraph(path);
  if (h.edge_count() == 0) {
    std::cout << "no-edges\n";
    return kExitSemantic;
  }
  auto res = recognize_rtree(h);
  if (auto* tr = std::get_if<RTree>(&res)) {
    std::cout << "OK r=" << tr->tree.uniformity() << " t=" << tr->t << "\n";
    return kExitOk;
  }
  std::cout << to_string(std::get<TreeDefect>(res)) << "\n";
  return kExitSemantic;
}

RTree load_tree(const std::string& path) {
  Hypergraph g = load_hypergraph(path);
  if (g.edge_count() == 0) throw SemanticError(path + ": not a tree (no edges)");
  auto res = recognize_rtree(g);
  if (auto* tr = std::get_if<RTree>(&res)) return *tr;
  throw SemanticError(path + ": not a tree (" +
                      to_string(std::get<TreeDefect>(res)) + ")");
}

int cmd_color_or_embed(const std::string& host_path,
                       const std::string& tree_path, std::optional<int> t_flag,
                       std::optional<int> root_flag, bool want_trace,
                       const std::string& out_path) {
  Hypergraph host = load_hypergraph(host_path);
  RTree tr = load_tree(tree_path);
  if (host.uniformity() != tr.tree.uniformity())
    throw SemanticError("host is " + std::to_string(host.uniformity()) +
                        "-uniform but tree is " +
                        std::to_string(tr.tree.uniformity()) + "-uniform");
  const int t = t_flag.value_or(tr.t);
  if (t != tr.t)
    throw SemanticError("--t " + std::to_string(t) +
                        " does not match the tree's edge count " +
                        std::to_string(tr.t));
  const int root = root_flag.value_or(default_root_choice(tr));
  if (root < 0 || root >= tr.t)
    throw SemanticError("--root out of range 0.." + std::to_string(tr.t - 1));

  Trace trace;
  Certificate cert =
      color_or_embed(host, tr, t, root, want_trace ? &trace : nullptr);
  if (want_trace)
    for (const TraceEvent& ev : trace)
      if (auto* rec = std::get_if<Recolored>(&ev))
        std::cout << "recolor v=" << rec->step.host_vertex << " "
                  << rec->step.old_color << "->" << rec->step.new_color
                  << " (s=" << rec->step.s << ")\n";
  std::cout << (cert.is_coloring() ? "COLORING" : "EMBEDDING") << "\n";
  const bool ok = validate_certificate(host, tr, t, cert);
  std::cout << "valid=" << (ok ? "true" : "false") << "\n";
  if (!out_path.empty()) write_file(out_path, serialize_certificate(cert));
  return ok ? kExitOk : kExitSemantic;
}

int cmd_chromatic(const std::string& path, int max_n) {
  Hypergraph h = load_hypergraph(path);
  oracles::OracleBudget budget;
  budget.max_vertices = max_n;
  const int chi = oracles::chromatic_number(h, budget);
  std::cout << chi << "\n";
  auto witness = oracles::is_k_colorable(h, chi, budget);
  for (size_t i = 0; i < witness->colors.size(); ++i)
    std::cout << (i ? " " : "") << witness->colors[i];
  std::cout << "\n";
  return kExitOk;
}

int cmd_generate(const std::string& family, int n, int r, int t, int k,
                 std::uint64_t seed, const std::string& out_path) {
  std::optional<Hypergraph> h;
  if (family == "complete") h = complete_r_graph(n, r);
  else if (family == "tight-gadget") h = tight_gadget(r, t);
  else if (family == "star-example") h = star_example(n);
  else if (family == "ramsey-lower") h = ramsey_lower(r, k, t);
  else if (family == "tree-path") h = tree_path(r, t).tree;
  else if (family == "tree-star") h = tree_star(r, t).tree;
  else if (family == "tree-random") h = random_tree(r, t, seed).tree;
  else throw SemanticError("unknown family: " + family);
  emit(serialize_hypergraph(*h), out_path);
  return kExitOk;
}

int cmd_ramsey(int r, int k, int t, bool lower, bool slow) {
  if (lower) {
    ramsey::LowerReport rep = ramsey::verify_lower(r, k, t);
    std::cout << "n=" << rep.n << "\n"
              << "blue_independence=" << rep.blue_independence << "\n"
              << "independence_ok=" << (rep.independence_ok ? "true" : "false")
              << "\n"
              << "trees_checked=" << rep.trees_checked << "\n"
              << "blue_tree_free=" << (rep.blue_tree_free ? "true" : "false")
              << "\n"
              << "divisible=" << (rep.divisible ? "true" : "false") << "\n"
              << "upper_bound=" << rep.upper_bound_n << "\n"
              << "tightness="
              << (rep.tight ? "certified" : "not-certified") << "\n";
    return rep.independence_ok && rep.blue_tree_free ? kExitOk : kExitSemantic;
  }
  RTree tr = tree_path(r, t);
  ramsey::UpperReport rep = ramsey::verify_upper(
      r, k, t, tr, slow ? ramsey::kMaxMaskBits : ramsey::kDefaultMaskBits);
  std::cout << "n=" << rep.n << "\n"
            << "colorings=" << rep.total << "\n"
            << "red_cliques=" << rep.red_cliques << "\n"
            << "blue_trees=" << rep.blue_trees << "\n"
            << "failures=" << rep.failures.size() << "\n";
  return rep.failures.empty() ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "treecolor: proper t-colorings of r-uniform hypergraphs or injective "
      "copies of t-edge hypertrees, with independently checked certificates"};
  app.require_subcommand(1);

  std::string host_path, tree_path_arg, out_path, family;
  std::optional<int> t_flag, root_flag;
  bool want_trace = false, lower = false, slow = false;
  int n = 0, r = 0, t = 0, k = 0, max_n = 12;
  std::uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand(
      "validate-tree", "Check that a hypergraph file is an r-tree");
  validate->add_option("file", host_path, "hypergraph file")->required();

  CLI::App* coe = app.add_subcommand(
      "color-or-embed",
      "Properly color the host with t colors or embed the t-edge tree");
  coe->add_option("host", host_path, "host hypergraph file")->required();
  coe->add_option("tree", tree_path_arg, "tree hypergraph file")->required();
  coe->add_option("--t", t_flag, "palette size (must equal the tree's t)");
  coe->add_option("--root", root_flag, "root edge index of the tree");
  coe->add_flag("--trace", want_trace, "print recolor events");
  coe->add_option("--out", out_path, "write the certificate to a file");

  CLI::App* chrom =
      app.add_subcommand("chromatic", "Exact chromatic number by backtracking");
  chrom->add_option("file", host_path, "hypergraph file")->required();
  chrom->add_option("--max-n", max_n, "largest vertex count accepted");

  CLI::App* gen = app.add_subcommand("generate", "Write a named hypergraph");
  gen->add_option("family", family,
                  "complete | tight-gadget | star-example | ramsey-lower | "
                  "tree-path | tree-star | tree-random")
      ->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--r", r, "uniformity");
  gen->add_option("--t", t, "edge count parameter");
  gen->add_option("--k", k, "clique size parameter");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* ram = app.add_subcommand(
      "ramsey", "Exhaustive check of the clique-vs-tree Ramsey bound");
  ram->add_option("--r", r, "uniformity")->required();
  ram->add_option("--k", k, "red clique size")->required();
  ram->add_option("--t", t, "blue tree edge count")->required();
  ram->add_flag("--lower", lower, "check the blue-blocks lower construction");
  ram->add_flag("--slow", slow, "allow enumeration up to 2^21 colorings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate_tree(host_path);
    if (coe->parsed())
      return cmd_color_or_embed(host_path, tree_path_arg, t_flag, root_flag,
                                want_trace, out_path);
    if (chrom->parsed()) return cmd_chromatic(host_path, max_n);
    if (gen->parsed())
      return cmd_generate(family, n, r, t, k, seed, out_path);
    if (ram->parsed()) return cmd_ramsey(r, k, t, lower, slow);
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const oracles::BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}
