// pairlat: classify the gauge-equivariant representations of a graph
// correspondence by kernel--covariance pairs.
//
// Subcommands: check, lattice, meet, join, morphism, dilate, realize, fock.
// Exit codes: 0 = query answered (negative answers included),
//             1 = invalid input,
//             2 = unsupported exact computation (e.g. realize on a cycle).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pairlat/pairlat.hpp"

namespace {

using pairlat::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pairlat::Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Arguments are inline JSON when they start with '{' or '[', file paths
// otherwise.
std::string inline_or_file(const std::string& arg) {
  for (char c : arg) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{' || c == '[') return arg;
    break;
  }
  return slurp(arg);
}

pairlat::Graph load_graph(const std::string& arg) {
  return pairlat::parse_graph(inline_or_file(arg));
}

pairlat::Pair load_pair(const std::string& arg) {
  return pairlat::parse_pair(inline_or_file(arg));
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"kernel--covariance pair lattices of graph correspondences"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::vector<std::string> pair_args;
  std::string from_arg, to_kernel_arg, format = "json";
  std::optional<int> truncate;
  bool verify = false;
  std::vector<int> embed_levels;

  auto* check = app.add_subcommand("check", "validate a graph document");
  check->add_option("graph", graph_arg, "graph file or inline JSON")
      ->required();

  auto* lattice =
      app.add_subcommand("lattice", "enumerate the pair lattice with covers");
  lattice->add_option("graph", graph_arg)->required();
  lattice->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* meet = app.add_subcommand("meet", "greatest lower bound of pairs");
  meet->add_option("graph", graph_arg)->required();
  meet->add_option("--pair", pair_args, "pair file or inline JSON (repeat)")
      ->required();

  auto* join = app.add_subcommand("join", "least upper bound of pairs");
  join->add_option("graph", graph_arg)->required();
  join->add_option("--pair", pair_args)->required();

  auto* morphism = app.add_subcommand(
      "morphism", "least pair over a kernel admitting a connecting morphism");
  morphism->add_option("graph", graph_arg)->required();
  morphism->add_option("--from", from_arg, "pair file or inline JSON")
      ->required();
  morphism->add_option("--to-kernel", to_kernel_arg, "vertex list JSON")
      ->required();

  auto* dilate = app.add_subcommand("dilate", "Katsura dilation graph");
  dilate->add_option("graph", graph_arg)->required();
  dilate->add_option("--pair", pair_args)->required();

  auto* realize = app.add_subcommand(
      "realize", "exact Fock realization dimensions (acyclic only)");
  realize->add_option("graph", graph_arg)->required();
  realize->add_option("--pair", pair_args)->required();

  auto* fock = app.add_subcommand("fock", "Fock matrices and relation checks");
  fock->add_option("graph", graph_arg)->required();
  fock->add_option("--truncate", truncate, "basis truncation level");
  fock->add_flag("--verify", verify, "check the representation relations");
  fock->add_option("--embed", embed_levels,
                   "run the level-n embedding norm check (repeat)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // malformed command lines are invalid input
  }

  if (check->parsed()) {
    pairlat::Graph g = load_graph(graph_arg);
    json doc;
    doc["status"] = "ok";
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    emit(doc);
    return 0;
  }

  if (lattice->parsed()) {
    pairlat::PairLattice lat = pairlat::enumerate_pairs(load_graph(graph_arg));
    if (format == "dot")
      std::cout << pairlat::lattice_to_dot(lat);
    else
      emit(pairlat::lattice_to_json(lat));
    return 0;
  }

  if (meet->parsed() || join->parsed()) {
    pairlat::Graph g = load_graph(graph_arg);
    std::vector<pairlat::Pair> ps;
    for (const std::string& a : pair_args) ps.push_back(load_pair(a));
    pairlat::Pair result =
        meet->parsed() ? pairlat::meet(g, ps) : pairlat::join(g, ps);
    emit(pairlat::pair_to_json(result));
    return 0;
  }

  if (morphism->parsed()) {
    pairlat::Graph g = load_graph(graph_arg);
    pairlat::Pair from = load_pair(from_arg);
    pairlat::VertexSet l;
    try {
      l = pairlat::vertex_set_from_json(json::parse(inline_or_file(to_kernel_arg)));
    } catch (const json::exception& e) {
      throw pairlat::Error(std::string("malformed vertex set: ") + e.what());
    }
    std::optional<pairlat::Pair> result = pairlat::min_covariance_to(g, from, l);
    json doc;
    doc["exists"] = result.has_value();
    if (result) doc["pair"] = pairlat::pair_to_json(*result);
    emit(doc);
    return 0;
  }

  if (dilate->parsed()) {
    pairlat::Graph g = load_graph(graph_arg);
    if (pair_args.size() != 1) throw pairlat::Error("dilate takes one --pair");
    emit(pairlat::dilation_to_json(
        pairlat::katsura_dilation(g, load_pair(pair_args.front()))));
    return 0;
  }

  if (realize->parsed()) {
    pairlat::Graph g = load_graph(graph_arg);
    if (pair_args.size() != 1) throw pairlat::Error("realize takes one --pair");
    emit(pairlat::realize_to_json(
        pairlat::realize_dims(g, load_pair(pair_args.front()))));
    return 0;
  }

  if (fock->parsed()) {
    pairlat::Graph g = load_graph(graph_arg);
    pairlat::FockRep f = pairlat::build_fock(
        g, truncate ? std::optional<int>(*truncate) : std::nullopt);
    json doc;
    doc["basis_size"] = f.dim();
    if (f.truncation)
      doc["truncation"] = *f.truncation;
    else
      doc["truncation"] = nullptr;
    if (verify) {
      json rel = pairlat::relations_to_json(pairlat::check_relations(f));
      doc["guarded_max_length"] = rel["guarded_max_length"];
      doc["relations"] = rel["relations"];
    }
    if (!embed_levels.empty()) {
      if (!f.truncation)
        throw pairlat::Error("--embed needs --truncate to fix the level bound");
      doc["embedding"] = json::array();
      for (int n : embed_levels)
        doc["embedding"].push_back(pairlat::embedding_to_json(
            pairlat::katsura_embedding_check(g, n, *f.truncation)));
    }
    emit(doc);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pairlat::UnsupportedError& e) {
    json doc;
    doc["status"] = "unsupported";
    doc["errors"] = json::array({e.what()});
    emit(doc);
    return 2;
  } catch (const pairlat::Error& e) {
    json doc;
    doc["status"] = "invalid-input";
    doc["errors"] = json::array({e.what()});
    emit(doc);
    return 1;
  } catch (const std::exception& e) {
    json doc;
    doc["status"] = "invalid-input";
    doc["errors"] = json::array({e.what()});
    emit(doc);
    return 1;
  } catch (...) {
    std::fputs("{\"status\":\"invalid-input\",\"errors\":[\"unexpected error\"]}\n",
               stdout);
    return 1;
  }
}
