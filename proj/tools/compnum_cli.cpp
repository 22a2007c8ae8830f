// compnum: generators, constructions, verifiers and exact oracles for
// competition numbers of Hamming graphs.
//
// Exit codes: 0 success/PASS, 2 FAIL verdict, 3 resource limit,
// 64 usage or domain error, 65 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "compnum/bounds.hpp"
#include "compnum/cliques.hpp"
#include "compnum/competition.hpp"
#include "compnum/constructions.hpp"
#include "compnum/errors.hpp"
#include "compnum/io.hpp"

namespace {

using namespace compnum;

constexpr int kExitFail = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Output {
  std::string emit = "json";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
  }
};

void add_output(CLI::App* cmd, Output& out, bool with_none = false) {
  auto* emit = cmd->add_option("--emit", out.emit, "Output format")->capture_default_str();
  if (with_none) {
    emit->check(CLI::IsMember({"json", "dot", "none"}));
  } else {
    emit->check(CLI::IsMember({"json", "dot"}));
  }
  cmd->add_option("--output", out.path, "Write to PATH instead of stdout");
}

// The product graph whose tuple vertices are exactly `vertices`.
Graph product_host(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) throw DomainError("digraph has no tuple vertices; pass --graph");
  const Dims& dims = vertices.front().dims();
  Graph g = std::all_of(dims.begin(), dims.end(), [&](int q) { return q == dims.front(); })
                ? hamming_graph(static_cast<int>(dims.size()), dims.front())
                : box_graph(dims);
  if (g.vertices() != vertices) {
    throw DomainError("tuple vertices are not a full product box; pass --graph");
  }
  return g;
}

void emit_realization(const Realization& r, const Output& out) {
  if (out.emit == "json") out.write(io::dump(io::to_json(r)));
  if (out.emit == "dot") out.write(io::to_dot(r.digraph));
}

int run(int argc, char** argv) {
  CLI::App app{"Competition numbers of Hamming graphs: constructions, verifiers, oracles"};
  app.require_subcommand(1);
  app.allow_extras(false);

  Limits limits;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a Hamming or box graph");
  gen->require_subcommand(1);
  int gen_n = 0;
  int gen_q = 0;
  std::vector<int> gen_dims;
  Output gen_out;
  auto* gen_hamming = gen->add_subcommand("hamming", "H(n,q)");
  gen_hamming->add_option("--n", gen_n)->required();
  gen_hamming->add_option("--q", gen_q)->required();
  add_output(gen_hamming, gen_out);
  auto* gen_box = gen->add_subcommand("box", "K_q1 box ... box K_qn");
  gen_box->add_option("--dims", gen_dims)->required()->delimiter(',');
  add_output(gen_box, gen_out);
  for (auto* cmd : {gen_hamming, gen_box}) {
    cmd->add_option("--max-vertices", limits.max_vertices)->capture_default_str();
  }

  // construct
  auto* construct = app.add_subcommand("construct", "Build a realization digraph");
  construct->require_subcommand(1);
  int con_q = 0;
  std::vector<int> con_dims;
  bool con_verify = false;
  Output con_out;
  auto* con_h2q = construct->add_subcommand("h2q", "H(2,q) with two isolated preys");
  con_h2q->add_option("--q", con_q)->required();
  auto* con_box = construct->add_subcommand("box", "K_q1 box K_q2 box K_q3 with six isolated preys");
  con_box->add_option("--dims", con_dims)->required()->delimiter(',');
  con_box->add_option("--max-vertices", limits.max_vertices)->capture_default_str();
  auto* con_h32 = construct->add_subcommand("h32-base", "H(3,2) base case with six isolated preys");
  for (auto* cmd : {con_h2q, con_box, con_h32}) {
    add_output(cmd, con_out, true);
    cmd->add_flag("--verify", con_verify, "Verify the result; verdict on stderr");
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Check C(D) = G plus k isolated vertices");
  std::string ver_realization;
  std::string ver_graph;
  std::optional<int> ver_k;
  verify->add_option("--realization", ver_realization, "Realization or digraph JSON")->required();
  verify->add_option("--graph", ver_graph, "Graph JSON (default: product box of the digraph)");
  verify->add_option("--k", ver_k, "Number of isolated vertices (default: as in the file)");

  // compute
  auto* compute = app.add_subcommand("compute", "Exact oracles");
  compute->require_subcommand(1);
  std::string comp_input;
  std::optional<int> comp_k_max;
  std::string comp_witness;
  auto* comp_k = compute->add_subcommand("k", "Competition number by exhaustive search");
  comp_k->add_option("--k-max", comp_k_max, "Give up above this k (default |E|)");
  comp_k->add_option("--limit", limits.competition_vertices, "Vertex limit")->capture_default_str();
  comp_k->add_option("--witness", comp_witness, "Write a witness realization JSON to PATH");
  auto* comp_opsut = compute->add_subcommand("opsut", "min theta_V of open neighbourhoods");
  auto* comp_theta_e = compute->add_subcommand("theta-e", "Edge clique cover number");
  auto* comp_theta_v = compute->add_subcommand("theta-v", "Vertex clique cover number");
  for (auto* cmd : {comp_opsut, comp_theta_e, comp_theta_v}) {
    cmd->add_option("--limit", limits.theta_vertices, "Vertex limit")->capture_default_str();
  }
  for (auto* cmd : {comp_k, comp_opsut, comp_theta_e, comp_theta_v}) {
    cmd->add_option("--input", comp_input, "Graph JSON")->required();
  }

  // check
  auto* check = app.add_subcommand("check", "Counting checks on realizations");
  check->require_subcommand(1);
  std::string chk_realization;
  std::string chk_family;
  int chk_k = 0;
  auto* chk_counting = check->add_subcommand("counting", "|{S in F : S meets v_1..v_i}| <= k+i-1");
  chk_counting->add_option("--realization", chk_realization)->required();
  chk_counting->add_option("--k", chk_k)->required();
  chk_counting->add_option("--family", chk_family, "Clique family JSON (default: axis lines)");

  // table
  auto* table = app.add_subcommand("table", "Closed-form values");
  table->require_subcommand(1);
  int tab_n = 0;
  int tab_q = 0;
  auto* tab_known = table->add_subcommand("known", "k(H(n,q)) where proven");
  tab_known->add_option("--n", tab_n)->required();
  tab_known->add_option("--q", tab_q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen_hamming->parsed() || gen_box->parsed()) {
    const Graph g = gen_hamming->parsed() ? hamming_graph(gen_n, gen_q, limits)
                                          : box_graph(gen_dims, limits);
    gen_out.write(gen_out.emit == "json" ? io::dump(io::to_json(g)) : io::to_dot(g));
    return 0;
  }

  if (construct->parsed()) {
    Realization r;
    Graph g;
    if (con_h2q->parsed()) {
      r = build_h2q(con_q);
      g = hamming_graph(2, con_q);
    } else if (con_box->parsed()) {
      r = build_box(con_dims, limits);
      g = box_graph(con_dims, limits);
    } else {
      r = build_h32_base();
      g = hamming_graph(3, 2);
    }
    emit_realization(r, con_out);
    if (con_verify) {
      const Verdict verdict = verify_realization(r, g);
      std::cerr << verdict.line() << "\n";
      if (!verdict.pass) return kExitFail;
    }
    return 0;
  }

  if (verify->parsed()) {
    const io::Json doc = io::read_file(ver_realization);
    const bool full = doc.is_object() && doc.value("kind", "") == "realization";
    Realization r;
    if (full) {
      r = io::realization_from_json(doc);
    } else {
      r.digraph = io::digraph_from_json(doc);
    }
    const Graph g = ver_graph.empty() ? product_host(r.digraph.vertices())
                                      : io::graph_from_json(io::read_file(ver_graph));
    const int k = ver_k.value_or(r.digraph.isolated_count());
    Verdict verdict = verify_realization(r.digraph, g, k);
    if (verdict.pass && full) verdict = verify_realization(r, g);
    std::cout << verdict.line() << "\n";
    return verdict.pass ? 0 : kExitFail;
  }

  if (compute->parsed()) {
    const Graph g = io::graph_from_json(io::read_file(comp_input));
    if (comp_k->parsed()) {
      const auto result = competition_number_bruteforce(g, comp_k_max, limits);
      if (!result.k) {
        std::cout << "exceeds " << comp_k_max.value_or(static_cast<int>(g.edge_count())) << "\n";
        return 0;
      }
      std::cout << *result.k << "\n";
      if (!comp_witness.empty()) {
        Output{"json", comp_witness}.write(io::dump(io::to_json(*result.witness)));
      }
    } else if (comp_opsut->parsed()) {
      std::cout << opsut_lower_bound(g, limits) << "\n";
    } else if (comp_theta_e->parsed()) {
      std::cout << theta_e_bruteforce(g, limits) << "\n";
    } else {
      std::cout << theta_v_bruteforce(g, limits) << "\n";
    }
    return 0;
  }

  if (chk_counting->parsed()) {
    const Realization r = io::realization_from_json(io::read_file(chk_realization));
    const CliqueFamily family = chk_family.empty()
                                    ? canonical_family(product_host(r.digraph.vertices()))
                                    : io::family_from_json(io::read_file(chk_family));
    const CountingVerdict verdict = check_counting_inequality(r, family, chk_k);
    std::cout << verdict.line() << "\n";
    return verdict.pass ? 0 : kExitFail;
  }

  if (tab_known->parsed()) {
    const auto value = known_competition_number(tab_n, tab_q);
    std::cout << (value ? std::to_string(*value) : std::string("unknown")) << "\n";
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const compnum::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const compnum::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitData;
  } catch (const compnum::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
