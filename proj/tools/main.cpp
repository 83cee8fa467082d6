// Command-line front end: matrix ingestion, one subcommand per library
// operation, JSON (default) or table output, deterministic instance
// generation. All indices are 1-based at this boundary.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nlat/directed.hpp"
#include "nlat/oracle.hpp"
#include "nlat/random.hpp"
#include "nlat/serialize.hpp"

namespace {

using nlat::Json;
using nlat::Subset;

struct GlobalOptions {
  std::string matrix_path;
  std::string format = "json";
  std::optional<double> tol;
  std::uint64_t seed = 0;
};

nlat::Tolerances effective_tol(const GlobalOptions& opts) {
  nlat::Tolerances tol;
  if (opts.tol) {
    tol.zero = *opts.tol;
    tol.det = *opts.tol;
  }
  return tol;
}

nlat::GramMatrix load_gram(const GlobalOptions& opts) {
  if (opts.matrix_path.empty()) {
    throw CLI::ValidationError("--matrix", "a matrix file is required");
  }
  return nlat::validate_gram(nlat::read_matrix_file(opts.matrix_path), effective_tol(opts));
}

int parse_node(int node_1based, int d) {
  if (node_1based < 1 || node_1based > d) {
    throw nlat::error(nlat::errc::bad_index, "node " + std::to_string(node_1based) +
                                                 " out of range 1.." + std::to_string(d));
  }
  return node_1based - 1;
}

Subset parse_set(const std::vector<int>& indices_1based, int d) {
  Subset out;
  for (int idx : indices_1based) {
    if (idx < 1 || idx > d) {
      throw nlat::error(nlat::errc::bad_index, "index " + std::to_string(idx) +
                                                   " out of range 1.." + std::to_string(d));
    }
    out = out.with(idx - 1);
  }
  return out;
}

std::vector<int> parse_perm(const std::vector<int>& perm_1based, int d) {
  std::vector<int> out;
  out.reserve(perm_1based.size());
  for (int v : perm_1based) out.push_back(v - 1);
  if (out.empty()) {
    out.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = i;
  }
  return out;
}

// Plain key/value rendering of a JSON document for --format table.
void render_table(const Json& doc, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_object())) {
        out << pad << key << ":\n";
        render_table(value, out, indent + 2);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (doc.is_array()) {
    for (const auto& item : doc) {
      if (item.is_object()) {
        render_table(item, out, indent);
        out << pad << "-\n";
      } else {
        out << pad << item.dump() << "\n";
      }
    }
  } else {
    out << pad << doc.dump() << "\n";
  }
}

void emit(const Json& doc, const GlobalOptions& opts) {
  if (opts.format == "table") {
    render_table(doc, std::cout);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw nlat::error(nlat::errc::bad_input, "cannot write " + out_path);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighborhood lattices, lattice decompositions and partial-orthogonality "
               "statements of a positive-definite Gram matrix"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--matrix", opts.matrix_path, "Gram matrix file (CSV rows or JSON {d, sigma})");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--tol", opts.tol, "Zero-detection tolerance (default 1e-9, relative)");
  app.add_option("--seed", opts.seed, "Seed for random generation")->capture_default_str();

  int node = 0;
  std::vector<int> set_indices;
  std::vector<int> perm_indices;
  bool all_nodes = false;

  int exit_code = 0;
  const auto guard = [&exit_code](auto&& fn) {
    return [&exit_code, fn]() {
      try {
        fn();
      } catch (const nlat::error& e) {
        Json diag;
        diag["error"] = nlat::to_string(e.code());
        diag["message"] = e.what();
        std::cerr << diag.dump() << "\n";
        exit_code = 1;
      }
    };
  };

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "Validate a Gram matrix file");
  cmd_validate->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    Json out;
    out["valid"] = true;
    out["d"] = g.dim();
    emit(out, opts);
  }));

  // gram-from-data
  std::string data_path;
  auto* cmd_from_data =
      app.add_subcommand("gram-from-data", "Average sample Gram matrix of numeric data rows");
  cmd_from_data->add_option("--data", data_path, "CSV of observation rows")->required();
  cmd_from_data->callback(guard([&] {
    Eigen::MatrixXd rows = nlat::read_matrix_file(data_path);
    nlat::GramMatrix g = nlat::gram_from_samples(rows, effective_tol(opts));
    if (opts.format == "table") {
      std::cout << nlat::write_csv(g.entries());
    } else {
      emit(nlat::gram_json(g), opts);
    }
  }));

  // lattice
  auto* cmd_lattice = app.add_subcommand("lattice", "Neighborhood lattice of a node and set");
  cmd_lattice->add_option("--node", node, "Node (1-based)")->required();
  cmd_lattice->add_option("--set", set_indices, "Conditioning set, comma-separated 1-based")
      ->delimiter(',');
  cmd_lattice->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    const int j = parse_node(node, g.dim());
    nlat::LatticeComputation comp = nlat::compute_lattice(g, j, parse_set(set_indices, g.dim()));
    emit(nlat::lattice_json(comp.lattice, &comp.projections), opts);
  }));

  // decompose
  auto* cmd_decompose = app.add_subcommand("decompose", "Full lattice decomposition of a node");
  cmd_decompose->add_option("--node", node, "Node (1-based)");
  cmd_decompose->add_flag("--all-nodes", all_nodes, "Decompose every node (one worker each)");
  cmd_decompose->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    if (!all_nodes && node == 0) {
      throw nlat::error(nlat::errc::bad_index, "provide --node or --all-nodes");
    }
    if (all_nodes) {
      std::vector<std::future<nlat::LatticeDecomposition>> jobs;
      for (int j = 0; j < g.dim(); ++j) {
        jobs.push_back(std::async(std::launch::async, [&g, j] { return nlat::decompose(g, j); }));
      }
      Json out = Json::array();
      for (auto& job : jobs) out.push_back(nlat::decomposition_json(job.get()));
      emit(out, opts);
    } else {
      const int j = parse_node(node, g.dim());
      emit(nlat::decomposition_json(nlat::decompose(g, j)), opts);
    }
  }));

  // enumerate-po
  auto* cmd_enumerate =
      app.add_subcommand("enumerate-po", "Stream every PO statement of a node as NDJSON");
  cmd_enumerate->add_option("--node", node, "Node (1-based)")->required();
  cmd_enumerate->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    const int j = parse_node(node, g.dim());
    nlat::PoStream stream(nlat::decompose(g, j));
    while (auto st = stream.next()) {
      std::cout << nlat::po_statement_json(*st).dump() << "\n";
    }
  }));

  // count-po
  auto* cmd_count = app.add_subcommand("count-po", "Count the PO statements of a node");
  cmd_count->add_option("--node", node, "Node (1-based)")->required();
  cmd_count->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    const int j = parse_node(node, g.dim());
    Json out;
    out["node"] = j + 1;
    out["po_count"] = nlat::count_po(nlat::decompose(g, j));
    emit(out, opts);
  }));

  // pcg
  bool dot = false;
  auto* cmd_pcg = app.add_subcommand("pcg", "Partial correlation graph of the matrix");
  cmd_pcg->add_flag("--dot", dot, "Emit DOT text instead of JSON");
  cmd_pcg->callback(guard([&] {
    nlat::Pcg p = nlat::pcg(load_gram(opts));
    if (dot) {
      std::cout << nlat::pcg_dot(p);
    } else {
      emit(nlat::pcg_json(p), opts);
    }
  }));

  // separator
  auto* cmd_separator =
      app.add_subcommand("separator", "Minimal subset of --set separating the node from the rest");
  cmd_separator->add_option("--node", node, "Node (1-based)")->required();
  cmd_separator->add_option("--set", set_indices, "Set, comma-separated 1-based")->delimiter(',');
  cmd_separator->callback(guard([&] {
    nlat::Pcg p = nlat::pcg(load_gram(opts));
    const int j = parse_node(node, p.dim());
    const Subset s = parse_set(set_indices, p.dim());
    Json out;
    out["node"] = j + 1;
    out["set"] = nlat::subset_json(s);
    out["separator"] = nlat::subset_json(nlat::minimal_separator(p, j, s));
    emit(out, opts);
  }));

  // graphical-lattice
  bool assume_perfect = false;
  auto* cmd_graphical = app.add_subcommand(
      "graphical-lattice", "Lattice read off the graph; valid only for perfect matrices");
  cmd_graphical->add_option("--node", node, "Node (1-based)")->required();
  cmd_graphical->add_option("--set", set_indices, "Set, comma-separated 1-based")->delimiter(',');
  cmd_graphical
      ->add_flag("--assume-perfect", assume_perfect,
                 "Acknowledge that the matrix is Markov perfect (see check-perfect)")
      ->required();
  cmd_graphical->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    const int j = parse_node(node, g.dim());
    nlat::NeighborhoodLattice lat =
        nlat::graphical_lattice(nlat::pcg(g), j, parse_set(set_indices, g.dim()));
    emit(nlat::lattice_json(lat), opts);
  }));

  // components
  auto* cmd_components = app.add_subcommand(
      "components", "Per-component lattices after removing the node, plus their merge");
  cmd_components->add_option("--node", node, "Node (1-based)")->required();
  cmd_components->add_option("--set", set_indices, "Set, comma-separated 1-based")->delimiter(',');
  cmd_components->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    const int j = parse_node(node, g.dim());
    nlat::ComponentLattices cl =
        nlat::component_lattices(nlat::pcg(g), j, parse_set(set_indices, g.dim()));
    Json components = Json::array();
    Json lattices = Json::array();
    for (const auto& part : cl.parts) {
      components.push_back(nlat::subset_json(part.component));
      Json entry;
      entry["m"] = nlat::subset_json(part.lattice.min_set);
      entry["M"] = nlat::subset_json(part.lattice.max_set);
      lattices.push_back(std::move(entry));
    }
    Json merged;
    merged["m"] = nlat::subset_json(cl.merged.min_set);
    merged["M"] = nlat::subset_json(cl.merged.max_set);
    Json out;
    out["node"] = j + 1;
    out["components"] = std::move(components);
    out["lattices"] = std::move(lattices);
    out["merged"] = std::move(merged);
    emit(out, opts);
  }));

  // directed
  auto* cmd_directed =
      app.add_subcommand("directed", "Recursive-projection factorization for an ordering");
  cmd_directed->add_option("--perm", perm_indices,
                           "Variable ordering, comma-separated 1-based (default identity)")
      ->delimiter(',');
  cmd_directed->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    nlat::SemFactorization f =
        nlat::recursive_projection(g, parse_perm(perm_indices, g.dim()));
    emit(nlat::factorization_json(f), opts);
  }));

  // cholesky-check
  auto* cmd_cholesky = app.add_subcommand(
      "cholesky-check", "Deviation between the factorization and the permuted upper Cholesky");
  cmd_cholesky->add_option("--perm", perm_indices,
                           "Variable ordering, comma-separated 1-based (default identity)")
      ->delimiter(',');
  cmd_cholesky->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    std::vector<int> perm = parse_perm(perm_indices, g.dim());
    nlat::SemFactorization f = nlat::recursive_projection(g, perm);
    Json out;
    Json perm_json = Json::array();
    for (int v : perm) perm_json.push_back(v + 1);
    out["perm"] = std::move(perm_json);
    out["max_deviation"] = nlat::cholesky_correspondence(g, perm);
    out["sem_identity_residual"] = nlat::verify_sem_identity(g, f);
    emit(out, opts);
  }));

  // check-perfect
  int max_d = 10;
  auto* cmd_perfect =
      app.add_subcommand("check-perfect", "Exhaustive graph-vs-algebra perfectness check");
  cmd_perfect->add_option("--max-d", max_d, "Refuse matrices larger than this")
      ->capture_default_str();
  cmd_perfect->callback(guard([&] {
    nlat::PerfectnessReport report = nlat::check_perfect(load_gram(opts), max_d);
    Json out;
    out["perfect"] = report.perfect;
    if (report.counterexample) {
      Json ce;
      ce["A"] = nlat::subset_json(report.counterexample->a);
      ce["S"] = nlat::subset_json(report.counterexample->s);
      ce["B"] = nlat::subset_json(report.counterexample->b);
      out["counterexample"] = std::move(ce);
    }
    emit(out, opts);
  }));

  // verify
  auto* cmd_verify =
      app.add_subcommand("verify", "Compare the fast decomposition against the brute-force oracle");
  cmd_verify->add_option("--node", node, "Node (1-based)")->required();
  cmd_verify->callback(guard([&] {
    nlat::GramMatrix g = load_gram(opts);
    const int j = parse_node(node, g.dim());
    nlat::LatticeDecomposition fast = nlat::decompose(g, j);
    nlat::LatticeDecomposition brute = nlat::brute_decompose(g, j);

    auto key_set = [](const nlat::LatticeDecomposition& dec) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
      for (const auto& iv : dec.intervals) keys.emplace_back(iv.min_set.bits(), iv.max_set.bits());
      std::sort(keys.begin(), keys.end());
      return keys;
    };
    const bool intervals_match = key_set(fast) == key_set(brute);

    std::vector<nlat::PoStatement> brute_po = nlat::brute_enumerate_po(g, j);
    std::vector<nlat::PoStatement> fast_po;
    nlat::PoStream stream(fast);
    while (auto st = stream.next()) fast_po.push_back(*st);
    auto po_key = [](const nlat::PoStatement& st) { return std::pair(st.i, st.t.bits()); };
    auto sort_po = [&po_key](std::vector<nlat::PoStatement>& v) {
      std::sort(v.begin(), v.end(),
                [&po_key](const auto& a, const auto& b) { return po_key(a) < po_key(b); });
    };
    sort_po(fast_po);
    sort_po(brute_po);
    const bool po_match = fast_po.size() == brute_po.size() &&
                          std::equal(fast_po.begin(), fast_po.end(), brute_po.begin());
    const bool count_match = nlat::count_po(fast) == fast_po.size();

    Json out;
    out["node"] = j + 1;
    out["match"] = intervals_match && po_match && count_match;
    out["intervals_match"] = intervals_match;
    out["po_match"] = po_match;
    out["count_match"] = count_match;
    out["K"] = fast.lattice_count();
    out["K_oracle"] = brute.lattice_count();
    out["po_count"] = nlat::count_po(fast);
    emit(out, opts);
    if (!(intervals_match && po_match && count_match)) exit_code = 1;
  }));

  // gen-random
  int gen_d = 0;
  std::optional<double> sparsity;
  std::string out_path;
  auto* cmd_gen = app.add_subcommand(
      "gen-random", "Deterministic random Gram matrix (CSV); --sparsity switches to a sparse "
                    "precision matrix");
  cmd_gen->add_option("--d", gen_d, "Dimension")->required();
  cmd_gen->add_option("--sparsity", sparsity,
                      "Off-diagonal fill probability of the precision matrix");
  cmd_gen->add_option("--out", out_path, "Write to a file instead of stdout");
  cmd_gen->callback(guard([&] {
    if (gen_d < 1 || gen_d > nlat::kMaxDim) {
      throw nlat::error(nlat::errc::dimension_too_large, "dimension must be in 1..64");
    }
    const nlat::Tolerances tol = effective_tol(opts);
    Eigen::MatrixXd m;
    if (sparsity) {
      m = nlat::random_gram_sparse_precision(gen_d, opts.seed, *sparsity, tol).gram.entries();
    } else {
      m = nlat::random_gram_dense(gen_d, opts.seed, tol).entries();
    }
    write_output(nlat::write_csv(m), out_path);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json diag;
    diag["error"] = "Unexpected";
    diag["message"] = e.what();
    std::cerr << diag.dump() << "\n";
    return 1;
  }
  return exit_code;
}
