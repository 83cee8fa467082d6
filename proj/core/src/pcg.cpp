#include "nlat/pcg.hpp"

#include <cmath>
#include <string>

namespace nlat {

namespace {

void check_vertex(int i, int d) {
  if (i < 0 || i >= d) {
    throw error(errc::bad_index, "vertex " + std::to_string(i + 1) + " out of range 1.." +
                                     std::to_string(d));
  }
}

// Lattice of j inside the vertex universe `ground` (j excluded from ground).
NeighborhoodLattice lattice_within(const Pcg& p, int j, Subset s, Subset ground) {
  Subset reached = reach_within(p, Subset::of({j}), ground.with(j) - s);
  Subset frontier;
  for (int i : reached) frontier = frontier | p.neighbors(i);
  Subset min = s & frontier;

  Subset still_connected = reach_within(p, Subset::of({j}), ground.with(j) - min);
  Subset max = min | (ground - min - still_connected);
  return NeighborhoodLattice{j, min, max};
}

}  // namespace

Pcg::Pcg(int d) : d_(d) {
  if (d < 1 || d > kMaxDim) {
    throw error(errc::dimension_too_large, "graph dimension must be in 1..64");
  }
  adj_.resize(static_cast<std::size_t>(d));
}

Pcg Pcg::from_edges(int d, std::span<const std::pair<int, int>> edges) {
  Pcg p(d);
  for (auto [i, j] : edges) p.add_edge(i, j);
  return p;
}

void Pcg::add_edge(int i, int j) {
  check_vertex(i, d_);
  check_vertex(j, d_);
  if (i == j) throw error(errc::bad_input, "self-loops are not allowed");
  adj_[static_cast<std::size_t>(i)] = adj_[static_cast<std::size_t>(i)].with(j);
  adj_[static_cast<std::size_t>(j)] = adj_[static_cast<std::size_t>(j)].with(i);
}

std::vector<std::pair<int, int>> Pcg::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d_; ++i) {
    for (int j : adj_[static_cast<std::size_t>(i)]) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

Pcg pcg(const GramMatrix& g) {
  const int d = g.dim();
  Eigen::MatrixXd inv =
      g.entries().llt().solve(Eigen::MatrixXd::Identity(d, d));
  Pcg p(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double partial_corr = std::abs(inv(i, j)) / std::sqrt(inv(i, i) * inv(j, j));
      if (partial_corr > g.tol().zero) p.add_edge(i, j);
    }
  }
  return p;
}

Subset reach_within(const Pcg& p, Subset seed, Subset allowed) {
  Subset reached = seed & allowed;
  Subset frontier = reached;
  while (!frontier.empty()) {
    Subset next;
    for (int i : frontier) next = next | p.neighbors(i);
    frontier = (next & allowed) - reached;
    reached = reached | frontier;
  }
  return reached;
}

bool separates(const Pcg& p, Subset a, Subset c, Subset b) {
  const Subset all = Subset::full(p.dim());
  if (!(a | b | c).is_subset_of(all)) {
    throw error(errc::bad_index, "vertex sets exceed the graph dimension");
  }
  if (!a.disjoint_from(b) || !a.disjoint_from(c) || !b.disjoint_from(c)) {
    throw error(errc::sets_not_disjoint, "a, c, b must be pairwise disjoint");
  }
  return reach_within(p, a, all - c).disjoint_from(b);
}

std::vector<Subset> connected_components(const Pcg& p, Subset within) {
  std::vector<Subset> out;
  Subset remaining = within;
  while (!remaining.empty()) {
    Subset comp = reach_within(p, Subset::of({remaining.min()}), within);
    out.push_back(comp);
    remaining = remaining - comp;
  }
  return out;
}

Subset minimal_separator(const Pcg& p, int j, Subset s) {
  const int d = p.dim();
  check_vertex(j, d);
  if (s.contains(j)) {
    throw error(errc::node_in_set, "node " + std::to_string(j + 1) + " is inside the set");
  }
  if (!s.is_subset_of(Subset::full(d))) {
    throw error(errc::bad_index, "set exceeds the graph dimension");
  }
  Subset reached = reach_within(p, Subset::of({j}), Subset::full(d) - s);
  Subset frontier;
  for (int i : reached) frontier = frontier | p.neighbors(i);
  return s & frontier;
}

NeighborhoodLattice graphical_lattice(const Pcg& p, int j, Subset s) {
  const int d = p.dim();
  check_vertex(j, d);
  if (s.contains(j)) {
    throw error(errc::node_in_set, "node " + std::to_string(j + 1) + " is inside the set");
  }
  if (!s.is_subset_of(Subset::full(d))) {
    throw error(errc::bad_index, "set exceeds the graph dimension");
  }
  return lattice_within(p, j, s, Subset::full(d) - Subset::of({j}));
}

ComponentLattices component_lattices(const Pcg& p, int j, Subset s) {
  const int d = p.dim();
  check_vertex(j, d);
  if (s.contains(j)) {
    throw error(errc::node_in_set, "node " + std::to_string(j + 1) + " is inside the set");
  }

  ComponentLattices out;
  Subset merged_min, merged_max;
  for (Subset comp : connected_components(p, Subset::full(d) - Subset::of({j}))) {
    NeighborhoodLattice lat = lattice_within(p, j, s & comp, comp);
    merged_min = merged_min | lat.min_set;
    merged_max = merged_max | lat.max_set;
    out.parts.push_back(ComponentLattice{comp, lat});
  }
  out.merged = NeighborhoodLattice{j, merged_min, merged_max};
  return out;
}

PerfectnessReport check_perfect(const GramMatrix& g, int max_d) {
  const int d = g.dim();
  if (d > max_d) {
    throw error(errc::dimension_too_large,
                "perfectness check is exponential; refusing d = " + std::to_string(d) +
                    " > max_d = " + std::to_string(max_d));
  }
  const Pcg graph = pcg(g);
  const double zero = g.schur_zero_threshold();
  const Subset all = Subset::full(d);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    const Subset s{mask};
    const Subset rest = all - s;
    if (rest.count() < 2) continue;

    // Residual inner products of everything outside s, in one solve.
    Eigen::MatrixXd h = slice(g.entries(), rest, rest);
    if (!s.empty()) {
      Eigen::MatrixXd cross = slice(g.entries(), s, rest);
      h -= cross.transpose() * slice(g.entries(), s, s).llt().solve(cross);
    }

    std::vector<Subset> comps = connected_components(graph, rest);
    std::vector<int> comp_of(static_cast<std::size_t>(d), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }

    const std::vector<int> vertices = rest.indices();
    for (std::size_t x = 0; x < vertices.size(); ++x) {
      for (std::size_t y = x + 1; y < vertices.size(); ++y) {
        const int i = vertices[x];
        const int j = vertices[y];
        const bool orthogonal = std::abs(h(static_cast<int>(x), static_cast<int>(y))) <= zero;
        const bool separated =
            comp_of[static_cast<std::size_t>(i)] != comp_of[static_cast<std::size_t>(j)];
        if (orthogonal != separated) {
          return PerfectnessReport{
              false, PerfectnessViolation{Subset::of({i}), s, Subset::of({j})}};
        }
      }
    }
  }
  return PerfectnessReport{true, std::nullopt};
}

}  // namespace nlat
