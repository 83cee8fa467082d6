#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nlat/gram.hpp"
#include "nlat/lattice.hpp"

namespace nlat {

/// Undirected graph on [0, d), no self-loops. Adjacency is kept as one
/// bitmask row per vertex, so reachability runs on whole-word operations.
class Pcg {
 public:
  explicit Pcg(int d);
  static Pcg from_edges(int d, std::span<const std::pair<int, int>> edges);

  int dim() const { return d_; }
  bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i)].contains(j); }
  void add_edge(int i, int j);
  Subset neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
  std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic

  friend bool operator==(const Pcg&, const Pcg&) = default;

 private:
  int d_;
  std::vector<Subset> adj_;
};

/// Partial correlation graph of g: edge (i,j) present iff the (i,j) entry of
/// the inverse, normalized to a partial correlation, is nonzero.
Pcg pcg(const GramMatrix& g);

/// True iff every path from a to b meets c. Empty a or b is vacuously
/// separated. Throws sets_not_disjoint on overlapping inputs.
bool separates(const Pcg& p, Subset a, Subset c, Subset b);

/// Vertices reachable from `seed` walking only inside `allowed` (seed
/// members outside `allowed` are dropped).
Subset reach_within(const Pcg& p, Subset seed, Subset allowed);

/// Connected components of the subgraph induced on `within`, ordered by
/// smallest vertex.
std::vector<Subset> connected_components(const Pcg& p, Subset within);

/// The smallest subset of s separating j from the rest of s: the s-vertices
/// on the frontier of the region reachable from j without entering s.
Subset minimal_separator(const Pcg& p, int j, Subset s);

/// Lattice of node j read off the graph: min is the minimal separator of s,
/// max adds every vertex that min separates from j. Matches the algebraic
/// computation exactly when the generating Gram matrix is perfect.
NeighborhoodLattice graphical_lattice(const Pcg& p, int j, Subset s);

struct ComponentLattice {
  Subset component;
  NeighborhoodLattice lattice;  // restricted to component + {j}
};

struct ComponentLattices {
  std::vector<ComponentLattice> parts;  // one per component of p with j removed
  NeighborhoodLattice merged;           // disjoint union of the parts
};

/// Splits the graph at j and computes the lattice per connected component;
/// the merged lattice equals graphical_lattice on the whole graph.
ComponentLattices component_lattices(const Pcg& p, int j, Subset s);

struct PerfectnessViolation {
  Subset a, s, b;
};

struct PerfectnessReport {
  bool perfect = false;
  std::optional<PerfectnessViolation> counterexample;
};

/// Exhaustively compares graph separation in pcg(g) with the Schur test over
/// every conditioning set. Pairwise endpoints suffice: both separation and
/// partial orthogonality hold for set endpoints exactly when they hold for
/// every pair drawn from them. Exponential in d; refuses d > max_d.
PerfectnessReport check_perfect(const GramMatrix& g, int max_d = 10);

}  // namespace nlat
