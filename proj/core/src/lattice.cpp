#include "nlat/lattice.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace nlat {

bool NeighborhoodLattice::contains(Subset t) const {
  if (t.contains(node)) {
    throw error(errc::node_in_set,
                "candidate set contains the lattice node " + std::to_string(node + 1));
  }
  return min_set.is_subset_of(t) && t.is_subset_of(max_set);
}

LatticeComputation compute_lattice(const GramMatrix& g, int j, Subset s, ScanOrder order) {
  const int d = g.dim();
  SemCoefficients base = sem_coefficients(g, j, s);  // validates j and s
  const Subset m = base.support;

  LatticeComputation out;
  out.projections = 1;

  Subset max = s;
  std::vector<int> candidates = (Subset::full(d) - s - Subset::of({j})).indices();
  if (order == ScanOrder::descending) std::reverse(candidates.begin(), candidates.end());

  for (int k : candidates) {
    SemCoefficients proposal = sem_coefficients(g, j, max.with(k));
    ++out.projections;
    if (proposal.support == m) max = max.with(k);
  }

  out.lattice = NeighborhoodLattice{j, m, max};
  return out;
}

}  // namespace nlat
