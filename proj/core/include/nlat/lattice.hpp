#pragma once

#include <cstdint>

#include "nlat/gram.hpp"
#include "nlat/subset.hpp"

namespace nlat {

/// The interval [min_set, max_set] of all conditioning sets that give node
/// `node` the same regression coefficients. min_set is the active set.
struct NeighborhoodLattice {
  int node = -1;
  Subset min_set;
  Subset max_set;

  int width() const { return (max_set - min_set).count(); }
  /// Number of member sets: 2^(|max_set| - |min_set|).
  std::uint64_t size() const { return std::uint64_t{1} << width(); }
  /// Interval membership; throws node_in_set when t contains the node.
  bool contains(Subset t) const;

  friend bool operator==(const NeighborhoodLattice&, const NeighborhoodLattice&) = default;
};

enum class ScanOrder { ascending, descending };

struct LatticeComputation {
  NeighborhoodLattice lattice;
  int projections = 0;  // SEM solves performed; at most d
};

/// One solve gives min_set (the active set); max_set is grown by scanning the
/// remaining candidates once, keeping those that leave the active set
/// unchanged. The scan order does not affect the result.
LatticeComputation compute_lattice(const GramMatrix& g, int j, Subset s,
                                   ScanOrder order = ScanOrder::ascending);

}  // namespace nlat
