#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nlat/lattice.hpp"

namespace nlat {

/// Disjoint lattices partitioning all 2^(d-1) conditioning sets of a node.
struct LatticeDecomposition {
  int node = -1;
  std::vector<NeighborhoodLattice> intervals;  // discovery order

  std::size_t lattice_count() const { return intervals.size(); }  // K_j
  /// Total sets covered; equals 2^(d-1) for a complete decomposition.
  std::uint64_t covered() const;
};

/// Finds a subset of [d] \ {j} not covered by the given disjoint intervals,
/// or nullopt when they cover the whole power set. Runs the Q(S) descent:
/// Q(S) counts covered supersets of S, and as long as the current S is
/// covered but Q(S) < 2^(d-1-|S|), some extension by one element keeps the
/// deficit, so an uncovered set is reached in at most d-1 steps. Detects
/// overlapping intervals via Q(empty) > 2^(d-1).
std::optional<Subset> find_uncovered(int d, int j, std::span<const NeighborhoodLattice> intervals);

/// Full lattice decomposition of node j: seeds with the lattice of the full
/// set [d] \ {j}, then alternates find_uncovered / compute_lattice until the
/// power set is covered. Discovery order is deterministic.
LatticeDecomposition decompose(const GramMatrix& g, int j);

/// One partial-orthogonality statement: j and i orthogonal given t.
struct PoStatement {
  int j = -1;
  int i = -1;
  Subset t;
  friend bool operator==(const PoStatement&, const PoStatement&) = default;
};

/// Pull-based stream over every PO statement a decomposition encodes, each
/// exactly once: intervals in order, i ascending over max \ min, then t
/// ascending in bitmask order over [min, max \ {i}]. Counts grow like
/// 2^width, so statements are produced lazily rather than materialized.
class PoStream {
 public:
  explicit PoStream(const LatticeDecomposition& dec);
  std::optional<PoStatement> next();

 private:
  void enter_interval();

  int node_;
  std::vector<NeighborhoodLattice> intervals_;
  std::size_t k_ = 0;   // current interval
  Subset i_rest_;       // members of max \ min not yet used as i
  Subset t_;            // current conditioning subset of free_
  Subset free_;         // (max \ min) \ {i}
  bool t_done_ = true;
};

/// Number of statements the stream yields: sum over intervals of
/// width * 2^(width-1). Throws dimension_too_large if the count overflows
/// 64 bits.
std::uint64_t count_po(const LatticeDecomposition& dec);

}  // namespace nlat
