#include "nlat/decomposition.hpp"

#include <string>

namespace nlat {

namespace {

using u128 = unsigned __int128;

// Number of covered supersets of S: sum over intervals of
// [S subset of max] * 2^|(max \ min) \ S|.
u128 q_count(Subset s, std::span<const NeighborhoodLattice> intervals) {
  u128 total = 0;
  for (const auto& iv : intervals) {
    if (s.is_subset_of(iv.max_set)) {
      total += u128{1} << ((iv.max_set - iv.min_set) - s).count();
    }
  }
  return total;
}

bool is_covered(Subset s, std::span<const NeighborhoodLattice> intervals) {
  for (const auto& iv : intervals) {
    if (iv.min_set.is_subset_of(s) && s.is_subset_of(iv.max_set)) return true;
  }
  return false;
}

}  // namespace

std::uint64_t LatticeDecomposition::covered() const {
  std::uint64_t total = 0;
  for (const auto& iv : intervals) total += iv.size();
  return total;
}

std::optional<Subset> find_uncovered(int d, int j,
                                     std::span<const NeighborhoodLattice> intervals) {
  const Subset universe = Subset::full(d) - Subset::of({j});
  const int r = universe.count();
  for (const auto& iv : intervals) {
    if (!iv.min_set.is_subset_of(iv.max_set) || !iv.max_set.is_subset_of(universe)) {
      throw error(errc::bad_input, "interval out of the node's ground set");
    }
  }

  const u128 full = u128{1} << r;
  const u128 q0 = q_count(Subset{}, intervals);
  if (q0 > full) {
    throw error(errc::overlapping_intervals,
                "intervals cover more sets than exist; they must be disjoint");
  }
  if (q0 == full) return std::nullopt;

  Subset s;
  while (true) {
    if (!is_covered(s, intervals)) return s;
    // S covered, Q(S) short of 2^(r-|S|): some extension keeps the deficit.
    const u128 bound = u128{1} << (r - s.count() - 1);
    bool grown = false;
    for (int i : universe - s) {
      if (q_count(s.with(i), intervals) < bound) {
        s = s.with(i);
        grown = true;
        break;
      }
    }
    if (!grown) {
      throw error(errc::overlapping_intervals,
                  "descent stalled; intervals are not disjoint");
    }
  }
}

LatticeDecomposition decompose(const GramMatrix& g, int j) {
  const int d = g.dim();
  LatticeDecomposition dec;
  dec.node = j;

  const Subset universe = Subset::full(d) - Subset::of({j});
  dec.intervals.push_back(compute_lattice(g, j, universe).lattice);
  while (auto s = find_uncovered(d, j, dec.intervals)) {
    dec.intervals.push_back(compute_lattice(g, j, *s).lattice);
  }

  if (dec.covered() != std::uint64_t{1} << universe.count()) {
    throw error(errc::overlapping_intervals, "decomposition does not partition the power set");
  }
  return dec;
}

PoStream::PoStream(const LatticeDecomposition& dec)
    : node_(dec.node), intervals_(dec.intervals) {
  enter_interval();
}

void PoStream::enter_interval() {
  while (k_ < intervals_.size()) {
    const auto& iv = intervals_[k_];
    i_rest_ = iv.max_set - iv.min_set;
    if (!i_rest_.empty()) {
      free_ = i_rest_.without(i_rest_.min());
      t_ = Subset{};
      t_done_ = false;
      return;
    }
    ++k_;  // width-0 interval encodes no statements
  }
}

std::optional<PoStatement> PoStream::next() {
  while (k_ < intervals_.size()) {
    if (t_done_) {
      // advance i within the interval, or move to the next interval
      i_rest_ = i_rest_.without(i_rest_.min());
      if (i_rest_.empty()) {
        ++k_;
        enter_interval();
        continue;
      }
      free_ = (intervals_[k_].max_set - intervals_[k_].min_set) - Subset::of({i_rest_.min()});
      t_ = Subset{};
      t_done_ = false;
    }
    PoStatement out{node_, i_rest_.min(), intervals_[k_].min_set | t_};
    if (t_ == free_) {
      t_done_ = true;
    } else {
      t_ = next_subset_of(t_, free_);
    }
    return out;
  }
  return std::nullopt;
}

std::uint64_t count_po(const LatticeDecomposition& dec) {
  u128 total = 0;
  for (const auto& iv : dec.intervals) {
    const int w = iv.width();
    if (w > 0) total += static_cast<u128>(w) << (w - 1);
  }
  if (total > static_cast<u128>(UINT64_MAX)) {
    throw error(errc::dimension_too_large, "statement count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace nlat
