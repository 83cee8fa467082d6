#include "nlat/oracle.hpp"

#include <string>

namespace nlat {

namespace {

constexpr int kMaxBruteDim = 16;
constexpr double kCoefEqualTol = 1e-8;

void check_brute_dim(int d) {
  if (d > kMaxBruteDim) {
    throw error(errc::dimension_too_large,
                "exhaustive enumeration refuses d = " + std::to_string(d) + " > 16");
  }
}

}  // namespace

LatticeDecomposition brute_decompose(const GramMatrix& g, int j) {
  const int d = g.dim();
  check_brute_dim(d);

  struct Class {
    Eigen::VectorXd coefficients;
    Subset members_min, members_max;
    std::uint64_t members = 0;
  };
  std::vector<Class> classes;

  const Subset universe = Subset::full(d) - Subset::of({j});
  Subset t;
  while (true) {
    Eigen::VectorXd beta = sem_coefficients(g, j, t).values;
    bool placed = false;
    for (Class& c : classes) {
      if ((beta - c.coefficients).cwiseAbs().maxCoeff() <= kCoefEqualTol) {
        c.members_min = c.members_min & t;
        c.members_max = c.members_max | t;
        ++c.members;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(Class{std::move(beta), t, t, 1});
    if (t == universe) break;
    t = next_subset_of(t, universe);
  }

  LatticeDecomposition dec;
  dec.node = j;
  for (const Class& c : classes) {
    const int width = (c.members_max - c.members_min).count();
    if (c.members != std::uint64_t{1} << width) {
      throw error(errc::class_not_interval,
                  "class [" + c.members_min.to_string() + ", " + c.members_max.to_string() +
                      "] holds " + std::to_string(c.members) + " sets");
    }
    dec.intervals.push_back(NeighborhoodLattice{j, c.members_min, c.members_max});
  }
  return dec;
}

std::vector<PoStatement> brute_enumerate_po(const GramMatrix& g, int j) {
  const int d = g.dim();
  check_brute_dim(d);

  std::vector<PoStatement> out;
  for (int i = 0; i < d; ++i) {
    if (i == j) continue;
    const Subset rest = Subset::full(d) - Subset::of({i, j});
    Subset t;
    while (true) {
      if (po_schur(g, Subset::of({i}), t, Subset::of({j})).orthogonal) {
        out.push_back(PoStatement{j, i, t});
      }
      if (t == rest) break;
      t = next_subset_of(t, rest);
    }
  }
  return out;
}

Subset brute_minimal_separator(const Pcg& p, int j, Subset s) {
  if (s.count() > 20) {
    throw error(errc::set_too_large, "refusing exhaustive sweep over 2^" +
                                         std::to_string(s.count()) + " subsets");
  }
  if (s.contains(j)) {
    throw error(errc::node_in_set, "node " + std::to_string(j + 1) + " is inside the set");
  }

  Subset result = s;  // s itself separates j from the empty remainder
  Subset t;
  while (true) {
    if (separates(p, Subset::of({j}), t, s - t)) result = result & t;
    if (t == s) break;
    t = next_subset_of(t, s);
  }
  return result;
}

}  // namespace nlat
