#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>

#include "nlat/lattice.hpp"
#include "nlat/oracle.hpp"
#include "nlat/random.hpp"
#include "test_support.hpp"

using namespace nlat;

TEST_CASE("star lattices match the exhaustive grouping") {
  GramMatrix g = gram_star(4);

  // node 2, set {1} (1-based): the oracle groups all 8 subsets of {1,3,4}
  LatticeComputation comp = compute_lattice(g, 1, Subset::of({0}));
  CHECK(comp.lattice.min_set == Subset::of({0}));
  CHECK(comp.lattice.max_set == Subset::of({0, 2, 3}));
  CHECK(comp.lattice.size() == 4);
  CHECK(comp.projections <= 4);

  LatticeDecomposition oracle = brute_decompose(g, 1);
  bool found = false;
  for (const auto& iv : oracle.intervals) {
    if (iv.min_set == comp.lattice.min_set && iv.max_set == comp.lattice.max_set) found = true;
  }
  CHECK(found);

  // node 1, set {2}: nothing else is separated from the hub
  comp = compute_lattice(g, 0, Subset::of({1}));
  CHECK(comp.lattice.min_set == Subset::of({1}));
  CHECK(comp.lattice.max_set == Subset::of({1}));
  CHECK(comp.lattice.size() == 1);
}

TEST_CASE("identity matrix gives the full interval") {
  GramMatrix id = validate_gram(Eigen::MatrixXd::Identity(6, 6));
  for (int j = 0; j < 6; ++j) {
    LatticeComputation comp = compute_lattice(id, j, Subset::of({(j + 1) % 6}));
    CHECK(comp.lattice.min_set.empty());
    CHECK(comp.lattice.max_set == Subset::full(6).without(j));
  }

  GramMatrix id15 = validate_gram(Eigen::MatrixXd::Identity(15, 15));
  CHECK(compute_lattice(id15, 2, Subset{}).lattice.size() == 16384);
}

TEST_CASE("interval membership and size") {
  NeighborhoodLattice lat{1, Subset::of({0}), Subset::of({0, 2, 3})};
  CHECK(lat.contains(Subset::of({0, 2})));
  CHECK_FALSE(lat.contains(Subset::of({2})));
  CHECK_THROWS_AS(lat.contains(Subset::of({0, 1})), error);

  // a width-8 interval on 15 variables, 1-based {9,12,14} .. {4,5,7..15}
  NeighborhoodLattice wide{2, Subset::of({8, 11, 13}),
                           Subset::of({3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14})};
  CHECK(wide.size() == 256);
  CHECK(wide.contains(Subset::of({8, 11, 13, 9, 12})));
  CHECK(wide.contains(Subset::of({8, 11, 13, 4})));

  NeighborhoodLattice point{0, Subset::of({1}), Subset::of({1})};
  CHECK(point.size() == 1);
}

TEST_CASE("scan order does not change the lattice") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GramMatrix g = nlat::testing::mixed_instance(7, seed);
    Rng rng(seed * 13 + 5);
    for (int rep = 0; rep < 8; ++rep) {
      const int j = rng.uniform_int(0, 6);
      Subset s = rng.subset_of(Subset::full(7).without(j));
      auto asc = compute_lattice(g, j, s, ScanOrder::ascending);
      auto desc = compute_lattice(g, j, s, ScanOrder::descending);
      CHECK(asc.lattice == desc.lattice);
      // one base solve plus one per candidate outside s
      CHECK(asc.projections <= 7 - asc.lattice.min_set.count());
      CHECK(desc.projections <= 7);
    }
  }
}

TEST_CASE("concurrent queries over one shared matrix") {
  GramMatrix g = random_gram_sparse_precision(8, 64, 0.3).gram;
  std::vector<LatticeComputation> expected;
  for (int j = 0; j < 8; ++j) expected.push_back(compute_lattice(g, j, Subset{}));

  std::vector<std::future<LatticeComputation>> jobs;
  for (int round = 0; round < 4; ++round) {
    for (int j = 0; j < 8; ++j) {
      jobs.push_back(std::async(std::launch::async,
                                [&g, j] { return compute_lattice(g, j, Subset{}); }));
    }
  }
  for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
    CHECK(jobs[idx].get().lattice == expected[idx % 8].lattice);
  }
}

TEST_CASE("members of the interval share coefficients; the boundary is sharp") {
  Rng rng(4242);
  for (int rep = 0; rep < 50; ++rep) {
    const int d = rng.uniform_int(4, 8);
    GramMatrix g = nlat::testing::mixed_instance(d, rng.next() % 1000);
    const int j = rng.uniform_int(0, d - 1);
    Subset s = rng.subset_of(Subset::full(d).without(j));
    NeighborhoodLattice lat = compute_lattice(g, j, s).lattice;
    const Subset m = lat.min_set;
    Eigen::VectorXd base = sem_coefficients(g, j, m).values;

    // convexity: random members keep the support and the values
    Subset gap = lat.max_set - m;
    for (int t = 0; t < 20; ++t) {
      Subset member = m | rng.subset_of(gap);
      SemCoefficients c = sem_coefficients(g, j, member);
      CHECK(c.support == m);
      CHECK((c.values - base).cwiseAbs().maxCoeff() < 1e-8);
    }

    // maximality: adding any outside vertex changes the support
    for (int k : Subset::full(d) - lat.max_set - Subset::of({j})) {
      CHECK(sem_coefficients(g, j, lat.max_set.with(k)).support != m);
    }
    // minimality: dropping any active vertex changes the support
    for (int k : m) {
      CHECK(sem_coefficients(g, j, m.without(k)).support != m);
    }

    // idempotence: recomputing from m, max or s gives the same interval
    CHECK(compute_lattice(g, j, m).lattice == lat);
    CHECK(compute_lattice(g, j, lat.max_set).lattice == lat);
  }
}
