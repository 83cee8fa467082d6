#pragma once

#include <vector>

#include "nlat/decomposition.hpp"
#include "nlat/pcg.hpp"

namespace nlat {

/// Brute-force ground truth for small instances. Shares nothing with the
/// lattice and decomposition algorithms beyond the basic solves: classes are
/// formed by exhaustive enumeration and checked directly.

/// Regresses node j on every one of the 2^(d-1) subsets, groups subsets by
/// coefficient-vector equality (within 1e-8 entrywise), verifies each class
/// is an interval, and returns the classes in order of first appearance.
/// Requires d <= 16. Throws class_not_interval if a class fails the check
/// (which would falsify the lattice structure, not an input condition).
LatticeDecomposition brute_decompose(const GramMatrix& g, int j);

/// Tests the Schur condition for every pair (i, T) with i != j and
/// T inside [d] \ {i, j}; returns all true statements, i ascending then T
/// ascending. Requires d <= 16.
std::vector<PoStatement> brute_enumerate_po(const GramMatrix& g, int j);

/// Literal intersection of all subsets T of s that separate j from s \ T.
/// Requires |s| <= 20.
Subset brute_minimal_separator(const Pcg& p, int j, Subset s);

}  // namespace nlat
