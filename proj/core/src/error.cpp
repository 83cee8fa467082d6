#include "nlat/error.hpp"

namespace nlat {

const char* to_string(errc code) {
  switch (code) {
    case errc::not_square: return "NotSquare";
    case errc::asymmetric: return "Asymmetric";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::empty_sample: return "EmptySample";
    case errc::node_in_set: return "NodeInSet";
    case errc::sets_not_disjoint: return "SetsNotDisjoint";
    case errc::empty_endpoint: return "EmptyEndpoint";
    case errc::zero_scale: return "ZeroScale";
    case errc::overlapping_intervals: return "OverlappingIntervals";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::cyclic_graph: return "CyclicGraph";
    case errc::set_too_large: return "SetTooLarge";
    case errc::class_not_interval: return "ClassNotInterval";
    case errc::bad_index: return "BadIndex";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace nlat
