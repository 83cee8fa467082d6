#pragma once

#include <stdexcept>
#include <string>

namespace nlat {

enum class errc {
  not_square,
  asymmetric,
  not_positive_definite,
  dimension_too_large,
  empty_sample,
  node_in_set,
  sets_not_disjoint,
  empty_endpoint,
  zero_scale,
  overlapping_intervals,
  not_a_permutation,
  dimension_mismatch,
  cyclic_graph,
  set_too_large,
  class_not_interval,
  bad_index,
  bad_input,
};

const char* to_string(errc code);

/// Every library failure throws this. Messages carry 1-based indices, matching
/// the external interface convention.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace nlat
