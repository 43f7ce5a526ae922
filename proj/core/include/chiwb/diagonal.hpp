#pragma once

#include "chiwb/multiplicity.hpp"

namespace chiwb {

// Polynomial model of A (x)_R B over the base R = k[base vars]: the big ring
// k[base..., left..., right...] with the diagonal ideal (x_i - y_i).
struct TensorModel {
  RingPtr big;
  std::size_t base_count = 0;
  std::vector<std::size_t> left_vars;   // indices into big
  std::vector<std::size_t> right_vars;  // indices into big (may be empty)
  Ideal diagonal;                       // zero ideal when sides have unequal size

  std::size_t left_count() const { return left_vars.size(); }
};

TensorModel build_tensor_model(const Field& field, const std::vector<std::string>& base,
                               const std::vector<std::string>& left,
                               const std::vector<std::string>& right);

// Model derived from a ring whose base variables are the declared prefix;
// right-hand copies of the non-base variables get fresh names.
TensorModel model_from_ring(const RingPtr& a);
// As above but with no right-hand side (for base-module checks).
TensorModel half_model_from_ring(const RingPtr& a);

// A = k[base, left]: include an ideal of A into the big ring, either along the
// left factor or along the right factor (renaming left variables).
Ideal embed_left(const TensorModel& model, const Ideal& in_a);
Ideal embed_right(const TensorModel& model, const Ideal& in_a);

// Tor_q over the big ring of the two embedded quotients (the completed Tor of
// the corresponding power-series modules).
PresentedModule completed_tor(const TensorModel& model, const Ideal& big_left,
                              const Ideal& big_right, std::size_t q);

// chi = sum_q (-1)^q e_Delta(completed Tor_q) against the direct chi in A.
CompletedTorReport diagonal_decompose(const TensorModel& model, const Ideal& left_in_a,
                                      const Ideal& right_in_a);

// Koszul flatness of big/(I) over the two-dimensional base, with the
// fiber-dimension comparison.
FlatnessReport r_flatness_check(const TensorModel& model, const Ideal& left_in_a);

// dim of the joint quotient against dim O_1 + dim O_2 - 2 (domains assumed).
DimensionBoundReport dimension_bound_check(const TensorModel& model, const Ideal& left_in_a,
                                           const Ideal& right_in_a);

}  // namespace chiwb
