#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chiwb {

// chi / transversality summary for one ideal pair.
struct ChiReport {
  long dim_left = 0;
  long dim_right = 0;
  long dim_ring = 0;
  std::vector<long> tor_lengths;
  long chi = 0;
  bool decent = false;
  bool vanishing_case = false;
  bool positivity_case = false;
  std::map<std::string, std::string> witnesses;
};

struct TransversalityReport {
  ChiReport chi;
  long e_left = 0;
  long e_right = 0;
  long cone_dim = 0;
  bool transverse = false;
  bool equality = false;      // chi == e_left * e_right
  bool tennison_ok = false;   // transverse implies equality on this instance
};

struct CompletedTorReport {
  std::vector<long> e_values;    // e_Delta of each completed Tor, q = 0,1,2
  std::vector<long> wtor_dims;   // module dimensions (-1 for the zero module)
  long chi_via_diagonal = 0;
  long chi_direct = 0;
  bool positivity_case = false;
  bool vanishing_case = false;
  bool equal = false;  // chi_via_diagonal == chi_direct
};

struct FlatnessReport {
  bool flat = false;
  bool h1_zero = false;
  bool h2_zero = false;
  long fiber_dim = 0;
  long module_dim = 0;
  long expected_fiber_dim = 0;  // module_dim - base dimension
  bool fiber_dim_matches = false;
};

struct DimensionBoundReport {
  long joint_dim = 0;
  long dim_left = 0;
  long dim_right = 0;
  long bound = 0;  // dim_left + dim_right - 2
  bool holds = false;
};

struct BaseChangeReport {
  long degree = 0;   // r = length of B/m_A B
  long chi_base = 0;
  long chi_ext = 0;
  bool ratio_holds = false;  // chi_ext == degree * chi_base
};

struct Case1Report {
  long chi_full = 0;
  long chi_reduced = 0;
  bool equal = false;
};

struct BlowupPointChi {
  std::size_t chart = 0;
  std::vector<mpq_class> point;
  long chi = 0;
  bool counted = false;     // false when deduplicated into an earlier chart
  bool on_support = false;  // the strict transforms actually meet here
};

struct BlowupIntersectionReport {
  std::vector<BlowupPointChi> points;
  long total = 0;
  std::optional<long> fulton_lhs;
  std::optional<long> fulton_rhs;
};

struct FultonReport {
  long chi = 0;
  long e_left = 0;
  long e_right = 0;
  long blowup_total = 0;
  BlowupIntersectionReport blowup;
  bool holds = false;  // chi == e_left*e_right + blowup_total
};

struct CorollaryDReport {
  long chi = 0;
  long e_product = 0;
  long cone_dim = 0;
  long blowup_total = 0;
  bool equality_case = false;       // chi == e·e
  bool empty_on_blowup = false;     // strict transforms have empty joint support
  bool conclusion_verified = false;
};

}  // namespace chiwb
