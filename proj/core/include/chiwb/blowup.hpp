#pragma once

#include <map>

#include "chiwb/multiplicity.hpp"

namespace chiwb {

// One affine patch of the point blowup of affine d-space: x_i -> v,
// x_j -> v*u_j, with the exceptional divisor cut out by v.
struct BlowupChart {
  RingPtr source;
  std::size_t index = 1;  // 1-based
  RingPtr ring;
  std::vector<Polynomial> substitution;  // images of the source variables
  Polynomial exceptional;
};

BlowupChart chart(const RingPtr& source, std::size_t index);

Ideal total_transform(const Ideal& i, const BlowupChart& c);
// Total transform saturated by the exceptional equation.
Ideal strict_transform(const Ideal& i, const BlowupChart& c);

// Locus V(initial form of f) in the chart: the ideal (v, f_substituted / v).
// Requires f of order exactly one at the origin.
Ideal vbar_locus(const Polynomial& f, const BlowupChart& c);

// True iff f lies in the square of the maximal ideal at the chart point;
// checked against membership in vbar_locus.
bool ramification_check(const Polynomial& f, const BlowupChart& c,
                        const std::vector<mpq_class>& point);

// chart index (1-based) -> list of points, coordinates in chart-ring variable
// order (v first, then the u's).
using ChartPoints = std::map<std::size_t, std::vector<std::vector<mpq_class>>>;

BlowupIntersectionReport blowup_chi(const Ideal& left, const Ideal& right,
                                    const ChartPoints& points);

FultonReport fulton_verify(const Ideal& left, const Ideal& right, const ChartPoints& points);

CorollaryDReport corollary_d_check(const Ideal& left, const Ideal& right,
                                   const ChartPoints& points);

}  // namespace chiwb
