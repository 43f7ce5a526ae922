#pragma once

#include "chiwb/hilbert.hpp"
#include "chiwb/homology.hpp"

namespace chiwb {

struct HsOptions {
  unsigned window = 3;  // consecutive equal differences required
  unsigned cap = 30;    // largest power tried before giving up
};

// l(M / q^n M).
long hs_length(const PresentedModule& m, const Ideal& q, unsigned n);
long hs_length(const Ideal& presenting, const Ideal& q, unsigned n);

// Stabilized d-th finite difference of n -> l(M/q^n M): the Hilbert-Samuel
// multiplicity when d = dim M, zero when dim M < d; d below the dimension is
// rejected.
long hs_multiplicity(const PresentedModule& m, const Ideal& q, long d, HsOptions opts = {});
long hs_multiplicity(const Ideal& presenting, const Ideal& q, long d, HsOptions opts = {});

// Homogeneous ideal of lowest-degree forms of the localized ideal at the
// origin (computed through homogenization with an auxiliary variable).
Ideal tangent_cone(const Ideal& i);

// Multiplicity of the graded ring k[x]/tangent_cone(i), read from its Hilbert
// series after pole cancellation.
long point_multiplicity(const Ideal& i);

TransversalityReport transversality_check(const Ideal& left, const Ideal& right);

}  // namespace chiwb
