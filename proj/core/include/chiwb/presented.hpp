#pragma once

#include <vector>

#include "chiwb/complex.hpp"
#include "chiwb/ideal.hpp"
#include "chiwb/lazy.hpp"

namespace chiwb {

// Finitely presented module A^rank / (columns of relations).
struct PresentedModule {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<VecPoly> relations;

  PresentedModule() = default;
  PresentedModule(RingPtr r, std::size_t rk, std::vector<VecPoly> rels);

  static PresentedModule zero(RingPtr ring) { return PresentedModule(std::move(ring), 0, {}); }
  static PresentedModule free_module(RingPtr ring, std::size_t rank) {
    return PresentedModule(std::move(ring), rank, {});
  }
  static PresentedModule quotient_by(const Ideal& I);  // A / I

  const ModuleGB& relations_gb() const;
  const FreeComplex& resolution() const;

 private:
  SharedLazy<ModuleGB> gb_ = std::make_shared<Lazy<ModuleGB>>();
  SharedLazy<FreeComplex> res_ = std::make_shared<Lazy<FreeComplex>>();
  friend FreeComplex free_resolution_impl(const PresentedModule&);
};

bool is_zero_module(const PresentedModule& m);

// Vector-space dimension over the coefficient field; Error::InfiniteLength if
// any position has infinitely many standard monomials.
long k_dimension(const PresentedModule& m);

Ideal annihilator(const PresentedModule& m);

// dim A/Ann(m); the zero module gets -1 so every degree convention test
// (dim < d) comes out right.
long module_dimension(const PresentedModule& m);

// Free resolution with coker(d_1) = m, exact in positive degrees, of length
// at most the number of ring variables.
FreeComplex free_resolution(const PresentedModule& m);

}  // namespace chiwb
