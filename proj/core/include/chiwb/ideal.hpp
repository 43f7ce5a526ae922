#pragma once

#include <vector>

#include "chiwb/lazy.hpp"
#include "chiwb/module_gb.hpp"
#include "chiwb/polynomial.hpp"

namespace chiwb {

// Reduced Groebner basis: monic elements, no term of any element divisible by
// another element's leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;

  std::vector<Monomial> lead_monomials() const;
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  // The irrelevant maximal ideal (all variables).
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_zero_generators() const { return gens_.empty(); }

  const GroebnerBasis& groebner() const;
  bool contains(const Polynomial& f) const;
  bool is_zero() const;
  bool is_unit() const;
  // Necessary condition for the vanishing locus to pass through the origin:
  // every generator has zero constant term.
  bool in_irrelevant() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  SharedLazy<GroebnerBasis> gb_ = std::make_shared<Lazy<GroebnerBasis>>();
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Polynomial& f);
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
Ideal ideal_saturation(const Ideal& a, const Polynomial& f);
Ideal ideal_saturation(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint32_t n);

bool ideal_equal(const Ideal& a, const Ideal& b);

// Krull dimension of the quotient ring; rejects the unit ideal.
long krull_dimension(const Ideal& a);

// True iff the vanishing locus is contained in the origin (saturation by the
// irrelevant ideal is the unit ideal). The unit ideal itself passes.
bool support_at_origin(const Ideal& a);

}  // namespace chiwb
