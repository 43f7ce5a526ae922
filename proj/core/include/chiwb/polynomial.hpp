#pragma once

#include <map>
#include <string>
#include <vector>

#include "chiwb/ring.hpp"

namespace chiwb {

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse multivariate polynomial in canonical form: terms sorted descending
// under the ring's monomial order, no zero coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t var, std::uint32_t power = 1);
  static Polynomial from_term(RingPtr ring, const Coeff& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }
  std::uint64_t total_degree() const;   // max over terms; 0 for the zero polynomial
  std::uint64_t lowest_degree() const;  // min over terms
  Coeff constant_term() const;
  bool is_constant() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial times_term(const Coeff& c, const Monomial& m) const;
  Polynomial times_coeff(const Coeff& c) const;
  Polynomial monic() const;  // divide by the leading coefficient
  Polynomial pow(std::uint32_t n) const;

  // Exact division by a polynomial known to divide this one (used for strict
  // transforms and pruning); raises Internal if the division leaves a remainder.
  Polynomial divide_exact(const Polynomial& d) const;

  // Homogeneous part of lowest total degree (the initial form at the origin).
  Polynomial lowest_form() const;
  // Homogeneous part of a given degree.
  Polynomial homogeneous_part(std::uint64_t degree) const;

  // Ring map: every source variable gets an image in the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;

  std::string to_string() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Comparator for map-based accumulation, descending under a fixed order.
struct MonomialDesc {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->greater(a, b);
  }
};

}  // namespace chiwb
