#pragma once

#include <gmpxx.h>

#include <vector>

#include "chiwb/ideal.hpp"

namespace chiwb {

// Hilbert series N(T)/(1-T)^d of a quotient by a monomial ideal.
struct HilbertSeries {
  std::vector<mpz_class> numerator;  // numerator[i] = coefficient of T^i
  std::size_t denominator_exponent = 0;

  bool numerator_is_zero() const;
  mpz_class numerator_at_one() const;

  // Cancels (1-T) factors until N(1) != 0 (or N == 0). The resulting
  // denominator exponent is the Krull dimension of the quotient.
  HilbertSeries cancelled() const;
  std::size_t pole_order() const { return cancelled().denominator_exponent; }

  // Coefficient of T^d in the power-series expansion.
  mpz_class coefficient(std::size_t d) const;

  // N(1) of the cancelled form: the degree (multiplicity) of the graded
  // quotient, equal to its length when the pole order is zero.
  mpz_class multiplicity() const;
};

// Generators need not be minimal; nvars fixes the denominator exponent.
HilbertSeries hilbert_series(const std::vector<Monomial>& gens, std::size_t nvars);

// Requires every generator to be a single term.
HilbertSeries hilbert_series(const Ideal& monomial_ideal);

}  // namespace chiwb
