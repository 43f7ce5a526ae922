#include "chiwb/scan.hpp"

#include <random>

#include "chiwb/errors.hpp"
#include "chiwb/multiplicity.hpp"

namespace chiwb {

namespace {

// mt19937_64 gives a portable stream; distributions do not, so everything is
// derived with plain modular arithmetic.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return rng() % n; }  // 0..n-1
};

Coeff random_coeff(const RingPtr& ring, Gen& g) {
  const Field& f = ring->field();
  if (f.is_rationals()) {
    long v = static_cast<long>(g.pick(7)) - 3;
    if (v == 0) v = 1;
    return f.from_integer(v);
  }
  return f.from_integer(1 + static_cast<long>(g.pick(f.characteristic() - 1)));
}

Monomial random_monomial(const RingPtr& ring, Gen& g, std::uint32_t degree) {
  const std::size_t n = ring->nvars();
  Monomial m(n);
  for (std::uint32_t d = 0; d < degree; ++d) ++m.exps[g.pick(n)];
  return m;
}

// homogeneous of the given degree, 1..max_terms terms
Polynomial random_form(const RingPtr& ring, Gen& g, std::uint32_t degree,
                       std::size_t max_terms) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Term> terms;
    std::size_t count = 1 + g.pick(max_terms);
    for (std::size_t t = 0; t < count; ++t)
      terms.push_back({random_monomial(ring, g, degree), random_coeff(ring, g)});
    Polynomial p(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
  return Polynomial::variable(ring, 0).pow(degree);
}

// binomial curve shapes like y^a - c x^b keep many non-homogeneous instances
// in the corpus while still meeting the support filter often enough
Polynomial random_binomial(const RingPtr& ring, Gen& g) {
  const std::size_t n = ring->nvars();
  std::size_t v = g.pick(n);
  std::size_t w = g.pick(n);
  if (w == v) w = (v + 1) % n;
  std::uint32_t a = 1 + static_cast<std::uint32_t>(g.pick(3));
  std::uint32_t b = 1 + static_cast<std::uint32_t>(g.pick(3));
  return Polynomial::variable(ring, v).pow(a) -
         Polynomial::variable(ring, w).pow(b).times_coeff(random_coeff(ring, g));
}

Ideal random_ideal(const RingPtr& ring, Gen& g) {
  const std::size_t n = ring->nvars();
  switch (g.pick(4)) {
    case 0:
      return Ideal(ring, {random_form(ring, g, 1 + static_cast<std::uint32_t>(g.pick(3)), 3)});
    case 1:
      return Ideal(ring, {random_binomial(ring, g)});
    case 2: {
      // a full system of forms: zero-dimensional most of the time
      std::vector<Polynomial> gens;
      for (std::size_t v = 0; v < n; ++v)
        gens.push_back(Polynomial::variable(ring, v)
                           .pow(1 + static_cast<std::uint32_t>(g.pick(2))) +
                       random_form(ring, g, 2, 2));
      return Ideal(ring, std::move(gens));
    }
    default: {
      std::vector<Polynomial> gens;
      std::size_t count = 1 + g.pick(n > 1 ? n - 1 : 1);
      for (std::size_t t = 0; t < count; ++t)
        gens.push_back(random_form(ring, g, 1 + static_cast<std::uint32_t>(g.pick(2)), 3));
      return Ideal(ring, std::move(gens));
    }
  }
}

std::uint64_t kind_salt(const std::string& kind) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : kind) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ScanOutcome run_scan(const RingPtr& ring, const std::string& kind, unsigned count,
                     std::uint64_t seed) {
  const bool serre_family = kind == "decency" || kind == "vanishing" || kind == "positivity";
  const bool pair_family = kind == "lowerbound" || kind == "tennison";
  if (!serre_family && !pair_family)
    fail(Error::Kind::Domain, "unknown scan kind '" + kind + "'");

  Gen g(seed ^ kind_salt(kind));
  ScanOutcome out;
  out.kind = kind;
  const long n = static_cast<long>(ring->nvars());

  unsigned attempts = 0;
  const unsigned max_attempts = 80 * count + 200;
  while (out.checked < count) {
    if (++attempts > max_attempts)
      fail(Error::Kind::Domain,
           "scan generator failed to find enough admissible instances; widen the ring or "
           "lower the count");
    Ideal left = random_ideal(ring, g);
    Ideal right = random_ideal(ring, g);
    if (left.is_unit() || right.is_unit() || left.is_zero() || right.is_zero()) continue;
    if (!support_at_origin(ideal_sum(left, right))) continue;

    if (serre_family) {
      ChiReport rep = chi(left, right);
      ++out.checked;
      bool applies = false;
      bool violated = false;
      if (kind == "decency") {
        applies = true;
        violated = !rep.decent;
      } else if (kind == "vanishing") {
        applies = rep.vanishing_case;
        violated = applies && rep.chi != 0;
      } else {
        applies = rep.positivity_case;
        violated = applies && rep.chi <= 0;
      }
      if (applies) ++out.cases;
      if (violated) {
        ++out.violations;
        out.violating.push_back(left.to_string() + " vs " + right.to_string() +
                                " : chi=" + std::to_string(rep.chi));
      }
    } else {
      long dl = krull_dimension(left);
      long dr = krull_dimension(right);
      if (dl + dr != n) continue;  // complementary pairs only
      TransversalityReport rep = transversality_check(left, right);
      ++out.checked;
      bool applies = kind == "lowerbound" ? true : rep.transverse;
      bool violated = false;
      if (kind == "lowerbound")
        violated = rep.chi.chi < rep.e_left * rep.e_right;
      else
        violated = rep.transverse && !rep.equality;
      if (applies) ++out.cases;
      if (violated) {
        ++out.violations;
        out.violating.push_back(left.to_string() + " vs " + right.to_string() + " : chi=" +
                                std::to_string(rep.chi.chi) + " e*e=" +
                                std::to_string(rep.e_left * rep.e_right));
      }
    }
  }
  return out;
}

}  // namespace chiwb
