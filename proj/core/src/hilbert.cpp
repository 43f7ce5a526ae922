#include "chiwb/hilbert.hpp"

#include <algorithm>

#include "chiwb/errors.hpp"

namespace chiwb {

namespace {

using Poly1 = std::vector<mpz_class>;  // dense univariate over Z

Poly1 p_one() { return {mpz_class(1)}; }

Poly1 p_add(const Poly1& a, const Poly1& b) {
  Poly1 r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly1 p_mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly1 p_shift(const Poly1& a, std::size_t k) {
  if (a.empty()) return {};
  Poly1 r(a.size() + k, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

Poly1 one_minus_t_pow(std::uint64_t d) {
  // 1 - T^d
  Poly1 r(d + 1, mpz_class(0));
  r[0] = 1;
  r[d] = -1;
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exps < b.exps;
  });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

Poly1 numerator_of(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return p_one();
  if (gens.size() == 1 && gens[0].is_one()) return {};

  // pairwise coprime generators form a regular sequence
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::gcd(gens[i], gens[j]).is_one()) coprime = false;
  if (coprime) {
    Poly1 r = p_one();
    for (const auto& m : gens) r = p_mul(r, one_minus_t_pow(m.degree()));
    return r;
  }

  // pivot on the most shared variable
  const std::size_t n = gens[0].nvars();
  std::size_t best_var = 0, best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& m : gens)
      if (m.exps[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }

  // N(I) = N(I + (x)) + T * N(I : x)
  std::vector<Monomial> plus = gens;
  Monomial x(n);
  x.exps[best_var] = 1;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.exps[best_var] > 0) --q.exps[best_var];
    colon.push_back(std::move(q));
  }
  return p_add(numerator_of(std::move(plus)), p_shift(numerator_of(std::move(colon)), 1));
}

}  // namespace

bool HilbertSeries::numerator_is_zero() const { return numerator.empty(); }

mpz_class HilbertSeries::numerator_at_one() const {
  mpz_class s = 0;
  for (const auto& c : numerator) s += c;
  return s;
}

HilbertSeries HilbertSeries::cancelled() const {
  HilbertSeries r = *this;
  while (!r.numerator.empty() && r.denominator_exponent > 0 && r.numerator_at_one() == 0) {
    // divide numerator by (1 - T): prefix sums
    Poly1 q(r.numerator.size() - 1, mpz_class(0));
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < r.numerator.size(); ++i) {
      acc += r.numerator[i];
      q[i] = acc;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.numerator = std::move(q);
    --r.denominator_exponent;
  }
  return r;
}

mpz_class HilbertSeries::coefficient(std::size_t d) const {
  // [T^d] N(T)/(1-T)^e with 1/(1-T)^e = sum binom(i+e-1, e-1) T^i
  const std::size_t e = denominator_exponent;
  mpz_class sum = 0;
  for (std::size_t j = 0; j < numerator.size() && j <= d; ++j) {
    if (e == 0) {
      if (j == d) sum += numerator[j];
      continue;
    }
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - j + e - 1),
                 static_cast<unsigned long>(e - 1));
    sum += numerator[j] * binom;
  }
  return sum;
}

mpz_class HilbertSeries::multiplicity() const { return cancelled().numerator_at_one(); }

HilbertSeries hilbert_series(const std::vector<Monomial>& gens, std::size_t nvars) {
  HilbertSeries hs;
  hs.numerator = numerator_of(gens);
  hs.denominator_exponent = nvars;
  return hs;
}

HilbertSeries hilbert_series(const Ideal& monomial_ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : monomial_ideal.generators()) {
    if (g.term_count() != 1)
      fail(Error::Kind::Domain, "hilbert series requires monomial generators");
    gens.push_back(g.leading_monomial());
  }
  return hilbert_series(gens, monomial_ideal.ring()->nvars());
}

}  // namespace chiwb
