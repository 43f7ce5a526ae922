#include "chiwb/order.hpp"

#include <algorithm>

#include "chiwb/errors.hpp"

namespace chiwb {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > m.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (m.exps[i] > exps[i]) fail(Error::Kind::Internal, "monomial quotient is not exact");
    r.exps[i] -= m.exps[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
  return r;
}

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Tie::Grevlex, {}); }
MonomialOrder MonomialOrder::lex() { return MonomialOrder(Tie::Lex, {}); }

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::size_t block) {
  std::vector<std::int64_t> row(nvars, 0);
  for (std::size_t i = 0; i < block && i < nvars; ++i) row[i] = 1;
  return MonomialOrder(Tie::Grevlex, {std::move(row)});
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> w) {
  for (auto x : w)
    if (x < 0) fail(Error::Kind::Domain, "weight vectors must be non-negative");
  return MonomialOrder(Tie::Grevlex, {std::move(w)});
}

MonomialOrder MonomialOrder::graded_aux_last(std::size_t nvars) {
  std::vector<std::int64_t> total(nvars, 1);
  std::vector<std::int64_t> aux(nvars, 0);
  aux[nvars - 1] = 1;
  return MonomialOrder(Tie::Grevlex, {std::move(total), std::move(aux)});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : rows_) {
    std::int64_t sa = 0, sb = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      sa += row[i] * a.exps[i];
      sb += row[i] * b.exps[i];
    }
    if (sa != sb) return sa > sb ? 1 : -1;
  }
  if (tie_ == Tie::Lex) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
    return 0;
  }
  // grevlex: total degree, then the last variable where they differ decides,
  // smaller exponent there winning.
  const std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.exps.size(); i-- > 0;)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
  return 0;
}

}  // namespace chiwb
