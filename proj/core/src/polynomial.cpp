#include "chiwb/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "chiwb/errors.hpp"

namespace chiwb {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const auto& order = ring_->order();
  std::stable_sort(terms_.begin(), terms_.end(),
                   [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  const Field& f = ring_->field();
  for (auto& t : terms_) {
    if (t.mono.nvars() != ring_->nvars())
      fail(Error::Kind::Internal, "exponent vector length mismatch");
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.coeff.is_zero(); }),
            out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  if (c.is_zero()) return zero(std::move(ring));
  Monomial one(ring->nvars());
  std::vector<Term> ts{{std::move(one), c}};
  return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var, std::uint32_t power) {
  Monomial m(ring->nvars());
  m.exps[var] = power;
  std::vector<Term> ts{{std::move(m), ring->field().one()}};
  return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::from_term(RingPtr ring, const Coeff& c, Monomial m) {
  if (c.is_zero()) return zero(std::move(ring));
  std::vector<Term> ts{{std::move(m), c}};
  return Polynomial(std::move(ring), std::move(ts));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(Error::Kind::Domain, "the zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::lowest_degree() const {
  if (terms_.empty()) fail(Error::Kind::Domain, "the zero polynomial has no lowest form");
  std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

Coeff Polynomial::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return ring_->field().zero();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint64_t d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == d; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const auto& order = ring_->order();
  const Field& f = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  const Field& f = ring_->field();
  for (auto& t : r.terms_) t.coeff = f.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const Field& f = ring_->field();
  MonomialDesc cmp{&ring_->order()};
  std::map<Monomial, Coeff, MonomialDesc> acc(cmp);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      Coeff c = f.mul(a.coeff, b.coeff);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = f.add(it->second, c);
    }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  require_same_ring(ring_, o.ring_);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::times_term(const Coeff& c, const Monomial& m) const {
  if (c.is_zero()) return zero(ring_);
  const Field& f = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_coeff(const Coeff& c) const {
  return times_term(c, Monomial(ring_->nvars()));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return times_coeff(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial acc = constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  require_same_ring(ring_, d.ring_);
  if (d.is_zero()) fail(Error::Kind::DivisionByZero, "division by the zero polynomial");
  const Field& f = ring_->field();
  Polynomial rem = *this;
  Polynomial quot = zero(ring_);
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!d.leading_monomial().divides(lt.mono))
      fail(Error::Kind::Internal, "exact division left a remainder");
    Coeff c = f.div(lt.coeff, d.leading_coeff());
    Monomial m = lt.mono.quotient(d.leading_monomial());
    quot = quot + from_term(ring_, c, m);
    rem = rem - d.times_term(c, m);
  }
  return quot;
}

Polynomial Polynomial::lowest_form() const { return homogeneous_part(lowest_degree()); }

Polynomial Polynomial::homogeneous_part(std::uint64_t degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  const RingPtr& target) const {
  if (images.size() != ring_->nvars())
    fail(Error::Kind::Domain, "substitution must map every variable");
  for (const auto& img : images) require_same_ring(img.ring(), target);
  const Field& sf = ring_->field();
  const Field& tf = target->field();
  if (sf != tf) fail(Error::Kind::Domain, "substitution cannot change the coefficient field");
  Polynomial out = zero(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono.exps[v] > 0) term = term * images[v].pow(t.mono.exps[v]);
    out = out + term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = f.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mag != "1" || t.mono.is_one()) factors.push_back(mag);
    for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
      if (t.mono.exps[v] == 0) continue;
      std::string x = ring_->var_name(v);
      if (t.mono.exps[v] > 1) x += "^" + std::to_string(t.mono.exps[v]);
      factors.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace chiwb
