#include "chiwb/field.hpp"

#include "chiwb/errors.hpp"

namespace chiwb {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime_field(std::uint32_t p) {
  if (p >= (1u << 31))
    fail(Error::Kind::Domain, "prime field characteristic must be < 2^31");
  if (!is_prime_u32(p))
    fail(Error::Kind::Domain, std::to_string(p) + " is not prime");
  return Field(p);
}

void Field::check(const Coeff& a) const {
  if (a.is_rational() != is_rationals())
    fail(Error::Kind::Internal, "coefficient does not belong to this field");
}

Coeff Field::zero() const {
  return is_rationals() ? Coeff::rational(0) : Coeff::residue(0);
}

Coeff Field::one() const {
  return is_rationals() ? Coeff::rational(1) : Coeff::residue(1);
}

Coeff Field::from_integer(long v) const {
  if (is_rationals()) return Coeff::rational(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Coeff::residue(static_cast<std::uint32_t>(r));
}

Coeff Field::from_mpz(const mpz_class& v) const {
  if (is_rationals()) return Coeff::rational(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Coeff::residue(static_cast<std::uint32_t>(r.get_ui()));
}

Coeff Field::from_mpq(const mpq_class& v) const {
  if (is_rationals()) return Coeff::rational(v);
  Coeff num = from_mpz(v.get_num());
  Coeff den = from_mpz(v.get_den());
  if (den.is_zero())
    fail(Error::Kind::DivisionByZero,
         "denominator vanishes in characteristic " + std::to_string(p_));
  return div(num, den);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  check(a);
  check(b);
  if (is_rationals()) return Coeff::rational(a.rat() + b.rat());
  std::uint64_t s = std::uint64_t(a.res()) + b.res();
  if (s >= p_) s -= p_;
  return Coeff::residue(static_cast<std::uint32_t>(s));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  check(a);
  check(b);
  if (is_rationals()) return Coeff::rational(a.rat() * b.rat());
  return Coeff::residue(static_cast<std::uint32_t>(std::uint64_t(a.res()) * b.res() % p_));
}

Coeff Field::neg(const Coeff& a) const {
  check(a);
  if (is_rationals()) return Coeff::rational(-a.rat());
  return Coeff::residue(a.res() == 0 ? 0 : p_ - a.res());
}

Coeff Field::inv(const Coeff& a) const {
  check(a);
  if (a.is_zero()) fail(Error::Kind::DivisionByZero, "division by zero");
  if (is_rationals()) return Coeff::rational(1 / a.rat());
  return Coeff::residue(mod_pow(a.res(), p_ - 2, p_));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

bool Field::is_one(const Coeff& a) const {
  return is_rationals() ? a.rat() == 1 : a.res() == 1;
}

std::string Field::to_string(const Coeff& a) const {
  if (is_rationals()) return a.rat().get_str();
  return std::to_string(a.res());
}

}  // namespace chiwb
