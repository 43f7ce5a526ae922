#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace chiwb {

// Exact scalar: a rational (characteristic 0) or a residue mod p. All
// arithmetic goes through the owning Field so the representation stays thin.
class Coeff {
 public:
  Coeff() : v_(std::uint32_t{0}) {}
  static Coeff rational(mpq_class q) { return Coeff(std::move(q)); }
  static Coeff residue(std::uint32_t r) { return Coeff(r); }

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  std::uint32_t res() const { return std::get<std::uint32_t>(v_); }

  bool is_zero() const {
    return is_rational() ? rat() == 0 : res() == 0;
  }
  bool operator==(const Coeff& o) const { return v_ == o.v_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

 private:
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}
  explicit Coeff(std::uint32_t r) : v_(r) {}
  std::variant<mpq_class, std::uint32_t> v_;
};

// QQ or FF(p) with p prime, p < 2^31. Prime-field arithmetic is word-sized;
// rationals are arbitrary precision.
class Field {
 public:
  static Field rationals();
  static Field prime_field(std::uint32_t p);  // rejects non-primes

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_integer(long v) const;
  Coeff from_mpz(const mpz_class& v) const;
  Coeff from_mpq(const mpq_class& v) const;  // rejects denominators divisible by p

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  bool is_one(const Coeff& a) const;
  std::string to_string(const Coeff& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void check(const Coeff& a) const;
  std::uint32_t p_ = 0;  // 0 means rationals
};

}  // namespace chiwb
