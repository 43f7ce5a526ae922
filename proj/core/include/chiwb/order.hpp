#pragma once

#include <cstdint>
#include <vector>

namespace chiwb {

// Exponent vector; length always equals the ambient variable count.
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }
  std::uint64_t degree() const;
  std::uint32_t degree_in(std::size_t var) const { return exps[var]; }
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial quotient(const Monomial& m) const;  // requires m | *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Global monomial orders: an optional prefix of non-negative weight rows,
// then a grevlex or lex tiebreak. 1 is minimal for every order built here.
class MonomialOrder {
 public:
  enum class Tie { Grevlex, Lex };

  static MonomialOrder grevlex();
  static MonomialOrder lex();
  // Eliminates the first `block` variables: compares degree in that block first.
  static MonomialOrder elimination(std::size_t nvars, std::size_t block);
  static MonomialOrder weighted(std::vector<std::int64_t> w);
  // Total degree, then degree in the last variable, then grevlex. This is the
  // order used to read off lowest-degree forms after homogenization.
  static MonomialOrder graded_aux_last(std::size_t nvars);

  // +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return tie_ == o.tie_ && rows_ == o.rows_;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

 private:
  MonomialOrder(Tie tie, std::vector<std::vector<std::int64_t>> rows)
      : tie_(tie), rows_(std::move(rows)) {}
  Tie tie_ = Tie::Grevlex;
  std::vector<std::vector<std::int64_t>> rows_;
};

}  // namespace chiwb
