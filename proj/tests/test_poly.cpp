#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chiwb/errors.hpp"
#include "chiwb/parse.hpp"

using namespace chiwb;

namespace {

RingPtr qq_xy() { return RingContext::make(Field::rationals(), {"x", "y"}); }

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_deg = 6,
                       std::size_t max_terms = 5) {
  std::vector<Term> terms;
  std::size_t count = 1 + rng() % max_terms;
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m(ring->nvars());
    std::uint32_t deg = rng() % (max_deg + 1);
    for (std::uint32_t d = 0; d < deg; ++d) ++m.exps[rng() % ring->nvars()];
    long c = static_cast<long>(rng() % 9) - 4;
    terms.push_back({std::move(m), ring->field().from_integer(c)});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

TEST_CASE("field arithmetic is exact") {
  Field q = Field::rationals();
  Coeff third = q.div(q.from_integer(1), q.from_integer(3));
  Coeff sum = q.add(third, q.add(third, third));
  CHECK(q.is_one(sum));
  CHECK_THROWS_AS(q.inv(q.zero()), Error);

  Field f7 = Field::prime_field(7);
  Coeff five = f7.from_integer(-2);
  CHECK(f7.to_string(five) == "5");
  CHECK(f7.is_one(f7.mul(five, f7.inv(five))));
  CHECK_THROWS_AS(Field::prime_field(4), Error);
  CHECK_THROWS_AS(Field::prime_field(1), Error);
}

TEST_CASE("polynomial parsing matches the grammar") {
  auto R = qq_xy();
  Polynomial p = parse_polynomial("y^2 - x^3", R);
  CHECK(p.term_count() == 2);
  CHECK(p.to_string() == "-x^3 + y^2");

  CHECK(parse_polynomial("(x+y)*(x-y)", R).to_string() == "x^2 - y^2");
  CHECK(parse_polynomial("2*x - x - x", R).is_zero());

  // juxtaposition is an identifier, not multiplication
  CHECK_THROWS_AS(parse_polynomial("xy", R), Error);
  CHECK_THROWS_AS(parse_polynomial("x +", R), Error);
  CHECK_THROWS_AS(parse_polynomial("x^0", R), Error);
  try {
    parse_polynomial("x + ", R);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Parse);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("print/parse round trip preserves the term map") {
  auto R = qq_xy();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(R, rng);
    if (p.is_zero()) continue;
    Polynomial q = parse_polynomial(p.to_string(), R);
    CHECK(p == q);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = RingContext::make(Field::rationals(), {"x", "y", "z", "w"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(R, rng);
    Polynomial b = random_poly(R, rng);
    Polynomial c = random_poly(R, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a + Polynomial::zero(R) == a);
  }
}

TEST_CASE("lowest form is multiplicative over a field") {
  auto R = qq_xy();
  std::mt19937_64 rng(13);
  int done = 0;
  for (int i = 0; done < 200 && i < 1000; ++i) {
    Polynomial a = random_poly(R, rng, 5, 4);
    Polynomial b = random_poly(R, rng, 5, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).lowest_form() == a.lowest_form() * b.lowest_form());
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("lowest form picks the minimal homogeneous part") {
  auto R = qq_xy();
  CHECK(parse_polynomial("y^2 - x^3", R).lowest_form() == parse_polynomial("y^2", R));
  CHECK(parse_polynomial("x + x^2", R).lowest_form() == parse_polynomial("x", R));
  Polynomial h = parse_polynomial("x^2 + x*y", R);
  CHECK(h.lowest_form() == h);
  CHECK_THROWS_AS(Polynomial::zero(R).lowest_form(), Error);
}

TEST_CASE("substitution is a ring map") {
  auto R = qq_xy();
  auto S = RingContext::make(Field::rationals(), {"x", "u"});
  Polynomial f = parse_polynomial("y^2 - x^3", R);
  std::vector<Polynomial> images{parse_polynomial("x", S), parse_polynomial("x*u", S)};
  CHECK(f.substitute(images, S) == parse_polynomial("x^2*u^2 - x^3", S));

  std::vector<Polynomial> identity{Polynomial::variable(R, 0), Polynomial::variable(R, 1)};
  CHECK(f.substitute(identity, R) == f);

  std::vector<Polynomial> shift{parse_polynomial("x + 1", R), Polynomial::variable(R, 1)};
  CHECK(Polynomial::variable(R, 0).substitute(shift, R) == parse_polynomial("x + 1", R));
}

TEST_CASE("ring context enforces its invariants") {
  CHECK_THROWS_AS(RingContext::make(Field::rationals(), {"x", "x"}), Error);
  CHECK_THROWS_AS(
      RingContext::make(Field::rationals(), {"s", "t", "u", "x"}, MonomialOrder::grevlex(), 3),
      Error);
  auto R = qq_xy();
  auto S = RingContext::make(Field::prime_field(5), {"x", "y"});
  CHECK_THROWS_AS(Polynomial::variable(R, 0) + Polynomial::variable(S, 0), Error);
}

TEST_CASE("monomial orders are global and multiplicative") {
  auto cmp = MonomialOrder::grevlex();
  Monomial one(2);
  Monomial x(std::vector<std::uint32_t>{1, 0});
  Monomial y(std::vector<std::uint32_t>{0, 1});
  CHECK(cmp.greater(x, one));
  CHECK(cmp.greater(y, one));
  CHECK(cmp.greater(x, y));  // grevlex with x before y

  auto lex = MonomialOrder::lex();
  Monomial x1(std::vector<std::uint32_t>{1, 0});
  Monomial y3(std::vector<std::uint32_t>{0, 3});
  CHECK(lex.greater(x1, y3));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Monomial a(2), b(2), c(2);
    for (int v = 0; v < 2; ++v) {
      a.exps[v] = rng() % 5;
      b.exps[v] = rng() % 5;
      c.exps[v] = rng() % 5;
    }
    int before = cmp.compare(a, b);
    int after = cmp.compare(a * c, b * c);
    CHECK(before == after);
  }
}
