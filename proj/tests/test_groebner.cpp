#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chiwb/budget.hpp"
#include "chiwb/errors.hpp"
#include "chiwb/ideal.hpp"
#include "chiwb/parse.hpp"

using namespace chiwb;

namespace {

RingPtr qq_xy() { return RingContext::make(Field::rationals(), {"x", "y"}); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(ps));
}

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_deg = 4) {
  std::vector<Term> terms;
  std::size_t count = 1 + rng() % 4;
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m(ring->nvars());
    std::uint32_t deg = rng() % (max_deg + 1);
    for (std::uint32_t d = 0; d < deg; ++d) ++m.exps[rng() % ring->nvars()];
    long c = static_cast<long>(rng() % 9) - 4;
    terms.push_back({std::move(m), ring->field().from_integer(c)});
  }
  return Polynomial(ring, std::move(terms));
}

ModuleGB as_module_gb(const Ideal& i) {
  ModuleGB gb;
  gb.ring = i.ring();
  gb.rank = 1;
  gb.order = std::make_shared<PotOrder>(i.ring()->order());
  for (const auto& e : i.groebner().elements) gb.elems.push_back(VecPoly{e});
  return gb;
}

}  // namespace

TEST_CASE("reduced bases match hand computations") {
  auto R = qq_xy();
  Ideal a = I(R, {"y^2 - x^3", "x"});
  std::vector<std::string> basis;
  for (const auto& e : a.groebner().elements) basis.push_back(e.to_string());
  REQUIRE(basis.size() == 2);
  CHECK(((basis[0] == "y^2" && basis[1] == "x") || (basis[0] == "x" && basis[1] == "y^2")));

  CHECK(Ideal::zero(R).groebner().elements.empty());

  Ideal redundant = I(R, {"x", "x^2"});
  REQUIRE(redundant.groebner().elements.size() == 1);
  CHECK(redundant.groebner().elements[0].to_string() == "x");
}

TEST_CASE("every computed basis passes the S-polynomial criterion") {
  auto R3 = RingContext::make(Field::prime_field(101), {"x", "y", "z"});
  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_poly(R3, rng));
    Ideal a(R3, std::move(gens));
    a.groebner();
    CHECK(is_groebner(as_module_gb(a)));
  }
}

TEST_CASE("groebner bases are deterministic") {
  auto R = qq_xy();
  Ideal a = I(R, {"x^2 + y", "x*y - 1", "y^3"});
  Ideal b = I(R, {"x^2 + y", "x*y - 1", "y^3"});
  const auto& ea = a.groebner().elements;
  const auto& eb = b.groebner().elements;
  REQUIRE(ea.size() == eb.size());
  for (std::size_t i = 0; i < ea.size(); ++i) CHECK(ea[i] == eb[i]);
}

TEST_CASE("normal form is idempotent and linear") {
  auto R = qq_xy();
  Ideal a = I(R, {"x^2 - y", "y^2 - x*y"});
  const GroebnerBasis& gb = a.groebner();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(R, rng);
    Polynomial g = random_poly(R, rng);
    Polynomial nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
  }
}

TEST_CASE("ideal operations match the worked examples") {
  auto R = qq_xy();
  // (x^2 y) : y^infty = (x^2)
  Ideal sat = ideal_saturation(I(R, {"x^2*y"}), parse_polynomial("y", R));
  CHECK(ideal_equal(sat, I(R, {"x^2"})));
  // (x) meet (y) = (xy)
  CHECK(ideal_equal(ideal_intersection(I(R, {"x"}), I(R, {"y"})), I(R, {"x*y"})));
  // I + (0) = I
  Ideal i1 = I(R, {"x^2 - y"});
  CHECK(ideal_equal(ideal_sum(i1, Ideal::zero(R)), i1));
  // quotient examples
  CHECK(ideal_equal(ideal_quotient(I(R, {"x*y"}), parse_polynomial("x", R)), I(R, {"y"})));
  CHECK(ideal_equal(ideal_quotient(I(R, {"x"}), Ideal::zero(R)), Ideal::unit(R)));

  Ideal prod = ideal_product(I(R, {"x", "y"}), I(R, {"x", "y"}));
  CHECK(ideal_equal(prod, I(R, {"x^2", "x*y", "y^2"})));
}

TEST_CASE("saturation stabilizes") {
  auto R = qq_xy();
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    Polynomial f = random_poly(R, rng);
    Polynomial g = random_poly(R, rng, 2);
    if (g.is_zero()) continue;
    Ideal a(R, {f, random_poly(R, rng)});
    Ideal s = ideal_saturation(a, g);
    CHECK(ideal_equal(ideal_quotient(s, g), s));
  }
}

TEST_CASE("krull dimension via independent sets") {
  auto R = qq_xy();
  CHECK(krull_dimension(I(R, {"y^2 - x^3"})) == 1);
  CHECK(krull_dimension(I(R, {"x", "y"})) == 0);
  auto R3 = RingContext::make(Field::rationals(), {"x", "y", "z"});
  CHECK(krull_dimension(Ideal::zero(R3)) == 3);
  CHECK_THROWS_AS(krull_dimension(Ideal::unit(R)), Error);
}

TEST_CASE("support at origin is the irrelevant saturation test") {
  auto R = qq_xy();
  CHECK(support_at_origin(I(R, {"x", "y"})));
  CHECK_FALSE(support_at_origin(I(R, {"x^2 - x", "y"})));
  CHECK(support_at_origin(Ideal::unit(R)));
  CHECK_FALSE(support_at_origin(I(R, {"x"})));
}

TEST_CASE("elimination respects the block order") {
  // intersection through an elimination variable must not leak it
  auto R = RingContext::make(Field::rationals(), {"x", "y", "z"});
  Ideal a = I(R, {"x - z^2"});
  Ideal b = I(R, {"y - z^3"});
  Ideal meet = ideal_intersection(a, b);
  for (const auto& e : meet.groebner().elements)
    CHECK(e.ring()->nvars() == 3);
  CHECK(meet.contains(parse_polynomial("(x - z^2)*(y - z^3)", R)));
}

TEST_CASE("the step budget turns runaway reductions into clean errors") {
  auto R3 = RingContext::make(Field::prime_field(101), {"x", "y", "z"});
  budget::Scope scope(50);  // far too small for this basis
  Ideal a = I(R3, {"x^3*y - z^2 + x", "y^4 - x*z + y", "z^3 - x^2*y^2"});
  CHECK_THROWS_AS(a.groebner(), Error);
  try {
    Ideal b = I(R3, {"x^3*y - z^2 + x", "y^4 - x*z + y", "z^3 - x^2*y^2"});
    b.groebner();
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::BudgetExhausted);
  }
}
