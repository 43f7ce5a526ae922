#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chiwb/diagonal.hpp"
#include "chiwb/errors.hpp"
#include "chiwb/parse.hpp"

using namespace chiwb;

namespace {

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(ps));
}

RingPtr base2_ring() {
  return RingContext::make(Field::rationals(), {"s", "t", "x"}, MonomialOrder::grevlex(), 2);
}

Polynomial random_base_poly(const RingPtr& ring, std::mt19937_64& rng) {
  // polynomial in the base variables s, t with zero constant term
  std::vector<Term> terms;
  std::size_t count = 1 + rng() % 2;
  for (std::size_t i = 0; i < count; ++i) {
    Monomial m(ring->nvars());
    std::uint32_t deg = 1 + rng() % 2;
    for (std::uint32_t d = 0; d < deg; ++d) ++m.exps[rng() % 2];
    terms.push_back({std::move(m), ring->field().from_integer(1 + static_cast<long>(rng() % 3))});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

TEST_CASE("tensor models are assembled with fresh right-hand names") {
  {
    TensorModel m = build_tensor_model(Field::rationals(), {}, {"x"}, {"y"});
    CHECK(m.big->vars() == std::vector<std::string>{"x", "y"});
    REQUIRE(m.diagonal.generators().size() == 1);
    CHECK(m.diagonal.generators()[0].to_string() == "x - y");
  }
  {
    TensorModel m = build_tensor_model(Field::rationals(), {"s", "t"}, {"x"}, {"y"});
    CHECK(m.big->vars() == std::vector<std::string>{"s", "t", "x", "y"});
    CHECK(m.base_count == 2);
  }
  CHECK_THROWS_AS(build_tensor_model(Field::rationals(), {"s", "t", "u"}, {"x"}, {"y"}), Error);
  CHECK_THROWS_AS(build_tensor_model(Field::rationals(), {}, {"x", "x"}, {"y", "z"}), Error);

  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  CHECK(m.big->vars() == std::vector<std::string>{"s", "t", "x", "x_r"});
  CHECK(m.left_count() == 1);
}

TEST_CASE("completed tor of the worked examples") {
  {
    TensorModel m = build_tensor_model(Field::rationals(), {}, {"x"}, {"y"});
    auto A = RingContext::make(Field::rationals(), {"x"});
    Ideal left = embed_left(m, Ideal(A, {parse_polynomial("x", A)}));
    Ideal right = embed_right(m, Ideal(A, {parse_polynomial("x", A)}));
    PresentedModule t0 = completed_tor(m, left, right, 0);
    CHECK(k_dimension(t0) == 1);
  }
  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  {
    // left (s,x), right (t): both higher completed Tor modules vanish
    Ideal left = embed_left(m, I(A, {"s", "x"}));
    Ideal right = embed_right(m, I(A, {"t"}));
    CHECK(is_zero_module(completed_tor(m, left, right, 1)));
    CHECK(is_zero_module(completed_tor(m, left, right, 2)));
  }
  {
    Ideal left = embed_left(m, I(A, {"s", "x"}));
    Ideal right = embed_right(m, I(A, {"t", "x"}));
    CHECK(is_zero_module(completed_tor(m, left, right, 2)));
  }
}

TEST_CASE("diagonal decomposition equals the direct chi") {
  {
    auto A = RingContext::make(Field::rationals(), {"x"});
    TensorModel m = model_from_ring(A);
    CompletedTorReport rep =
        diagonal_decompose(m, Ideal(A, {parse_polynomial("x^2", A)}), Ideal::zero(A));
    CHECK(rep.e_values == std::vector<long>{2, 0, 0});
    CHECK(rep.chi_via_diagonal == 2);
    CHECK(rep.chi_direct == 2);
    CHECK(rep.equal);
    CHECK(rep.positivity_case);
  }
  {
    auto A = base2_ring();
    TensorModel m = model_from_ring(A);
    CompletedTorReport rep = diagonal_decompose(m, I(A, {"s", "x"}), I(A, {"t"}));
    CHECK(rep.e_values[0] == 1);
    CHECK(rep.e_values[1] == 0);
    CHECK(rep.chi_via_diagonal == 1);
    CHECK(rep.chi_direct == 1);
    CHECK(rep.equal);
  }
  {
    // a vanishing-case pair: dimensions 1 + 1 < 3
    auto A = base2_ring();
    TensorModel m = model_from_ring(A);
    CompletedTorReport rep = diagonal_decompose(m, I(A, {"s", "x"}), I(A, {"t", "x"}));
    CHECK(rep.vanishing_case);
    CHECK(rep.chi_direct == 0);
    CHECK(rep.chi_via_diagonal == 0);
    CHECK(rep.equal);
  }
  {
    // support away from the origin is rejected
    auto A = base2_ring();
    TensorModel m = model_from_ring(A);
    CHECK_THROWS_AS(diagonal_decompose(m, I(A, {"x"}), I(A, {"x"})), Error);
    try {
      diagonal_decompose(m, I(A, {"x"}), I(A, {"x"}));
    } catch (const Error& e) {
      CHECK(e.kind() == Error::Kind::SupportNotAtOrigin);
    }
  }
}

TEST_CASE("diagonal identity on a seeded corpus over both base sizes") {
  std::mt19937_64 rng(79);
  // base size zero
  auto A0 = RingContext::make(Field::prime_field(101), {"x", "y"});
  TensorModel m0 = model_from_ring(A0);
  int done = 0;
  for (int trial = 0; done < 8 && trial < 100; ++trial) {
    std::uint32_t a = 1 + rng() % 2, b = 1 + rng() % 2;
    Ideal left(A0, {Polynomial::variable(A0, 0).pow(a) -
                        Polynomial::variable(A0, 1).pow(b + 1),
                    Polynomial::variable(A0, 1).pow(3)});
    Ideal right(A0, {Polynomial::variable(A0, 0).pow(1 + rng() % 2) +
                     Polynomial::variable(A0, 1).pow(2)});
    if (!support_at_origin(ideal_sum(left, right))) continue;
    Ideal bl = embed_left(m0, left), br = embed_right(m0, right);
    Ideal joint = ideal_sum(ideal_sum(bl, br), m0.diagonal);
    if (!support_at_origin(joint)) continue;
    CompletedTorReport rep = diagonal_decompose(m0, left, right);
    CHECK(rep.equal);
    ++done;
  }
  CHECK(done == 8);

  // base size two
  auto A2 = RingContext::make(Field::prime_field(101), {"s", "t", "x"},
                              MonomialOrder::grevlex(), 2);
  TensorModel m2 = model_from_ring(A2);
  done = 0;
  for (int trial = 0; done < 8 && trial < 100; ++trial) {
    Ideal left(A2, {random_base_poly(A2, rng),
                    Polynomial::variable(A2, 2) - random_base_poly(A2, rng)});
    Ideal right(A2, {random_base_poly(A2, rng),
                     Polynomial::variable(A2, 2).pow(1 + rng() % 2)});
    if (left.is_unit() || right.is_unit()) continue;
    Ideal bl = embed_left(m2, left), br = embed_right(m2, right);
    if (!support_at_origin(ideal_sum(ideal_sum(bl, br), m2.diagonal))) continue;
    CompletedTorReport rep = diagonal_decompose(m2, left, right);
    CHECK(rep.equal);
    ++done;
  }
  CHECK(done == 8);
}

TEST_CASE("vanishing of the second completed tor when the left kernel is small") {
  // left quotients with a base element acting regularly
  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  std::mt19937_64 rng(83);
  const char* primes[] = {"s", "t", "s - t", "s - 2*t"};
  for (int trial = 0; trial < 20; ++trial) {
    std::string p = primes[rng() % 4];
    Ideal left(A, {parse_polynomial(p, A),
                   Polynomial::variable(A, 2).pow(1 + rng() % 2) - random_base_poly(A, rng)});
    Ideal right(A, {random_base_poly(A, rng),
                    Polynomial::variable(A, 2) - random_base_poly(A, rng)});
    Ideal bl = embed_left(m, left), br = embed_right(m, right);
    PresentedModule t2 = completed_tor(m, bl, br, 2);
    CHECK(is_zero_module(t2));
  }
}

TEST_CASE("vanishing of the first completed tor for distinct base kernels") {
  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  std::mt19937_64 rng(89);
  const char* pairs[][2] = {{"s", "t"}, {"s", "s - t"}, {"t", "s - t"}, {"s - t", "s - 2*t"},
                            {"t", "s - 2*t"}};
  int done = 0;
  for (int trial = 0; done < 20 && trial < 200; ++trial) {
    auto& pr = pairs[rng() % 5];
    // quotients shaped like k[s,t]/(p) with x eliminated: genuine domains
    Ideal left(A, {parse_polynomial(pr[0], A),
                   Polynomial::variable(A, 2) - random_base_poly(A, rng)});
    Ideal right(A, {parse_polynomial(pr[1], A),
                    Polynomial::variable(A, 2) - random_base_poly(A, rng)});
    Ideal bl = embed_left(m, left), br = embed_right(m, right);
    PresentedModule t1 = completed_tor(m, bl, br, 1);
    CHECK(is_zero_module(t1));
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("base-regular left modules kill all higher completed tor") {
  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  std::mt19937_64 rng(97);
  int done = 0;
  for (int trial = 0; done < 20 && trial < 200; ++trial) {
    // quotients by one equation solving x in terms of the base are free over it
    Ideal left(A, {Polynomial::variable(A, 2).pow(1 + rng() % 2) - random_base_poly(A, rng)});
    Ideal right(A, {random_base_poly(A, rng), random_base_poly(A, rng),
                    Polynomial::variable(A, 2).pow(1 + rng() % 2)});
    if (right.is_unit()) continue;
    FlatnessReport flat = r_flatness_check(m, left);
    if (!flat.flat) continue;
    Ideal bl = embed_left(m, left), br = embed_right(m, right);
    CHECK(is_zero_module(completed_tor(m, bl, br, 1)));
    CHECK(is_zero_module(completed_tor(m, bl, br, 2)));
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("a bounded power of the joint ideal annihilates every completed tor") {
  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  Ideal left = I(A, {"s", "x^2"});
  Ideal right = I(A, {"t", "x^2"});
  Ideal bl = embed_left(m, left), br = embed_right(m, right);
  Ideal joint = ideal_sum(bl, br);
  for (std::size_t q = 0; q <= 2; ++q) {
    PresentedModule t = completed_tor(m, bl, br, q);
    if (is_zero_module(t)) continue;
    Ideal ann = annihilator(t);
    bool annihilated = false;
    for (std::uint32_t k = 1; k <= 10 && !annihilated; ++k) {
      Ideal power = ideal_power(joint, k);
      annihilated = true;
      for (const auto& g : power.generators())
        if (!ann.contains(g)) {
          annihilated = false;
          break;
        }
    }
    CHECK(annihilated);
  }
}

TEST_CASE("positivity margin for dominant components over the base") {
  // both quotients map onto the base ring, so the decomposition's leading term
  // must strictly dominate the correction
  auto A = RingContext::make(Field::prime_field(101), {"s", "t", "x", "y"},
                             MonomialOrder::grevlex(), 2);
  TensorModel m = model_from_ring(A);
  std::mt19937_64 rng(101);
  int done = 0;
  for (int trial = 0; done < 5 && trial < 60; ++trial) {
    Ideal left(A, {Polynomial::variable(A, 2) - random_base_poly(A, rng),
                   Polynomial::variable(A, 3) - random_base_poly(A, rng)});
    Ideal right(A, {Polynomial::variable(A, 2) - random_base_poly(A, rng),
                    Polynomial::variable(A, 3) - random_base_poly(A, rng)});
    Ideal bl = embed_left(m, left), br = embed_right(m, right);
    if (!support_at_origin(ideal_sum(ideal_sum(bl, br), m.diagonal))) continue;
    CompletedTorReport rep = diagonal_decompose(m, left, right);
    CHECK(rep.e_values[0] - rep.e_values[1] > 0);
    CHECK(rep.equal);
    ++done;
  }
  CHECK(done == 5);
}

TEST_CASE("flatness over the base via koszul homology") {
  auto A = base2_ring();
  TensorModel m = half_model_from_ring(A);
  {
    FlatnessReport rep = r_flatness_check(m, Ideal::zero(A));
    CHECK(rep.flat);
    CHECK(rep.fiber_dim == 1);
    CHECK(rep.expected_fiber_dim == 1);
    CHECK(rep.fiber_dim_matches);
  }
  {
    FlatnessReport rep = r_flatness_check(m, I(A, {"t - s*x"}));
    CHECK_FALSE(rep.flat);
    CHECK(rep.fiber_dim == 1);
    CHECK(rep.expected_fiber_dim == 0);
    CHECK_FALSE(rep.fiber_dim_matches);
  }
  {
    FlatnessReport rep = r_flatness_check(m, I(A, {"x"}));
    CHECK(rep.flat);
    CHECK(rep.fiber_dim == 0);
    CHECK(rep.fiber_dim_matches);
  }
}

TEST_CASE("the dimension bound for joint quotients") {
  auto A = base2_ring();
  TensorModel m = model_from_ring(A);
  {
    DimensionBoundReport rep = dimension_bound_check(m, I(A, {"x"}), I(A, {"x"}));
    CHECK(rep.joint_dim == 2);
    CHECK(rep.bound == 2);
    CHECK(rep.holds);
  }
  {
    DimensionBoundReport rep = dimension_bound_check(m, I(A, {"s", "x"}), I(A, {"t", "x"}));
    CHECK(rep.joint_dim == 0);
    CHECK(rep.bound == 0);
    CHECK(rep.holds);
  }
  {
    DimensionBoundReport rep =
        dimension_bound_check(m, Ideal::zero(A), Ideal::zero(A));
    CHECK(rep.joint_dim == 4);
    CHECK(rep.bound == 4);
    CHECK(rep.holds);
  }
}
