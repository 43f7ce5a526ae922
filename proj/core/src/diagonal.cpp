#include "chiwb/diagonal.hpp"

#include <algorithm>
#include <set>

#include "chiwb/errors.hpp"

namespace chiwb {

TensorModel build_tensor_model(const Field& field, const std::vector<std::string>& base,
                               const std::vector<std::string>& left,
                               const std::vector<std::string>& right) {
  if (base.size() > 2) fail(Error::Kind::Domain, "base has dimension at most two");
  if (left.empty()) fail(Error::Kind::Domain, "the model needs at least one left variable");

  std::vector<std::string> vars;
  vars.insert(vars.end(), base.begin(), base.end());
  vars.insert(vars.end(), left.begin(), left.end());
  vars.insert(vars.end(), right.begin(), right.end());
  RingPtr big = RingContext::make(field, vars, MonomialOrder::grevlex(), base.size());

  TensorModel model;
  model.big = big;
  model.base_count = base.size();
  for (std::size_t i = 0; i < left.size(); ++i)
    model.left_vars.push_back(base.size() + i);
  for (std::size_t i = 0; i < right.size(); ++i)
    model.right_vars.push_back(base.size() + left.size() + i);

  if (left.size() == right.size()) {
    std::vector<Polynomial> diag;
    for (std::size_t i = 0; i < left.size(); ++i)
      diag.push_back(Polynomial::variable(big, model.left_vars[i]) -
                     Polynomial::variable(big, model.right_vars[i]));
    model.diagonal = Ideal(big, std::move(diag));
  } else {
    model.diagonal = Ideal::zero(big);
  }
  return model;
}

namespace {

TensorModel model_from_ring_impl(const RingPtr& a, bool with_right) {
  std::vector<std::string> base(a->vars().begin(),
                                a->vars().begin() + static_cast<std::ptrdiff_t>(a->base_count()));
  std::vector<std::string> left(a->vars().begin() + static_cast<std::ptrdiff_t>(a->base_count()),
                                a->vars().end());
  std::vector<std::string> right;
  if (with_right) {
    std::set<std::string> taken(a->vars().begin(), a->vars().end());
    for (const auto& name : left) {
      std::string candidate = name + "_r";
      while (taken.count(candidate)) candidate += "_r";
      taken.insert(candidate);
      right.push_back(candidate);
    }
  }
  return build_tensor_model(a->field(), base, left, right);
}

}  // namespace

TensorModel model_from_ring(const RingPtr& a) { return model_from_ring_impl(a, true); }
TensorModel half_model_from_ring(const RingPtr& a) { return model_from_ring_impl(a, false); }

namespace {

Ideal embed(const TensorModel& model, const Ideal& in_a, bool to_right) {
  const RingPtr& a = in_a.ring();
  if (a->nvars() != model.base_count + model.left_vars.size())
    fail(Error::Kind::Domain, "ideal does not live in the model's left-hand ring");
  std::vector<std::size_t> var_map(a->nvars());
  for (std::size_t v = 0; v < model.base_count; ++v) var_map[v] = v;
  for (std::size_t i = 0; i < model.left_vars.size(); ++i) {
    if (to_right) {
      if (model.right_vars.size() != model.left_vars.size())
        fail(Error::Kind::Domain, "model has no right-hand side to embed into");
      var_map[model.base_count + i] = model.right_vars[i];
    } else {
      var_map[model.base_count + i] = model.left_vars[i];
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& g : in_a.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(model.big->nvars());
      for (std::size_t v = 0; v < var_map.size(); ++v) m.exps[var_map[v]] += t.mono.exps[v];
      terms.push_back({std::move(m), t.coeff});
    }
    gens.emplace_back(model.big, std::move(terms));
  }
  return Ideal(model.big, std::move(gens));
}

}  // namespace

Ideal embed_left(const TensorModel& model, const Ideal& in_a) {
  return embed(model, in_a, false);
}

Ideal embed_right(const TensorModel& model, const Ideal& in_a) {
  return embed(model, in_a, true);
}

PresentedModule completed_tor(const TensorModel& model, const Ideal& big_left,
                              const Ideal& big_right, std::size_t q) {
  require_same_ring(big_left.ring(), model.big);
  require_same_ring(big_right.ring(), model.big);
  return tor(big_left, big_right, q);
}

CompletedTorReport diagonal_decompose(const TensorModel& model, const Ideal& left_in_a,
                                      const Ideal& right_in_a) {
  if (model.right_vars.size() != model.left_vars.size())
    fail(Error::Kind::Domain, "the diagonal decomposition needs both tensor factors");
  Ideal big_left = embed_left(model, left_in_a);
  Ideal big_right = embed_right(model, right_in_a);

  Ideal joint = ideal_sum(ideal_sum(big_left, big_right), model.diagonal);
  if (!support_at_origin(joint))
    fail(Error::Kind::SupportNotAtOrigin,
         "the identified quotient is not supported at the origin: " + joint.to_string());

  const long m = static_cast<long>(model.left_count());
  CompletedTorReport report;
  for (std::size_t q = 0; q <= 2; ++q) {
    PresentedModule t = completed_tor(model, big_left, big_right, q);
    report.wtor_dims.push_back(module_dimension(t));
    report.e_values.push_back(hs_multiplicity(t, model.diagonal, m));
  }
  report.chi_via_diagonal = report.e_values[0] - report.e_values[1] + report.e_values[2];
  report.chi_direct = chi(left_in_a, right_in_a).chi;

  const long dim_a = static_cast<long>(left_in_a.ring()->nvars());
  long dl = left_in_a.is_unit() ? -1 : krull_dimension(left_in_a);
  long dr = right_in_a.is_unit() ? -1 : krull_dimension(right_in_a);
  report.positivity_case = dl + dr == dim_a;
  report.vanishing_case = dl + dr < dim_a;
  report.equal = report.chi_via_diagonal == report.chi_direct;
  return report;
}

FlatnessReport r_flatness_check(const TensorModel& model, const Ideal& left_in_a) {
  if (model.base_count != 2)
    fail(Error::Kind::Domain, "flatness over the base needs a two-dimensional base");
  Ideal big_left = embed_left(model, left_in_a);
  PresentedModule m = PresentedModule::quotient_by(big_left);

  std::vector<Polynomial> st{Polynomial::variable(model.big, 0),
                             Polynomial::variable(model.big, 1)};
  FlatnessReport report;
  report.h1_zero = is_zero_module(koszul_homology(st, m, 1));
  report.h2_zero = is_zero_module(koszul_homology(st, m, 2));
  report.flat = report.h1_zero && report.h2_zero;

  Ideal fiber = ideal_sum(big_left, Ideal(model.big, st));
  report.fiber_dim = fiber.is_unit() ? -1 : krull_dimension(fiber);
  report.module_dim = big_left.is_unit() ? -1 : krull_dimension(big_left);
  report.expected_fiber_dim = report.module_dim - 2;
  report.fiber_dim_matches = report.fiber_dim == report.expected_fiber_dim;
  return report;
}

DimensionBoundReport dimension_bound_check(const TensorModel& model, const Ideal& left_in_a,
                                           const Ideal& right_in_a) {
  Ideal big_left = embed_left(model, left_in_a);
  Ideal big_right = embed_right(model, right_in_a);
  Ideal joint = ideal_sum(big_left, big_right);

  DimensionBoundReport report;
  report.dim_left = left_in_a.is_unit() ? -1 : krull_dimension(left_in_a);
  report.dim_right = right_in_a.is_unit() ? -1 : krull_dimension(right_in_a);
  report.joint_dim = joint.is_unit() ? -1 : krull_dimension(joint);
  report.bound = report.dim_left + report.dim_right - 2;
  report.holds = report.joint_dim >= report.bound;
  return report;
}

}  // namespace chiwb
