#include "chiwb/multiplicity.hpp"

#include <algorithm>

#include "chiwb/errors.hpp"

namespace chiwb {

namespace {

long length_of_quotient(const PresentedModule& m, const Ideal& qn) {
  std::vector<VecPoly> rels = m.relations;
  for (std::size_t p = 0; p < m.rank; ++p)
    for (const auto& g : qn.generators()) {
      VecPoly col = vec_zero(m.ring, m.rank);
      col[p] = g;
      rels.push_back(std::move(col));
    }
  return k_dimension(PresentedModule(m.ring, m.rank, std::move(rels)));
}

}  // namespace

long hs_length(const PresentedModule& m, const Ideal& q, unsigned n) {
  require_same_ring(m.ring, q.ring());
  Ideal support = ideal_sum(q, annihilator(m));
  if (!support_at_origin(support))
    fail(Error::Kind::SupportNotAtOrigin,
         "q plus the annihilator must be supported at the origin");
  return length_of_quotient(m, ideal_power(q, n));
}

long hs_length(const Ideal& presenting, const Ideal& q, unsigned n) {
  return hs_length(PresentedModule::quotient_by(presenting), q, n);
}

long hs_multiplicity(const PresentedModule& m, const Ideal& q, long d, HsOptions opts) {
  require_same_ring(m.ring, q.ring());
  if (d < 0) fail(Error::Kind::Domain, "the multiplicity degree must be non-negative");
  const long dim = module_dimension(m);
  if (dim < d) return 0;
  if (dim > d)
    fail(Error::Kind::Domain,
         "multiplicity degree " + std::to_string(d) + " is below the module dimension " +
             std::to_string(dim));
  Ideal support = ideal_sum(q, annihilator(m));
  if (!support_at_origin(support))
    fail(Error::Kind::SupportNotAtOrigin,
         "q plus the annihilator must be supported at the origin");

  // successive d-th differences of n -> l(M/q^n M)
  std::vector<long> values;
  unsigned streak = 0;
  long last = 0;
  for (unsigned n = 0; n <= opts.cap; ++n) {
    values.push_back(length_of_quotient(m, ideal_power(q, n)));
    if (values.size() < static_cast<std::size_t>(d) + 1) continue;
    std::vector<long> diff = values;
    for (long t = 0; t < d; ++t)
      for (std::size_t i = diff.size() - 1; i > 0; --i) diff[i] -= diff[i - 1];
    long current = diff.back();
    if (values.size() >= static_cast<std::size_t>(d) + 2 && current == last) {
      ++streak;
    } else {
      streak = 1;
    }
    last = current;
    if (streak >= opts.window) return current;
  }
  fail(Error::Kind::NoStabilization,
       "Hilbert-Samuel differences did not stabilize within " + std::to_string(opts.cap) +
           " powers");
}

long hs_multiplicity(const Ideal& presenting, const Ideal& q, long d, HsOptions opts) {
  return hs_multiplicity(PresentedModule::quotient_by(presenting), q, d, opts);
}

Ideal tangent_cone(const Ideal& i) {
  const RingPtr& ring = i.ring();
  if (!i.in_irrelevant())
    fail(Error::Kind::Domain, "tangent cone requires an ideal inside the irrelevant ideal");
  if (i.has_zero_generators()) return Ideal::zero(ring);

  const std::size_t n = ring->nvars();
  std::vector<std::string> vars = ring->vars();
  vars.push_back("@h");
  RingPtr ext = RingContext::make(ring->field(), vars, MonomialOrder::graded_aux_last(n + 1));

  std::vector<Polynomial> homogenized;
  for (const auto& g : i.generators()) {
    const std::uint64_t deg = g.total_degree();
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(n + 1);
      for (std::size_t v = 0; v < n; ++v) m.exps[v] = t.mono.exps[v];
      m.exps[n] = static_cast<std::uint32_t>(deg - t.mono.degree());
      terms.push_back({std::move(m), t.coeff});
    }
    homogenized.emplace_back(ext, std::move(terms));
  }

  Ideal lifted(ext, std::move(homogenized));
  std::vector<Polynomial> cone_gens;
  for (const auto& e : lifted.groebner().elements) {
    // dehomogenize and keep the initial form
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      Monomial m(n);
      for (std::size_t v = 0; v < n; ++v) m.exps[v] = t.mono.exps[v];
      terms.push_back({std::move(m), t.coeff});
    }
    Polynomial down(ring, std::move(terms));
    if (!down.is_zero()) cone_gens.push_back(down.lowest_form());
  }
  Ideal cone(ring, std::move(cone_gens));
  // canonical generators
  return Ideal(ring, cone.groebner().elements);
}

long point_multiplicity(const Ideal& i) {
  Ideal cone = tangent_cone(i);
  HilbertSeries hs = hilbert_series(cone.groebner().lead_monomials(), i.ring()->nvars());
  mpz_class e = hs.multiplicity();
  if (!e.fits_slong_p())
    fail(Error::Kind::Internal, "point multiplicity does not fit a machine word");
  return e.get_si();
}

TransversalityReport transversality_check(const Ideal& left, const Ideal& right) {
  TransversalityReport r;
  r.chi = chi(left, right);
  r.e_left = point_multiplicity(left);
  r.e_right = point_multiplicity(right);
  Ideal cone_left = tangent_cone(left);
  Ideal cone_right = tangent_cone(right);
  Ideal cone_sum = ideal_sum(cone_left, cone_right);
  r.cone_dim = krull_dimension(cone_sum);
  r.transverse = r.cone_dim == 0;
  r.equality = r.chi.chi == r.e_left * r.e_right;
  r.tennison_ok = !r.transverse || r.equality;
  r.chi.witnesses["tangent_cone_left"] = cone_left.to_string();
  r.chi.witnesses["tangent_cone_right"] = cone_right.to_string();
  r.chi.witnesses["cone_sum"] = cone_sum.to_string();
  return r;
}

}  // namespace chiwb
