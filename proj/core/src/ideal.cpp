#include "chiwb/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "chiwb/errors.hpp"

namespace chiwb {

namespace {

VecPoly wrap(const Polynomial& p) { return VecPoly{p}; }

// Exponent remap between rings with the same field (no arithmetic): var v of
// the source becomes var var_map[v] of the target.
Polynomial remap(const Polynomial& p, const RingPtr& target,
                 const std::vector<std::size_t>& var_map) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < var_map.size(); ++v) m.exps[var_map[v]] += t.mono.exps[v];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.leading_monomial());
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(g.ring(), ring_);
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  return gb_->get([this] {
    std::vector<VecPoly> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(wrap(g));
    auto order = std::make_shared<PotOrder>(ring_->order());
    ModuleGB gb = module_groebner(ring_, 1, std::move(gens), order);
    GroebnerBasis out{ring_->order(), {}};
    out.elements.reserve(gb.elems.size());
    for (auto& e : gb.elems) out.elements.push_back(std::move(e[0]));
    return out;
  });
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_);
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_zero() const { return groebner().elements.empty(); }

bool Ideal::is_unit() const {
  const auto& e = groebner().elements;
  return e.size() == 1 && e[0].is_constant();
}

bool Ideal::in_irrelevant() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.constant_term().is_zero(); });
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "(";
  if (gens_.empty()) os << "0";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  os << ")";
  return os.str();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<VecPoly> basis;
  basis.reserve(gb.elements.size());
  for (const auto& e : gb.elements) basis.push_back(wrap(e));
  PotOrder order(gb.order);
  VecPoly r = module_nf(wrap(f), basis, order);
  return r[0];
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.has_zero_generators() || b.has_zero_generators()) return Ideal::zero(ring);

  // t*I + (1-t)*J in k[t, x...] with t eliminated by a block order.
  std::vector<std::string> vars;
  vars.push_back("@t");
  for (const auto& v : ring->vars()) vars.push_back(v);
  RingPtr ext = RingContext::make(ring->field(), vars,
                                  MonomialOrder::elimination(vars.size(), 1));
  std::vector<std::size_t> up(ring->nvars());
  for (std::size_t v = 0; v < up.size(); ++v) up[v] = v + 1;

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, ext->field().one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * remap(f, ext, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap(g, ext, up));

  Ideal mixed(ext, std::move(gens));
  std::vector<Polynomial> kept;
  for (const auto& e : mixed.groebner().elements) {
    bool has_t = false;
    for (const auto& term : e.terms())
      if (term.mono.exps[0] > 0) {
        has_t = true;
        break;
      }
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& term : e.terms()) {
      Monomial m(ring->nvars());
      for (std::size_t v = 0; v < ring->nvars(); ++v) m.exps[v] = term.mono.exps[v + 1];
      terms.push_back({std::move(m), term.coeff});
    }
    kept.emplace_back(ring, std::move(terms));
  }
  return Ideal(ring, std::move(kept));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) return Ideal::unit(a.ring());
  Ideal principal(a.ring(), {f});
  Ideal meet = ideal_intersection(a, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(g.divide_exact(f));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.has_zero_generators()) return Ideal::unit(a.ring());
  bool first = true;
  Ideal acc;
  for (const auto& f : b.generators()) {
    Ideal q = ideal_quotient(a, f);
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return acc;
}

namespace {

template <typename Quot>
Ideal saturate_by(const Ideal& a, const Quot& quot) {
  Ideal current = a;
  for (;;) {
    Ideal next = quot(current);
    if (ideal_equal(next, current)) return current;
    current = next;
  }
}

}  // namespace

Ideal ideal_saturation(const Ideal& a, const Polynomial& f) {
  return saturate_by(a, [&](const Ideal& c) { return ideal_quotient(c, f); });
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
  return saturate_by(a, [&](const Ideal& c) { return ideal_quotient(c, b); });
}

Ideal ideal_power(const Ideal& a, std::uint32_t n) {
  if (n == 0) return Ideal::unit(a.ring());
  const auto& gens = a.generators();
  if (gens.empty()) return Ideal::zero(a.ring());
  // all products of n generators with repetition
  std::vector<Polynomial> out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    Polynomial prod = Polynomial::constant(a.ring(), a.ring()->field().one());
    for (auto i : pick) prod = prod * gens[i];
    out.push_back(std::move(prod));
    // next non-decreasing multi-index
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t t = k; t < n; ++t) pick[t] = pick[k - 1];
  }
  return Ideal(a.ring(), std::move(out));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ea = a.groebner().elements;
  const auto& eb = b.groebner().elements;
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return false;
  return true;
}

long krull_dimension(const Ideal& a) {
  if (a.is_unit()) fail(Error::Kind::Domain, "the unit ideal has no dimension");
  const std::size_t n = a.ring()->nvars();
  std::vector<Monomial> leads = a.groebner().lead_monomials();
  // largest variable subset S such that no lead monomial is supported inside S
  long best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    long size = static_cast<long>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (m.exps[v] > 0 && !(mask & (1ull << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool support_at_origin(const Ideal& a) {
  if (a.is_unit()) return true;
  Ideal sat = ideal_saturation(a, Ideal::irrelevant(a.ring()));
  return sat.is_unit();
}

}  // namespace chiwb
