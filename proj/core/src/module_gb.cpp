#include "chiwb/module_gb.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chiwb/budget.hpp"
#include "chiwb/errors.hpp"

namespace chiwb {

int PotOrder::compare(const ModTerm& a, const ModTerm& b) const {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return ring_order_.compare(a.mono, b.mono);
}

int SchreyerOrder::compare(const ModTerm& a, const ModTerm& b) const {
  const ModTerm& la = leads_[a.pos];
  const ModTerm& lb = leads_[b.pos];
  ModTerm ia{a.mono * la.mono, la.pos};
  ModTerm ib{b.mono * lb.mono, lb.pos};
  int c = prev_->compare(ia, ib);
  if (c != 0) return c;
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return 0;
}

VecPoly vec_zero(const RingPtr& ring, std::size_t rank) {
  return VecPoly(rank, Polynomial::zero(ring));
}

bool vec_is_zero(const VecPoly& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) {
  VecPoly r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

VecPoly vec_times_term(const VecPoly& v, const Coeff& c, const Monomial& m) {
  VecPoly r(v);
  for (auto& p : r) p = p.times_term(c, m);
  return r;
}

VecPoly vec_times_poly(const VecPoly& v, const Polynomial& p) {
  VecPoly r(v);
  for (auto& q : r) q = q * p;
  return r;
}

std::optional<LeadInfo> vec_lead(const VecPoly& v, const ModuleOrder& order) {
  std::optional<LeadInfo> best;
  for (std::uint32_t pos = 0; pos < v.size(); ++pos) {
    if (v[pos].is_zero()) continue;
    // Within one position the module order restricts to the ring order, so the
    // polynomial's own leading term is the position's largest term.
    ModTerm t{v[pos].leading_monomial(), pos};
    if (!best || order.greater(t, best->term)) best = LeadInfo{t, v[pos].leading_coeff()};
  }
  return best;
}

VecPoly module_nf(VecPoly v, const std::vector<VecPoly>& basis, const ModuleOrder& order,
                  std::vector<Polynomial>* quotients) {
  if (v.empty()) return v;
  const RingPtr ring = v[0].ring();
  const Field& f = ring->field();
  if (quotients) quotients->assign(basis.size(), Polynomial::zero(ring));
  VecPoly result = vec_zero(ring, v.size());
  while (true) {
    auto lead = vec_lead(v, order);
    if (!lead) break;
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto bl = vec_lead(basis[k], order);
      if (!bl) continue;
      if (bl->term.pos != lead->term.pos || !bl->term.mono.divides(lead->term.mono)) continue;
      budget::charge();
      Coeff c = f.div(lead->coeff, bl->coeff);
      Monomial q = lead->term.mono.quotient(bl->term.mono);
      v = vec_sub(v, vec_times_term(basis[k], c, q));
      if (quotients)
        (*quotients)[k] = (*quotients)[k] + Polynomial::from_term(ring, c, q);
      reduced = true;
      break;
    }
    if (!reduced) {
      // head term is irreducible; move it to the result and keep going
      Polynomial head = Polynomial::from_term(ring, lead->coeff, lead->term.mono);
      result[lead->term.pos] = result[lead->term.pos] + head;
      v[lead->term.pos] = v[lead->term.pos] - head;
    }
  }
  return result;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

VecPoly make_monic(const VecPoly& v, const ModuleOrder& order) {
  auto lead = vec_lead(v, order);
  if (!lead) return v;
  const Field& f = v[0].ring()->field();
  Coeff c = f.inv(lead->coeff);
  VecPoly r(v);
  for (auto& p : r) p = p.times_coeff(c);
  return r;
}

}  // namespace

ModuleGB module_groebner(const RingPtr& ring, std::size_t rank, std::vector<VecPoly> gens,
                         ModuleOrderPtr order, const GBOptions& opts) {
  const MonomialOrder& ring_order = ring->order();
  std::vector<VecPoly> g;
  std::vector<ModTerm> leads;
  auto push_elem = [&](const VecPoly& v) {
    if (vec_is_zero(v)) return;
    VecPoly m = make_monic(v, *order);
    leads.push_back(vec_lead(m, *order)->term);
    g.push_back(std::move(m));
  };
  for (auto& v : gens) push_elem(v);

  const bool criteria = opts.use_criteria && rank == 1;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    const std::uint64_t da = a.lcm.degree(), db = b.lcm.degree();
    if (da != db) return da < db;
    int c = ring_order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].pos != leads[j].pos) continue;
      queue.push_back({i, j, Monomial::lcm(leads[i].mono, leads[j].mono)});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair p = *it;
    queue.erase(it);
    treated.insert({p.i, p.j});

    if (criteria) {
      // coprime leads: the S-polynomial reduces to zero
      if (Monomial::gcd(leads[p.i].mono, leads[p.j].mono).is_one()) continue;
      // chain criterion
      bool skip = false;
      for (std::size_t k = 0; k < g.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (leads[k].pos != leads[p.i].pos) continue;
        if (!leads[k].mono.divides(p.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) {
          return std::make_pair(std::min(a, b), std::max(a, b));
        };
        if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) skip = true;
      }
      if (skip) continue;
    }

    Monomial mi = p.lcm.quotient(leads[p.i].mono);
    Monomial mj = p.lcm.quotient(leads[p.j].mono);
    const Field& f = ring->field();
    VecPoly spoly = vec_sub(vec_times_term(g[p.i], f.one(), mi),
                            vec_times_term(g[p.j], f.one(), mj));
    VecPoly r = module_nf(std::move(spoly), g, *order);
    if (!vec_is_zero(r)) {
      push_elem(r);
      add_pairs_for(g.size() - 1);
    }
  }

  ModuleGB out;
  out.ring = ring;
  out.rank = rank;
  out.order = order;

  if (opts.reduced) {
    // minimal subset: drop any element whose lead another kept lead divides
    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      int c = order->compare(leads[a], leads[b]);
      if (c != 0) return c < 0;
      return a < b;
    });
    std::vector<std::size_t> kept;
    for (auto i : idx) {
      bool redundant = false;
      for (auto k : kept)
        if (leads[k].pos == leads[i].pos && leads[k].mono.divides(leads[i].mono)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(i);
    }
    std::vector<VecPoly> reduced;
    reduced.reserve(kept.size());
    for (auto i : kept) reduced.push_back(g[i]);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      std::vector<VecPoly> others;
      others.reserve(reduced.size() - 1);
      for (std::size_t k = 0; k < reduced.size(); ++k)
        if (k != i) others.push_back(reduced[k]);
      // leads are pairwise non-divisible, so reduction only rewrites tails
      reduced[i] = make_monic(module_nf(reduced[i], others, *order), *order);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const VecPoly& a, const VecPoly& b) {
      return order->greater(vec_lead(a, *order)->term, vec_lead(b, *order)->term);
    });
    out.elems = std::move(reduced);
  } else {
    out.elems = std::move(g);
  }
  return out;
}

std::vector<VecPoly> syzygy_generators(const RingPtr& ring, std::size_t rank,
                                       const std::vector<VecPoly>& cols) {
  const std::size_t k = cols.size();
  if (k == 0) return {};
  if (rank == 0) {
    std::vector<VecPoly> id;
    for (std::size_t i = 0; i < k; ++i) {
      VecPoly e = vec_zero(ring, k);
      e[i] = Polynomial::constant(ring, ring->field().one());
      id.push_back(std::move(e));
    }
    return id;
  }
  std::vector<VecPoly> big;
  big.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    VecPoly v = vec_zero(ring, rank + k);
    for (std::size_t r = 0; r < rank; ++r) v[r] = cols[i][r];
    v[rank + i] = Polynomial::constant(ring, ring->field().one());
    big.push_back(std::move(v));
  }
  auto order = std::make_shared<PotOrder>(ring->order());
  ModuleGB gb = module_groebner(ring, rank + k, std::move(big), order,
                                {.reduced = true, .use_criteria = false});
  std::vector<VecPoly> syz;
  for (const auto& e : gb.elems) {
    bool head_zero = true;
    for (std::size_t r = 0; r < rank && head_zero; ++r)
      if (!e[r].is_zero()) head_zero = false;
    if (!head_zero) continue;
    syz.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(rank), e.end());
  }
  return syz;
}

SchreyerStep schreyer_syzygies(const ModuleGB& gb) {
  const RingPtr& ring = gb.ring;
  const Field& f = ring->field();
  std::vector<ModTerm> leads;
  leads.reserve(gb.elems.size());
  for (const auto& e : gb.elems) leads.push_back(vec_lead(e, *gb.order)->term);

  SchreyerStep step;
  step.order = std::make_shared<SchreyerOrder>(leads, gb.order);
  for (std::size_t i = 0; i < gb.elems.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
      if (leads[i].pos != leads[j].pos) continue;
      Monomial lcm = Monomial::lcm(leads[i].mono, leads[j].mono);
      Monomial mi = lcm.quotient(leads[i].mono);
      Monomial mj = lcm.quotient(leads[j].mono);
      VecPoly spoly = vec_sub(vec_times_term(gb.elems[i], f.one(), mi),
                              vec_times_term(gb.elems[j], f.one(), mj));
      std::vector<Polynomial> quot;
      VecPoly r = module_nf(std::move(spoly), gb.elems, *gb.order, &quot);
      if (!vec_is_zero(r))
        fail(Error::Kind::Internal, "S-polynomial of a Groebner basis did not reduce to zero");
      VecPoly s(gb.elems.size(), Polynomial::zero(ring));
      for (std::size_t t = 0; t < quot.size(); ++t) s[t] = -quot[t];
      s[i] = s[i] + Polynomial::from_term(ring, f.one(), mi);
      s[j] = s[j] - Polynomial::from_term(ring, f.one(), mj);
      if (!vec_is_zero(s)) step.syzygies.push_back(std::move(s));
    }
  }
  return step;
}

bool is_groebner(const ModuleGB& gb) {
  const Field& f = gb.ring->field();
  std::vector<ModTerm> leads;
  for (const auto& e : gb.elems) leads.push_back(vec_lead(e, *gb.order)->term);
  for (std::size_t i = 0; i < gb.elems.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
      if (leads[i].pos != leads[j].pos) continue;
      Monomial lcm = Monomial::lcm(leads[i].mono, leads[j].mono);
      VecPoly spoly = vec_sub(vec_times_term(gb.elems[i], f.one(), lcm.quotient(leads[i].mono)),
                              vec_times_term(gb.elems[j], f.one(), lcm.quotient(leads[j].mono)));
      if (!vec_is_zero(module_nf(std::move(spoly), gb.elems, *gb.order))) return false;
    }
  return true;
}

}  // namespace chiwb
