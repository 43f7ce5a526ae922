#include "chiwb/presented.hpp"

#include <set>

#include "chiwb/errors.hpp"

namespace chiwb {

PresentedModule::PresentedModule(RingPtr r, std::size_t rk, std::vector<VecPoly> rels)
    : ring(std::move(r)), rank(rk) {
  for (auto& col : rels) {
    if (col.size() != rank)
      fail(Error::Kind::Internal, "relation column length does not match the rank");
    if (!vec_is_zero(col)) relations.push_back(std::move(col));
  }
}

PresentedModule PresentedModule::quotient_by(const Ideal& I) {
  std::vector<VecPoly> rels;
  rels.reserve(I.generators().size());
  for (const auto& g : I.generators()) rels.push_back(VecPoly{g});
  return PresentedModule(I.ring(), 1, std::move(rels));
}

const ModuleGB& PresentedModule::relations_gb() const {
  return gb_->get([this] {
    auto order = std::make_shared<PotOrder>(ring->order());
    return module_groebner(ring, rank, relations, order);
  });
}

const FreeComplex& PresentedModule::resolution() const {
  return res_->get([this] { return free_resolution_impl(*this); });
}

bool is_zero_module(const PresentedModule& m) {
  if (m.rank == 0) return true;
  const ModuleGB& gb = m.relations_gb();
  for (std::uint32_t p = 0; p < m.rank; ++p) {
    VecPoly e = vec_zero(m.ring, m.rank);
    e[p] = Polynomial::constant(m.ring, m.ring->field().one());
    if (!vec_is_zero(module_nf(std::move(e), gb.elems, *gb.order))) return false;
  }
  return true;
}

long k_dimension(const PresentedModule& m) {
  if (m.rank == 0) return 0;
  const ModuleGB& gb = m.relations_gb();
  const std::size_t n = m.ring->nvars();
  long total = 0;
  for (std::uint32_t p = 0; p < m.rank; ++p) {
    std::vector<Monomial> leads;
    for (const auto& e : gb.elems) {
      auto l = vec_lead(e, *gb.order);
      if (l->term.pos == p) leads.push_back(l->term.mono);
    }
    // finite iff, for every variable, some lead is supported on it alone
    for (std::size_t v = 0; v < n; ++v) {
      bool bounded = false;
      for (const auto& l : leads) {
        bool pure = true;
        for (std::size_t w = 0; w < n && pure; ++w)
          if (w != v && l.exps[w] > 0) pure = false;
        if (pure) {
          bounded = true;
          break;
        }
      }
      if (!bounded)
        fail(Error::Kind::InfiniteLength,
             "module has infinite length (free direction in position " + std::to_string(p) +
                 ")");
    }
    // count standard monomials by breadth-first expansion from 1
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Monomial> frontier{Monomial(n)};
    seen.insert(frontier[0].exps);
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& mono : frontier) {
        bool standard = true;
        for (const auto& l : leads)
          if (l.divides(mono)) {
            standard = false;
            break;
          }
        if (!standard) continue;
        ++total;
        for (std::size_t v = 0; v < n; ++v) {
          Monomial up = mono;
          ++up.exps[v];
          if (seen.insert(up.exps).second) next.push_back(std::move(up));
        }
      }
      frontier = std::move(next);
    }
  }
  return total;
}

Ideal annihilator(const PresentedModule& m) {
  if (m.rank == 0) return Ideal::unit(m.ring);
  Ideal acc;
  bool first = true;
  for (std::uint32_t p = 0; p < m.rank; ++p) {
    // (relations : e_p) via syzygies of [e_p | relations]
    std::vector<VecPoly> cols;
    VecPoly e = vec_zero(m.ring, m.rank);
    e[p] = Polynomial::constant(m.ring, m.ring->field().one());
    cols.push_back(std::move(e));
    for (const auto& r : m.relations) cols.push_back(r);
    std::vector<Polynomial> gens;
    for (const auto& s : syzygy_generators(m.ring, m.rank, cols))
      if (!s[0].is_zero()) gens.push_back(s[0]);
    Ideal q(m.ring, std::move(gens));
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return acc;
}

long module_dimension(const PresentedModule& m) {
  Ideal ann = annihilator(m);
  if (ann.is_unit()) return -1;
  return krull_dimension(ann);
}

}  // namespace chiwb
