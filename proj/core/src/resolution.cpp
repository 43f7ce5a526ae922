#include <algorithm>

#include "chiwb/errors.hpp"
#include "chiwb/presented.hpp"

namespace chiwb {

namespace {

// Stable sort by descending degree of the retired variable in the lead
// monomial. With this arrangement the S-pair syzygies of the level avoid the
// retired variable in their leads, which bounds the Schreyer chain.
ModuleGB retire_sort(ModuleGB gb, std::size_t retire_var) {
  std::stable_sort(gb.elems.begin(), gb.elems.end(), [&](const VecPoly& a, const VecPoly& b) {
    auto la = vec_lead(a, *gb.order)->term;
    auto lb = vec_lead(b, *gb.order)->term;
    return la.mono.degree_in(retire_var) > lb.mono.degree_in(retire_var);
  });
  return gb;
}

// Drop syzygies whose lead another syzygy's lead divides; the rest is still a
// Groebner basis of the same module.
std::vector<VecPoly> minimalize_leads(std::vector<VecPoly> elems, const ModuleOrder& order) {
  std::vector<std::size_t> idx(elems.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = order.compare(vec_lead(elems[a], order)->term, vec_lead(elems[b], order)->term);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<VecPoly> kept;
  std::vector<ModTerm> kept_leads;
  for (auto i : idx) {
    ModTerm lead = vec_lead(elems[i], order)->term;
    bool redundant = false;
    for (const auto& kl : kept_leads)
      if (kl.pos == lead.pos && kl.mono.divides(lead.mono)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept.push_back(std::move(elems[i]));
      kept_leads.push_back(lead);
    }
  }
  return kept;
}

}  // namespace

FreeComplex free_resolution_impl(const PresentedModule& m) {
  FreeComplex cx;
  cx.ring = m.ring;
  cx.ranks.push_back(m.rank);
  if (m.relations.empty()) return cx;

  const std::size_t nvars = m.ring->nvars();

  ModuleGB level = m.relations_gb();
  std::size_t k = 1;
  for (;;) {
    std::size_t retire = nvars >= k ? nvars - k : 0;
    level = retire_sort(std::move(level), retire);

    Matrix d;
    d.reserve(level.elems.size());
    for (const auto& e : level.elems) d.push_back(e);
    cx.ranks.push_back(level.elems.size());
    cx.diffs.push_back(std::move(d));

    SchreyerStep step = schreyer_syzygies(level);
    if (step.syzygies.empty()) break;
    if (k > nvars + 1)
      fail(Error::Kind::Internal, "syzygy chain exceeded the variable-count bound");

    ModuleGB next;
    next.ring = m.ring;
    next.rank = level.elems.size();
    next.order = step.order;
    next.elems = minimalize_leads(std::move(step.syzygies), *step.order);
    level = std::move(next);
    ++k;
  }

  prune_complex(cx);
  if (cx.length() > nvars)
    fail(Error::Kind::Internal, "free resolution exceeded the variable-count bound");
  return cx;
}

FreeComplex free_resolution(const PresentedModule& m) { return m.resolution(); }

}  // namespace chiwb
