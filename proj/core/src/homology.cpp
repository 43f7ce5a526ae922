#include "chiwb/homology.hpp"

#include <algorithm>

#include "chiwb/errors.hpp"

namespace chiwb {

namespace {

// Columns of d tensor identity on an N with `g` generators; cover index of
// e_a (x) f_b is a*g + b.
Matrix tensor_matrix(const Matrix& d, std::size_t codomain_rank, std::size_t g,
                     const RingPtr& ring) {
  Matrix out;
  out.reserve(d.size() * g);
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < g; ++b) {
      VecPoly col = vec_zero(ring, codomain_rank * g);
      for (std::size_t ap = 0; ap < codomain_rank; ++ap) col[ap * g + b] = d[a][ap];
      out.push_back(std::move(col));
    }
  return out;
}

// Relation columns of N repeated across the free part of rank r.
Matrix relation_block(std::size_t r, const PresentedModule& n) {
  Matrix out;
  out.reserve(r * n.relations.size());
  for (std::size_t a = 0; a < r; ++a)
    for (const auto& rel : n.relations) {
      VecPoly col = vec_zero(n.ring, r * n.rank);
      for (std::size_t b = 0; b < n.rank; ++b) col[a * n.rank + b] = rel[b];
      out.push_back(std::move(col));
    }
  return out;
}

long dim_or_empty(const Ideal& i) { return i.is_unit() ? -1 : krull_dimension(i); }

}  // namespace

std::vector<VecPoly> kernel_generators(const RingPtr& ring, std::size_t rank,
                                       const std::vector<VecPoly>& cols) {
  return syzygy_generators(ring, rank, cols);
}

PresentedModule homology_of_tensor(const FreeComplex& f, const PresentedModule& n,
                                   std::size_t i) {
  const RingPtr& ring = n.ring;
  require_same_ring(f.ring, ring);
  const std::size_t g = n.rank;
  if (g == 0 || i >= f.ranks.size() || f.ranks[i] == 0)
    return PresentedModule::zero(ring);
  const std::size_t cover = f.ranks[i] * g;

  if (i == 0) {
    Matrix rels = (f.diffs.empty()) ? Matrix{} : tensor_matrix(f.diffs[0], f.ranks[0], g, ring);
    Matrix nr = relation_block(f.ranks[0], n);
    rels.insert(rels.end(), nr.begin(), nr.end());
    return PresentedModule(ring, cover, std::move(rels));
  }

  // kernel of d_i (x) 1 into N^{r_{i-1}}
  const std::size_t lower_cover = f.ranks[i - 1] * g;
  Matrix d_out = tensor_matrix(f.diffs[i - 1], f.ranks[i - 1], g, ring);
  Matrix lower_rels = relation_block(f.ranks[i - 1], n);
  std::vector<VecPoly> stacked = d_out;
  stacked.insert(stacked.end(), lower_rels.begin(), lower_rels.end());
  std::vector<VecPoly> kernel = syzygy_generators(ring, lower_cover, stacked);

  std::vector<VecPoly> t_gens;
  for (const auto& s : kernel) {
    VecPoly v(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cover));
    if (!vec_is_zero(v)) t_gens.push_back(std::move(v));
  }

  // boundaries plus module relations at level i
  Matrix b;
  if (i < f.diffs.size()) b = tensor_matrix(f.diffs[i], f.ranks[i], g, ring);
  Matrix nr = relation_block(f.ranks[i], n);
  b.insert(b.end(), nr.begin(), nr.end());

  // relations of the subquotient: coefficient vectors c with T c in span(B)
  std::vector<VecPoly> stacked2 = t_gens;
  stacked2.insert(stacked2.end(), b.begin(), b.end());
  std::vector<VecPoly> rel_kernel = syzygy_generators(ring, cover, stacked2);
  std::vector<VecPoly> h_rels;
  for (const auto& s : rel_kernel) {
    VecPoly c(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t_gens.size()));
    if (!vec_is_zero(c)) h_rels.push_back(std::move(c));
  }
  return PresentedModule(ring, t_gens.size(), std::move(h_rels));
}

PresentedModule tor(const PresentedModule& m, const PresentedModule& n, std::size_t i) {
  require_same_ring(m.ring, n.ring);
  return homology_of_tensor(m.resolution(), n, i);
}

PresentedModule tor(const Ideal& i_left, const Ideal& i_right, std::size_t idx) {
  return tor(PresentedModule::quotient_by(i_left), PresentedModule::quotient_by(i_right), idx);
}

ChiReport chi_local(const Ideal& left, const Ideal& right) {
  require_same_ring(left.ring(), right.ring());
  Ideal sum = ideal_sum(left, right);
  if (!support_at_origin(sum))
    fail(Error::Kind::SupportNotAtOrigin,
         "the joint support is not confined to the origin: " + sum.to_string());

  PresentedModule m = PresentedModule::quotient_by(left);
  PresentedModule n = PresentedModule::quotient_by(right);
  const FreeComplex& res = m.resolution();

  ChiReport r;
  r.dim_ring = static_cast<long>(left.ring()->nvars());
  r.dim_left = dim_or_empty(left);
  r.dim_right = dim_or_empty(right);
  for (std::size_t i = 0; i < res.ranks.size(); ++i) {
    long len = k_dimension(homology_of_tensor(res, n, i));
    r.tor_lengths.push_back(len);
  }
  long sign = 1;
  for (long len : r.tor_lengths) {
    r.chi += sign * len;
    sign = -sign;
  }
  r.decent = r.dim_left + r.dim_right <= r.dim_ring;
  r.vanishing_case = r.dim_left + r.dim_right < r.dim_ring;
  r.positivity_case = r.dim_left + r.dim_right == r.dim_ring;
  return r;
}

ChiReport chi(const Ideal& left, const Ideal& right) {
  if (!left.in_irrelevant() || !right.in_irrelevant())
    fail(Error::Kind::Domain, "chi requires ideals contained in the irrelevant maximal ideal");
  return chi_local(left, right);
}

PresentedModule koszul_homology(const std::vector<Polynomial>& seq, const PresentedModule& m,
                                std::size_t i) {
  FreeComplex k = koszul_complex(m.ring, seq);
  return homology_of_tensor(k, m, i);
}

long koszul_euler(const std::vector<Polynomial>& seq, const PresentedModule& m) {
  FreeComplex k = koszul_complex(m.ring, seq);
  long chi_value = 0;
  long sign = 1;
  for (std::size_t i = 0; i <= k.length(); ++i) {
    chi_value += sign * k_dimension(homology_of_tensor(k, m, i));
    sign = -sign;
  }
  return chi_value;
}

namespace {

// Pull an ideal of A into the extension ring (A's variables are a prefix).
Ideal lift_ideal(const Ideal& i, const RingPtr& ext_ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(ext_ring->nvars());
      for (std::size_t v = 0; v < t.mono.nvars(); ++v) m.exps[v] = t.mono.exps[v];
      terms.push_back({std::move(m), t.coeff});
    }
    gens.emplace_back(ext_ring, std::move(terms));
  }
  return Ideal(ext_ring, std::move(gens));
}

// Kernel generators over B = ext_ring/ext, reduced modulo ext.
std::vector<VecPoly> kernel_mod(const RingPtr& ring, std::size_t rank,
                                const std::vector<VecPoly>& cols, const Ideal& ext) {
  std::vector<VecPoly> stacked = cols;
  for (std::size_t p = 0; p < rank; ++p)
    for (const auto& e : ext.generators()) {
      VecPoly col = vec_zero(ring, rank);
      col[p] = e;
      stacked.push_back(std::move(col));
    }
  std::vector<VecPoly> raw = syzygy_generators(ring, rank, stacked);
  const GroebnerBasis& egb = ext.groebner();
  std::vector<VecPoly> out;
  for (const auto& s : raw) {
    VecPoly v(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cols.size()));
    for (auto& p : v) p = normal_form(p, egb);
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

BaseChangeReport flat_base_change_check(const Ideal& left, const Ideal& right,
                                        const RingPtr& ext_ring, const Ideal& ext) {
  const RingPtr& base_ring = left.ring();
  require_same_ring(left.ring(), right.ring());
  require_same_ring(ext.ring(), ext_ring);
  const std::size_t nb = base_ring->nvars();
  if (ext_ring->nvars() <= nb)
    fail(Error::Kind::Domain, "the extension ring must add at least one variable");
  for (std::size_t v = 0; v < nb; ++v)
    if (ext_ring->var_name(v) != base_ring->var_name(v))
      fail(Error::Kind::Domain, "extension ring must start with the base ring's variables");

  // module-finiteness: in a ring with the extension variables leading, every
  // extension variable needs a pure power among the leading monomials
  {
    const std::size_t nw = ext_ring->nvars() - nb;
    std::vector<std::string> vars;
    for (std::size_t v = nb; v < ext_ring->nvars(); ++v) vars.push_back(ext_ring->var_name(v));
    for (std::size_t v = 0; v < nb; ++v) vars.push_back(ext_ring->var_name(v));
    RingPtr check = RingContext::make(ext_ring->field(), vars,
                                      MonomialOrder::elimination(vars.size(), nw));
    std::vector<Polynomial> gens;
    for (const auto& g : ext.generators()) {
      std::vector<Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m(check->nvars());
        for (std::size_t v = 0; v < nb; ++v) m.exps[nw + v] = t.mono.exps[v];
        for (std::size_t v = 0; v < nw; ++v) m.exps[v] = t.mono.exps[nb + v];
        terms.push_back({std::move(m), t.coeff});
      }
      gens.emplace_back(check, std::move(terms));
    }
    Ideal e2(check, std::move(gens));
    for (std::size_t w = 0; w < nw; ++w) {
      bool bounded = false;
      for (const auto& lead : e2.groebner().lead_monomials()) {
        bool pure = lead.exps[w] > 0;
        for (std::size_t v = 0; v < check->nvars() && pure; ++v)
          if (v != w && lead.exps[v] > 0) pure = false;
        if (pure) {
          bounded = true;
          break;
        }
      }
      if (!bounded)
        fail(Error::Kind::NotModuleFinite,
             "extension is not module-finite over the base ring (variable '" +
                 ext_ring->var_name(nb + w) + "' is unbounded)");
    }
  }

  BaseChangeReport report;
  // r = length of B / m_A B
  {
    std::vector<Polynomial> mvars;
    for (std::size_t v = 0; v < nb; ++v) mvars.push_back(Polynomial::variable(ext_ring, v));
    Ideal fiber = ideal_sum(ext, Ideal(ext_ring, std::move(mvars)));
    report.degree = k_dimension(PresentedModule::quotient_by(fiber));
  }
  report.chi_base = chi(left, right).chi;

  Ideal lb = lift_ideal(left, ext_ring);
  Ideal rb = lift_ideal(right, ext_ring);
  Ideal m_ext = ideal_sum(lb, ext);
  Ideal n_ext = ideal_sum(rb, ext);
  PresentedModule n_mod = PresentedModule::quotient_by(n_ext);

  if (right.is_zero()) {
    // tensoring with the free module B keeps only Tor_0
    report.chi_ext = k_dimension(PresentedModule::quotient_by(m_ext));
  } else {
    // resolve over B with kernels computed modulo ext
    FreeComplex cx;
    cx.ring = ext_ring;
    cx.ranks.push_back(1);
    std::vector<VecPoly> cols;
    for (const auto& g : m_ext.groebner().elements) cols.push_back(VecPoly{g});
    const std::size_t cap = ext_ring->nvars() + 2;
    std::size_t level = 0;
    while (!cols.empty()) {
      if (++level > cap)
        fail(Error::Kind::Domain,
             "resolution over the extension did not terminate (is the extension regular?)");
      const std::size_t codomain = cols[0].size();
      cx.ranks.push_back(cols.size());
      cx.diffs.push_back(cols);
      cols = kernel_mod(ext_ring, codomain, cols, ext);
    }
    report.chi_ext = 0;
    long sign = 1;
    for (std::size_t i = 0; i < cx.ranks.size(); ++i) {
      report.chi_ext += sign * k_dimension(homology_of_tensor(cx, n_mod, i));
      sign = -sign;
    }
  }
  report.ratio_holds = report.chi_ext == report.degree * report.chi_base;
  return report;
}

Case1Report case1_degeneration_check(const Ideal& left, const Ideal& right,
                                     const Polynomial& pi) {
  const RingPtr& ring = left.ring();
  require_same_ring(left.ring(), right.ring());
  require_same_ring(pi.ring(), ring);
  if (pi.term_count() != 1 || pi.leading_monomial().degree() != 1)
    fail(Error::Kind::Domain, "the degeneration parameter must be a variable");
  std::size_t var = 0;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (pi.leading_monomial().exps[v] == 1) var = v;
  if (!left.contains(pi))
    fail(Error::Kind::Domain, "the parameter must annihilate the left quotient");
  if (!ideal_equal(ideal_quotient(right, pi), right))
    fail(Error::Kind::Domain, "the parameter is a zerodivisor on the right quotient");

  Case1Report report;
  report.chi_full = chi(left, right).chi;

  // pass to the hyperplane pi = 0
  std::vector<std::string> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (v != var) vars.push_back(ring->var_name(v));
  RingPtr reduced = RingContext::make(ring->field(), vars, ring->order());
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (v == var) {
      images.push_back(Polynomial::zero(reduced));
    } else {
      images.push_back(Polynomial::variable(reduced, reduced->var_index(ring->var_name(v)).value()));
    }
  }
  auto push_down = [&](const Ideal& i) {
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators()) gens.push_back(g.substitute(images, reduced));
    return Ideal(reduced, std::move(gens));
  };
  report.chi_reduced = chi(push_down(left), push_down(right)).chi;
  report.equal = report.chi_full == report.chi_reduced;
  return report;
}

}  // namespace chiwb
