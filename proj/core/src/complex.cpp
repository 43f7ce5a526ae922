#include "chiwb/complex.hpp"

#include <algorithm>

#include "chiwb/errors.hpp"

namespace chiwb {

VecPoly mat_apply(const Matrix& m, const VecPoly& v, const RingPtr& ring,
                  std::size_t codomain) {
  VecPoly out = vec_zero(ring, codomain);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < codomain; ++i)
      if (!m[j][i].is_zero()) out[i] = out[i] + m[j][i] * v[j];
  }
  return out;
}

void FreeComplex::check() const {
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i].size() != rank_at(i + 1))
      fail(Error::Kind::Internal, "differential has wrong number of columns");
    for (const auto& col : diffs[i])
      if (col.size() != rank_at(i))
        fail(Error::Kind::Internal, "differential column has wrong length");
  }
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    for (const auto& col : diffs[i + 1]) {
      VecPoly image = mat_apply(diffs[i], col, ring, rank_at(i));
      if (!vec_is_zero(image))
        fail(Error::Kind::Internal, "differentials do not compose to zero");
    }
  }
}

FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& seq) {
  for (const auto& f : seq) require_same_ring(f.ring(), ring);
  const std::size_t s = seq.size();

  // basis of level i: i-element subsets in lexicographic order
  std::vector<std::vector<std::vector<std::size_t>>> bases(s + 1);
  std::vector<std::size_t> subset;
  auto gen = [&](auto&& self, std::size_t start) -> void {
    bases[subset.size()].push_back(subset);
    for (std::size_t v = start; v < s; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  gen(gen, 0);
  for (auto& level : bases)
    std::sort(level.begin(), level.end());

  FreeComplex c;
  c.ring = ring;
  for (std::size_t i = 0; i <= s; ++i) c.ranks.push_back(bases[i].size());

  auto index_of = [&](std::size_t level, const std::vector<std::size_t>& sub) {
    const auto& b = bases[level];
    return static_cast<std::size_t>(
        std::lower_bound(b.begin(), b.end(), sub) - b.begin());
  };

  for (std::size_t i = 1; i <= s; ++i) {
    Matrix d;
    for (const auto& sub : bases[i]) {
      VecPoly col = vec_zero(ring, bases[i - 1].size());
      for (std::size_t t = 0; t < sub.size(); ++t) {
        std::vector<std::size_t> face = sub;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
        Polynomial sign_f = (t % 2 == 0) ? seq[sub[t]] : -seq[sub[t]];
        std::size_t row = index_of(i - 1, face);
        col[row] = col[row] + sign_f;
      }
      d.push_back(std::move(col));
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

namespace {

// constant-polynomial test with a usable coefficient
bool unit_entry(const Polynomial& p, Coeff* c) {
  if (p.is_zero() || !p.is_constant()) return false;
  *c = p.leading_coeff();
  return true;
}

// Prune the unit at diffs[k][c][r] (column c, row r).
void prune_at(FreeComplex& cx, std::size_t k, std::size_t c, std::size_t r) {
  Matrix& d = cx.diffs[k];
  const RingPtr& ring = cx.ring;
  const Field& f = ring->field();
  Coeff u = d[c][r].leading_coeff();

  // clear row r in the other columns; mirror the basis change into d_{k+2}
  Matrix* up = (k + 1 < cx.diffs.size()) ? &cx.diffs[k + 1] : nullptr;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == c || d[j][r].is_zero()) continue;
    Polynomial alpha = d[j][r].times_coeff(f.inv(u));
    for (std::size_t i = 0; i < d[j].size(); ++i) d[j][i] = d[j][i] - alpha * d[c][i];
    if (up)
      for (auto& col : *up) col[c] = col[c] + alpha * col[j];
  }

  // the cleared row forces row c of d_{k+2} to vanish
  if (up)
    for (auto& col : *up) {
      if (!col[c].is_zero())
        fail(Error::Kind::Internal, "pruning left a nonzero coordinate on a removed generator");
      col.erase(col.begin() + static_cast<std::ptrdiff_t>(c));
    }

  d.erase(d.begin() + static_cast<std::ptrdiff_t>(c));
  for (auto& col : d) {
    if (!col[r].is_zero())
      fail(Error::Kind::Internal, "pruning left a nonzero entry on a removed row");
    col.erase(col.begin() + static_cast<std::ptrdiff_t>(r));
  }
  // in the altered basis the removed generator of F_{k+1} maps to zero below
  cx.diffs[k - 1].erase(cx.diffs[k - 1].begin() + static_cast<std::ptrdiff_t>(r));

  --cx.ranks[k + 1];
  --cx.ranks[k];
}

}  // namespace

void prune_complex(FreeComplex& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 1; k < c.diffs.size() && !changed; ++k) {
      Matrix& d = c.diffs[k];
      for (std::size_t col = 0; col < d.size() && !changed; ++col)
        for (std::size_t row = 0; row < d[col].size() && !changed; ++row) {
          Coeff u;
          if (unit_entry(d[col][row], &u)) {
            prune_at(c, k, col, row);
            changed = true;
          }
        }
    }
  }
  while (!c.ranks.empty() && c.ranks.back() == 0) {
    c.ranks.pop_back();
    if (!c.diffs.empty()) c.diffs.pop_back();
  }
  // drop trailing zero differentials left by empty syzygy levels
  while (!c.diffs.empty() && c.diffs.size() >= c.ranks.size()) c.diffs.pop_back();
}

}  // namespace chiwb
