#pragma once

#include <vector>

#include "chiwb/module_gb.hpp"

namespace chiwb {

// One column per domain basis vector; column length = codomain rank.
using Matrix = std::vector<VecPoly>;

VecPoly mat_apply(const Matrix& m, const VecPoly& v, const RingPtr& ring, std::size_t codomain);

// Chain complex of free modules F_0 <- F_1 <- ... ; diffs[i] maps F_{i+1} to F_i.
struct FreeComplex {
  RingPtr ring;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  std::size_t rank_at(std::size_t i) const { return i < ranks.size() ? ranks[i] : 0; }

  // d_{i} o d_{i+1} = 0 and shape consistency; raises Internal on failure.
  void check() const;
};

// Koszul complex on a sequence of ring elements (rank-2^s exterior algebra).
FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& seq);

// Splits off rank-one acyclic pieces at unit (nonzero constant) entries of the
// differentials at homological degree >= 2, preserving F_0 and coker(d_1).
void prune_complex(FreeComplex& c);

}  // namespace chiwb
