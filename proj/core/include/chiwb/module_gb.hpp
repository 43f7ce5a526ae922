#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "chiwb/polynomial.hpp"

namespace chiwb {

// A term of a free module A^r: a monomial sitting in one position.
struct ModTerm {
  Monomial mono;
  std::uint32_t pos = 0;
};

class ModuleOrder {
 public:
  virtual ~ModuleOrder() = default;
  virtual int compare(const ModTerm& a, const ModTerm& b) const = 0;
  bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) > 0; }
};

using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

// Position over term: earlier positions dominate, ties by the ring order.
class PotOrder final : public ModuleOrder {
 public:
  explicit PotOrder(MonomialOrder ring_order) : ring_order_(std::move(ring_order)) {}
  int compare(const ModTerm& a, const ModTerm& b) const override;

 private:
  MonomialOrder ring_order_;
};

// Order induced by the leads of the previous level's basis: compare images
// m * lead[pos] under the previous order, ties won by the smaller index.
class SchreyerOrder final : public ModuleOrder {
 public:
  SchreyerOrder(std::vector<ModTerm> leads, ModuleOrderPtr prev)
      : leads_(std::move(leads)), prev_(std::move(prev)) {}
  int compare(const ModTerm& a, const ModTerm& b) const override;

 private:
  std::vector<ModTerm> leads_;
  ModuleOrderPtr prev_;
};

// Free-module element, one polynomial per position.
using VecPoly = std::vector<Polynomial>;

VecPoly vec_zero(const RingPtr& ring, std::size_t rank);
bool vec_is_zero(const VecPoly& v);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_times_term(const VecPoly& v, const Coeff& c, const Monomial& m);
VecPoly vec_times_poly(const VecPoly& v, const Polynomial& p);

struct LeadInfo {
  ModTerm term;
  Coeff coeff;
};
std::optional<LeadInfo> vec_lead(const VecPoly& v, const ModuleOrder& order);

struct ModuleGB {
  RingPtr ring;
  std::size_t rank = 0;
  ModuleOrderPtr order;
  std::vector<VecPoly> elems;  // monic, interreduced, sorted by lead descending
};

// Full normal form against `basis`; with `quotients` non-null also returns the
// division coefficients: v = sum quotients[k] * basis[k] + result.
VecPoly module_nf(VecPoly v, const std::vector<VecPoly>& basis, const ModuleOrder& order,
                  std::vector<Polynomial>* quotients = nullptr);

struct GBOptions {
  bool reduced = true;
  bool use_criteria = true;  // only takes effect at rank 1
};

ModuleGB module_groebner(const RingPtr& ring, std::size_t rank, std::vector<VecPoly> gens,
                         ModuleOrderPtr order, const GBOptions& opts = {});

// Generators of {c in A^k : sum c_i cols_i = 0}.
std::vector<VecPoly> syzygy_generators(const RingPtr& ring, std::size_t rank,
                                       const std::vector<VecPoly>& cols);

// S-pair syzygies of a Groebner basis; they form a Groebner basis of the
// syzygy module under the returned induced order (tie-break = element index).
struct SchreyerStep {
  std::vector<VecPoly> syzygies;
  ModuleOrderPtr order;
};
SchreyerStep schreyer_syzygies(const ModuleGB& gb);

// Checks that every S-polynomial reduces to zero (test support).
bool is_groebner(const ModuleGB& gb);

}  // namespace chiwb
