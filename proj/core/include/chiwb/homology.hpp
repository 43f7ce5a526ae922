#pragma once

#include "chiwb/presented.hpp"
#include "chiwb/reports.hpp"

namespace chiwb {

// Generators of the kernel of the matrix (columns in A^rank).
std::vector<VecPoly> kernel_generators(const RingPtr& ring, std::size_t rank,
                                       const std::vector<VecPoly>& cols);

// H_i of (complex tensor N) presented over the ring. Index 0 is the cokernel
// presentation; indices beyond the complex length give the zero module.
PresentedModule homology_of_tensor(const FreeComplex& f, const PresentedModule& n,
                                   std::size_t i);

// Tor_i(M, N), resolving the first argument.
PresentedModule tor(const PresentedModule& m, const PresentedModule& n, std::size_t i);
PresentedModule tor(const Ideal& i_left, const Ideal& i_right, std::size_t idx);

// chi with preconditions (both ideals inside the irrelevant ideal, sum
// supported at the origin).
ChiReport chi(const Ideal& left, const Ideal& right);
// chi without the containment check (for translated local computations);
// still verifies support at the origin.
ChiReport chi_local(const Ideal& left, const Ideal& right);

PresentedModule koszul_homology(const std::vector<Polynomial>& seq, const PresentedModule& m,
                                std::size_t i);
long koszul_euler(const std::vector<Polynomial>& seq, const PresentedModule& m);

// chi over B = A[w..]/ext for module-finite extensions, with both sides
// reported: r = l(B/m_A B), chi over A, chi over B, and the ratio check.
// `ext_ring` is the ring of B's presentation (A's variables first), `ext` the
// defining ideal; `left`/`right` live in A.
BaseChangeReport flat_base_change_check(const Ideal& left, const Ideal& right,
                                        const RingPtr& ext_ring, const Ideal& ext);

// chi^A(O1, O2) = chi^{A/pi}(O1, O2/pi) when pi is a variable contained in
// `left` and regular modulo `right`.
Case1Report case1_degeneration_check(const Ideal& left, const Ideal& right,
                                     const Polynomial& pi);

}  // namespace chiwb
