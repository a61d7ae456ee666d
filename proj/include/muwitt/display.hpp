// Banal displays for a datum (GL_h, mu): Phi_mu-conjugation, the adjoint
// nilpotence decision, the unique-deformation fixed-point solver, congruence
// automorphism groups, lift enumeration, and the brute-force orbit oracle.
//
// Length bookkeeping: a display is a matrix U over W_M(R); morphisms are
// matrices h over W_{M+1}(R) and every identity is asserted at length M.
#pragma once

#include <memory>

#include "muwitt/groupmu.hpp"

namespace muwitt {

struct BanalDisplay {
  DisplayDatum mu;
  RingPtr R;
  WMat U;  // invertible, length M
};

struct BanalTriple {
  DisplayDatum mu;
  RingPtr R;
  std::shared_ptr<IdealHandle> ideal;  // pd ideal of the context
  WMat U;                              // length M
};

// U' = h^{-1} U Phi_mu(h): U at length M, h at length >= M+1 in H_mu(R);
// a right action.  DomainError NotInHmu if h is not in H_mu.
WMat phi_conjugate(const DisplayDatum& mu, const WMat& U, const WMat& h);

// membership in H_mu(R): weight -1 entries in I(R)
bool in_hmu(const DisplayDatum& mu, const WMat& h);

// adjoint nilpotence of U: the p-linear endomorphism
// Ad(U) o Frob o pi on R/pR (x) gl_h (pi = projector onto the weight -1
// block) is nilpotent; decided by the generated-submodule chain
// N_{k+1} = <f(N_k)> over R/pR until zero or stabilization.
bool adjoint_nilpotent(const DisplayDatum& mu, const EMat& U);
bool adjoint_nilpotent(const DisplayDatum& mu, const WMat& U);  // via w_0

// diagnostic: adjoint_nilpotent(U) == adjoint_nilpotent(phi_conjugate(U,h))
bool nilpotence_conjugation_invariance(const DisplayDatum& mu, const WMat& U,
                                       const WMat& h);

// Unique-deformation solver: given U, O at length M with U O^{-1} in
// G(W(a)), both adjoint nilpotent, find the unique h in G(W(a)) (length
// M+1) with O = h^{-1} U Phi_mu(h^{>0}) at length M.  Internally pads to a
// longer working length and iterates h <- (U Phi_mu(h) O^{-1})^{>0}, which
// terminates because the linearized operator is nilpotent; the defining
// identity is re-verified exactly before returning.
// Errors: NotAdjointNilpotent, DisplacementNotInIdeal, IterationDiverged.
struct DeformResult {
  WMat h;          // length M+1
  int iterations;  // fixed-point iterations used
};
DeformResult deform_solve(const DisplayDatum& mu, const WMat& U, const WMat& O,
                          const PdWittContext& ctx);

// Cor. of the solver: given h0 with defect h0^{-1} U Psi(h0) O^{-1} in
// G(W(a)), the unique htilde with htilde h0^{-1} in G(W(a)) and
// O = htilde^{-1} U Psi_mu^a(htilde); computed as deform_solve against
// O1 = h0 O Psi(h0)^{-1} ... composed with h0.
WMat normalize_descent(const DisplayDatum& mu, const WMat& U, const WMat& O,
                       const WMat& h0, const PdWittContext& ctx);

// all h in H_mu(R) (length M+1) with h == 1 mod W(a) and
// U = h^{-1} U Phi_mu(h) that extend to automorphisms of the zero-padded
// display through p_exponent(a)+1 further truncation levels.  Finite
// truncation otherwise admits artifact automorphisms supported in top Witt
// components which do not come from the inverse limit; the extension
// filter selects exactly the limit-compatible ones.  A null ideal means
// the zero ideal, i.e. only h = 1 is admissible.
std::vector<WMat> automorphisms_mod(const DisplayDatum& mu, const WMat& U,
                                    const std::shared_ptr<IdealHandle>& a,
                                    unsigned long cap = (1ul << 22));

// exhaustive oracle for deform_solve: all h in G(W(a)) at length M+1
// satisfying O = h^{-1} U Phi_mu(h^{>0}) at length M that extend through
// p_exponent(a)+1 zero-padded levels; under the deformation theorem this
// has exactly one element, equal to deform_solve's output.
std::vector<WMat> deform_bruteforce(const DisplayDatum& mu, const WMat& U,
                                    const WMat& O, const PdWittContext& ctx,
                                    unsigned long cap = (1ul << 22));

// enumeration helpers (deterministic lexicographic order, SizeOverflow when
// the cap is exceeded)
std::vector<WMat> enumerate_invertible(const RingPtr& R, int h, int L,
                                       unsigned long cap = (1ul << 22));
std::vector<WMat> enumerate_hmu(const DisplayDatum& mu, const RingPtr& R, int L,
                                unsigned long cap = (1ul << 22));

// lifts of a display along the componentwise reduction mod a: U0 is a chosen
// lift over R; returns one representative per class of matrices U with
// U == U0 componentwise mod a, under conjugation by {h in H_mu : h == 1 mod
// W(a)}.  Nonempty (contains the class of U0 itself).
struct LiftClasses {
  std::vector<WMat> reps;
  std::vector<unsigned long> class_sizes;
};
LiftClasses lift_displays(const DisplayDatum& mu, const WMat& U0,
                          const std::shared_ptr<IdealHandle>& a,
                          unsigned long cap = (1ul << 22));

// brute-force orbit oracle: partition of the invertible matrices over
// W_M(R) into Phi_mu-conjugacy classes with sizes, stabilizer orders and
// adjoint-nilpotence flags; deterministic ordering by smallest member.
struct OrbitTable {
  std::vector<WMat> reps;
  std::vector<unsigned long> sizes;
  std::vector<unsigned long> stabilizer_orders;
  std::vector<bool> nilpotent;
  unsigned long group_size = 0;
  unsigned long acting_size = 0;
};
OrbitTable orbit_enumerate(const DisplayDatum& mu, const RingPtr& R, int M,
                           unsigned long cap = (1ul << 22));

// canonical triple over (R, a, gamma) lifting the display U0 (componentwise
// canonical lift); the reduction of the result is U0 again.
BanalTriple triple_lift(const DisplayDatum& mu, const WMat& U0,
                        const std::shared_ptr<IdealHandle>& ideal,
                        const PdWittContext& ctx);

// componentwise congruence of matrices mod a (entrywise, component by
// component)
bool wmat_congruent(const WMat& x, const WMat& y, const IdealHandle& a);

}  // namespace muwitt
