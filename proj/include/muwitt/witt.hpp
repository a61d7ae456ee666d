// Truncated p-typical Witt vectors W_L(R) over a finite coefficient ring.
// Two evaluation strategies for the ring operations:
//   * Universal: the cached universal polynomials (reference oracle).
//   * GhostLift: lift components to a higher-precision cover with a Frobenius
//     lift, operate on ghost coordinates, invert with exact division checks
//     (the performance path).
// Length bookkeeping: frobenius() drops one component, verschiebung() adds
// one; every identity is asserted at the common available length.  Over
// char-p rings frobenius_fixed() is W_L(Frob), length-preserving.
#pragma once

#include "muwitt/ring.hpp"
#include "muwitt/wittpoly.hpp"

namespace muwitt {

enum class WittStrategy { GhostLift, Universal };

struct Witt {
  RingPtr R;
  std::vector<Elt> a;  // components a[0..L-1]
  int length() const { return static_cast<int>(a.size()); }
  bool operator==(const Witt& o) const { return a == o.a; }
  bool operator!=(const Witt& o) const { return !(*this == o); }
  bool operator<(const Witt& o) const;  // lexicographic: enumeration order
};

Witt witt_zero(const RingPtr& R, int L);
Witt witt_one(const RingPtr& R, int L);
Witt witt_from_int(const RingPtr& R, int L, const Int& k);
Witt witt_teichmuller(const Elt& x, int L);
Witt witt_truncate(const Witt& x, int L);

Witt witt_add(const Witt& x, const Witt& y, WittStrategy s = WittStrategy::GhostLift);
Witt witt_mul(const Witt& x, const Witt& y, WittStrategy s = WittStrategy::GhostLift);
Witt witt_neg(const Witt& x, WittStrategy s = WittStrategy::GhostLift);
Witt witt_sub(const Witt& x, const Witt& y, WittStrategy s = WittStrategy::GhostLift);
// n * x for an integer scalar (repeated addition tree)
Witt witt_scale_int(const Witt& x, const Int& n);

// ghost coordinates w_0..w_{L-1} in R
std::vector<Elt> witt_ghost(const Witt& x);

// F: W_L -> W_{L-1} (universal polynomials or ghost path)
Witt witt_frobenius(const Witt& x, WittStrategy s = WittStrategy::GhostLift);
// W_L(Frob): length-preserving Frobenius, only over char-p rings (pR = 0)
Witt witt_frobenius_fixed(const Witt& x);
// V: W_L -> W_{L+1}
Witt witt_verschiebung(const Witt& x);
// V^{-1} on I(R) = {x_0 = 0}: W_L -> W_{L-1}; DomainError NotInImage otherwise
Witt witt_v_inverse(const Witt& x);

// Reconstruct a Witt vector from ghost coordinates, given a Frobenius-lift
// witness on a cover of R at precision N + extra.  The Dwork congruences
// g_k = phi(g_{k-1}) mod p^k are checked (NotAGhostVector on failure) and all
// divisions are exact by construction.
Witt witt_from_ghost(const RingPtr& R, const std::vector<Elt>& ghosts);

bool witt_is_unit(const Witt& x);
Witt witt_inverse(const Witt& x);  // DomainError NotAUnit

std::vector<Witt> witt_enumerate(const RingPtr& R, int L, unsigned long cap = (1ul << 22));

std::string witt_str(const Witt& x);

}  // namespace muwitt
