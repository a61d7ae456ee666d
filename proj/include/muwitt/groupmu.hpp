// Matrices over R and over W_L(R), the display datum (GL_h, mu) with weight
// vector m in {0,1}^h, the parabolic/unipotent factorization g = g_0 (1 + X),
// the scaling action int_mu, the divided Frobenius Phi_mu on H_mu(R), its
// extension Psi_mu to Gamma_mu^{W(R), W(a)+I(R)}, the Lie variant phi_mu, and
// the graded exponential.
//
// Truncation convention: morphism-level matrices are carried at length L and
// Phi_mu produces length L-1; callers pair objects at length M with morphisms
// at length M+1 so every identity is exact at length M.  Over char-p rings the
// top components of weight>=0 entries are redundant and canonical forms zero
// them (canonicalize()).
#pragma once

#include <functional>

#include "muwitt/pdwitt.hpp"

namespace muwitt {

// --- matrices over the coefficient ring ---
struct EMat {
  RingPtr R;
  int h = 0;
  std::vector<Elt> e;  // row-major h*h
  Elt& at(int i, int j) { return e[i * h + j]; }
  const Elt& at(int i, int j) const { return e[i * h + j]; }
  bool operator==(const EMat&) const = default;
};
EMat emat_identity(const RingPtr& R, int h);
EMat emat_mul(const EMat& a, const EMat& b);
EMat emat_add(const EMat& a, const EMat& b);
Elt emat_det(const EMat& a);
EMat emat_inverse(const EMat& a);  // DomainError NotAUnit
bool emat_invertible(const EMat& a);

// --- matrices over W_L(R) ---
struct WMat {
  RingPtr R;
  int h = 0;
  int L = 0;
  std::vector<Witt> e;
  Witt& at(int i, int j) { return e[i * h + j]; }
  const Witt& at(int i, int j) const { return e[i * h + j]; }
  bool operator==(const WMat&) const = default;
  bool operator<(const WMat& o) const { return e < o.e; }
};
WMat wmat_identity(const RingPtr& R, int h, int L);
WMat wmat_mul(const WMat& a, const WMat& b);
WMat wmat_add(const WMat& a, const WMat& b);
WMat wmat_sub(const WMat& a, const WMat& b);
WMat wmat_truncate(const WMat& a, int L);
Witt wmat_det(const WMat& a);
WMat wmat_inverse(const WMat& a);  // DomainError NotAUnit
bool wmat_invertible(const WMat& a);
EMat wmat_w0(const WMat& a);                       // component-0 matrix
EMat wmat_ghost(const WMat& a, int k);             // ghost coordinate k entrywise

// --- display datum ---
struct DisplayDatum {
  int h = 0;
  std::vector<int> weights;  // m_i, normalized to min 0; amplitude <= 1 for display ops
  int weight(int i, int j) const { return weights[i] - weights[j]; }
  int d() const;  // #\{m_i = 0\}
};
DisplayDatum make_datum(int h, std::vector<int> weights);  // validates amplitude <= 1
DisplayDatum make_graded_datum(int h, std::vector<int> weights);  // no amplitude bound

// membership of g mod (entries tested by `in_ideal`) in P_mu: weight -1
// entries must satisfy the predicate
bool in_parabolic(const DisplayDatum& mu, const WMat& g,
                  const std::function<bool(const Witt&)>& in_ideal);

// g = g0 * (1 + X) with g0 in P_mu and X supported on the weight -1 block
// (X = A^{-1} B block solve); DomainError FactorizationFailure if the
// (0-weight x 0-weight) block is not invertible.
struct ParabolicFactorization {
  WMat g0;
  WMat X;  // unipotent displacement, weight -1 support
};
ParabolicFactorization factor_parabolic(const DisplayDatum& mu, const WMat& g);

// entry (i,j) of g multiplied by z^{m_i - m_j} for g in P_mu (weight -1
// entries are zero); z an integer scalar (typically p)
WMat int_mu(const DisplayDatum& mu, const Int& z, const WMat& g);

// mu(p)-conjugation transport out = mu(1/p) g mu(p): entry (i,j) scaled by
// p^{m_j - m_i}; the division on weight +1 entries must be exact
// (DomainError InexactDivision); defined here for coefficient-ring matrices
// (frames); the Witt version lives in frame.cpp where division by p is exact.
EMat conj_mu_p(const DisplayDatum& mu, const EMat& g);

// Phi_mu on H_mu: factor h = h_0 (1+X) with X over I(R), return
// F(int_mu(p)(h_0)) * (1 + V^{-1} X); length L -> L-1.
WMat phi_mu(const DisplayDatum& mu, const WMat& h);

// Psi_mu^a on Gamma_mu^{W(R), W(a)+I(R)}: like Phi_mu but the unipotent part
// is first projected to I by the relative projector x -> x^{>0} of the pd
// context; kills G(W(a)).
WMat psi_mu(const DisplayDatum& mu, const WMat& h, const PdWittContext& ctx);

// Lie variant on a matrix over W: weight -1 entries V^{-1}, weight m >= 0
// entries p^m F; length L -> L-1.
WMat phi_lie(const DisplayDatum& mu, const WMat& X);

// group projector (1 + w) -> 1 + w^{>0} applied to the displacement of g
// (entries of g - 1 must lie in W(a))
WMat project_pos_group(const WMat& g, const PdWittContext& ctx);

// canonical form over char-p rings: zero the top Witt component of every
// weight >= 0 entry (redundant for the action at length L-1)
WMat canonicalize(const DisplayDatum& mu, const WMat& h);

// graded exponential sum D^n / n! for a strictly weight-raising integer
// matrix D (entry (i,j) nonzero only if m_i - m_j >= 1), weights within
// [0, p-1]; rational arithmetic with a p-integrality check on every term
// (DomainError PDivisibilityFailure).  Returns an integer matrix mod p^prec.
struct QMat {
  int h = 0;
  std::vector<mpq_class> e;
  mpq_class& at(int i, int j) { return e[i * h + j]; }
  const mpq_class& at(int i, int j) const { return e[i * h + j]; }
};
QMat graded_exp(const DisplayDatum& mu, const std::vector<Int>& D_entries, long p);

}  // namespace muwitt
