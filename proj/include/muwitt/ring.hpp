// Finite coefficient rings R = GR(p^N, f) [x_1..x_k] / (monomial relations),
// presented on an explicit finite monomial basis with Z/p^N coefficients.
// This is the coefficient-ring layer everything else (Witt vectors, ideals,
// pd-structures, displays, frames) is built on.
//
// Elements are dense coefficient vectors over the basis, always normalized to
// canonical representatives in [0, p^N).  Rings are immutable and shared.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "muwitt/error.hpp"

namespace muwitt {

using Int = mpz_class;

// A basis monomial: gen^gpow * prod_i var_i^vexp[i], with gpow < deg(f).
struct Monomial {
  int gpow = 0;
  std::vector<int> vexp;
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const {
    if (gpow != o.gpow) return gpow < o.gpow;
    return vexp < o.vexp;
  }
};

struct RingSpec {
  long p = 2;               // prime
  long N = 1;               // coefficient modulus exponent: coefficients mod p^N
  std::vector<Int> galois;  // monic coefficients c_0..c_r of f (c_r = 1); r = 1 means no extension
  std::vector<std::string> vars;        // nilpotent variable names
  std::vector<std::vector<int>> rels;   // monomial relation generators (exponent vectors), set to zero
  bool operator==(const RingSpec&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Elt {
 public:
  Elt() = default;
  Elt(RingPtr ring, std::vector<Int> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Int>& coeffs() const { return c_; }

  Elt operator+(const Elt& o) const;
  Elt operator-(const Elt& o) const;
  Elt operator-() const;
  Elt operator*(const Elt& o) const;
  Elt scaled(const Int& k) const;  // k * this, k an integer scalar
  Elt pow(const Int& e) const;
  bool is_zero() const;
  bool is_unit() const;
  Elt inverse() const;  // DomainError NotAUnit if not invertible
  bool operator==(const Elt& o) const;
  bool operator!=(const Elt& o) const { return !(*this == o); }
  // Lexicographic order on coefficient vectors; the deterministic enumeration order.
  bool operator<(const Elt& o) const { return c_ < o.c_; }

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Int> c_;
  friend class Ring;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  // Validates the presentation; throws DomainError(RingPresentation) on bad input.
  static RingPtr make(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  long p() const { return spec_.p; }
  long N() const { return spec_.N; }
  const Int& modulus() const { return modulus_; }  // p^N
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  int galois_deg() const { return static_cast<int>(spec_.galois.size()) - 1; }

  Elt zero() const;
  Elt one() const;
  Elt from_int(const Int& k) const;
  Elt gen() const;                 // Galois generator (== 0 image if deg 1? -> error if deg 1)
  Elt var(int i) const;            // nilpotent variable i
  Elt basis_elt(int i) const;      // basis monomial i as an element
  Elt from_coeffs(std::vector<Int> c) const { return Elt(shared_from_this(), std::move(c)); }

  // Whether p * 1 == 0 (i.e. N == 1): the char-p regime with exact truncated Frobenius.
  bool char_p() const { return spec_.N == 1; }

  // Total number of elements as an Int (p^(N*dim)).
  Int size() const;
  // Enumerate all elements in lexicographic coefficient order; DomainError
  // ResourceBudget if the count exceeds `cap`.
  std::vector<Elt> enumerate(unsigned long cap = (1ul << 22)) const;

  // Same presentation at a different coefficient precision (cover/quotient).
  RingPtr at_precision(long Nprime) const;
  // Canonical lift of x (an element of a lower-precision ring with the same
  // presentation) into this ring; reduce goes the other way.
  Elt lift(const Elt& x) const;
  Elt reduce(const Elt& x) const;

  // Product of basis monomials i and j as a coefficient vector (integral:
  // coefficients come from Galois reduction only, so they are lift-compatible
  // across precisions).
  const std::vector<Int>& basis_product(int i, int j) const { return mul_table_[i * basis_.size() + j]; }

  Int normalize(const Int& v) const;  // canonical representative mod p^N

 private:
  Ring() = default;
  RingSpec spec_;
  Int modulus_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;               // basis monomial -> index
  std::vector<std::vector<Int>> gen_powers_;    // gen^k for k in [0, 2*deg-2] as coeff vectors over the Galois part
  std::vector<std::vector<Int>> mul_table_;     // dense size dim*dim
  bool killed_by_rels(const std::vector<int>& vexp) const;
  friend class Elt;
};

// Frobenius lift on a ring presentation: sends var_i -> var_i^p and the Galois
// generator to the Hensel-lifted p-power root of f.  Acts on any precision of
// the presentation (images are computed in the ring it is constructed for).
class FrobeniusLift {
 public:
  explicit FrobeniusLift(RingPtr ring);
  const RingPtr& ring() const { return ring_; }
  Elt apply(const Elt& x) const;

 private:
  RingPtr ring_;
  std::vector<Elt> basis_images_;  // image of each basis monomial
};

// Cached "cover": the same presentation at precision Nprime (used by the
// ghost-lift fast path, canonical pd evaluation and frames).
RingPtr cover_of(const RingPtr& R, long Nprime);

}  // namespace muwitt
