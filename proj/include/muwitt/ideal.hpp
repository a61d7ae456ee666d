// Ideals of a finite coefficient ring, represented by the Howell normal form
// of the Z/p^N-module they span inside the free module of coefficient vectors.
// The Howell form is canonical, so ideal equality is row-by-row comparison and
// membership is reduction to zero.
#pragma once

#include <vector>

#include "muwitt/ring.hpp"

namespace muwitt {

class IdealHandle {
 public:
  // Span of gens * (all basis monomials): the two-sided (= commutative) ideal.
  IdealHandle(RingPtr ring, const std::vector<Elt>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Elt>& gens() const { return input_gens_; }
  // Canonical generators: Howell rows as ring elements.
  const std::vector<Elt>& howell_gens() const { return howell_elts_; }

  bool contains(const Elt& x) const;
  // Reduce x modulo the ideal to the canonical coset representative.
  Elt reduce(const Elt& x) const;
  bool operator==(const IdealHandle& o) const;
  bool is_zero() const { return howell_elts_.empty(); }

  // Enumerate all elements (DomainError ResourceBudget beyond cap).
  std::vector<Elt> elements(unsigned long cap = (1ul << 20)) const;

  // Derived ideals.
  IdealHandle scaled(const Int& k) const;       // k * a
  IdealHandle sum(const IdealHandle& o) const;  // a + b
  IdealHandle product(const IdealHandle& o) const;
  bool square_is_zero() const;
  bool p_times_is_zero() const;
  // Least e >= 0 with p^e * a = 0.
  int p_exponent() const;

 private:
  RingPtr ring_;
  std::vector<Elt> input_gens_;
  // Howell rows, in echelon order; rows_[r] is a coefficient vector.
  std::vector<std::vector<Int>> rows_;
  std::vector<int> pivot_col_;
  std::vector<long> pivot_val_;  // p-valuation of pivot entry
  std::vector<Elt> howell_elts_;
  void build(std::vector<std::vector<Int>> rows);
};

}  // namespace muwitt
