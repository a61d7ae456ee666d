// Divided-power (pd-) structures on an ideal of a finite coefficient ring.
// gamma_n is specified by a rule (trivial / canonical-p-adic / explicit table
// on canonical generators) and evaluated on arbitrary ideal elements through
// the pd axioms:
//   gamma_n(c x)   = c^n gamma_n(x)                    (c in R)
//   gamma_n(x + y) = sum_{a+b=n} gamma_a(x) gamma_b(y) (gamma_0 = 1)
#pragma once

#include <map>
#include <memory>

#include "muwitt/ideal.hpp"

namespace muwitt {

enum class PdRule { Trivial, CanonicalPAdic, Table };

struct PdCheckReport {
  bool ok = true;
  std::string detail;  // first violated axiom if not ok
};

class PdStructure {
 public:
  // Trivial rule: gamma_n = 0 for n >= 2.  Requires a^2 = 0 and p*a = 0
  // (rejected otherwise: the binomial defect makes the rule inconsistent).
  static std::shared_ptr<PdStructure> trivial(std::shared_ptr<IdealHandle> ideal);
  // Canonical p-adic rule: gamma_n(x) = x^n / n!, evaluated through a lift to
  // precision N + v_p(n!) with an exact division check.
  static std::shared_ptr<PdStructure> canonical_p_adic(std::shared_ptr<IdealHandle> ideal);
  // Explicit table: values gamma_n(g) for each Howell generator g for
  // 2 <= n <= n_max; outside the table -> DomainError RuleUndefined.
  static std::shared_ptr<PdStructure> table(std::shared_ptr<IdealHandle> ideal,
                                            std::map<std::pair<int, int>, Elt> values, int n_max);

  PdRule rule() const { return rule_; }
  const std::shared_ptr<IdealHandle>& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_->ring(); }

  // gamma_n(x); DomainError NotInIdeal if x is outside the ideal,
  // InexactDivision / RuleUndefined on rule failures.
  Elt gamma(const Elt& x, int n) const;

  // Verify the four pd axioms on the (finite) ideal: addition formula,
  // homogeneity, n! gamma_n = x^n, and composition
  // gamma_m(gamma_n(x)) = ((mn)!/(m! n!^m)) gamma_{mn}(x),
  // for n, m up to the given bounds.
  PdCheckReport validate(int n_max = 6, int compose_max = 4,
                         unsigned long elem_cap = 4096) const;

 private:
  PdStructure() = default;
  PdRule rule_;
  std::shared_ptr<IdealHandle> ideal_;
  std::map<std::pair<int, int>, Elt> table_;  // (gen index, n) -> value
  int table_n_max_ = 0;
  Elt gamma_basic(const Elt& x, int n) const;  // rule on a single scaled generator / raw element
};

using PdPtr = std::shared_ptr<PdStructure>;

// v_p(n!)
long factorial_p_valuation(long n, long p);
// n! / p^{v_p(n!)} mod p^N, as a normalized integer (a unit)
Int factorial_unit_part(long n, long p, const Int& modulus);

}  // namespace muwitt
