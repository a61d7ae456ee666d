// Logarithmic ghost coordinates on W(a) for a pd-ideal a:
//   w'_n(x_0..x_n) = sum_{i=0}^{n} (p^i - 1)! gamma_{p^i}(x_{n-i}),   w'_0 = w_0,
// the isomorphism W_L(a) = prod a (componentwise), the section s(a) of w_0
// with vanishing higher logarithmic ghosts, and the idempotent decomposition
// W(a) = a_[w0] + I(a) with the (additive and multiplicative) projector
// x -> x^{>0} = x - s(w_0(x)).
#pragma once

#include "muwitt/pd.hpp"
#include "muwitt/witt.hpp"

namespace muwitt {

class PdWittContext {
 public:
  explicit PdWittContext(PdPtr pd) : pd_(std::move(pd)) {}
  const PdPtr& pd() const { return pd_; }
  const RingPtr& ring() const { return pd_->ring(); }
  const std::shared_ptr<IdealHandle>& ideal() const { return pd_->ideal(); }

  // (p^i - 1)! as a ring scalar
  Elt factorial_coeff(int i) const;

  bool in_witt_ideal(const Witt& x) const;  // all components in a

  // forward/backward logarithmic ghost transform on W_L(a)
  std::vector<Elt> log_ghost(const Witt& x) const;
  Witt from_log_ghost(const std::vector<Elt>& c, const RingPtr& R) const;

  // section s(a): w_0(s(a)) = a, higher logarithmic ghosts vanish
  Witt section(const Elt& a0, int L) const;
  // x - s(w_0 x): the projector onto I(a) along a_[w0]
  Witt project_pos(const Witt& x) const;
  // matrix group version: (1 + w) -> 1 + w^{>0}, entrywise on the displacement
  // (implemented in groupmu on top of this)

 private:
  PdPtr pd_;
};

}  // namespace muwitt
