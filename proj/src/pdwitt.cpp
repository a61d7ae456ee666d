#include "muwitt/pdwitt.hpp"

namespace muwitt {

Elt PdWittContext::factorial_coeff(int i) const {
  const RingPtr& R = ring();
  Int pi;
  mpz_ui_pow_ui(pi.get_mpz_t(), static_cast<unsigned long>(R->p()), static_cast<unsigned long>(i));
  Int f;
  mpz_fac_ui(f.get_mpz_t(), mpz_class(pi - 1).get_ui());
  return R->from_int(f);
}

bool PdWittContext::in_witt_ideal(const Witt& x) const {
  for (const auto& c : x.a)
    if (!ideal()->contains(c)) return false;
  return true;
}

std::vector<Elt> PdWittContext::log_ghost(const Witt& x) const {
  if (!in_witt_ideal(x)) fail("NotInIdeal", "log_ghost argument is not in W(a)");
  const RingPtr& R = ring();
  const long p = R->p();
  std::vector<Elt> out;
  for (int n = 0; n < x.length(); ++n) {
    Elt acc = R->zero();
    Int pi = 1;
    for (int i = 0; i <= n; ++i) {
      Elt fc = factorial_coeff(i);
      // v_p((p^i-1)!) grows with i; once the coefficient dies mod p^N the
      // remaining terms vanish and their gamma values are never needed
      if (fc == R->zero()) break;
      acc = acc + fc * pd_->gamma(x.a[n - i], static_cast<int>(pi.get_si()));
      pi *= p;
    }
    out.push_back(acc);
  }
  return out;
}

Witt PdWittContext::from_log_ghost(const std::vector<Elt>& c, const RingPtr& R) const {
  const long p = R->p();
  for (const auto& e : c)
    if (!ideal()->contains(e)) fail("NotInIdeal", "log ghost coordinates must lie in a");
  std::vector<Elt> x;
  for (int n = 0; n < static_cast<int>(c.size()); ++n) {
    Elt rhs = c[n];
    Int pi = p;
    for (int i = 1; i <= n; ++i) {
      Elt fc = factorial_coeff(i);
      if (fc == R->zero()) break;
      rhs = rhs - fc * pd_->gamma(x[n - i], static_cast<int>(pi.get_si()));
      pi *= p;
    }
    x.push_back(rhs);
  }
  return Witt{R, std::move(x)};
}

Witt PdWittContext::section(const Elt& a0, int L) const {
  if (!ideal()->contains(a0)) fail("NotInIdeal", "section argument is not in a");
  std::vector<Elt> c(L, ring()->zero());
  if (L > 0) c[0] = a0;
  return from_log_ghost(c, ring());
}

Witt PdWittContext::project_pos(const Witt& x) const {
  if (!in_witt_ideal(x)) fail("NotInIdeal", "projector argument is not in W(a)");
  // componentwise: x - s(x_0) computed through the log ghost coordinates so
  // that the result is exact (set logarithmic ghost 0 to zero, keep the rest)
  std::vector<Elt> lg = log_ghost(x);
  if (!lg.empty()) lg[0] = ring()->zero();
  return from_log_ghost(lg, x.R);
}

}  // namespace muwitt
