#include "muwitt/witt.hpp"

#include <sstream>

namespace muwitt {

namespace {

Int int_pow(long p, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

void check_same(const Witt& x, const Witt& y) {
  if (x.R != y.R) fail("RingPresentation", "witt operands over different rings");
  if (x.length() != y.length()) fail("LengthMismatch", "witt operands of different length");
}

// ghost coordinates of lifted components over a cover ring
std::vector<Elt> cover_ghost(const RingPtr& cov, long p, const std::vector<Elt>& comps) {
  const int L = static_cast<int>(comps.size());
  std::vector<Elt> g(L, cov->zero());
  std::vector<Elt> lifted;
  lifted.reserve(L);
  for (const auto& c : comps) lifted.push_back(cov->lift(c));
  for (int n = 0; n < L; ++n) {
    Elt acc = cov->zero();
    for (int i = 0; i <= n; ++i)
      acc = acc + lifted[i].pow(int_pow(p, n - i)).scaled(int_pow(p, i));
    g[n] = acc;
  }
  return g;
}

// invert ghost coordinates over the cover with exact divisions, reduce to R
Witt cover_unghost(const RingPtr& R, const RingPtr& cov, const std::vector<Elt>& g) {
  const long p = R->p();
  const int L = static_cast<int>(g.size());
  std::vector<Elt> x;
  for (int n = 0; n < L; ++n) {
    Elt rhs = g[n];
    for (int i = 0; i < n; ++i) rhs = rhs - x[i].pow(int_pow(p, n - i)).scaled(int_pow(p, i));
    // divide by p^n exactly on canonical representatives
    Int pn = int_pow(p, n);
    std::vector<Int> c = rhs.coeffs();
    for (auto& v : c) {
      if (v % pn != 0) fail("NotAGhostVector", "inexact division at ghost component " + std::to_string(n));
      v /= pn;
    }
    x.push_back(cov->from_coeffs(std::move(c)));
  }
  Witt out{R, {}};
  for (const auto& c : x) out.a.push_back(R->reduce(c));
  return out;
}

RingPtr ghost_cover(const RingPtr& R, int L) { return cover_of(R, R->N() + L + 2); }

}  // namespace

bool Witt::operator<(const Witt& o) const {
  for (int i = 0; i < length() && i < o.length(); ++i) {
    if (a[i] < o.a[i]) return true;
    if (o.a[i] < a[i]) return false;
  }
  return length() < o.length();
}

Witt witt_zero(const RingPtr& R, int L) { return Witt{R, std::vector<Elt>(L, R->zero())}; }

Witt witt_one(const RingPtr& R, int L) {
  Witt w = witt_zero(R, L);
  if (L > 0) w.a[0] = R->one();
  return w;
}

Witt witt_teichmuller(const Elt& x, int L) {
  Witt w = witt_zero(x.ring(), L);
  if (L > 0) w.a[0] = x;
  return w;
}

Witt witt_from_int(const RingPtr& R, int L, const Int& k) {
  // k * 1 via the ghost path: ghost coordinates are all k
  RingPtr cov = ghost_cover(R, L);
  std::vector<Elt> g(L, cov->from_int(k));
  return cover_unghost(R, cov, g);
}

Witt witt_truncate(const Witt& x, int L) {
  if (L > x.length()) fail("LengthMismatch", "cannot truncate to a longer vector");
  Witt out{x.R, std::vector<Elt>(x.a.begin(), x.a.begin() + L)};
  return out;
}

Witt witt_add(const Witt& x, const Witt& y, WittStrategy s) {
  check_same(x, y);
  const int L = x.length();
  if (L == 0) return x;
  if (s == WittStrategy::Universal) {
    const auto& WP = witt_polynomials(x.R->p(), L);
    std::vector<Elt> args = x.a;
    args.insert(args.end(), y.a.begin(), y.a.end());
    Witt out{x.R, {}};
    for (int n = 0; n < L; ++n) out.a.push_back(poly_eval(WP.sum[n], args, x.R));
    return out;
  }
  RingPtr cov = ghost_cover(x.R, L);
  auto gx = cover_ghost(cov, x.R->p(), x.a);
  auto gy = cover_ghost(cov, x.R->p(), y.a);
  for (int i = 0; i < L; ++i) gx[i] = gx[i] + gy[i];
  return cover_unghost(x.R, cov, gx);
}

Witt witt_mul(const Witt& x, const Witt& y, WittStrategy s) {
  check_same(x, y);
  const int L = x.length();
  if (L == 0) return x;
  if (s == WittStrategy::Universal) {
    const auto& WP = witt_polynomials(x.R->p(), L);
    std::vector<Elt> args = x.a;
    args.insert(args.end(), y.a.begin(), y.a.end());
    Witt out{x.R, {}};
    for (int n = 0; n < L; ++n) out.a.push_back(poly_eval(WP.prod[n], args, x.R));
    return out;
  }
  RingPtr cov = ghost_cover(x.R, L);
  auto gx = cover_ghost(cov, x.R->p(), x.a);
  auto gy = cover_ghost(cov, x.R->p(), y.a);
  for (int i = 0; i < L; ++i) gx[i] = gx[i] * gy[i];
  return cover_unghost(x.R, cov, gx);
}

Witt witt_neg(const Witt& x, WittStrategy s) {
  const int L = x.length();
  if (L == 0) return x;
  if (s == WittStrategy::Universal) {
    const auto& WP = witt_polynomials(x.R->p(), L);
    Witt out{x.R, {}};
    for (int n = 0; n < L; ++n) out.a.push_back(poly_eval(WP.neg[n], x.a, x.R));
    return out;
  }
  RingPtr cov = ghost_cover(x.R, L);
  auto gx = cover_ghost(cov, x.R->p(), x.a);
  for (int i = 0; i < L; ++i) gx[i] = -gx[i];
  return cover_unghost(x.R, cov, gx);
}

Witt witt_sub(const Witt& x, const Witt& y, WittStrategy s) {
  return witt_add(x, witt_neg(y, s), s);
}

Witt witt_scale_int(const Witt& x, const Int& n) {
  const int L = x.length();
  if (L == 0) return x;
  RingPtr cov = ghost_cover(x.R, L);
  auto gx = cover_ghost(cov, x.R->p(), x.a);
  for (int i = 0; i < L; ++i) gx[i] = gx[i].scaled(n);
  return cover_unghost(x.R, cov, gx);
}

std::vector<Elt> witt_ghost(const Witt& x) {
  const long p = x.R->p();
  const int L = x.length();
  std::vector<Elt> g(L, x.R->zero());
  for (int n = 0; n < L; ++n) {
    Elt acc = x.R->zero();
    for (int i = 0; i <= n; ++i)
      acc = acc + x.a[i].pow(int_pow(p, n - i)).scaled(int_pow(p, i));
    g[n] = acc;
  }
  return g;
}

Witt witt_frobenius(const Witt& x, WittStrategy s) {
  const int L = x.length();
  if (L < 1) fail("LengthMismatch", "frobenius needs length >= 1");
  if (L == 1) return Witt{x.R, {}};
  if (s == WittStrategy::Universal) {
    const auto& WP = witt_polynomials(x.R->p(), L);
    Witt out{x.R, {}};
    for (int n = 0; n + 1 < L; ++n) out.a.push_back(poly_eval(WP.frob[n], x.a, x.R));
    return out;
  }
  RingPtr cov = ghost_cover(x.R, L);
  auto gx = cover_ghost(cov, x.R->p(), x.a);
  gx.erase(gx.begin());  // w_k(Fx) = w_{k+1}(x)
  return cover_unghost(x.R, cov, gx);
}

Witt witt_frobenius_fixed(const Witt& x) {
  if (!x.R->char_p()) fail("RingPresentation", "length-preserving Frobenius needs pR = 0");
  Witt out{x.R, {}};
  for (const auto& c : x.a) out.a.push_back(c.pow(x.R->p()));
  return out;
}

Witt witt_verschiebung(const Witt& x) {
  Witt out{x.R, {x.R->zero()}};
  out.a.insert(out.a.end(), x.a.begin(), x.a.end());
  return out;
}

Witt witt_v_inverse(const Witt& x) {
  if (x.length() < 1 || !x.a[0].is_zero()) fail("NotInImage", "vector is not in I(R) = V(W(R))");
  return Witt{x.R, std::vector<Elt>(x.a.begin() + 1, x.a.end())};
}

Witt witt_from_ghost(const RingPtr& R, const std::vector<Elt>& ghosts) {
  // components are given in R itself at full precision; run the inversion on
  // canonical lifts and verify the Dwork congruences with the ring's Frobenius lift
  const int L = static_cast<int>(ghosts.size());
  RingPtr cov = ghost_cover(R, L);
  static std::map<const Ring*, std::shared_ptr<FrobeniusLift>> lifts;
  auto it = lifts.find(cov.get());
  if (it == lifts.end()) it = lifts.emplace(cov.get(), std::make_shared<FrobeniusLift>(cov)).first;
  std::vector<Elt> g;
  for (const auto& e : ghosts) g.push_back(cov->lift(e));
  for (int k = 1; k < L; ++k) {
    Elt diff = g[k] - it->second->apply(g[k - 1]);
    Int pk = int_pow(R->p(), k);
    // canonical representatives are exact mod the cover modulus, and p^k
    // divides it, so the congruence test is representative-independent
    for (const auto& c : diff.coeffs())
      if (c % pk != 0)
        fail("NotAGhostVector", "Dwork congruence fails at component " + std::to_string(k));
  }
  return cover_unghost(R, cov, g);
}

bool witt_is_unit(const Witt& x) {
  if (x.length() == 0) return true;
  return x.a[0].is_unit();
}

Witt witt_inverse(const Witt& x) {
  const int L = x.length();
  if (L == 0) return x;
  if (!x.a[0].is_unit()) fail("NotAUnit", "witt vector with non-unit first component");
  // Newton iteration y <- y (2 - x y), starting from [a_0^{-1}]
  Witt y = witt_teichmuller(x.a[0].inverse(), L);
  Witt two = witt_from_int(x.R, L, 2);
  for (int it = 0; it < L + 2; ++it) {
    Witt t = witt_sub(two, witt_mul(x, y));
    y = witt_mul(y, t);
  }
  if (!(witt_mul(x, y) == witt_one(x.R, L))) fail("NotAUnit", "inverse iteration failed");
  return y;
}

std::vector<Witt> witt_enumerate(const RingPtr& R, int L, unsigned long cap) {
  Int total;
  mpz_pow_ui(total.get_mpz_t(), R->size().get_mpz_t(), static_cast<unsigned long>(L));
  if (total > cap) fail("ResourceBudget", "witt space too large to enumerate");
  std::vector<Elt> elems = R->enumerate(cap);
  std::vector<Witt> out;
  out.reserve(total.get_ui());
  std::vector<size_t> idx(L, 0);
  while (true) {
    Witt w{R, {}};
    for (int i = 0; i < L; ++i) w.a.push_back(elems[idx[i]]);
    out.push_back(std::move(w));
    int i = L - 1;
    while (i >= 0) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::string witt_str(const Witt& x) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < x.length(); ++i) os << (i ? "; " : "") << x.a[i].str();
  os << ")";
  return os.str();
}

}  // namespace muwitt
