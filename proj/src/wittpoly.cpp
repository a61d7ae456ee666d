#include "muwitt/wittpoly.hpp"

#include <algorithm>

namespace muwitt {

namespace {

void trim(Poly& f) {
  for (auto it = f.begin(); it != f.end();)
    it = (it->second == 0) ? f.erase(it) : std::next(it);
}

size_t common_arity(const Poly& a, const Poly& b) {
  size_t n = 0;
  if (!a.empty()) n = std::max(n, a.begin()->first.size());
  if (!b.empty()) n = std::max(n, b.begin()->first.size());
  return n;
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) out[m] += c;
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) out[m] -= c;
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, size_t term_budget) {
  Poly out;
  size_t ar = common_arity(a, b);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      PolyMono m(ar, 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out[m] += ca * cb;
      if (out.size() > term_budget) fail("ResourceBudget", "polynomial term budget exceeded");
    }
  trim(out);
  return out;
}

Poly poly_pow(const Poly& a, long e, size_t term_budget) {
  Poly acc{{PolyMono{}, Int(1)}};
  Poly base = a;
  while (e > 0) {
    if (e & 1) acc = poly_mul(acc, base, term_budget);
    e >>= 1;
    if (e) base = poly_mul(base, base, term_budget);
  }
  return acc;
}

Poly poly_scale(const Poly& a, const Int& k) {
  Poly out;
  if (k == 0) return out;
  for (const auto& [m, c] : a) out[m] = c * k;
  return out;
}

Poly poly_div_exact(const Poly& a, const Int& d) {
  Poly out;
  for (const auto& [m, c] : a) {
    if (c % d != 0) fail("GhostExactnessCheck", "inexact division in ghost recursion");
    out[m] = c / d;
  }
  return out;
}

namespace {

// variable index helpers for the 2L-variable polynomials
Poly var_pow(int idx, long e, size_t arity) {
  PolyMono m(arity, 0);
  m[idx] = static_cast<int>(e);
  return Poly{{m, Int(1)}};
}

Int int_pow(long p, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

// w_n over variables offset..offset+n (exponents p^(n-i))
Poly ghost_poly(long p, int n, int offset, size_t arity, size_t budget) {
  Poly w;
  for (int i = 0; i <= n; ++i) {
    Poly t = var_pow(offset + i, 1, arity);
    t = poly_pow(t, int_pow(p, n - i).get_si(), budget);
    w = poly_add(w, poly_scale(t, int_pow(p, i)));
  }
  return w;
}

WittPolynomials build(long p, int L, size_t budget) {
  WittPolynomials W;
  W.p = p;
  W.length = L;
  const size_t ar2 = static_cast<size_t>(2) * L;
  const size_t ar1 = static_cast<size_t>(L);

  auto recurse = [&](std::vector<Poly>& out, auto&& target, size_t arity) {
    // out_n = (target(n) - sum_{i<n} p^i out_i^{p^(n-i)}) / p^n, exact
    for (int n = 0; n < L; ++n) {
      Poly rhs = target(n);
      for (int i = 0; i < n; ++i)
        rhs = poly_sub(rhs, poly_scale(poly_pow(out[i], int_pow(p, n - i).get_si(), budget),
                                       int_pow(p, i)));
      out.push_back(poly_div_exact(rhs, int_pow(p, n)));
      (void)arity;
    }
  };

  recurse(W.sum, [&](int n) { return poly_add(ghost_poly(p, n, 0, ar2, budget),
                                              ghost_poly(p, n, L, ar2, budget)); }, ar2);
  recurse(W.prod, [&](int n) { return poly_mul(ghost_poly(p, n, 0, ar2, budget),
                                               ghost_poly(p, n, L, ar2, budget), budget); }, ar2);
  recurse(W.neg, [&](int n) { return poly_scale(ghost_poly(p, n, 0, ar1, budget), Int(-1)); }, ar1);
  if (L >= 2) {
    std::vector<Poly> fr;
    // w_n(F x) = w_{n+1}(x): recursion over n = 0..L-2 with arity L
    for (int n = 0; n + 1 < L; ++n) {
      Poly rhs = ghost_poly(p, n + 1, 0, ar1, budget);
      for (int i = 0; i < n; ++i)
        rhs = poly_sub(rhs, poly_scale(poly_pow(fr[i], int_pow(p, n - i).get_si(), budget),
                                       int_pow(p, i)));
      fr.push_back(poly_div_exact(rhs, int_pow(p, n)));
    }
    W.frob = std::move(fr);
  }
  return W;
}

}  // namespace

const WittPolynomials& witt_polynomials(long p, int length, size_t term_budget) {
  static std::map<std::pair<long, int>, WittPolynomials> cache;
  auto key = std::make_pair(p, length);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto [ins, ok] = cache.emplace(key, build(p, length, term_budget));
  return ins->second;
}

Elt poly_eval(const Poly& f, const std::vector<Elt>& args, const RingPtr& R) {
  Elt acc = R->zero();
  // cache powers per variable
  std::vector<std::map<int, Elt>> powers(args.size());
  auto get_pow = [&](size_t v, int e) -> Elt {
    if (e == 0) return R->one();
    auto it = powers[v].find(e);
    if (it != powers[v].end()) return it->second;
    Elt r = args[v].pow(e);
    powers[v].emplace(e, r);
    return r;
  };
  for (const auto& [m, c] : f) {
    Elt term = R->from_int(c);
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (v >= args.size()) fail("RingPresentation", "polynomial arity exceeds argument count");
      term = term * get_pow(v, m[v]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace muwitt
