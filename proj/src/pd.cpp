#include "muwitt/pd.hpp"

#include <functional>

namespace muwitt {

long factorial_p_valuation(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) v += n / q;
  return v;
}

Int factorial_unit_part(long n, long p, const Int& modulus) {
  Int f = 1;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  long v = factorial_p_valuation(n, p);
  Int pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v));
  Int u = f / pv;
  Int r = u % modulus;
  if (r < 0) r += modulus;
  return r;
}

// shared cover-ring cache (same presentation, higher precision)
RingPtr cover_of(const RingPtr& R, long Nprime) {
  struct Key {
    RingSpec spec;
    long n;
  };
  struct Cmp {
    bool operator()(const Key& a, const Key& b) const {
      auto ta = std::tie(a.spec.p, a.spec.galois, a.spec.vars, a.spec.rels, a.n);
      auto tb = std::tie(b.spec.p, b.spec.galois, b.spec.vars, b.spec.rels, b.n);
      return ta < tb;
    }
  };
  static std::map<Key, RingPtr, Cmp> cache;
  Key key{R->spec(), Nprime};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RingPtr c = R->at_precision(Nprime);
  cache[key] = c;
  return c;
}

std::shared_ptr<PdStructure> PdStructure::trivial(std::shared_ptr<IdealHandle> ideal) {
  if (!ideal->square_is_zero() || !ideal->p_times_is_zero())
    fail("PdRuleInconsistent", "trivial pd rule requires a^2 = 0 and p*a = 0");
  auto pd = std::shared_ptr<PdStructure>(new PdStructure());
  pd->rule_ = PdRule::Trivial;
  pd->ideal_ = std::move(ideal);
  return pd;
}

std::shared_ptr<PdStructure> PdStructure::canonical_p_adic(std::shared_ptr<IdealHandle> ideal) {
  auto pd = std::shared_ptr<PdStructure>(new PdStructure());
  pd->rule_ = PdRule::CanonicalPAdic;
  pd->ideal_ = std::move(ideal);
  return pd;
}

std::shared_ptr<PdStructure> PdStructure::table(std::shared_ptr<IdealHandle> ideal,
                                                std::map<std::pair<int, int>, Elt> values,
                                                int n_max) {
  auto pd = std::shared_ptr<PdStructure>(new PdStructure());
  pd->rule_ = PdRule::Table;
  pd->ideal_ = std::move(ideal);
  pd->table_ = std::move(values);
  pd->table_n_max_ = n_max;
  for (const auto& [key, val] : pd->table_)
    if (!pd->ideal_->contains(val))
      fail("PdRuleInconsistent", "table value gamma_" + std::to_string(key.second) + " outside the ideal");
  return pd;
}

Elt PdStructure::gamma_basic(const Elt& x, int n) const {
  const RingPtr& R = ring();
  switch (rule_) {
    case PdRule::Trivial:
      return R->zero();  // n >= 2 only reaches here
    case PdRule::CanonicalPAdic: {
      long v = factorial_p_valuation(n, R->p());
      RingPtr cov = cover_of(R, R->N() + v);
      Elt xn = cov->lift(x).pow(n);
      Int pv;
      mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(R->p()), static_cast<unsigned long>(v));
      std::vector<Int> c = xn.coeffs();
      for (auto& k : c) {
        if (k % pv != 0)
          fail("InexactDivision", "x^n/n! is not p-integral for n=" + std::to_string(n));
        k /= pv;
      }
      Int uinv;
      Int u = factorial_unit_part(n, R->p(), R->modulus());
      mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), R->modulus().get_mpz_t());
      Elt out = R->from_coeffs(std::move(c)).scaled(uinv);
      if (!ideal_->contains(out))
        fail("PdRuleInconsistent", "canonical gamma_n left the ideal");
      return out;
    }
    case PdRule::Table:
      fail("RuleUndefined", "table rule has no direct evaluation");
  }
  fail("RuleUndefined", "unreachable");
}

Elt PdStructure::gamma(const Elt& x, int n) const {
  const RingPtr& R = ring();
  Elt in = (x.ring() == R) ? x : R->lift(x);
  if (!ideal_->contains(in)) fail("NotInIdeal", "gamma argument is outside the ideal");
  if (n < 0) fail("RuleUndefined", "gamma_n needs n >= 0");
  if (n == 0) return R->one();
  if (n == 1) return in;
  if (rule_ != PdRule::Table) return gamma_basic(in, n);

  // Table rule: write x = sum_r q_r g_r over the Howell generators and expand
  // gamma_n through the addition + homogeneity axioms.
  if (n > table_n_max_) fail("RuleUndefined", "gamma_n beyond the table bound");
  const auto& gens = ideal_->howell_gens();
  // coordinates q_r: peel off with the same reduction the ideal uses
  std::vector<Int> q(gens.size(), 0);
  Elt rem = in;
  for (size_t r = 0; r < gens.size(); ++r) {
    // echelon peeling: quotient against the pivot (first nonzero coeff) of g_r
    int col = -1;
    for (int j = 0; j < R->dim(); ++j)
      if (gens[r].coeffs()[j] != 0) {
        col = j;
        break;
      }
    if (col < 0) continue;
    Int piv = gens[r].coeffs()[col];
    Int num = rem.coeffs()[col];
    q[r] = num / piv;
    rem = rem - gens[r].scaled(q[r]);
  }
  if (!rem.is_zero()) fail("RuleUndefined", "element has no table-generator decomposition");

  // gamma_a(q g) for generator terms, from the table
  auto term_gamma = [&](size_t r, int a) -> Elt {
    if (a == 0) return R->one();
    Elt base = (a == 1) ? gens[r] : table_.count({static_cast<int>(r), a})
                                         ? table_.at({static_cast<int>(r), a})
                                         : R->zero();
    if (a >= 2 && !table_.count({static_cast<int>(r), a}))
      fail("RuleUndefined", "table missing gamma_" + std::to_string(a));
    Int qa;
    mpz_pow_ui(qa.get_mpz_t(), q[r].get_mpz_t(), static_cast<unsigned long>(a));
    return base.scaled(qa);
  };
  // sum over compositions a_0 + .. + a_{k-1} = n
  Elt total = R->zero();
  std::function<void(size_t, int, Elt)> rec = [&](size_t r, int left, Elt acc) {
    if (r + 1 == q.size()) {
      total = total + acc * term_gamma(r, left);
      return;
    }
    for (int a = 0; a <= left; ++a) rec(r + 1, left - a, acc * term_gamma(r, a));
  };
  if (q.empty()) return R->zero();
  rec(0, n, R->one());
  return total;
}

PdCheckReport PdStructure::validate(int n_max, int compose_max, unsigned long elem_cap) const {
  PdCheckReport rep;
  const RingPtr& R = ring();
  std::vector<Elt> elems;
  try {
    elems = ideal_->elements(elem_cap);
  } catch (const DomainError&) {
    rep.ok = false;
    rep.detail = "ideal too large for exhaustive validation";
    return rep;
  }
  auto fact = [&](long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
  };
  std::vector<Elt> ring_sample;
  try {
    ring_sample = R->enumerate(512);
  } catch (const DomainError&) {
    ring_sample = {R->zero(), R->one(), R->from_int(R->p()), R->from_int(-1)};
    for (int i = 0; i < R->dim(); ++i) ring_sample.push_back(R->basis_elt(i));
  }
  for (const auto& x : elems) {
    for (int n = 2; n <= n_max; ++n) {
      Elt gnx = gamma(x, n);
      // (iii) n! gamma_n(x) = x^n
      if (!(gnx.scaled(fact(n)) == x.pow(n))) {
        rep.ok = false;
        rep.detail = "axiom n! gamma_n(x) = x^n fails";
        return rep;
      }
      // (ii) homogeneity over a ring sample
      for (const auto& c : ring_sample) {
        if (!(gamma(c * x, n) == c.pow(n) * gnx)) {
          rep.ok = false;
          rep.detail = "axiom gamma_n(c x) = c^n gamma_n(x) fails";
          return rep;
        }
      }
    }
    // (i) addition formula
    for (const auto& y : elems) {
      for (int n = 2; n <= n_max; ++n) {
        Elt lhs = gamma(x + y, n);
        Elt rhs = R->zero();
        for (int a = 0; a <= n; ++a) rhs = rhs + gamma(x, a) * gamma(y, n - a);
        if (!(lhs == rhs)) {
          rep.ok = false;
          rep.detail = "addition axiom fails";
          return rep;
        }
      }
    }
  }
  // composition axiom, separate pass (coefficient (mn)!/(m! n!^m))
  for (const auto& x : elems) {
    for (int n = 1; n <= compose_max; ++n)
      for (int m = 1; m <= compose_max; ++m) {
        if (static_cast<long>(n) * m > n_max) continue;
        Int nf, mf, mnf;
        mpz_fac_ui(nf.get_mpz_t(), n);
        mpz_fac_ui(mf.get_mpz_t(), m);
        mpz_fac_ui(mnf.get_mpz_t(), static_cast<unsigned long>(n) * m);
        Int nfm;
        mpz_pow_ui(nfm.get_mpz_t(), nf.get_mpz_t(), static_cast<unsigned long>(m));
        Int denom = mf * nfm;
        if (mnf % denom != 0) continue;  // always divides, defensive
        Int coef = mnf / denom;
        Elt lhs = gamma(gamma(x, n), m);
        Elt rhs = gamma(x, n * m).scaled(coef);
        if (!(lhs == rhs)) {
          rep.ok = false;
          rep.detail = "composition axiom fails";
          return rep;
        }
      }
  }
  return rep;
}

}  // namespace muwitt
