// Universal Witt polynomials (sum, product, negation, Frobenius) over Z,
// built once per (p, length) by the exact ghost recursion
//   p^n * S_n = w_n(X) + w_n(Y) - sum_{i<n} p^i S_i^{p^(n-i)}
// with every division checked for exactness (GhostExactnessCheck).  This is
// the reference oracle; the ghost-lift path is the performance path.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "muwitt/error.hpp"
#include "muwitt/ring.hpp"

namespace muwitt {

// sparse multivariate polynomial over Z; exponent vector -> coefficient
using PolyMono = std::vector<int>;
using Poly = std::map<PolyMono, Int>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b, size_t term_budget);
Poly poly_pow(const Poly& a, long e, size_t term_budget);
Poly poly_scale(const Poly& a, const Int& k);
// divide by p^k; DomainError GhostExactnessCheck if any coefficient is inexact
Poly poly_div_exact(const Poly& a, const Int& d);

struct WittPolynomials {
  long p = 0;
  int length = 0;           // number of components
  std::vector<Poly> sum;    // S_n(x_0..x_n, y_0..y_n); vars 0..L-1 = x, L..2L-1 = y
  std::vector<Poly> prod;   // P_n
  std::vector<Poly> neg;    // N_n(x_0..x_n)
  std::vector<Poly> frob;   // F_n(x_0..x_{n+1}), length-1 entries
};

// Build (or fetch from the in-process cache) the polynomials for (p, length).
// Verified at build time: ghost identities w_n(S)=w_n(X)+w_n(Y) etc. hold by
// construction (zero remainder in every division).  DomainError ResourceBudget
// if the sparse representation exceeds the term budget.
const WittPolynomials& witt_polynomials(long p, int length,
                                        size_t term_budget = 2'000'000);

// Evaluate a polynomial on ring elements (vars beyond args.size() -> error).
Elt poly_eval(const Poly& f, const std::vector<Elt>& args, const RingPtr& R);

}  // namespace muwitt
