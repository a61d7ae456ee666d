#include "muwitt/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace muwitt {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// exponent vector a divides b componentwise
bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Int Ring::normalize(const Int& v) const {
  Int r = v % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

bool Ring::killed_by_rels(const std::vector<int>& vexp) const {
  for (const auto& r : spec_.rels)
    if (divides(r, vexp)) return true;
  return false;
}

RingPtr Ring::make(const RingSpec& spec) {
  if (!is_prime(spec.p)) fail("RingPresentation", "p must be prime");
  if (spec.N < 1) fail("RingPresentation", "coefficient precision N must be >= 1");
  if (spec.galois.size() < 2) fail("RingPresentation", "galois polynomial must be monic of degree >= 1");
  if (spec.galois.back() != 1) fail("RingPresentation", "galois polynomial must be monic");
  const int deg = static_cast<int>(spec.galois.size()) - 1;
  const size_t nv = spec.vars.size();
  for (const auto& r : spec.rels)
    if (r.size() != nv) fail("RingPresentation", "relation exponent vector has wrong arity");
  // every variable must be nilpotent: some pure power of it is a relation generator
  for (size_t i = 0; i < nv; ++i) {
    bool ok = false;
    for (const auto& r : spec.rels) {
      bool pure = r[i] > 0;
      for (size_t j = 0; pure && j < nv; ++j)
        if (j != i && r[j] != 0) pure = false;
      if (pure) ok = true;
    }
    if (!ok) fail("RingPresentation", "variable " + spec.vars[i] + " has no pure-power relation (infinite basis)");
  }

  auto R = std::shared_ptr<Ring>(new Ring());
  R->spec_ = spec;
  mpz_ui_pow_ui(R->modulus_.get_mpz_t(), static_cast<unsigned long>(spec.p),
                static_cast<unsigned long>(spec.N));

  // enumerate surviving variable-exponent vectors (bounded by the pure-power relations)
  std::vector<int> bound(nv, 0);
  for (size_t i = 0; i < nv; ++i)
    for (const auto& r : spec.rels) {
      bool pure = r[i] > 0;
      for (size_t j = 0; pure && j < nv; ++j)
        if (j != i && r[j] != 0) pure = false;
      if (pure && (bound[i] == 0 || r[i] < bound[i])) bound[i] = r[i];
    }
  std::vector<std::vector<int>> vmonos;
  std::vector<int> cur(nv, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == nv) {
      if (!R->killed_by_rels(cur)) vmonos.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[i]; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(vmonos.begin(), vmonos.end());

  for (int g = 0; g < deg; ++g)
    for (const auto& ve : vmonos) R->basis_.push_back(Monomial{g, ve});
  std::sort(R->basis_.begin(), R->basis_.end());
  for (int i = 0; i < R->dim(); ++i) R->index_[R->basis_[i]] = i;

  // gen^k over the Galois part for k up to 2*deg-2, by integral reduction x^deg = -(c_0 + .. + c_{deg-1} x^{deg-1})
  R->gen_powers_.assign(2 * deg - 1, std::vector<Int>(deg, 0));
  R->gen_powers_[0][0] = 1;
  for (int k = 1; k <= 2 * deg - 2; ++k) {
    std::vector<Int> prev = R->gen_powers_[k - 1];
    std::vector<Int> next(deg, 0);
    // multiply by x
    Int top = prev[deg - 1];
    for (int i = deg - 1; i >= 1; --i) next[i] = prev[i - 1];
    next[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg; ++i) next[i] -= top * spec.galois[i];
    R->gen_powers_[k] = std::move(next);
  }

  // multiplication table
  const int D = R->dim();
  R->mul_table_.assign(static_cast<size_t>(D) * D, {});
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      std::vector<Int> out(D, 0);
      const Monomial& a = R->basis_[i];
      const Monomial& b = R->basis_[j];
      std::vector<int> ve(nv);
      for (size_t v = 0; v < nv; ++v) ve[v] = a.vexp[v] + b.vexp[v];
      if (!R->killed_by_rels(ve)) {
        const auto& gp = R->gen_powers_[a.gpow + b.gpow];
        for (int g = 0; g < deg; ++g)
          if (gp[g] != 0) out[R->index_.at(Monomial{g, ve})] += gp[g];
      }
      R->mul_table_[static_cast<size_t>(i) * D + j] = std::move(out);
    }
  return R;
}

Elt::Elt(RingPtr ring, std::vector<Int> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ring_->dim()) fail("RingPresentation", "coefficient vector has wrong length");
  for (auto& v : c_) v = ring_->normalize(v);
}

Elt Ring::zero() const { return Elt(shared_from_this(), std::vector<Int>(dim(), 0)); }

Elt Ring::one() const {
  std::vector<Int> c(dim(), 0);
  c[index_.at(Monomial{0, std::vector<int>(spec_.vars.size(), 0)})] = 1;
  return Elt(shared_from_this(), std::move(c));
}

Elt Ring::from_int(const Int& k) const {
  std::vector<Int> c(dim(), 0);
  c[index_.at(Monomial{0, std::vector<int>(spec_.vars.size(), 0)})] = k;
  return Elt(shared_from_this(), std::move(c));
}

Elt Ring::gen() const {
  if (galois_deg() < 2) fail("RingPresentation", "ring has no Galois generator (degree 1)");
  std::vector<Int> c(dim(), 0);
  c[index_.at(Monomial{1, std::vector<int>(spec_.vars.size(), 0)})] = 1;
  return Elt(shared_from_this(), std::move(c));
}

Elt Ring::var(int i) const {
  if (i < 0 || i >= static_cast<int>(spec_.vars.size())) fail("RingPresentation", "variable index out of range");
  std::vector<int> ve(spec_.vars.size(), 0);
  ve[i] = 1;
  std::vector<Int> c(dim(), 0);
  c[index_.at(Monomial{0, ve})] = 1;
  return Elt(shared_from_this(), std::move(c));
}

Elt Ring::basis_elt(int i) const {
  std::vector<Int> c(dim(), 0);
  c.at(i) = 1;
  return Elt(shared_from_this(), std::move(c));
}

Int Ring::size() const {
  Int s;
  mpz_pow_ui(s.get_mpz_t(), modulus_.get_mpz_t(), static_cast<unsigned long>(dim()));
  return s;
}

std::vector<Elt> Ring::enumerate(unsigned long cap) const {
  Int total = size();
  if (total > cap) fail("ResourceBudget", "ring too large to enumerate: " + total.get_str());
  std::vector<Elt> out;
  std::vector<Int> c(dim(), 0);
  const unsigned long n = total.get_ui();
  out.reserve(n);
  for (unsigned long k = 0;; ++k) {
    out.push_back(Elt(shared_from_this(), c));
    if (k + 1 == n) break;
    // increment little-endian-last: lexicographic over vectors => increment last coordinate fastest
    int i = dim() - 1;
    while (i >= 0) {
      c[i] += 1;
      if (c[i] < modulus_) break;
      c[i] = 0;
      --i;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RingPtr Ring::at_precision(long Nprime) const {
  RingSpec s = spec_;
  s.N = Nprime;
  return Ring::make(s);
}

Elt Ring::lift(const Elt& x) const {
  if (x.ring()->spec().galois != spec_.galois || x.ring()->spec().vars != spec_.vars ||
      x.ring()->spec().rels != spec_.rels || x.ring()->spec().p != spec_.p)
    fail("RingPresentation", "lift between incompatible presentations");
  return Elt(shared_from_this(), x.coeffs());
}

Elt Ring::reduce(const Elt& x) const { return lift(x); }

Elt Elt::operator+(const Elt& o) const {
  std::vector<Int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return Elt(ring_, std::move(c));
}

Elt Elt::operator-(const Elt& o) const {
  std::vector<Int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return Elt(ring_, std::move(c));
}

Elt Elt::operator-() const {
  std::vector<Int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Elt(ring_, std::move(c));
}

Elt Elt::operator*(const Elt& o) const {
  const int D = static_cast<int>(c_.size());
  std::vector<Int> c(D, 0);
  for (int i = 0; i < D; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < D; ++j) {
      if (o.c_[j] == 0) continue;
      const auto& row = ring_->basis_product(i, j);
      Int f = c_[i] * o.c_[j];
      for (int k = 0; k < D; ++k)
        if (row[k] != 0) c[k] += f * row[k];
    }
  }
  return Elt(ring_, std::move(c));
}

Elt Elt::scaled(const Int& k) const {
  std::vector<Int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
  return Elt(ring_, std::move(c));
}

Elt Elt::pow(const Int& e) const {
  if (e < 0) fail("RingPresentation", "negative exponent");
  Elt acc = ring_->one();
  Elt base = *this;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Elt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Elt::operator==(const Elt& o) const { return c_ == o.c_; }

// Inversion by solving the linear system (mult-by-x matrix) * y = e_1 over
// Z/p^N with unit pivots; x is a unit iff full unit-pivot elimination succeeds.
Elt Elt::inverse() const {
  const int D = static_cast<int>(c_.size());
  const Int& m = ring_->modulus();
  // columns: mult matrix M[k][j] = coefficient k of (x * basis_j)
  std::vector<std::vector<Int>> A(D, std::vector<Int>(D + 1, 0));
  for (int j = 0; j < D; ++j) {
    for (int i = 0; i < D; ++i) {
      if (c_[i] == 0) continue;
      const auto& row = ring_->basis_product(i, j);
      for (int k = 0; k < D; ++k)
        if (row[k] != 0) A[k][j] = ring_->normalize(A[k][j] + c_[i] * row[k]);
    }
  }
  {
    // right-hand side e_1 (the basis index of the unit monomial)
    Elt one = ring_->one();
    for (int k = 0; k < D; ++k) A[k][D] = one.coeffs()[k];
  }
  std::vector<int> pivot_col(D, -1);
  for (int col = 0, row = 0; col < D && row < D; ++col) {
    int sel = -1;
    for (int r = row; r < D; ++r) {
      Int g = gcd(A[r][col], m);
      if (g == 1) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(A[sel], A[row]);
    Int inv;
    mpz_invert(inv.get_mpz_t(), A[row][col].get_mpz_t(), m.get_mpz_t());
    for (int j = col; j <= D; ++j) A[row][j] = ring_->normalize(A[row][j] * inv);
    for (int r = 0; r < D; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Int f = A[r][col];
      for (int j = col; j <= D; ++j) A[r][j] = ring_->normalize(A[r][j] - f * A[row][j]);
    }
    pivot_col[row] = col;
    ++row;
  }
  std::vector<Int> y(D, 0);
  for (int r = 0; r < D; ++r) {
    if (pivot_col[r] >= 0)
      y[pivot_col[r]] = A[r][D];
    else if (A[r][D] != 0)
      fail("NotAUnit", "element is not invertible");
  }
  Elt cand(ring_, std::move(y));
  if (!(cand * *this == ring_->one())) fail("NotAUnit", "element is not invertible");
  return cand;
}

bool Elt::is_unit() const {
  try {
    (void)inverse();
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::string Elt::str() const {
  std::ostringstream os;
  bool first = true;
  const auto& B = ring_->basis();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (B[i].gpow > 0) os << "*g^" << B[i].gpow;
    for (size_t v = 0; v < B[i].vexp.size(); ++v)
      if (B[i].vexp[v] > 0) os << "*" << ring_->spec().vars[v] << "^" << B[i].vexp[v];
  }
  if (first) os << "0";
  return os.str();
}

// --- Frobenius lift ---

FrobeniusLift::FrobeniusLift(RingPtr ring) : ring_(std::move(ring)) {
  const auto& spec = ring_->spec();
  const int deg = ring_->galois_deg();
  // image of the Galois generator: Hensel lift of the root of f congruent to gen^p mod p
  Elt geni = ring_->zero();
  if (deg >= 2) {
    Elt x = ring_->gen().pow(spec.p);
    // Newton iteration x <- x - f(x)/f'(x); f'(x) is a unit since f is separable mod p
    auto feval = [&](const Elt& t) {
      Elt acc = ring_->zero();
      for (int i = static_cast<int>(spec.galois.size()) - 1; i >= 0; --i)
        acc = acc * t + ring_->from_int(spec.galois[i]);
      return acc;
    };
    auto fpeval = [&](const Elt& t) {
      Elt acc = ring_->zero();
      for (int i = static_cast<int>(spec.galois.size()) - 1; i >= 1; --i)
        acc = acc * t + ring_->from_int(spec.galois[i] * i);
      return acc;
    };
    for (long it = 0; it < spec.N + 2; ++it) x = x - feval(x) * fpeval(x).inverse();
    if (!feval(x).is_zero()) fail("RingPresentation", "Hensel lift of Frobenius did not converge (f not separable mod p?)");
    geni = x;
  }
  // basis images: gen^(a) -> geni^a, var_i -> var_i^p
  basis_images_.reserve(ring_->dim());
  for (const auto& mono : ring_->basis()) {
    Elt img = (mono.gpow > 0) ? geni.pow(mono.gpow) : ring_->one();
    for (size_t v = 0; v < mono.vexp.size(); ++v)
      if (mono.vexp[v] > 0) img = img * ring_->var(static_cast<int>(v)).pow(Int(spec.p) * mono.vexp[v]);
    basis_images_.push_back(img);
  }
}

Elt FrobeniusLift::apply(const Elt& x) const {
  Elt in = (x.ring() == ring_) ? x : ring_->lift(x);
  Elt acc = ring_->zero();
  for (size_t i = 0; i < in.coeffs().size(); ++i)
    if (in.coeffs()[i] != 0) acc = acc + basis_images_[i].scaled(in.coeffs()[i]);
  return acc;
}

}  // namespace muwitt
