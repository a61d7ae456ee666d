#include "muwitt/ideal.hpp"

#include <algorithm>
#include <set>

namespace muwitt {

namespace {

long p_val(const Int& v, long p, long N) {
  if (v == 0) return N;
  Int t = v;
  long k = 0;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  return k;
}

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, const std::vector<Elt>& gens)
    : ring_(std::move(ring)), input_gens_(gens) {
  std::vector<std::vector<Int>> rows;
  for (const auto& g : gens) {
    Elt gg = (g.ring() == ring_) ? g : ring_->lift(g);
    for (int b = 0; b < ring_->dim(); ++b) {
      Elt prod = gg * ring_->basis_elt(b);
      if (!prod.is_zero()) rows.push_back(prod.coeffs());
    }
  }
  build(std::move(rows));
}

// Howell normal form over Z/p^N.  Standard echelon pass with minimal-valuation
// pivots normalized to p^v, plus the Howell closure: for every pivot row with
// valuation v > 0, the stabilizer p^(N-v) * row is fed back so the span also
// captures the torsion tail in later columns.
void IdealHandle::build(std::vector<std::vector<Int>> work) {
  const long p = ring_->p();
  const long N = ring_->N();
  const Int& m = ring_->modulus();
  const int D = ring_->dim();
  rows_.clear();
  pivot_col_.clear();
  pivot_val_.clear();

  for (int col = 0; col < D; ++col) {
    // find row with minimal p-valuation in this column
    int sel = -1;
    long best = N;
    for (size_t r = 0; r < work.size(); ++r) {
      long v = p_val(work[r][col], p, N);
      if (v < best) {
        best = v;
        sel = static_cast<int>(r);
      }
    }
    if (sel < 0) continue;
    std::vector<Int> piv = work[sel];
    work.erase(work.begin() + sel);
    // normalize pivot entry to p^best
    Int pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(best));
    Int unit = piv[col] / pv;  // unit mod p^(N-best); invert mod p^N
    Int inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t());
    for (auto& x : piv) x = ring_->normalize(x * inv);
    // eliminate the column from all remaining rows
    for (auto& r : work) {
      if (r[col] == 0) continue;
      Int f = r[col] / pv;  // divisible since best is minimal
      for (int j = 0; j < D; ++j) r[j] = ring_->normalize(r[j] - f * piv[j]);
    }
    // Howell closure: stabilizer of the pivot
    if (best > 0) {
      Int stab = m / pv;  // p^(N-best)
      std::vector<Int> srow(D);
      bool nz = false;
      for (int j = 0; j < D; ++j) {
        srow[j] = ring_->normalize(piv[j] * stab);
        if (srow[j] != 0) nz = true;
      }
      if (nz) work.push_back(std::move(srow));
    }
    rows_.push_back(std::move(piv));
    pivot_col_.push_back(col);
    pivot_val_.push_back(best);
  }
  // back-reduce: entries of earlier rows in pivot columns reduced mod pivot value
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t s = r + 1; s < rows_.size(); ++s) {
      int col = pivot_col_[s];
      Int pv;
      mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ring_->p()),
                    static_cast<unsigned long>(pivot_val_[s]));
      Int q = rows_[r][col] / pv;
      if (q == 0) continue;
      for (int j = 0; j < D; ++j) rows_[r][j] = ring_->normalize(rows_[r][j] - q * rows_[s][j]);
    }
  howell_elts_.clear();
  for (const auto& r : rows_) howell_elts_.push_back(ring_->from_coeffs(r));
}

Elt IdealHandle::reduce(const Elt& x) const {
  Elt in = (x.ring() == ring_) ? x : ring_->lift(x);
  std::vector<Int> c = in.coeffs();
  for (size_t r = 0; r < rows_.size(); ++r) {
    int col = pivot_col_[r];
    Int pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ring_->p()),
                  static_cast<unsigned long>(pivot_val_[r]));
    Int q = c[col] / pv;
    if (q == 0) continue;
    for (int j = 0; j < ring_->dim(); ++j) c[j] = ring_->normalize(c[j] - q * rows_[r][j]);
  }
  return ring_->from_coeffs(std::move(c));
}

bool IdealHandle::contains(const Elt& x) const { return reduce(x).is_zero(); }

bool IdealHandle::operator==(const IdealHandle& o) const { return rows_ == o.rows_; }

std::vector<Elt> IdealHandle::elements(unsigned long cap) const {
  // span all Z/p^N combinations of the Howell generators, deduplicated via the
  // canonical (sorted) set; sizes here are desk scale by contract
  std::set<Elt> seen;
  std::vector<Elt> frontier = {ring_->zero()};
  seen.insert(ring_->zero());
  for (const auto& g : howell_elts_) {
    std::vector<Elt> next;
    for (const auto& e : seen) {
      Elt acc = e;
      for (Int k = 1; k < ring_->modulus(); ++k) {
        acc = acc + g;
        if (!seen.count(acc)) next.push_back(acc);
      }
    }
    for (auto& e : next) seen.insert(std::move(e));
    if (seen.size() > cap) fail("ResourceBudget", "ideal too large to enumerate");
  }
  return std::vector<Elt>(seen.begin(), seen.end());
}

IdealHandle IdealHandle::scaled(const Int& k) const {
  std::vector<Elt> g;
  for (const auto& e : howell_elts_) g.push_back(e.scaled(k));
  return IdealHandle(ring_, g);
}

IdealHandle IdealHandle::sum(const IdealHandle& o) const {
  std::vector<Elt> g = howell_elts_;
  g.insert(g.end(), o.howell_elts_.begin(), o.howell_elts_.end());
  return IdealHandle(ring_, g);
}

IdealHandle IdealHandle::product(const IdealHandle& o) const {
  std::vector<Elt> g;
  for (const auto& a : howell_elts_)
    for (const auto& b : o.howell_elts_) g.push_back(a * b);
  return IdealHandle(ring_, g);
}

bool IdealHandle::square_is_zero() const { return product(*this).is_zero(); }

bool IdealHandle::p_times_is_zero() const { return scaled(ring_->p()).is_zero(); }

int IdealHandle::p_exponent() const {
  IdealHandle cur = *this;
  int e = 0;
  while (!cur.is_zero()) {
    cur = cur.scaled(ring_->p());
    ++e;
    if (e > ring_->N() + 1) fail("ResourceBudget", "p_exponent did not terminate");
  }
  return e;
}

}  // namespace muwitt
