#include "muwitt/groupmu.hpp"

#include <algorithm>

namespace muwitt {

// --- EMat ---

EMat emat_identity(const RingPtr& R, int h) {
  EMat m{R, h, std::vector<Elt>(static_cast<size_t>(h) * h, R->zero())};
  for (int i = 0; i < h; ++i) m.at(i, i) = R->one();
  return m;
}

EMat emat_mul(const EMat& a, const EMat& b) {
  EMat out{a.R, a.h, std::vector<Elt>(a.e.size(), a.R->zero())};
  for (int i = 0; i < a.h; ++i)
    for (int j = 0; j < a.h; ++j) {
      Elt s = a.R->zero();
      for (int k = 0; k < a.h; ++k) s = s + a.at(i, k) * b.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

EMat emat_add(const EMat& a, const EMat& b) {
  EMat out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = out.e[i] + b.e[i];
  return out;
}

namespace {
Elt emat_det_rec(const EMat& a, std::vector<int> rows, std::vector<int> cols) {
  const RingPtr& R = a.R;
  if (rows.size() == 1) return a.at(rows[0], cols[0]);
  Elt acc = R->zero();
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> subcols;
    for (size_t k = 0; k < cols.size(); ++k)
      if (k != c) subcols.push_back(cols[k]);
    Elt term = a.at(rows[0], cols[c]) * emat_det_rec(a, subrows, subcols);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}
}  // namespace

Elt emat_det(const EMat& a) {
  std::vector<int> idx(a.h);
  for (int i = 0; i < a.h; ++i) idx[i] = i;
  return emat_det_rec(a, idx, idx);
}

EMat emat_inverse(const EMat& a) {
  Elt det = emat_det(a);
  Elt dinv = det.inverse();  // NotAUnit if singular
  EMat out{a.R, a.h, std::vector<Elt>(a.e.size(), a.R->zero())};
  if (a.h == 1) {
    out.at(0, 0) = dinv;
    return out;
  }
  std::vector<int> all(a.h);
  for (int i = 0; i < a.h; ++i) all[i] = i;
  for (int i = 0; i < a.h; ++i)
    for (int j = 0; j < a.h; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < a.h; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Elt minor = emat_det_rec(a, rows, cols);
      Elt cof = ((i + j) % 2 == 0) ? minor : -minor;
      out.at(j, i) = cof * dinv;  // adjugate transpose
    }
  return out;
}

bool emat_invertible(const EMat& a) { return emat_det(a).is_unit(); }

// --- WMat ---

WMat wmat_identity(const RingPtr& R, int h, int L) {
  WMat m{R, h, L, std::vector<Witt>(static_cast<size_t>(h) * h, witt_zero(R, L))};
  for (int i = 0; i < h; ++i) m.at(i, i) = witt_one(R, L);
  return m;
}

WMat wmat_mul(const WMat& a, const WMat& b) {
  if (a.L != b.L) fail("LengthMismatch", "matrix product at mismatched Witt lengths");
  WMat out{a.R, a.h, a.L, std::vector<Witt>(a.e.size(), witt_zero(a.R, a.L))};
  for (int i = 0; i < a.h; ++i)
    for (int j = 0; j < a.h; ++j) {
      Witt s = witt_zero(a.R, a.L);
      for (int k = 0; k < a.h; ++k) s = witt_add(s, witt_mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = s;
    }
  return out;
}

WMat wmat_add(const WMat& a, const WMat& b) {
  WMat out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = witt_add(out.e[i], b.e[i]);
  return out;
}

WMat wmat_sub(const WMat& a, const WMat& b) {
  WMat out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = witt_sub(out.e[i], b.e[i]);
  return out;
}

WMat wmat_truncate(const WMat& a, int L) {
  WMat out{a.R, a.h, L, {}};
  for (const auto& w : a.e) out.e.push_back(witt_truncate(w, L));
  return out;
}

namespace {
Witt wmat_det_rec(const WMat& a, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return a.at(rows[0], cols[0]);
  Witt acc = witt_zero(a.R, a.L);
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> subcols;
    for (size_t k = 0; k < cols.size(); ++k)
      if (k != c) subcols.push_back(cols[k]);
    Witt term = witt_mul(a.at(rows[0], cols[c]), wmat_det_rec(a, subrows, subcols));
    acc = (c % 2 == 0) ? witt_add(acc, term) : witt_sub(acc, term);
  }
  return acc;
}
}  // namespace

Witt wmat_det(const WMat& a) {
  std::vector<int> idx(a.h);
  for (int i = 0; i < a.h; ++i) idx[i] = i;
  return wmat_det_rec(a, idx, idx);
}

WMat wmat_inverse(const WMat& a) {
  Witt det = wmat_det(a);
  Witt dinv = witt_inverse(det);  // NotAUnit if singular
  WMat out{a.R, a.h, a.L, std::vector<Witt>(a.e.size(), witt_zero(a.R, a.L))};
  if (a.h == 1) {
    out.at(0, 0) = dinv;
    return out;
  }
  for (int i = 0; i < a.h; ++i)
    for (int j = 0; j < a.h; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < a.h; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Witt minor = wmat_det_rec(a, rows, cols);
      Witt cof = ((i + j) % 2 == 0) ? minor : witt_neg(minor);
      out.at(j, i) = witt_mul(cof, dinv);
    }
  return out;
}

bool wmat_invertible(const WMat& a) { return witt_is_unit(wmat_det(a)); }

EMat wmat_w0(const WMat& a) {
  EMat out{a.R, a.h, {}};
  for (const auto& w : a.e) out.e.push_back(w.length() > 0 ? w.a[0] : a.R->zero());
  return out;
}

EMat wmat_ghost(const WMat& a, int k) {
  EMat out{a.R, a.h, {}};
  for (const auto& w : a.e) out.e.push_back(witt_ghost(w)[k]);
  return out;
}

// --- datum ---

int DisplayDatum::d() const {
  int c = 0;
  for (int m : weights)
    if (m == 0) ++c;
  return c;
}

DisplayDatum make_datum(int h, std::vector<int> weights) {
  if (static_cast<int>(weights.size()) != h) fail("DatumInvalid", "weight vector arity mismatch");
  int lo = *std::min_element(weights.begin(), weights.end());
  for (auto& w : weights) w -= lo;
  int hi = *std::max_element(weights.begin(), weights.end());
  if (hi > 1) fail("DatumInvalid", "display datum requires minuscule weights (amplitude <= 1)");
  return DisplayDatum{h, std::move(weights)};
}

DisplayDatum make_graded_datum(int h, std::vector<int> weights) {
  if (static_cast<int>(weights.size()) != h) fail("DatumInvalid", "weight vector arity mismatch");
  int lo = *std::min_element(weights.begin(), weights.end());
  for (auto& w : weights) w -= lo;
  return DisplayDatum{h, std::move(weights)};
}

bool in_parabolic(const DisplayDatum& mu, const WMat& g,
                  const std::function<bool(const Witt&)>& in_ideal) {
  for (int i = 0; i < g.h; ++i)
    for (int j = 0; j < g.h; ++j)
      if (mu.weight(i, j) < 0 && !in_ideal(g.at(i, j))) return false;
  return true;
}

ParabolicFactorization factor_parabolic(const DisplayDatum& mu, const WMat& g) {
  const int h = g.h;
  std::vector<int> Z, O;
  for (int i = 0; i < h; ++i) (mu.weights[i] == 0 ? Z : O).push_back(i);
  // A = (Z x Z) block of g
  WMat A{g.R, static_cast<int>(Z.size()), g.L, {}};
  for (int i : Z)
    for (int j : Z) A.e.push_back(g.at(i, j));
  WMat Ainv = [&] {
    try {
      return wmat_inverse(A);
    } catch (const DomainError&) {
      fail("FactorizationFailure", "0-weight block is not invertible");
    }
  }();
  // X = A^{-1} B on the weight -1 block
  WMat X{g.R, h, g.L, std::vector<Witt>(static_cast<size_t>(h) * h, witt_zero(g.R, g.L))};
  for (size_t zi = 0; zi < Z.size(); ++zi)
    for (int j : O) {
      Witt s = witt_zero(g.R, g.L);
      for (size_t zk = 0; zk < Z.size(); ++zk)
        s = witt_add(s, witt_mul(Ainv.at(static_cast<int>(zi), static_cast<int>(zk)), g.at(Z[zk], j)));
      X.at(Z[zi], j) = s;
    }
  // g0 = g (1 - X)
  WMat u = wmat_identity(g.R, h, g.L);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (!X.at(i, j).a.empty() && !(X.at(i, j) == witt_zero(g.R, g.L)))
        u.at(i, j) = witt_neg(X.at(i, j));
  WMat g0 = wmat_mul(g, u);
  return ParabolicFactorization{std::move(g0), std::move(X)};
}

WMat int_mu(const DisplayDatum& mu, const Int& z, const WMat& g) {
  WMat out = g;
  for (int i = 0; i < g.h; ++i)
    for (int j = 0; j < g.h; ++j) {
      int w = mu.weight(i, j);
      if (w == 0) continue;
      if (w < 0) {
        if (!(g.at(i, j) == witt_zero(g.R, g.L)))
          fail("NotInParabolic", "int_mu needs vanishing weight -1 entries");
        continue;
      }
      Int f = 1;
      for (int k = 0; k < w; ++k) f *= z;
      out.at(i, j) = witt_scale_int(g.at(i, j), f);
    }
  return out;
}

EMat conj_mu_p(const DisplayDatum& mu, const EMat& g) {
  const long p = g.R->p();
  EMat out = g;
  for (int i = 0; i < g.h; ++i)
    for (int j = 0; j < g.h; ++j) {
      int w = mu.weight(i, j);
      if (w == 0) continue;
      if (w < 0) {
        Int pw = 1;
        for (int k = 0; k < -w; ++k) pw *= p;
        out.at(i, j) = g.at(i, j).scaled(pw);
      } else {
        // divide by p^w with exactness check on canonical representatives
        Int pw = 1;
        for (int k = 0; k < w; ++k) pw *= p;
        std::vector<Int> c = g.at(i, j).coeffs();
        for (auto& v : c) {
          if (v % pw != 0) fail("InexactDivision", "weight +1 entry not divisible by p");
          v /= pw;
        }
        out.at(i, j) = g.R->from_coeffs(std::move(c));
      }
    }
  return out;
}

namespace {
void require_hmu(const DisplayDatum& mu, const WMat& h) {
  for (int i = 0; i < h.h; ++i)
    for (int j = 0; j < h.h; ++j)
      if (mu.weight(i, j) < 0 && !(h.at(i, j).length() == 0 || h.at(i, j).a[0].is_zero()))
        fail("NotInParabolic", "weight -1 entry has nonzero w_0 (not in H_mu)");
}

WMat entrywise_frobenius(const WMat& a) {
  WMat out{a.R, a.h, a.L - 1, {}};
  for (const auto& w : a.e) out.e.push_back(witt_frobenius(w));
  return out;
}
}  // namespace

WMat phi_mu(const DisplayDatum& mu, const WMat& h) {
  if (h.L < 2) fail("LengthMismatch", "phi_mu needs length >= 2");
  require_hmu(mu, h);
  auto fac = factor_parabolic(mu, h);
  WMat f0 = entrywise_frobenius(int_mu(mu, Int(h.R->p()), fac.g0));
  WMat u = wmat_identity(h.R, h.h, h.L - 1);
  for (int i = 0; i < h.h; ++i)
    for (int j = 0; j < h.h; ++j)
      if (mu.weight(i, j) < 0) {
        Witt x = fac.X.at(i, j);
        u.at(i, j) = witt_v_inverse(x);
      }
  return wmat_mul(f0, u);
}

WMat psi_mu(const DisplayDatum& mu, const WMat& h, const PdWittContext& ctx) {
  if (h.L < 2) fail("LengthMismatch", "psi_mu needs length >= 2");
  // domain: weight -1 entries have w_0 in a
  for (int i = 0; i < h.h; ++i)
    for (int j = 0; j < h.h; ++j)
      if (mu.weight(i, j) < 0 && !ctx.ideal()->contains(h.at(i, j).a[0]))
        fail("NotInParabolic", "weight -1 entry has w_0 outside W(a)+I(R)");
  auto fac = factor_parabolic(mu, h);
  WMat f0 = entrywise_frobenius(int_mu(mu, Int(h.R->p()), fac.g0));
  WMat u = wmat_identity(h.R, h.h, h.L - 1);
  for (int i = 0; i < h.h; ++i)
    for (int j = 0; j < h.h; ++j)
      if (mu.weight(i, j) < 0) {
        Witt x = fac.X.at(i, j);
        // relative projector: x - s(w_0 x) lands in I(R)
        Witt proj = witt_sub(x, ctx.section(x.a[0], x.length()));
        u.at(i, j) = witt_v_inverse(proj);
      }
  return wmat_mul(f0, u);
}

WMat phi_lie(const DisplayDatum& mu, const WMat& X) {
  if (X.L < 2) fail("LengthMismatch", "phi_lie needs length >= 2");
  WMat out{X.R, X.h, X.L - 1, std::vector<Witt>(X.e.size(), witt_zero(X.R, X.L - 1))};
  for (int i = 0; i < X.h; ++i)
    for (int j = 0; j < X.h; ++j) {
      int w = mu.weight(i, j);
      if (w < 0) {
        out.at(i, j) = witt_v_inverse(X.at(i, j));
      } else {
        Int pw = 1;
        for (int k = 0; k < w; ++k) pw *= X.R->p();
        out.at(i, j) = witt_scale_int(witt_frobenius(X.at(i, j)), pw);
      }
    }
  return out;
}

WMat project_pos_group(const WMat& g, const PdWittContext& ctx) {
  WMat id = wmat_identity(g.R, g.h, g.L);
  WMat out = id;
  for (int i = 0; i < g.h; ++i)
    for (int j = 0; j < g.h; ++j) {
      Witt disp = witt_sub(g.at(i, j), id.at(i, j));
      if (!ctx.in_witt_ideal(disp)) fail("NotInIdeal", "displacement is not in W(a)");
      out.at(i, j) = witt_add(id.at(i, j), ctx.project_pos(disp));
    }
  return out;
}

WMat canonicalize(const DisplayDatum& mu, const WMat& h) {
  if (!h.R->char_p()) fail("RingPresentation", "canonical forms are a char-p convention");
  WMat out = h;
  for (int i = 0; i < h.h; ++i)
    for (int j = 0; j < h.h; ++j)
      if (mu.weight(i, j) >= 0 && out.at(i, j).length() > 0)
        out.at(i, j).a.back() = h.R->zero();
  return out;
}

QMat graded_exp(const DisplayDatum& mu, const std::vector<Int>& D_entries, long p) {
  const int h = mu.h;
  if (static_cast<int>(D_entries.size()) != h * h) fail("DatumInvalid", "graded_exp entry count");
  for (int m : mu.weights)
    if (m > static_cast<int>(p) - 1) fail("DatumInvalid", "graded_exp weights must lie in [0, p-1]");
  // strictly weight-raising support check
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (D_entries[i * h + j] != 0 && mu.weight(i, j) < 1)
        fail("DatumInvalid", "graded_exp needs strictly weight-raising support");
  auto mul = [&](const QMat& a, const QMat& b) {
    QMat out{h, std::vector<mpq_class>(static_cast<size_t>(h) * h, mpq_class(0))};
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        mpq_class s = 0;
        for (int k = 0; k < h; ++k) s += a.at(i, k) * b.at(k, j);
        out.at(i, j) = s;
      }
    return out;
  };
  QMat acc{h, std::vector<mpq_class>(static_cast<size_t>(h) * h, mpq_class(0))};
  for (int i = 0; i < h; ++i) acc.at(i, i) = 1;
  QMat D{h, {}};
  for (const auto& v : D_entries) D.e.push_back(mpq_class(v));
  QMat power = D;
  Int fact = 1;
  for (int n = 1; n <= h; ++n) {
    fact *= n;
    QMat term = power;
    bool nonzero = false;
    for (auto& q : term.e) {
      q /= mpq_class(fact);
      q.canonicalize();
      if (q != 0) {
        nonzero = true;
        if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
          fail("PDivisibilityFailure", "graded_exp term is not p-integral");
      }
    }
    for (size_t i = 0; i < acc.e.size(); ++i) acc.e[i] += term.e[i];
    if (!nonzero) break;
    power = mul(power, D);
  }
  return acc;
}

}  // namespace muwitt
