// witt-core: ghost functionals, dual-strategy agreement, structure maps.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "muwitt/witt.hpp"

using namespace muwitt;

namespace {

RingPtr F2() { return Ring::make(RingSpec{2, 1, {Int(1), Int(1)}, {}, {}}); }
RingPtr F4() { return Ring::make(RingSpec{2, 1, {Int(1), Int(1), Int(1)}, {}, {}}); }
RingPtr F2eps() { return Ring::make(RingSpec{2, 1, {Int(0), Int(1)}, {"e"}, {{2}}}); }
RingPtr Z4() { return Ring::make(RingSpec{2, 2, {Int(0), Int(1)}, {}, {}}); }
RingPtr F3eps() { return Ring::make(RingSpec{3, 1, {Int(0), Int(1)}, {"e"}, {{2}}}); }
RingPtr Z9() { return Ring::make(RingSpec{3, 2, {Int(0), Int(1)}, {}, {}}); }

Witt random_witt(const RingPtr& R, int L, std::mt19937& rng) {
  Witt w{R, {}};
  std::uniform_int_distribution<long> d(0, 1L << 30);
  for (int i = 0; i < L; ++i) {
    std::vector<Int> c(R->dim());
    for (auto& v : c) v = d(rng);
    w.a.push_back(R->from_coeffs(std::move(c)));
  }
  return w;
}

}  // namespace

TEST_CASE("ghost coordinates of sums/products are componentwise: small exhaustive") {
  for (const auto& R : {F2(), Z4()}) {
    const int L = 3;
    auto all = witt_enumerate(R, L, 1u << 12);
    for (size_t i = 0; i < all.size(); i += 3)
      for (size_t j = 0; j < all.size(); j += 5) {
        const Witt &x = all[i], &y = all[j];
        auto gs = witt_ghost(witt_add(x, y));
        auto gp = witt_ghost(witt_mul(x, y));
        auto gx = witt_ghost(x);
        auto gy = witt_ghost(y);
        for (int k = 0; k < L; ++k) {
          CHECK(gs[k] == gx[k] + gy[k]);
          CHECK(gp[k] == gx[k] * gy[k]);
        }
      }
  }
}

TEST_CASE("witt ring laws, exhaustive on small rings at L <= 3") {
  for (const auto& R : {F2(), F2eps(), Z4()}) {
    const int L = 2;
    auto all = witt_enumerate(R, L, 1u << 12);
    Witt one = witt_one(R, L);
    Witt zero = witt_zero(R, L);
    for (const auto& x : all) {
      CHECK(witt_add(x, witt_neg(x)) == zero);
      CHECK(witt_mul(x, one) == x);
      for (const auto& y : all) {
        CHECK(witt_add(x, y) == witt_add(y, x));
        CHECK(witt_mul(x, y) == witt_mul(y, x));
      }
    }
    // associativity + distributivity on a stride
    for (size_t i = 0; i < all.size(); i += 2)
      for (size_t j = 0; j < all.size(); j += 3)
        for (size_t k = 0; k < all.size(); k += 5) {
          const Witt &x = all[i], &y = all[j], &z = all[k];
          CHECK(witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z)));
          CHECK(witt_mul(witt_mul(x, y), z) == witt_mul(x, witt_mul(y, z)));
          CHECK(witt_mul(x, witt_add(y, z)) == witt_add(witt_mul(x, y), witt_mul(x, z)));
        }
  }
}

TEST_CASE("dual strategy agreement: universal polynomials vs ghost lift") {
  std::mt19937 rng(20260826);
  struct Fix { RingPtr R; int L; };
  std::vector<Fix> fixtures = {
      {F2(), 5}, {F2eps(), 4}, {Z4(), 4}, {F4(), 3},
      {F3eps(), 4}, {Z9(), 3},
      {Ring::make(RingSpec{5, 1, {Int(0), Int(1)}, {"e"}, {{2}}}), 3},
      {Ring::make(RingSpec{5, 2, {Int(0), Int(1)}, {}, {}}), 3},
  };
  for (const auto& [R, L] : fixtures) {
    for (int t = 0; t < 60; ++t) {
      Witt x = random_witt(R, L, rng);
      Witt y = random_witt(R, L, rng);
      CHECK(witt_add(x, y, WittStrategy::Universal) == witt_add(x, y, WittStrategy::GhostLift));
      CHECK(witt_mul(x, y, WittStrategy::Universal) == witt_mul(x, y, WittStrategy::GhostLift));
      CHECK(witt_neg(x, WittStrategy::Universal) == witt_neg(x, WittStrategy::GhostLift));
      CHECK(witt_frobenius(x, WittStrategy::Universal) == witt_frobenius(x, WittStrategy::GhostLift));
    }
  }
}

TEST_CASE("structure maps: F, V, FV = p, V(x F(y)) = V(x) y, Teichmuller") {
  std::mt19937 rng(7);
  for (const auto& R : {F2(), F2eps(), Z4(), F3eps(), Z9()}) {
    const int L = 4;
    for (int t = 0; t < 40; ++t) {
      Witt x = random_witt(R, L, rng);
      Witt y = random_witt(R, L, rng);
      // F is a ring homomorphism
      CHECK(witt_frobenius(witt_add(x, y)) == witt_add(witt_frobenius(x), witt_frobenius(y)));
      CHECK(witt_frobenius(witt_mul(x, y)) == witt_mul(witt_frobenius(x), witt_frobenius(y)));
      // V is additive
      CHECK(witt_verschiebung(witt_add(x, y)) ==
            witt_add(witt_verschiebung(x), witt_verschiebung(y)));
      // FV = p at the common length
      Witt fv = witt_frobenius(witt_verschiebung(x));
      CHECK(fv == witt_scale_int(x, R->p()));
      // projection formula V(x F(y)) = V(x) y at the common length L
      Witt lhs = witt_verschiebung(witt_mul(witt_truncate(x, L - 1), witt_frobenius(y)));
      Witt rhs = witt_mul(witt_truncate(witt_verschiebung(x), L), y);
      CHECK(lhs == rhs);
      // VF vs p on ghosts: w_k(VFx) = p w_k(x) - p x_0^{p^k}? (not asserted; F V only)
    }
    // Teichmuller is multiplicative; F[a] = [a^p]
    for (const auto& a : R->enumerate(64))
      for (const auto& b : R->enumerate(64)) {
        CHECK(witt_mul(witt_teichmuller(a, L), witt_teichmuller(b, L)) ==
              witt_teichmuller(a * b, L));
        CHECK(witt_frobenius(witt_teichmuller(a, L)) == witt_teichmuller(a.pow(R->p()), L - 1));
      }
  }
}

TEST_CASE("char-p fixed-length Frobenius agrees with the truncated one") {
  std::mt19937 rng(11);
  for (const auto& R : {F2(), F4(), F2eps(), F3eps()}) {
    for (int t = 0; t < 30; ++t) {
      Witt x = random_witt(R, 4, rng);
      Witt f = witt_frobenius_fixed(x);
      CHECK(witt_truncate(f, 3) == witt_frobenius(x));
    }
  }
  CHECK_THROWS_AS(witt_frobenius_fixed(witt_one(Z4(), 2)), DomainError);
}

TEST_CASE("from_ghost round trips and rejects non-ghost vectors") {
  std::mt19937 rng(23);
  for (const auto& R : {F2(), Z4(), F3eps()}) {
    const int L = 3;
    RingPtr cov = cover_of(R, R->N() + L + 2);
    for (int t = 0; t < 25; ++t) {
      Witt x = random_witt(R, L, rng);
      // exact ghost vector over the cover from canonical lifts
      Witt xc{cov, {}};
      for (const auto& c : x.a) xc.a.push_back(cov->lift(c));
      auto g = witt_ghost(xc);
      Witt back = witt_from_ghost(R, g);
      CHECK(back == x);
    }
    // w = (0, 0, 1) is not a ghost vector when p does not divide 1
    std::vector<Elt> bad = {cov->zero(), cov->zero(), cov->one()};
    CHECK_THROWS_AS(witt_from_ghost(R, bad), DomainError);
  }
}

TEST_CASE("witt units invert") {
  for (const auto& R : {F2eps(), Z4()}) {
    const int L = 3;
    for (const auto& x : witt_enumerate(R, L, 1u << 12)) {
      if (witt_is_unit(x)) {
        Witt y = witt_inverse(x);
        CHECK(witt_mul(x, y) == witt_one(R, L));
      } else {
        CHECK_THROWS_AS(witt_inverse(x), DomainError);
      }
    }
  }
}

TEST_CASE("universal polynomial cache builds within budget for the declared range") {
  for (long p : {2L, 3L}) CHECK(witt_polynomials(p, 5).sum.size() == 5);
  CHECK(witt_polynomials(5, 4).prod.size() == 4);
}
