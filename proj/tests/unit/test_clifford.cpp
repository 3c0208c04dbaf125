#include "oracles.hpp"

#include <doctest.h>

using namespace spinorb;
using spinorb::testing::Rng;

namespace {

Spinor mono(int d, std::vector<int> idx, GaussianRational c = 1) {
  Spinor out(d);
  out.add(IndexSet::of(idx), c);
  return out;
}

}  // namespace

TEST_CASE("creation operator") {
  CHECK(create(1, mono(3, {2, 3})) == mono(3, {1, 2, 3}));
  CHECK(create(2, mono(3, {1, 3})) == mono(3, {1, 2, 3}, -1));
  CHECK(create(1, mono(3, {1, 2})).is_zero());
  CHECK_THROWS_AS(create(4, mono(3, {})), DimensionError);
  CHECK_THROWS_AS(create(0, mono(3, {})), DimensionError);
}

TEST_CASE("annihilation operator") {
  CHECK(annihilate(1, mono(2, {1, 2})) == mono(2, {2}));
  CHECK(annihilate(2, mono(2, {1, 2})) == mono(2, {1}, -1));
  CHECK(annihilate(3, mono(3, {1, 2})).is_zero());
  CHECK_THROWS_AS(annihilate(3, mono(2, {})), DimensionError);
}

TEST_CASE("clifford multiplication and gamma") {
  const Spinor vac = Spinor::vacuum(2);
  CHECK(clifford_mul(Vector2d::annihilator(2, 1), vac).is_zero());
  Vector2d v(2);
  v.ann[0] = 1;
  v.cre[0] = 1;
  CHECK(clifford_mul(v, vac) == mono(2, {1}));
  CHECK(gamma(1, vac) == mono(2, {1}));
  CHECK(gamma(3, vac) == mono(2, {1}, -GaussianRational::i()));
  CHECK_THROWS_AS(clifford_mul(Vector2d(3), vac), DimensionError);
  CHECK_THROWS_AS(gamma(5, vac), DimensionError);

  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      CHECK(metric(Vector2d::gamma(3, a), Vector2d::gamma(3, b)) == GaussianRational(a == b ? 2 : 0));
}

TEST_CASE("reversal and inner product") {
  CHECK(reversal(mono(2, {1, 2})) == mono(2, {1, 2}, -1));
  CHECK(reversal(mono(4, {1, 2, 3, 4})) == mono(4, {1, 2, 3, 4}));
  CHECK(reversal(Spinor::vacuum(3)) == Spinor::vacuum(3));
  CHECK(inner(Spinor::vacuum(2), mono(2, {1, 2})) == GaussianRational(-1));
  CHECK(inner(Spinor::vacuum(4), mono(4, {1, 2, 3, 4})) == GaussianRational(1));
  CHECK(inner(mono(4, {1, 2}), mono(4, {1, 2})).is_zero());
  CHECK_THROWS_AS(inner(Spinor::vacuum(2), Spinor::vacuum(3)), DimensionError);
}

TEST_CASE("basis pure spinors") {
  CHECK(basis_pure(IndexSet(), 3) == Spinor::vacuum(3));
  CHECK(basis_pure(IndexSet::of({1, 2}), 3) == mono(3, {1, 2}));
  CHECK_THROWS_AS(basis_pure(IndexSet::of({1, 2, 3}), 3), std::invalid_argument);
}

TEST_CASE("operators agree with the literal index-list oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 6;
    const Spinor psi = testing::random_spinor(d, rng, false);
    const Spinor phi = testing::random_spinor(d, rng, false);
    for (int i = 1; i <= d; ++i) {
      CHECK(create(i, psi) == testing::oracle_create(i, psi));
      CHECK(annihilate(i, psi) == testing::oracle_annihilate(i, psi));
    }
    CHECK(inner(psi, phi) == testing::oracle_inner(psi, phi));
  }
}

TEST_CASE("clifford relation uv + vu = g(u,v)") {
  Rng rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 1 + trial % 5;
    const Vector2d u = testing::random_vector(d, rng);
    const Vector2d v = testing::random_vector(d, rng);
    const Spinor psi = testing::random_spinor(d, rng, false);
    const Spinor lhs = clifford_mul(u, clifford_mul(v, psi)) + clifford_mul(v, clifford_mul(u, psi));
    CHECK(lhs == metric(u, v) * psi);
  }
}

TEST_CASE("nilpotency and involution") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 6;
    const Spinor psi = testing::random_spinor(d, rng, false);
    for (int i = 1; i <= d; ++i) {
      CHECK(create(i, create(i, psi)).is_zero());
      CHECK(annihilate(i, annihilate(i, psi)).is_zero());
    }
    CHECK(reversal(reversal(psi)) == psi);
  }
}

TEST_CASE("inner product is invariant under the Lie algebra") {
  Rng rng(14);
  for (int d = 1; d <= 5; ++d) {
    const Spinor psi = testing::random_spinor(d, rng);
    const Spinor phi = testing::random_spinor(d, rng);
    for (const LieElement &x : lie_basis(d))
      CHECK((inner(act(x, psi), phi) + inner(psi, act(x, phi))).is_zero());
  }
}

TEST_CASE("chirality") {
  CHECK(mono(4, {1, 2}).is_even());
  CHECK_FALSE(create(3, mono(4, {1, 2})).is_even());
  CHECK(mono(4, {1, 2}).to_string() == "e^{12}");
  CHECK((Spinor::vacuum(4) - mono(4, {1, 2, 3, 4})).to_string() == "1 - e^{1234}");
}
