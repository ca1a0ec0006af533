#include <gtest/gtest.h>

#include <random>

#include "charforge/cyclotomic.hpp"
#include "charforge/error.hpp"
#include "charforge/modular.hpp"

using namespace charforge;

namespace {

Cyclotomic z(std::uint32_t m, std::int64_t k) { return Cyclotomic::root_of_unity(m, k); }

/// Random element of Q(zeta_m) with small numerators and denominators.
Cyclotomic random_value(std::mt19937& rng, std::uint32_t m) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<std::uint32_t> exp(0, m - 1);
  Cyclotomic out;
  for (int t = terms(rng); t > 0; --t) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out += z(m, exp(rng)) * c;
  }
  return out;
}

}  // namespace

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(z(1, 0), Cyclotomic(1));
  EXPECT_EQ(z(4, 2), Cyclotomic(-1));
  EXPECT_EQ(z(3, 1) + z(3, 2), Cyclotomic(-1));
  EXPECT_EQ(z(3, 1) * z(3, 2), Cyclotomic(1));
  EXPECT_EQ(z(5, 0) + z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4), Cyclotomic(0));
  EXPECT_EQ(z(7, -1), z(7, 6));
  EXPECT_EQ(z(12, 4), z(3, 1));
}

TEST(Cyclotomic, FullPeriodsVanish) {
  for (std::uint32_t m : {2u, 3u, 4u, 8u, 9u, 25u, 27u, 6u, 12u, 45u}) {
    Cyclotomic sum;
    for (std::uint32_t k = 0; k < m; ++k) sum += z(m, k);
    EXPECT_TRUE(sum.is_zero()) << m;
  }
}

TEST(Cyclotomic, Conjugation) {
  EXPECT_EQ(Cyclotomic(Rational(3, 7)).conjugate(), Cyclotomic(Rational(3, 7)));
  EXPECT_EQ(z(5, 1).conjugate(), z(5, 4));
  auto real = z(9, 1) + z(9, 8);
  EXPECT_EQ(real.conjugate(), real);
  EXPECT_EQ(z(8, 1) * z(8, 1).conjugate(), Cyclotomic(1));
}

TEST(Cyclotomic, RationalRecognition) {
  EXPECT_EQ((z(6, 0) * Rational(3)).as_rational(), Rational(3));
  EXPECT_THROW(z(3, 1).as_rational(), NotRational);
  auto sqrt2 = z(8, 1) + z(8, 7);
  EXPECT_FALSE(sqrt2.is_rational());
  EXPECT_THROW(sqrt2.as_rational(), NotRational);
  EXPECT_EQ(sqrt2 * sqrt2, Cyclotomic(2));
  EXPECT_TRUE((z(9, 3) + z(9, 6)).is_rational());
}

TEST(Cyclotomic, MixedConductors) {
  auto a = z(3, 1);
  auto b = z(4, 1);
  auto ab = a * b;
  EXPECT_EQ(ab, z(12, 7));
  EXPECT_EQ(ab * b.conjugate(), a);
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(z(6, 1), -z(3, 2));
}

TEST(Cyclotomic, TextForm) {
  EXPECT_EQ(Cyclotomic(0).to_string(), "0");
  EXPECT_EQ(Cyclotomic(Rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(z(3, 1).to_string(), "E(3)");
}

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const std::uint32_t m = GetParam();
  std::mt19937 rng(1000 + m);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_value(rng, m);
    auto b = random_value(rng, m);
    auto c = random_value(rng, m);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * Cyclotomic(1), a);
    EXPECT_EQ(a.conjugate().conjugate(), a);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ(a == b, (a - b).is_zero());
    auto norm = a * a.conjugate();
    EXPECT_EQ(norm.conjugate(), norm);
    EXPECT_GE(norm.approximate().first, -1e-9);
    EXPECT_NEAR(norm.approximate().second, 0.0, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Conductors, FieldAxioms, ::testing::Values(5u, 8u, 9u, 6u, 12u, 45u));

TEST(Cyclotomic, CanonicalFormIsUnique) {
  std::mt19937 rng(3);
  for (std::uint32_t m : {9u, 12u, 45u}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_value(rng, m);
      auto again = Cyclotomic::from_canonical_terms(a.conductor(), a.terms());
      EXPECT_EQ(again.terms(), a.terms());
      std::vector<Rational> dense(a.conductor());
      for (const auto& t : a.terms()) dense[t.exponent] = t.coeff;
      EXPECT_EQ(Cyclotomic::from_powers(a.conductor(), dense).terms(), a.terms());
    }
  }
}

TEST(Cyclotomic, ModularImageIsRingHomomorphism) {
  // ell = 37 = 1 mod 36 supports conductors 9 and 12.
  const std::uint64_t ell = 37;
  const std::uint64_t omega = modular::smallest_primitive_root_of_unity(36, ell);
  std::mt19937 rng(11);
  for (std::uint32_t m : {9u, 12u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<long> num(-5, 5);
      std::uniform_int_distribution<std::uint32_t> exp(0, m - 1);
      Cyclotomic a, b;
      for (int t = 0; t < 3; ++t) {
        a += z(m, exp(rng)) * Rational(num(rng));
        b += z(m, exp(rng)) * Rational(num(rng));
      }
      auto img = [&](const Cyclotomic& x) { return x.modular_image(ell, omega, 36); };
      EXPECT_EQ(img(a * b), img(a) * img(b) % ell);
      EXPECT_EQ(img(a + b), (img(a) + img(b)) % ell);
    }
  }
}
