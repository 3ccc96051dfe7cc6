#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "noether/cyclotomic.hpp"

using namespace noether;

namespace {

Cyclotomic random_cyc(int order, std::mt19937_64& rng) {
  std::vector<Rational> raw;
  int phi = Cyclotomic::phi(order);
  for (int i = 0; i < phi; ++i) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    raw.push_back(Rational(num, den));
  }
  return Cyclotomic(order, std::move(raw));
}

}  // namespace

TEST_CASE("reduction mod cyclotomic polynomial") {
  // zeta9^9 = 1
  CHECK(Cyclotomic::zeta_pow(9, 9) == Cyclotomic::one(9));
  // zeta5 + zeta5^2 + zeta5^3 + zeta5^4 = -1
  Cyclotomic s = Cyclotomic::zero(5);
  for (int i = 1; i <= 4; ++i) s = s + Cyclotomic::zeta_pow(5, i);
  CHECK(s == Cyclotomic(Rational(-1)));
  // zeta9^6 + zeta9^3 = -1  (Phi_9 = T^6 + T^3 + 1)
  CHECK(Cyclotomic::zeta_pow(9, 6) + Cyclotomic::zeta_pow(9, 3) == Cyclotomic(Rational(-1)));
  CHECK_THROWS(Cyclotomic(7, {Rational(1)}));
}

TEST_CASE("field arithmetic") {
  CHECK(Cyclotomic::zeta(5) * Cyclotomic::zeta_pow(5, 4) == Cyclotomic::one(5));
  // (zeta9 + zeta9^-1)^2 = zeta9^2 + 2 + zeta9^-2
  Cyclotomic eta = eta_element(9);
  Cyclotomic expected = Cyclotomic::zeta_pow(9, 2) + Cyclotomic(Rational(2)) + Cyclotomic::zeta_pow(9, -2);
  CHECK(eta * eta == expected);

  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic x = random_cyc(9, rng);
    CHECK(x / Cyclotomic::one(9) == x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Cyclotomic::one(9));
      CHECK((x / x) == Cyclotomic::one(9));
    }
  }
  CHECK_THROWS(Cyclotomic::one(9) / Cyclotomic::zero(9));
  CHECK_THROWS(Cyclotomic::zeta(9) + Cyclotomic::zeta(5));
}

TEST_CASE("galois automorphisms") {
  CHECK(Cyclotomic::zeta(9).galois(2) == Cyclotomic::zeta_pow(9, 2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Cyclotomic z = random_cyc(9, rng);
    CHECK(z.galois(1) == z);
    Cyclotomic w = z;
    for (int i = 0; i < 6; ++i) w = w.galois(2);  // 2^6 = 64 = 1 mod 9
    CHECK(w == z);
    // composition law
    CHECK(z.galois(2).galois(4) == z.galois(8));
    // homomorphism on random pairs
    Cyclotomic y = random_cyc(9, rng);
    CHECK((z + y).galois(5) == z.galois(5) + y.galois(5));
    CHECK((z * y).galois(5) == z.galois(5) * y.galois(5));
  }
  CHECK_THROWS(GaloisMap(9, 3));
}

TEST_CASE("sqrt5 element") {
  Cyclotomic s = sqrt5_element();
  CHECK(s == Cyclotomic::one(5) + Rational(2) * Cyclotomic::zeta(5) + Rational(2) * Cyclotomic::zeta_pow(5, 4));
  CHECK(s * s == Cyclotomic(Rational(5)));
  CHECK(s.galois(2) == -s);
  CHECK(s.galois(4) == s);
}

TEST_CASE("canonical form and rendering") {
  Cyclotomic s = sqrt5_element();
  // zeta^4 reduces into the power basis 1..zeta^3
  CHECK(s.str() == "-1-2*z^2-2*z^3@5");
  CHECK(Cyclotomic::parse("1+2*z+2*z^4@5") == s);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic z = random_cyc(trial % 2 ? 9 : 5, rng);
    CHECK(Cyclotomic::parse(z.str()) == z);
  }
  CHECK(Cyclotomic::parse("0@9") == Cyclotomic::zero(9));
  CHECK(Cyclotomic::parse("-3/4") == Cyclotomic(Rational(-3, 4)));
  CHECK(Cyclotomic::parse(Cyclotomic(Rational(-3, 4)).str()) == Cyclotomic(Rational(-3, 4)));
}
