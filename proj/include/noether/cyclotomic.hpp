#ifndef NOETHER_CYCLOTOMIC_HPP
#define NOETHER_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "noether/rational.hpp"

namespace noether {

// Galois automorphism zeta -> zeta^k of Q(zeta_n), gcd(k, n) = 1.
struct GaloisMap {
  int order = 1;
  int exponent = 1;

  GaloisMap() = default;
  GaloisMap(int n, int k);

  bool is_identity() const { return exponent % order == 1 % order || order == 1; }
  // Composition: this after other, i.e. zeta -> zeta^(k1*k2 mod n).
  GaloisMap compose(const GaloisMap& other) const;
  GaloisMap inverse() const;
};

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
// reduced mod the n-th cyclotomic polynomial. Supported n: 1, 2, 3, 5, 9.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
  explicit Cyclotomic(long n) : order_(1), coeffs_(1, Rational(n)) {}
  // Reduces `raw` (coefficients of powers zeta^0..zeta^(len-1), len <= n).
  Cyclotomic(int order, std::vector<Rational> raw);

  static bool order_supported(int n);
  static int phi(int n);
  static Cyclotomic zero(int order);
  static Cyclotomic one(int order);
  static Cyclotomic zeta(int order);
  static Cyclotomic zeta_pow(int order, long e);  // zeta^(e mod n)

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;  // lies in Q
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic promoted(int order) const;  // embed Q into Q(zeta_order)

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Apply zeta -> zeta^k; ring homomorphism fixing Q.
  Cyclotomic galois(const GaloisMap& g) const;
  Cyclotomic galois(int k) const { return galois(GaloisMap(order_, k)); }

  // Textual form, e.g. "1+2*z+2*z^4@5"; order-1 values print as plain rationals.
  std::string str() const;
  static Cyclotomic parse(const std::string& s);

 private:
  int order_;
  std::vector<Rational> coeffs_;  // size phi(order_)

  static std::pair<int, int> match_orders(const Cyclotomic& a, const Cyclotomic& b);
};

Cyclotomic operator*(const Rational& r, const Cyclotomic& c);

// s = 1 + 2*zeta5 + 2*zeta5^4, the square root of 5 fixed by complex conjugation.
Cyclotomic sqrt5_element();

// eta = zeta_n + zeta_n^(-1).
Cyclotomic eta_element(int order);

}  // namespace noether

#endif
