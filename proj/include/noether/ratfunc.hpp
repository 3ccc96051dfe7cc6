#ifndef NOETHER_RATFUNC_HPP
#define NOETHER_RATFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "noether/multipoly.hpp"

namespace noether {

// Rational function in canonical form: gcd(num, den) = 1, den monic in grlex.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc var(const VarSet& vars, const std::string& name);
  static RatFunc constant(const VarSet& vars, const Cyclotomic& c);
  static RatFunc constant(const VarSet& vars, const Rational& r) { return constant(vars, Cyclotomic(r)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Cyclotomic constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;  // negative exponents allowed

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;
  static RatFunc parse(const VarSet& vars, const std::string& s);

 private:
  MultiPoly num_, den_;
  void reduce();
  void normalize_monic();
  static RatFunc from_coprime(MultiPoly num, MultiPoly den);
};

RatFunc operator*(const Cyclotomic& c, const RatFunc& f);

// Field homomorphism/automorphism: variable images plus a coefficient Galois map.
// Images live in a (possibly different) target variable universe.
struct SubstitutionMap {
  VarSet domain;                           // variables being replaced
  std::map<std::string, RatFunc> images;   // every domain variable must be covered
  GaloisMap coeff_map;                     // applied to coefficients

  SubstitutionMap() = default;
  SubstitutionMap(VarSet dom, std::map<std::string, RatFunc> imgs, GaloisMap g = GaloisMap());

  static SubstitutionMap identity(const VarSet& vars, int cyc_order = 1);

  const RatFunc& image(const std::string& name) const;
  RatFunc operator()(const RatFunc& f) const;
  // this . other (apply `other` first).
  SubstitutionMap after(const SubstitutionMap& other) const;
  bool is_identity() const;
  bool operator==(const SubstitutionMap& o) const;

  std::string str() const;
};

RatFunc substitute(const RatFunc& f, const SubstitutionMap& m);

// True iff inverse.forward and forward.inverse are the identity on every variable.
bool roundtrip_check(const SubstitutionMap& forward, const SubstitutionMap& inverse);

// Coefficients (ascending powers of T, monic, length |orbit|+1) of prod_h (T - h(x)).
// Throws if some coefficient is not fixed by every automorphism in `group`.
std::vector<RatFunc> orbit_min_poly(const RatFunc& x, const std::vector<SubstitutionMap>& group);

}  // namespace noether

#endif
