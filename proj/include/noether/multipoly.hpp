#ifndef NOETHER_MULTIPOLY_HPP
#define NOETHER_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "noether/cyclotomic.hpp"

namespace noether {

// Ordered variable universe shared by all polynomials in a computation.
using VarSet = std::shared_ptr<const std::vector<std::string>>;

VarSet make_vars(std::vector<std::string> names);
bool same_vars(const VarSet& a, const VarSet& b);
int var_index(const VarSet& vars, const std::string& name);

using Exps = std::vector<int>;

// Graded lexicographic, largest first (so map iteration starts at the leading term).
struct GrlexGreater {
  bool operator()(const Exps& a, const Exps& b) const;
};

// Sparse multivariate polynomial over a cyclotomic coefficient field.
class MultiPoly {
 public:
  using TermMap = std::map<Exps, Cyclotomic, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const VarSet& vars, const Cyclotomic& c);
  static MultiPoly constant(const VarSet& vars, const Rational& r) { return constant(vars, Cyclotomic(r)); }
  static MultiPoly var(const VarSet& vars, const std::string& name, int power = 1);
  static MultiPoly monomial(const VarSet& vars, Exps e, const Cyclotomic& c);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_value() const;  // requires is_constant()

  int total_degree() const;        // -1 for zero
  int degree_in(int var) const;    // -1 for zero
  const Exps& leading_exps() const;
  const Cyclotomic& leading_coeff() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Cyclotomic& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Apply a Galois map to every coefficient.
  MultiPoly map_coeffs(const GaloisMap& g) const;

  // Exact division; throws if the divisor does not divide exactly.
  MultiPoly div_exact(const MultiPoly& d) const;

  // Divide by the leading coefficient.
  MultiPoly monic() const;

  // View as univariate in `var`: power -> coefficient polynomial.
  std::map<int, MultiPoly> univariate_in(int var) const;
  static MultiPoly from_univariate(const VarSet& vars, int var, const std::map<int, MultiPoly>& coeffs);

  std::string str() const;
  static MultiPoly parse(const VarSet& vars, const std::string& s);

  void add_term(Exps e, const Cyclotomic& c);  // accumulate, dropping zeros

 private:
  VarSet vars_;
  TermMap terms_;
};

// Monic gcd over the coefficient field; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace noether

#endif
