#ifndef NOETHER_RATIONAL_HPP
#define NOETHER_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace noether {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(num, den);  // canonicalized by GMP
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) { return Rational(s); }

}  // namespace noether

#endif
