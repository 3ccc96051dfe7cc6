#include "noether/ratfunc.hpp"

#include <sstream>

namespace noether {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), Rational(1))) {
  reduce();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (!same_vars(num_.vars(), den_.vars())) throw std::domain_error("rational function universe mismatch");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.vars(), Rational(1));
    return;
  }
  MultiPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  normalize_monic();
}

void RatFunc::normalize_monic() {
  Cyclotomic lc = den_.leading_coeff();
  if (!(lc == Cyclotomic(Rational(1)))) {
    Cyclotomic inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::from_coprime(MultiPoly num, MultiPoly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) {
    r.den_ = MultiPoly::constant(r.num_.vars(), Rational(1));
    return r;
  }
  r.normalize_monic();
  return r;
}

RatFunc RatFunc::var(const VarSet& vars, const std::string& name) { return RatFunc(MultiPoly::var(vars, name)); }

RatFunc RatFunc::constant(const VarSet& vars, const Cyclotomic& c) { return RatFunc(MultiPoly::constant(vars, c)); }

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // num/den coprime on both sides, so the new gcd divides gcd(den, o.den)
  MultiPoly d = poly_gcd(den_, o.den_);
  if (d.is_constant()) return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  MultiPoly da = den_.div_exact(d);
  MultiPoly db = o.den_.div_exact(d);
  MultiPoly t = num_ * db + o.num_ * da;
  if (t.is_zero()) return RatFunc::constant(vars(), Rational(0));
  MultiPoly g2 = poly_gcd(t, d);
  if (g2.is_constant()) return from_coprime(std::move(t), da * o.den_);
  return from_coprime(t.div_exact(g2), da * o.den_.div_exact(g2));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc::constant(vars(), Rational(0));
  MultiPoly g1 = poly_gcd(num_, o.den_);
  MultiPoly g2 = poly_gcd(o.num_, den_);
  MultiPoly na = g1.is_constant() ? num_ : num_.div_exact(g1);
  MultiPoly db = g1.is_constant() ? o.den_ : o.den_.div_exact(g1);
  MultiPoly nb = g2.is_constant() ? o.num_ : o.num_.div_exact(g2);
  MultiPoly da = g2.is_constant() ? den_ : den_.div_exact(g2);
  return from_coprime(na * nb, da * db);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("rational function division by zero");
  return from_coprime(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RatFunc::constant(vars(), Rational(1));
  return from_coprime(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_value() == Cyclotomic(Rational(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::parse(const VarSet& vars, const std::string& s) {
  if (!s.empty() && s.front() == '(') {
    auto sep = s.find(")/(");
    if (sep == std::string::npos || s.back() != ')') throw std::domain_error("rational function parse error: " + s);
    MultiPoly num = MultiPoly::parse(vars, s.substr(1, sep - 1));
    MultiPoly den = MultiPoly::parse(vars, s.substr(sep + 3, s.size() - sep - 4));
    return RatFunc(std::move(num), std::move(den));
  }
  return RatFunc(MultiPoly::parse(vars, s));
}

RatFunc operator*(const Cyclotomic& c, const RatFunc& f) { return RatFunc(f.num() * c, f.den()); }

SubstitutionMap::SubstitutionMap(VarSet dom, std::map<std::string, RatFunc> imgs, GaloisMap g)
    : domain(std::move(dom)), images(std::move(imgs)), coeff_map(g) {
  for (const auto& name : *domain)
    if (images.find(name) == images.end()) throw std::domain_error("substitution map missing image for " + name);
}

SubstitutionMap SubstitutionMap::identity(const VarSet& vars, int cyc_order) {
  std::map<std::string, RatFunc> imgs;
  for (const auto& name : *vars) imgs.emplace(name, RatFunc::var(vars, name));
  return SubstitutionMap(vars, std::move(imgs), GaloisMap(cyc_order, 1));
}

const RatFunc& SubstitutionMap::image(const std::string& name) const {
  auto it = images.find(name);
  if (it == images.end()) throw std::domain_error("substitution map missing image for " + name);
  return it->second;
}

RatFunc SubstitutionMap::operator()(const RatFunc& f) const { return substitute(f, *this); }

SubstitutionMap SubstitutionMap::after(const SubstitutionMap& other) const {
  std::map<std::string, RatFunc> imgs;
  for (const auto& [name, img] : other.images) imgs.emplace(name, substitute(img, *this));
  return SubstitutionMap(other.domain, std::move(imgs), coeff_map.compose(other.coeff_map));
}

bool SubstitutionMap::is_identity() const {
  if (!coeff_map.is_identity()) return false;
  for (const auto& [name, img] : images) {
    const VarSet& target = img.vars();
    if (!(img == RatFunc::var(target, name))) return false;
  }
  return true;
}

bool SubstitutionMap::operator==(const SubstitutionMap& o) const {
  if (!same_vars(domain, o.domain)) return false;
  if (coeff_map.order != o.coeff_map.order || coeff_map.exponent != o.coeff_map.exponent) return false;
  return images == o.images;
}

std::string SubstitutionMap::str() const {
  std::ostringstream out;
  out << "galois:" << coeff_map.exponent << "@" << coeff_map.order;
  for (const auto& [name, img] : images) out << ";" << name << "->" << img.str();
  return out.str();
}

RatFunc substitute(const RatFunc& f, const SubstitutionMap& m) {
  const VarSet& dom = f.vars();
  // target universe from any image
  const VarSet& target = m.images.begin()->second.vars();
  // cache powers of each image
  std::vector<std::vector<RatFunc>> powers(dom->size());
  auto image_pow = [&](size_t vi, int e) -> const RatFunc& {
    auto& cache = powers[vi];
    if (cache.empty()) cache.push_back(RatFunc::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) {
      const RatFunc& base = m.image((*dom)[vi]);
      cache.push_back(cache.back() * base);
    }
    return cache[static_cast<size_t>(e)];
  };
  auto eval_poly = [&](const MultiPoly& p) -> RatFunc {
    RatFunc acc = RatFunc::constant(target, Rational(0));
    for (const auto& [e, c] : p.terms()) {
      RatFunc term = RatFunc::constant(target, c.galois(m.coeff_map));
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) term = term * image_pow(i, e[i]);
      acc = acc + term;
    }
    return acc;
  };
  RatFunc den = eval_poly(f.den());
  if (den.is_zero()) throw std::domain_error("substitution produced identically zero denominator");
  return eval_poly(f.num()) / den;
}

bool roundtrip_check(const SubstitutionMap& forward, const SubstitutionMap& inverse) {
  for (const auto& name : *forward.domain) {
    RatFunc back = inverse(forward.image(name));
    if (!(back == RatFunc::var(back.vars(), name))) return false;
  }
  for (const auto& name : *inverse.domain) {
    RatFunc back = forward(inverse.image(name));
    if (!(back == RatFunc::var(back.vars(), name))) return false;
  }
  return true;
}

std::vector<RatFunc> orbit_min_poly(const RatFunc& x, const std::vector<SubstitutionMap>& group) {
  // prod over h in group of (T - h(x)), coefficients ascending in T
  std::vector<RatFunc> coeffs;
  coeffs.push_back(RatFunc::constant(x.vars(), Rational(1)));
  for (const auto& h : group) {
    RatFunc hx = h(x);
    std::vector<RatFunc> next(coeffs.size() + 1, RatFunc::constant(x.vars(), Rational(0)));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - hx * coeffs[i];
    }
    coeffs = std::move(next);
  }
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
    for (const auto& h : group) {
      if (!(h(coeffs[i]) == coeffs[i]))
        throw std::domain_error("orbit minimal polynomial coefficient not invariant; orbit not closed");
    }
  }
  return coeffs;
}

}  // namespace noether
