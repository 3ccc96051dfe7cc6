#include "noether/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace noether {

VarSet make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarSet& a, const VarSet& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int var_index(const VarSet& vars, const std::string& name) {
  for (size_t i = 0; i < vars->size(); ++i)
    if ((*vars)[i] == name) return static_cast<int>(i);
  throw std::domain_error("unknown variable " + name);
}

bool GrlexGreater::operator()(const Exps& a, const Exps& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors
}

MultiPoly MultiPoly::constant(const VarSet& vars, const Cyclotomic& c) {
  MultiPoly p(vars);
  p.add_term(Exps(vars->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::var(const VarSet& vars, const std::string& name, int power) {
  Exps e(vars->size(), 0);
  e[static_cast<size_t>(var_index(vars, name))] = power;
  return monomial(vars, std::move(e), Cyclotomic(Rational(1)));
}

MultiPoly MultiPoly::monomial(const VarSet& vars, Exps e, const Cyclotomic& c) {
  if (e.size() != vars->size()) throw std::domain_error("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw std::domain_error("negative exponent in polynomial term");
  MultiPoly p(vars);
  p.add_term(std::move(e), c);
  return p;
}

void MultiPoly::add_term(Exps e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exps& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Cyclotomic MultiPoly::constant_value() const {
  if (terms_.empty()) return Cyclotomic();
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exps& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
  return d;
}

const Exps& MultiPoly::leading_exps() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Cyclotomic& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (!same_vars(vars_, o.vars_)) throw std::domain_error("polynomial variable universe mismatch");
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (!same_vars(vars_, o.vars_)) throw std::domain_error("polynomial variable universe mismatch");
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Cyclotomic& c) const {
  MultiPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, Cyclotomic(Rational(1)));
  MultiPoly base(*this);
  while (e) {
    if (e & 1u) result = result * base;
    base = e > 1 ? base * base : base;
    e >>= 1u;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!same_vars(vars_, o.vars_)) return false;
  return terms_ == o.terms_;
}

MultiPoly MultiPoly::map_coeffs(const GaloisMap& g) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.galois(g));
  return r;
}

MultiPoly MultiPoly::div_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!same_vars(vars_, d.vars_)) throw std::domain_error("polynomial variable universe mismatch");
  MultiPoly rem(*this);
  MultiPoly q(vars_);
  const Exps& de = d.leading_exps();
  const Cyclotomic& dc = d.leading_coeff();
  while (!rem.is_zero()) {
    const Exps& re = rem.leading_exps();
    Exps qe(re);
    for (size_t i = 0; i < qe.size(); ++i) {
      qe[i] -= de[i];
      if (qe[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    Cyclotomic qc = rem.leading_coeff() / dc;
    MultiPoly qt = monomial(vars_, qe, qc);
    q = q + qt;
    rem = rem - qt * d;
  }
  return q;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

std::map<int, MultiPoly> MultiPoly::univariate_in(int var) const {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    int p = e[static_cast<size_t>(var)];
    Exps rest(e);
    rest[static_cast<size_t>(var)] = 0;
    auto it = out.find(p);
    if (it == out.end()) it = out.emplace(p, MultiPoly(vars_)).first;
    it->second.add_term(std::move(rest), c);
  }
  return out;
}

MultiPoly MultiPoly::from_univariate(const VarSet& vars, int var, const std::map<int, MultiPoly>& coeffs) {
  MultiPoly r(vars);
  for (const auto& [p, c] : coeffs) {
    for (const auto& [e, cc] : c.terms()) {
      Exps full(e);
      full[static_cast<size_t>(var)] += p;
      r.add_term(std::move(full), cc);
    }
  }
  return r;
}

namespace {

// Leading coefficient (in var) and degree of a nonzero poly.
std::pair<MultiPoly, int> lead_in(const MultiPoly& p, int var) {
  auto uni = p.univariate_in(var);
  auto it = uni.rbegin();
  return {it->second, it->first};
}

// Pseudo-remainder of f by g with respect to var (both nonzero, deg_v(g) >= 0).
MultiPoly prem(MultiPoly f, const MultiPoly& g, int var) {
  auto [gl, gd] = lead_in(g, var);
  while (!f.is_zero()) {
    auto [fl, fd] = lead_in(f, var);
    if (fd < gd) break;
    MultiPoly shift = MultiPoly::var(f.vars(), (*f.vars())[static_cast<size_t>(var)], fd - gd);
    f = f * gl - g * (fl * shift);
  }
  return f;
}

MultiPoly content_in(const MultiPoly& p, int var) {
  MultiPoly c(p.vars());
  for (const auto& [deg, coeff] : p.univariate_in(var)) c = poly_gcd(c, coeff);
  return c;
}

// Dense univariate image of p in `var` with the remaining variables evaluated
// at rational points. Returns false if that changes the degree in var.
bool specialize(const MultiPoly& p, int var, const std::vector<Rational>& point, std::vector<Cyclotomic>& out) {
  int d = p.degree_in(var);
  out.assign(static_cast<size_t>(d) + 1, Cyclotomic());
  for (const auto& [e, c] : p.terms()) {
    Cyclotomic v = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == var || e[i] == 0) continue;
      Rational f = 1;
      for (int k = 0; k < e[i]; ++k) f *= point[i];
      v = v * Cyclotomic(f);
    }
    out[static_cast<size_t>(e[static_cast<size_t>(var)])] = out[static_cast<size_t>(e[static_cast<size_t>(var)])] + v;
  }
  return !out.back().is_zero();
}

int univariate_gcd_degree(std::vector<Cyclotomic> a, std::vector<Cyclotomic> b) {
  auto trim = [](std::vector<Cyclotomic>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size()) {
      Cyclotomic f = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

std::vector<int> effective_vars(const MultiPoly& a, const MultiPoly& b) {
  std::vector<int> vs;
  for (size_t i = 0; i < a.vars()->size(); ++i)
    if (a.degree_in(static_cast<int>(i)) > 0 || b.degree_in(static_cast<int>(i)) > 0) vs.push_back(static_cast<int>(i));
  return vs;
}

// Univariate gcd over the coefficient field, returned as a MultiPoly in `var`.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, int var) {
  std::vector<Rational> dummy(a.vars()->size(), Rational(0));
  std::vector<Cyclotomic> pa, pb;
  specialize(a, var, dummy, pa);  // no other vars present, cannot fail
  specialize(b, var, dummy, pb);
  auto trim = [](std::vector<Cyclotomic>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(pa);
  trim(pb);
  while (!pb.empty()) {
    while (pa.size() >= pb.size()) {
      Cyclotomic f = pa.back() / pb.back();
      size_t shift = pa.size() - pb.size();
      for (size_t i = 0; i < pb.size(); ++i) pa[shift + i] = pa[shift + i] - f * pb[i];
      trim(pa);
      if (pa.empty()) break;
    }
    std::swap(pa, pb);
  }
  MultiPoly g(a.vars());
  for (size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].is_zero()) continue;
    Exps e(a.vars()->size(), 0);
    e[static_cast<size_t>(var)] = static_cast<int>(i);
    g.add_term(std::move(e), pa[i]);
  }
  return g.monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (!same_vars(a.vars(), b.vars())) throw std::domain_error("polynomial variable universe mismatch");
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), Cyclotomic(Rational(1)));
  std::vector<int> vs = effective_vars(a, b);
  if (vs.size() == 1) return univariate_gcd(a, b, vs[0]);
  int var = vs[0];
  MultiPoly ca = content_in(a, var);
  MultiPoly cb = content_in(b, var);
  MultiPoly c = poly_gcd(ca, cb);
  MultiPoly f = a.div_exact(ca);
  MultiPoly g = b.div_exact(cb);
  if (f.degree_in(var) == 0 || g.degree_in(var) == 0) return c.monic();
  // Coprimality probe: if a random specialization of the other variables keeps
  // both leading coefficients and yields a trivial univariate gcd, the true gcd
  // has degree zero in var and so is the content gcd.
  {
    std::vector<Rational> point(a.vars()->size(), Rational(0));
    unsigned long state = 0x9e3779b97f4a7c15ull;
    for (int attempt = 0; attempt < 4; ++attempt) {
      for (size_t i = 0; i < point.size(); ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        point[i] = Rational(static_cast<long>((state >> 33) % 1000) + 1);
      }
      std::vector<Cyclotomic> pf, pg;
      if (!specialize(f, var, point, pf)) continue;
      if (!specialize(g, var, point, pg)) continue;
      if (univariate_gcd_degree(std::move(pf), std::move(pg)) == 0) return c.monic();
      break;
    }
  }
  // primitive PRS
  while (!g.is_zero() && g.degree_in(var) > 0) {
    MultiPoly r = prem(f, g, var);
    f = g;
    if (r.is_zero()) {
      g = r;
    } else {
      g = r.div_exact(content_in(r, var));
    }
  }
  if (!g.is_zero()) return c.monic();  // nonzero remainder of degree 0 in var
  MultiPoly pf = f.div_exact(content_in(f, var));
  return (c * pf).monic();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << "+";
    first = false;
    out << "{" << c.str() << "}";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*" << (*vars_)[i];
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

MultiPoly MultiPoly::parse(const VarSet& vars, const std::string& s) {
  MultiPoly p(vars);
  if (s == "0") return p;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '+') ++pos;
    if (pos >= s.size() || s[pos] != '{') throw std::domain_error("polynomial parse error at " + s.substr(pos));
    size_t close = s.find('}', pos);
    if (close == std::string::npos) throw std::domain_error("polynomial parse error: unterminated coefficient");
    Cyclotomic c = Cyclotomic::parse(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    Exps e(vars->size(), 0);
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && s[pos] != '*' && s[pos] != '^' && s[pos] != '+') ++pos;
      std::string name = s.substr(start, pos - start);
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t pstart = pos;
        while (pos < s.size() && (std::isdigit(s[pos]) || s[pos] == '-')) ++pos;
        power = std::stoi(s.substr(pstart, pos - pstart));
      }
      e[static_cast<size_t>(var_index(vars, name))] += power;
    }
    p.add_term(std::move(e), c);
  }
  return p;
}

}  // namespace noether
