#include "noether/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace noether {

namespace {

// phi(n) and the rewrite of T^phi(n) mod Phi_n for the supported orders.
struct OrderInfo {
  int n;
  int phi;
  // T^phi = sum_i top[i] * T^i  (length phi)
  std::vector<long> top;
};

const OrderInfo* order_info(int n) {
  static const std::vector<OrderInfo> table = {
      {1, 1, {1}},                        // Phi_1 = T - 1
      {2, 1, {-1}},                       // Phi_2 = T + 1
      {3, 2, {-1, -1}},                   // Phi_3 = T^2 + T + 1
      {5, 4, {-1, -1, -1, -1}},           // Phi_5 = T^4 + ... + 1
      {9, 6, {-1, 0, 0, -1, 0, 0}},       // Phi_9 = T^6 + T^3 + 1
  };
  for (const auto& e : table)
    if (e.n == n) return &e;
  return nullptr;
}

}  // namespace

GaloisMap::GaloisMap(int n, int k) : order(n) {
  if (!Cyclotomic::order_supported(n)) throw std::domain_error("unsupported cyclotomic order " + std::to_string(n));
  k %= n;
  if (k < 0) k += n;
  if (n == 1) k = 1;
  if (k == 0 || std::gcd(k, n) != 1)
    throw std::domain_error("galois exponent " + std::to_string(k) + " not coprime to " + std::to_string(n));
  exponent = k;
}

GaloisMap GaloisMap::compose(const GaloisMap& other) const {
  if (order != other.order) {
    if (order == 1) return other;
    if (other.order == 1) return *this;
    throw std::domain_error("galois map order mismatch");
  }
  return GaloisMap(order, (exponent * other.exponent) % order);
}

GaloisMap GaloisMap::inverse() const {
  for (int j = 1; j < order; ++j)
    if ((exponent * j) % order == 1) return GaloisMap(order, j);
  return GaloisMap(1, 1);
}

bool Cyclotomic::order_supported(int n) { return order_info(n) != nullptr; }

int Cyclotomic::phi(int n) {
  const OrderInfo* info = order_info(n);
  if (!info) throw std::domain_error("unsupported cyclotomic order " + std::to_string(n));
  return info->phi;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> raw) : order_(order) {
  const OrderInfo* info = order_info(order);
  if (!info) throw std::domain_error("unsupported cyclotomic order " + std::to_string(order));
  // Reduce powers >= phi using T^phi = top, repeatedly.
  while (static_cast<int>(raw.size()) > info->phi) {
    Rational c = raw.back();
    raw.pop_back();
    if (c == 0) continue;
    size_t base = raw.size() - info->phi;  // T^(raw.size()) = T^base * T^phi
    for (int i = 0; i < info->phi; ++i)
      if (info->top[i] != 0) raw[base + i] += c * info->top[i];
  }
  raw.resize(info->phi, Rational(0));
  coeffs_ = std::move(raw);
}

Cyclotomic Cyclotomic::zero(int order) { return Cyclotomic(order, {}); }

Cyclotomic Cyclotomic::one(int order) { return Cyclotomic(order, {Rational(1)}); }

Cyclotomic Cyclotomic::zeta(int order) { return zeta_pow(order, 1); }

Cyclotomic Cyclotomic::zeta_pow(int order, long e) {
  e %= order;
  if (e < 0) e += order;
  std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
  raw[static_cast<size_t>(e)] = 1;
  return Cyclotomic(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int order) const {
  if (order_ == order) return *this;
  if (order_ != 1) throw std::domain_error("cyclotomic order mismatch");
  return Cyclotomic(order, {coeffs_[0]});
}

std::pair<int, int> Cyclotomic::match_orders(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return {a.order_, a.order_};
  if (a.order_ == 1) return {b.order_, b.order_};
  if (b.order_ == 1) return {a.order_, a.order_};
  throw std::domain_error("cyclotomic order mismatch: " + std::to_string(a.order_) + " vs " + std::to_string(b.order_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int n = match_orders(*this, o).first;
  Cyclotomic a = promoted(n), b = o.promoted(n);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int n = match_orders(*this, o).first;
  Cyclotomic a = promoted(n), b = o.promoted(n);
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic(n, std::move(raw));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

namespace {

using Poly = std::vector<Rational>;  // dense, ascending powers

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  const OrderInfo* info = order_info(order_);
  // Phi_n as a dense polynomial: T^phi - top.
  Poly phi_poly(static_cast<size_t>(info->phi) + 1, Rational(0));
  phi_poly[static_cast<size_t>(info->phi)] = 1;
  for (int i = 0; i < info->phi; ++i) phi_poly[static_cast<size_t>(i)] -= Rational(info->top[i]);
  // Extended Euclid: s*a + t*Phi = gcd = const.
  Poly r0 = phi_poly, r1 = coeffs_;
  trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};  // coefficients of `a`
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r1.empty()) throw std::domain_error("cyclotomic inverse: element not invertible");
  // r1 is a nonzero constant: s1 * a == r1 mod Phi.
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return Cyclotomic(order_, std::move(s1));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    if (order_ == 1 || o.order_ == 1) {
      int n = std::max(order_, o.order_);
      return promoted(n).coeffs_ == o.promoted(n).coeffs_;
    }
    return false;
  }
  return coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::galois(const GaloisMap& g) const {
  if (order_ == 1) return *this;
  if (g.order == 1) return *this;
  if (g.order != order_) throw std::domain_error("galois map order mismatch");
  std::vector<Rational> raw(static_cast<size_t>(order_), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    raw[(i * static_cast<size_t>(g.exponent)) % static_cast<size_t>(order_)] += coeffs_[i];
  }
  return Cyclotomic(order_, std::move(raw));
}

std::string Cyclotomic::str() const {
  // rational values print identically at every order, so equal elements
  // render equally even when one side was promoted by arithmetic
  bool rational = true;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == 0)) rational = false;
  if (order_ == 1 || rational) return coeffs_[0].str();
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        out << "-";
        a = -a;
      } else {
        out << "+";
      }
    }
    out << a.str();
    if (i >= 1) {
      out << "*z";
      if (i >= 2) out << "^" << i;
    }
  }
  if (first) out << "0";
  out << "@" << order_;
  return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
  int order = 1;
  std::string body = s;
  auto at = s.rfind('@');
  if (at != std::string::npos) {
    order = std::stoi(s.substr(at + 1));
    body = s.substr(0, at);
  }
  std::vector<Rational> raw(static_cast<size_t>(order), Rational(0));
  size_t pos = 0;
  bool any = false;
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+') {
      ++pos;
    } else if (body[pos] == '-') {
      sign = -1;
      ++pos;
    }
    size_t start = pos;
    while (pos < body.size() && body[pos] != '+' && body[pos] != '-') ++pos;
    std::string term = body.substr(start, pos - start);
    if (term.empty()) throw std::domain_error("cyclotomic parse error: " + s);
    std::string coeff = term;
    long power = 0;
    auto star = term.find("*z");
    if (star != std::string::npos) {
      coeff = term.substr(0, star);
      std::string zp = term.substr(star + 2);
      power = zp.empty() ? 1 : (zp[0] == '^' ? std::stol(zp.substr(1)) : 1);
    } else if (term == "z" || term.rfind("z^", 0) == 0) {
      coeff = "1";
      power = term == "z" ? 1 : std::stol(term.substr(2));
    }
    power %= order;
    if (power < 0) power += order;
    if (raw.empty()) raw.resize(1, Rational(0));
    if (static_cast<size_t>(power) >= raw.size()) raw.resize(static_cast<size_t>(power) + 1, Rational(0));
    raw[static_cast<size_t>(power)] += Rational(sign) * parse_rational(coeff);
    any = true;
  }
  if (!any) raw.assign(std::max<size_t>(1, raw.size()), Rational(0));
  return Cyclotomic(order, std::move(raw));
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& c) { return Cyclotomic(r) * c; }

Cyclotomic sqrt5_element() {
  return Cyclotomic::one(5) + Rational(2) * Cyclotomic::zeta_pow(5, 1) + Rational(2) * Cyclotomic::zeta_pow(5, 4);
}

Cyclotomic eta_element(int order) {
  return Cyclotomic::zeta_pow(order, 1) + Cyclotomic::zeta_pow(order, -1);
}

}  // namespace noether
