#include "noether/descent.hpp"

#include <algorithm>
#include <set>

namespace noether {

int rand_range(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

constexpr int kRetryCap = 64;

Cyclotomic rand_cyc(std::mt19937_64& rng, int order) {
  std::vector<Rational> cs(static_cast<size_t>(Cyclotomic::phi(order)));
  for (auto& c : cs) c = Rational(rand_range(rng, -4, 4));
  return Cyclotomic(order, std::move(cs));
}

// Splits `img` as sum_k A_k * fibre_k + B with A_k, B free of the fibre vars.
void split_affine(const RatFunc& img, const std::vector<int>& fibre_idx, std::vector<RatFunc>& arow,
                  RatFunc& b) {
  const VarSet& vars = img.vars();
  for (int fi : fibre_idx)
    if (img.den().degree_in(fi) > 0) throw std::domain_error("action is not affine: fibre variable in denominator");
  std::vector<MultiPoly> anum(fibre_idx.size(), MultiPoly(vars));
  MultiPoly bnum(vars);
  for (const auto& [e, c] : img.num().terms()) {
    int total = 0;
    int which = -1;
    for (size_t k = 0; k < fibre_idx.size(); ++k) {
      int d = e[static_cast<size_t>(fibre_idx[k])];
      total += d;
      if (d > 0) which = static_cast<int>(k);
    }
    if (total > 1) throw std::domain_error("action is not affine: fibre degree exceeds one");
    if (total == 0) {
      bnum.add_term(e, c);
    } else {
      Exps stripped = e;
      stripped[static_cast<size_t>(fibre_idx[static_cast<size_t>(which)])] = 0;
      anum[static_cast<size_t>(which)].add_term(std::move(stripped), c);
    }
  }
  arow.clear();
  for (auto& p : anum) arow.push_back(p.is_zero() ? RatFunc::constant(vars, Rational(0)) : RatFunc(std::move(p), img.den()));
  b = bnum.is_zero() ? RatFunc::constant(vars, Rational(0)) : RatFunc(std::move(bnum), img.den());
}

using Mat = std::vector<std::vector<RatFunc>>;

// g applied entrywise.
Mat apply_mat(const SubstitutionMap& g, const Mat& m) {
  Mat r = m;
  for (auto& row : r)
    for (auto& entry : row) entry = g(entry);
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), p = b[0].size(), mid = b.size();
  const VarSet& vars = a[0][0].vars();
  Mat r(n, std::vector<RatFunc>(p, RatFunc::constant(vars, Rational(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < mid; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < p; ++j)
        if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

// Gauss-Jordan inverse; empty result when singular.
Mat mat_inverse(Mat m) {
  size_t n = m.size();
  const VarSet& vars = m[0][0].vars();
  Mat inv(n, std::vector<RatFunc>(n, RatFunc::constant(vars, Rational(0))));
  for (size_t i = 0; i < n; ++i) inv[i][i] = RatFunc::constant(vars, Rational(1));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return {};
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc d = m[col][col].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * d;
      inv[col][j] = inv[col][j] * d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatFunc f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

size_t find_element(const std::vector<SubstitutionMap>& group, const SubstitutionMap& g) {
  std::string key = g.str();
  for (size_t i = 0; i < group.size(); ++i)
    if (group[i].str() == key) return i;
  throw std::domain_error("group not closed under composition");
}

}  // namespace

AffineCocycle extract_affine(const ActionSpec& spec, const std::vector<std::string>& fibre) {
  AffineCocycle c;
  c.vars = spec.vars();
  c.fibre = fibre;
  c.group = spec.enumerate_group();
  std::vector<int> fibre_idx;
  for (const auto& name : fibre) fibre_idx.push_back(var_index(c.vars, name));
  for (const auto& g : c.group) {
    Mat a(fibre.size());
    std::vector<RatFunc> b(fibre.size());
    for (size_t j = 0; j < fibre.size(); ++j) split_affine(g.image(fibre[j]), fibre_idx, a[j], b[j]);
    c.A.push_back(std::move(a));
    c.B.push_back(std::move(b));
  }
  // composition laws on all pairs: gh applies h first
  c.law_ok = true;
  for (size_t gi = 0; gi < c.group.size() && c.law_ok; ++gi) {
    for (size_t hi = 0; hi < c.group.size() && c.law_ok; ++hi) {
      size_t ci = find_element(c.group, c.group[gi].after(c.group[hi]));
      Mat gAh = apply_mat(c.group[gi], c.A[hi]);
      Mat lhsA = mat_mul(gAh, c.A[gi]);
      for (size_t r = 0; r < fibre.size() && c.law_ok; ++r) {
        RatFunc lhsB = c.group[gi](c.B[hi][r]);
        for (size_t k = 0; k < fibre.size(); ++k) {
          lhsB = lhsB + gAh[r][k] * c.B[gi][k];
          if (!(lhsA[r][k] == c.A[ci][r][k])) c.law_ok = false;
        }
        if (!(lhsB == c.B[ci][r])) c.law_ok = false;
      }
    }
  }
  if (!c.law_ok) throw std::domain_error("affine cocycle law violated; action tables inconsistent");
  return c;
}

LineCocycle extract_line(const ActionSpec& spec, const std::string& fibre) {
  AffineCocycle a = extract_affine(spec, {fibre});
  LineCocycle c;
  c.vars = a.vars;
  c.fibre = fibre;
  c.group = std::move(a.group);
  for (size_t i = 0; i < c.group.size(); ++i) {
    if (a.A[i][0][0].is_zero()) throw std::domain_error("line cocycle has vanishing multiplier");
    c.a.push_back(a.A[i][0][0]);
    c.b.push_back(a.B[i][0]);
  }
  c.law_ok = a.law_ok;
  return c;
}

AffineDescent trivialize_affine(const AffineCocycle& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  size_t m = c.fibre.size();
  int order = c.group[0].coeff_map.order;
  const VarSet& vars = c.vars;
  AffineDescent out;
  Mat p, pinv;
  for (out.cert.retries = 0; out.cert.retries < kRetryCap; ++out.cert.retries) {
    Mat cc(m, std::vector<RatFunc>(m, RatFunc::constant(vars, Rational(0))));
    for (auto& row : cc)
      for (auto& entry : row) entry = RatFunc::constant(vars, rand_cyc(rng, order));
    p = Mat(m, std::vector<RatFunc>(m, RatFunc::constant(vars, Rational(0))));
    for (size_t gi = 0; gi < c.group.size(); ++gi) {
      Mat term = mat_mul(apply_mat(c.group[gi], cc), c.A[gi]);
      for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k < m; ++k) p[r][k] = p[r][k] + term[r][k];
    }
    pinv = mat_inverse(p);
    if (!pinv.empty()) break;
  }
  if (pinv.empty()) throw std::domain_error("trivialize_affine: singular after retry cap; action not faithful?");

  // linear part z' = Px, then cancel the additive cocycle by averaging
  std::vector<RatFunc> zlin(m, RatFunc::constant(vars, Rational(0)));
  for (size_t r = 0; r < m; ++r)
    for (size_t k = 0; k < m; ++k) zlin[r] = zlin[r] + p[r][k] * RatFunc::var(vars, c.fibre[k]);
  std::vector<RatFunc> shift(m, RatFunc::constant(vars, Rational(0)));
  for (const auto& g : c.group)
    for (size_t r = 0; r < m; ++r) shift[r] = shift[r] + (g(zlin[r]) - zlin[r]);
  Rational inv_n(Int(1), Int(static_cast<long>(c.group.size())));
  for (size_t r = 0; r < m; ++r) {
    shift[r] = RatFunc::constant(vars, inv_n) * shift[r];
    out.invariants.push_back(zlin[r] + shift[r]);
  }

  out.cert.invariance_ok = true;
  for (const auto& g : c.group)
    for (const auto& z : out.invariants)
      if (!(g(z) == z)) out.cert.invariance_ok = false;

  // forward: fibre var -> invariant; inverse: x = P^{-1}(z - e)
  std::map<std::string, RatFunc> fwd, bwd;
  for (const auto& name : *vars) {
    fwd.emplace(name, RatFunc::var(vars, name));
    bwd.emplace(name, RatFunc::var(vars, name));
  }
  for (size_t r = 0; r < m; ++r) fwd[c.fibre[r]] = out.invariants[r];
  for (size_t r = 0; r < m; ++r) {
    RatFunc x = RatFunc::constant(vars, Rational(0));
    for (size_t k = 0; k < m; ++k) x = x + pinv[r][k] * (RatFunc::var(vars, c.fibre[k]) - shift[k]);
    bwd[c.fibre[r]] = x;
  }
  int ord = c.group[0].coeff_map.order;
  out.forward = SubstitutionMap(vars, std::move(fwd), GaloisMap(ord, 1));
  out.inverse = SubstitutionMap(vars, std::move(bwd), GaloisMap(ord, 1));
  out.cert.roundtrip_ok = roundtrip_check(out.forward, out.inverse);
  return out;
}

LineDescent line_descent(const LineCocycle& lc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const VarSet& vars = lc.vars;
  int order = lc.group[0].coeff_map.order;
  LineDescent out;
  RatFunc x = RatFunc::var(vars, lc.fibre);
  RatFunc one = RatFunc::constant(vars, Rational(1));

  auto trivial_on_base = [&](const SubstitutionMap& g) {
    if (!g.coeff_map.is_identity()) return false;
    for (const auto& name : *vars) {
      if (name == lc.fibre) continue;
      if (!(g.image(name) == RatFunc::var(vars, name))) return false;
    }
    return true;
  };
  auto element_order = [&](const SubstitutionMap& g) {
    SubstitutionMap cur = g;
    int o = 1;
    while (!cur.is_identity()) {
      cur = g.after(cur);
      if (++o > static_cast<int>(lc.group.size())) throw std::domain_error("group order overflow");
    }
    return o;
  };

  std::vector<size_t> kernel;
  for (size_t i = 0; i < lc.group.size(); ++i)
    if (trivial_on_base(lc.group[i])) kernel.push_back(i);
  int r = static_cast<int>(kernel.size());
  out.kernel_order = r;

  RatFunc p = RatFunc::constant(vars, Rational(0));
  if (r > 1) {
    size_t gen_idx = lc.group.size();
    for (size_t i : kernel)
      if (element_order(lc.group[i]) == r) gen_idx = i;
    if (gen_idx == lc.group.size()) throw std::domain_error("kernel of base action is not cyclic");
    const RatFunc& a0 = lc.a[gen_idx];
    if (a0 == one) throw std::domain_error("kernel generator is a nontrivial translation");
    p = lc.b[gen_idx] / (one - a0);
  }
  RatFunc X = (x - p).pow(r);
  for (size_t i : kernel)
    if (!(lc.group[i](X) == X)) throw std::domain_error("kernel invariant not fixed by the kernel");

  // coset representatives: first element realizing each action on the base
  std::vector<size_t> reps;
  std::set<std::string> rep_keys;
  for (size_t i = 0; i < lc.group.size(); ++i) {
    std::string key = std::to_string(lc.group[i].coeff_map.exponent);
    for (const auto& name : *vars)
      if (name != lc.fibre) key += "|" + lc.group[i].image(name).str();
    if (rep_keys.insert(key).second) reps.push_back(i);
  }

  // the quotient cocycle on X: g(X) = alpha_g X + beta_g
  SubstitutionMap eval_p = SubstitutionMap::identity(vars, order);
  eval_p.images[lc.fibre] = p;
  std::vector<RatFunc> alpha, beta;
  for (size_t i : reps) {
    RatFunc gX = lc.group[i](X);
    RatFunc b = eval_p(gX);
    RatFunc a = (gX - b) / X;
    if (a.is_zero()) throw std::domain_error("quotient multiplier vanished");
    alpha.push_back(std::move(a));
    beta.push_back(std::move(b));
  }

  for (out.cert.retries = 0; out.cert.retries < kRetryCap; ++out.cert.retries) {
    // random d: a cyclotomic constant plus a few Laurent monomials in the
    // base variables (low-degree draws can all lie in the twisted-trace kernel)
    RatFunc d = RatFunc::constant(vars, rand_cyc(rng, order));
    for (int t = 0; t < out.cert.retries; ++t) {
      RatFunc term = RatFunc::constant(vars, rand_cyc(rng, order));
      for (const auto& name : *vars) {
        if (name == lc.fibre) continue;
        int e = rand_range(rng, -2, 2);
        if (e != 0) term = term * RatFunc::var(vars, name).pow(e);
      }
      d = d + term;
    }
    RatFunc c = RatFunc::constant(vars, Rational(0));
    for (size_t k = 0; k < reps.size(); ++k) c = c + alpha[k] * lc.group[reps[k]](d);
    if (c.is_zero()) continue;
    out.c = c;
    break;
  }
  if (out.c.is_zero()) throw std::domain_error("line_descent: trivializer vanished for all retries");

  out.hilbert90_ok = true;
  for (size_t k = 0; k < reps.size(); ++k)
    if (!(lc.group[reps[k]](out.c) == out.c / alpha[k])) out.hilbert90_ok = false;

  RatFunc xt = out.c * X;
  RatFunc e = RatFunc::constant(vars, Rational(0));
  for (size_t i : reps) e = e + (lc.group[i](xt) - xt);
  e = RatFunc::constant(vars, Rational(Int(1), Int(static_cast<long>(reps.size())))) * e;
  out.e = e;
  out.base_point = p;
  out.invariant = xt + e;

  out.cert.invariance_ok = true;
  for (const auto& g : lc.group)
    if (!(g(out.invariant) == out.invariant)) out.cert.invariance_ok = false;

  if (r == 1) {
    std::map<std::string, RatFunc> fwd, bwd;
    for (const auto& name : *vars) {
      fwd.emplace(name, RatFunc::var(vars, name));
      bwd.emplace(name, RatFunc::var(vars, name));
    }
    fwd[lc.fibre] = out.invariant;
    bwd[lc.fibre] = (x - out.e) / out.c + p;
    out.forward = SubstitutionMap(vars, std::move(fwd), GaloisMap(order, 1));
    out.inverse = SubstitutionMap(vars, std::move(bwd), GaloisMap(order, 1));
    out.cert.roundtrip_ok = roundtrip_check(out.forward, out.inverse);
  } else {
    // the fibre variable has degree r over the invariant's field; certify via
    // its orbit polynomial over the kernel. The coefficients are recovered
    // exactly: the polynomial is (T - p)^r - X with X = (invariant - e)/c, and
    // p, e, c lie in the base field, so every coefficient is an explicit
    // rational expression in the invariant and the base variables.
    std::vector<SubstitutionMap> kmaps;
    for (size_t i : kernel) kmaps.push_back(lc.group[i]);
    std::vector<RatFunc> mp = orbit_min_poly(x, kmaps);
    RatFunc xrec = (out.invariant - out.e) / out.c;
    out.minpoly_ok = static_cast<int>(mp.size()) == r + 1;
    Rational binom(1);
    for (int k = 0; k <= r && out.minpoly_ok; ++k) {
      // binom = C(r, k); coefficient of T^k in (T - p)^r is C(r, k) (-p)^{r-k}
      RatFunc expect = RatFunc::constant(vars, binom) * (-p).pow(r - k);
      if (k == 0) expect = expect - xrec;
      if (!(mp[static_cast<size_t>(k)] == expect)) out.minpoly_ok = false;
      binom = binom * Rational(Int(r - k)) / Rational(Int(k + 1));
    }
  }
  return out;
}

InvolutionUV involution_uv(const VarSet& vars, const std::string& xname, const std::string& yname,
                           const RatFunc& a, const RatFunc& b, int ansatz_cap,
                           const std::vector<std::string>& params) {
  InvolutionUV out;
  RatFunc x = RatFunc::var(vars, xname);
  RatFunc y = RatFunc::var(vars, yname);
  RatFunc denom = x * y - a * b / (x * y);
  if (denom.is_zero()) throw std::domain_error("involution_uv: degenerate a, b");
  out.u = (x - a / x) / denom;
  out.v = (y - b / y) / denom;

  std::map<std::string, RatFunc> imgs;
  for (const auto& name : *vars) imgs.emplace(name, RatFunc::var(vars, name));
  imgs[xname] = a / x;
  imgs[yname] = b / y;
  out.sigma = SubstitutionMap(vars, std::move(imgs), GaloisMap());
  out.invariance_ok = out.sigma(out.u) == out.u && out.sigma(out.v) == out.v &&
                      roundtrip_check(out.sigma, out.sigma);

  std::vector<std::pair<std::string, RatFunc>> gens{{"u", out.u}, {"v", out.v}};
  for (const auto& p : params) gens.emplace_back(p, RatFunc::var(vars, p));
  std::vector<SubstitutionMap> grp{SubstitutionMap::identity(vars), out.sigma};
  std::vector<RatFunc> mp = orbit_min_poly(x, grp);
  out.minpoly_ok = true;
  for (size_t k = 0; k + 1 < mp.size(); ++k) {
    AnsatzExpr e = ansatz_membership_escalating(mp[k], gens, ansatz_cap);
    if (!e.found) out.minpoly_ok = false;
    out.minpoly_exprs.push_back(std::move(e));
  }
  auto ygens = gens;
  ygens.emplace_back(xname, x);
  out.y_expr = ansatz_membership_escalating(y, ygens, ansatz_cap);
  out.y_ok = out.y_expr.found;
  return out;
}

bool verify_identity_1() {
  VarSet vars = make_vars({"a", "b", "x", "y"});
  RatFunc a = RatFunc::var(vars, "a"), b = RatFunc::var(vars, "b");
  RatFunc x = RatFunc::var(vars, "x"), y = RatFunc::var(vars, "y");
  RatFunc denom = x * y - a * b / (x * y);
  RatFunc u = (x - a / x) / denom;
  RatFunc v = (y - b / y) / denom;
  RatFunc lhs = (x - a / x) / (a * y / x - b * x / y);
  RatFunc rhs = -u / (b * u * u - a * v * v);
  return lhs == rhs;
}

bool identity1_specializations(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int done = 0, attempts = 0;
  while (done < count) {
    if (++attempts > 100 * count) return false;  // pathological pool
    auto draw = [&]() {
      Rational r(Int(rand_range(rng, -50, 50)), Int(rand_range(rng, 1, 12)));
      return r;
    };
    Rational a = draw(), b = draw(), x = draw(), y = draw();
    if (a == 0 || b == 0 || x == 0 || y == 0) continue;
    Rational xy = x * y;
    Rational denom = xy - a * b / xy;
    if (denom == 0) continue;
    Rational u = (x - a / x) / denom;
    Rational v = (y - b / y) / denom;
    Rational lden = a * y / x - b * x / y;
    Rational rden = b * u * u - a * v * v;
    if (lden == 0 || rden == 0) continue;
    Rational lhs = (x - a / x) / lden;
    Rational rhs = -u / rden;
    if (!(lhs == rhs)) return false;
    ++done;
  }
  return true;
}

TwoVarInvariants monomial_fixed_2var(const ActionSpec& spec, const std::string& x1,
                                     const std::string& x2, int bound, int ansatz_cap) {
  TwoVarInvariants out;
  const VarSet& vars = spec.vars();
  std::vector<SubstitutionMap> group = spec.enumerate_group();
  out.group_order = group.size();
  RatFunc x1v = RatFunc::var(vars, x1), x2v = RatFunc::var(vars, x2);
  out.minpoly_coeffs = orbit_min_poly(x1v, group);

  // invariant candidates: sums over the distinct orbit of each monomial
  std::vector<RatFunc> candidates;
  std::set<std::string> cand_keys;
  auto add_candidate = [&](int i, int j) {
    RatFunc mono = x1v.pow(i) * x2v.pow(j);
    std::set<std::string> orbit_keys;
    RatFunc sum = RatFunc::constant(vars, Rational(0));
    for (const auto& g : group) {
      RatFunc img = g(mono);
      if (orbit_keys.insert(img.str()).second) sum = sum + img;
    }
    if (sum.is_constant()) return;
    for (const auto& g : group)
      if (!(g(sum) == sum)) return;
    if (cand_keys.insert(sum.str()).second) candidates.push_back(std::move(sum));
  };
  // shell by shell, scanning exponents in the order 0, 1, -1, 2, -2, ... so
  // the simplest witnesses come first
  std::vector<int> scan{0};
  for (int s = 1; s <= bound; ++s) {
    scan.push_back(s);
    scan.push_back(-s);
  }
  for (int s = 1; s <= bound; ++s)
    for (int i : scan)
      for (int j : scan)
        if (std::max(std::abs(i), std::abs(j)) == s) add_candidate(i, j);
  if (group.size() == 1) {
    // trivial action: the variables themselves are invariant generators
    candidates.insert(candidates.begin(), {x1v, x2v});
  }

  for (int cap = 2; cap <= ansatz_cap; cap *= 2) {
    for (size_t p = 0; p < candidates.size(); ++p) {
      for (size_t q = p + 1; q < candidates.size(); ++q) {
        std::vector<std::pair<std::string, RatFunc>> gens{{"f", candidates[p]}, {"g", candidates[q]}};
        std::vector<AnsatzExpr> coeff_exprs;
        bool all = true;
        for (size_t k = 0; k + 1 < out.minpoly_coeffs.size() && all; ++k) {
          AnsatzExpr e = ansatz_membership_escalating(out.minpoly_coeffs[k], gens, cap);
          if (!e.found) all = false;
          coeff_exprs.push_back(std::move(e));
        }
        if (!all) continue;
        auto xgens = gens;
        xgens.emplace_back(x1, x1v);
        AnsatzExpr ye = ansatz_membership_escalating(x2v, xgens, cap);
        if (!ye.found) continue;
        out.found = true;
        out.f = candidates[p];
        out.g = candidates[q];
        out.coeff_exprs = std::move(coeff_exprs);
        out.x2_expr = std::move(ye);
        return out;
      }
    }
  }
  return out;
}

}  // namespace noether
