#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "noether/group_action.hpp"

using namespace noether;

namespace {

// D_n on x_0..x_{n-1}: sigma the cyclic shift, tau the index negation. For
// n = 9 the coefficients live in Q(zeta_9) and rho acts on them via
// zeta -> zeta^2; even n stays over Q.
struct RegularAction {
  VarSet vars;
  ActionSpec spec;
  std::vector<RatFunc> xs;

  explicit RegularAction(int n) : vars(make_xvars(n)), spec(vars, n % 2 ? n : 1) {
    for (int i = 0; i < n; ++i) xs.push_back(RatFunc::var(vars, (*vars)[static_cast<size_t>(i)]));
    int ord = spec.cyc_order();
    std::map<std::string, RatFunc> sigma, tau, rho;
    for (int i = 0; i < n; ++i) {
      const std::string& name = (*vars)[static_cast<size_t>(i)];
      sigma.emplace(name, xs[static_cast<size_t>(mod_index(i + 1, n))]);
      tau.emplace(name, xs[static_cast<size_t>(mod_index(-i, n))]);
      rho.emplace(name, xs[static_cast<size_t>(i)]);
    }
    spec.add_generator("sigma", SubstitutionMap(vars, std::move(sigma), GaloisMap(ord, 1)));
    spec.add_generator("tau", SubstitutionMap(vars, std::move(tau), GaloisMap(ord, 1)));
    if (ord > 1) spec.add_generator("rho", SubstitutionMap(vars, std::move(rho), GaloisMap(ord, 2)));
    spec.add_relation(parse_word("sigma^" + std::to_string(n)));
    spec.add_relation(parse_word("tau^2"));
    spec.add_relation(parse_word("tau sigma tau sigma"));
  }

  static VarSet make_xvars(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return make_vars(std::move(names));
  }
};

// D_10 on the span y_0..y_4 over Q(zeta_5), with the sign wrap
// sigma(y_4) = -y_0 and tau(y_i) = -y_{5-i} for i >= 1.
struct SpanAction {
  VarSet vars;
  ActionSpec spec;
  std::vector<RatFunc> ys;

  SpanAction() : vars(make_vars({"y0", "y1", "y2", "y3", "y4"})), spec(vars, 5) {
    for (int i = 0; i < 5; ++i) ys.push_back(RatFunc::var(vars, (*vars)[static_cast<size_t>(i)]));
    std::map<std::string, RatFunc> sigma, tau;
    for (int i = 0; i < 5; ++i) {
      const std::string& name = (*vars)[static_cast<size_t>(i)];
      sigma.emplace(name, i < 4 ? ys[static_cast<size_t>(i + 1)] : -ys[0]);
      tau.emplace(name, i == 0 ? ys[0] : -ys[static_cast<size_t>(5 - i)]);
    }
    spec.add_generator("sigma", SubstitutionMap(vars, std::move(sigma), GaloisMap(5, 1)));
    spec.add_generator("tau", SubstitutionMap(vars, std::move(tau), GaloisMap(5, 1)));
    spec.add_relation(parse_word("sigma^10"));
    spec.add_relation(parse_word("tau^2"));
    spec.add_relation(parse_word("tau sigma tau sigma"));
  }
};

}  // namespace

TEST_CASE("word parsing and printing") {
  Word w = parse_word("tau rho^3");
  CHECK(w == Word{"tau", "rho", "rho", "rho"});
  CHECK(word_str(w) == "tau rho^3");
  CHECK(word_str(Word{}) == "1");
  CHECK(parse_word("sigma").size() == 1);
}

TEST_CASE("presentations pass for the dihedral actions") {
  for (int n : {6, 9, 10}) {
    RegularAction act(n);
    auto reports = act.spec.verify_presentation();
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) CHECK(r.pass);
  }
  // rho commutes with sigma and tau and has order 6 when n = 9
  RegularAction d9(9);
  CHECK(d9.spec.word_map(parse_word("rho^6")).is_identity());
  CHECK(d9.spec.word_map(parse_word("rho sigma rho^5 sigma^8")).is_identity());
  CHECK(d9.spec.word_map(parse_word("rho tau rho^5 tau")).is_identity());
}

TEST_CASE("sign tracking on the half-span for n = 10") {
  SpanAction act;
  auto reports = act.spec.verify_presentation();
  for (const auto& r : reports) CHECK(r.pass);
  // sigma^5 is -1 on the span, not the identity
  SubstitutionMap s5 = act.spec.word_map(parse_word("sigma^5"));
  CHECK(!s5.is_identity());
  for (int i = 0; i < 5; ++i) CHECK(s5.image((*act.vars)[static_cast<size_t>(i)]) == -act.ys[static_cast<size_t>(i)]);
  CHECK(act.spec.enumerate_group().size() == 20);
}

TEST_CASE("dft variables and their action table") {
  RegularAction act(9);
  std::vector<RatFunc> ys = dft_change(9, act.vars);
  REQUIRE(ys.size() == 9);
  Cyclotomic one = Cyclotomic::one(9);

  // sigma(y_i) = zeta^i y_i, rho(y_i) = y_{2i}, tau(y_i) = y_{-i}
  for (int i = 0; i < 9; ++i) {
    CHECK(act.spec.check_semi_invariant("sigma", ys[static_cast<size_t>(i)], Cyclotomic::zeta_pow(9, i),
                                        ys[static_cast<size_t>(i)]));
    CHECK(act.spec.check_semi_invariant("rho", ys[static_cast<size_t>(i)], one,
                                        ys[static_cast<size_t>(mod_index(2 * i, 9))]));
    CHECK(act.spec.check_semi_invariant("tau", ys[static_cast<size_t>(i)], one,
                                        ys[static_cast<size_t>(mod_index(-i, 9))]));
    // the composite tau rho^3 fixes every y_i
    CHECK(act.spec.apply_word("tau rho^3", ys[static_cast<size_t>(i)]) == ys[static_cast<size_t>(i)]);
  }
}

TEST_CASE("dft inversion roundtrip") {
  RegularAction act(9);
  std::vector<RatFunc> ys = dft_change(9, act.vars);
  VarSet yvars = make_vars({"y0", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"});
  std::vector<RatFunc> xs = dft_inverse(9, yvars);
  std::map<std::string, RatFunc> imgs;
  for (int i = 0; i < 9; ++i) imgs.emplace((*yvars)[static_cast<size_t>(i)], ys[static_cast<size_t>(i)]);
  SubstitutionMap plug(yvars, std::move(imgs), GaloisMap(9, 1));
  for (int j = 0; j < 9; ++j) CHECK(plug(xs[static_cast<size_t>(j)]) == act.xs[static_cast<size_t>(j)]);
}

TEST_CASE("one-variable base case") {
  VarSet xv = make_vars({"x0"});
  std::vector<RatFunc> ys = dft_change(1, xv);
  REQUIRE(ys.size() == 1);
  CHECK(ys[0] == RatFunc::var(xv, "x0"));
}

TEST_CASE("apply_word respects concatenation") {
  RegularAction act(9);
  std::vector<RatFunc> ys = dft_change(9, act.vars);
  RatFunc f = ys[2] / ys[1] + act.xs[0];
  CHECK(act.spec.apply_word("tau rho^3", f) == act.spec.apply_word("tau", act.spec.apply_word("rho^3", f)));
  CHECK(act.spec.apply_word("", f) == f);
}

TEST_CASE("operator polynomials build the semi-invariants z_i") {
  SpanAction act;
  auto build_z = [&](int i) {
    RatFunc z = act.ys[0];
    for (int j = 0; j < 5; ++j)
      if (j != i) z = apply_shifted_generator(act.spec, "sigma", Cyclotomic::zeta_pow(5, j), z);
    return z;
  };
  RatFunc z1 = build_z(1);
  RatFunc z4 = build_z(4);
  CHECK(!z1.is_zero());

  // sigma(z_i) = -zeta^i z_i and tau(z_i) = zeta^{-2i} z_{-i}
  CHECK(act.spec.check_semi_invariant("sigma", z1, -Cyclotomic::zeta(5), z1));
  CHECK(act.spec.check_semi_invariant("sigma", z4, -Cyclotomic::zeta_pow(5, 4), z4));
  CHECK(act.spec.check_semi_invariant("tau", z1, Cyclotomic::zeta_pow(5, -2), z4));
  CHECK(act.spec.check_semi_invariant("tau", z4, Cyclotomic::zeta_pow(5, -8), z1));

  // expanding prod_{j != 1}(T + zeta^j) and applying it as an operator
  // polynomial gives the same element
  std::vector<Cyclotomic> coeffs{Cyclotomic::one(5)};
  for (int j : {0, 2, 3, 4}) {
    std::vector<Cyclotomic> next(coeffs.size() + 1, Cyclotomic::zero(5));
    for (size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] = next[k + 1] + coeffs[k];
      next[k] = next[k] + coeffs[k] * Cyclotomic::zeta_pow(5, j);
    }
    coeffs = std::move(next);
  }
  CHECK(operator_poly_apply(act.spec, "sigma", coeffs, act.ys[0]) == z1);

  // degenerate operator: coefficient 1 on sigma^0
  CHECK(operator_poly_apply(act.spec, "sigma", {Cyclotomic::one(5)}, z1) == z1);
}

TEST_CASE("failure reporting") {
  VarSet v = make_vars({"x"});
  ActionSpec spec(v, 1);
  std::map<std::string, RatFunc> sq;
  sq.emplace("x", -RatFunc::var(v, "x"));
  spec.add_generator("neg", SubstitutionMap(v, std::move(sq)));
  spec.add_relation(parse_word("neg"));
  spec.add_relation(parse_word("neg^2"));
  auto reports = spec.verify_presentation();
  REQUIRE(reports.size() == 2);
  CHECK(!reports[0].pass);
  CHECK(reports[1].pass);
  CHECK_THROWS(spec.generator("missing"));
}
