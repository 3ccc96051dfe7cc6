#include "noether/ansatz.hpp"

#include <algorithm>

namespace noether {

namespace {

void enumerate_monomials(int nvars, int bound, Exps& cur, int pos, int used, std::vector<Exps>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= bound; ++e) {
    cur[static_cast<size_t>(pos)] = e;
    enumerate_monomials(nvars, bound, cur, pos + 1, used + e, out);
  }
  cur[static_cast<size_t>(pos)] = 0;
}

// Nullspace basis of the homogeneous system rows * x = 0 over the cyclotomic field.
std::vector<std::vector<Cyclotomic>> nullspace(std::vector<std::vector<Cyclotomic>> rows, size_t cols) {
  std::vector<int> pivot_of_col(cols, -1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Cyclotomic inv = rows[rank][col].inverse();
    for (size_t c = col; c < cols; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Cyclotomic f = rows[r][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<std::vector<Cyclotomic>> basis;
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] != -1) continue;
    std::vector<Cyclotomic> v(cols, Cyclotomic());
    v[col] = Cyclotomic(Rational(1));
    for (size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] == -1) continue;
      v[c] = -rows[static_cast<size_t>(pivot_of_col[c])][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RatFunc ansatz_evaluate(const AnsatzExpr& e, const std::vector<std::pair<std::string, RatFunc>>& gens) {
  std::map<std::string, RatFunc> imgs;
  for (const auto& [name, g] : gens) imgs.emplace(name, g);
  SubstitutionMap m(e.gen_vars, std::move(imgs));
  return substitute(e.expr, m);
}

AnsatzExpr ansatz_membership(const RatFunc& target,
                             const std::vector<std::pair<std::string, RatFunc>>& gens,
                             int degree_bound) {
  AnsatzExpr result;
  std::vector<std::string> names;
  for (const auto& [name, g] : gens) names.push_back(name);
  result.gen_vars = make_vars(names);
  if (degree_bound < 0) return result;

  const VarSet& ambient = target.vars();
  int nvars = static_cast<int>(gens.size());
  std::vector<Exps> monos;
  Exps cur(static_cast<size_t>(nvars), 0);
  enumerate_monomials(nvars, degree_bound, cur, 0, 0, monos);
  size_t m = monos.size();

  // Evaluate each formal monomial in the generators, over a common denominator.
  std::vector<MultiPoly> nums(m);
  std::vector<MultiPoly> dens(m);
  for (size_t i = 0; i < m; ++i) {
    RatFunc val = RatFunc::constant(ambient, Rational(1));
    for (size_t j = 0; j < gens.size(); ++j)
      if (monos[i][j] != 0) val = val * gens[j].second.pow(monos[i][j]);
    nums[i] = val.num();
    dens[i] = val.den();
  }
  MultiPoly common = MultiPoly::constant(ambient, Rational(1));
  for (size_t i = 0; i < m; ++i) {
    MultiPoly g = poly_gcd(common, dens[i]);
    common = common * dens[i].div_exact(g);
  }
  std::vector<MultiPoly> cleared(m);
  for (size_t i = 0; i < m; ++i) cleared[i] = nums[i] * common.div_exact(dens[i]);

  // Linear system: sum_i p_i * fd * cleared_i - sum_i q_i * fn * cleared_i = 0.
  const MultiPoly& fn = target.num();
  const MultiPoly& fd = target.den();
  std::map<Exps, size_t, GrlexGreater> row_of;
  std::vector<std::vector<Cyclotomic>> rows;
  size_t cols = 2 * m;
  auto add_entries = [&](const MultiPoly& p, size_t col) {
    for (const auto& [e, c] : p.terms()) {
      auto it = row_of.find(e);
      if (it == row_of.end()) {
        it = row_of.emplace(e, rows.size()).first;
        rows.emplace_back(cols, Cyclotomic());
      }
      rows[it->second][col] = rows[it->second][col] + c;
    }
  };
  for (size_t i = 0; i < m; ++i) {
    add_entries(fd * cleared[i], i);
    add_entries(-(fn * cleared[i]), m + i);
  }

  auto basis = nullspace(std::move(rows), cols);
  if (basis.empty()) return result;

  auto try_solution = [&](const std::vector<Cyclotomic>& v) -> bool {
    MultiPoly qeval(ambient);
    for (size_t i = 0; i < m; ++i)
      if (!v[m + i].is_zero()) qeval = qeval + cleared[i] * v[m + i];
    if (qeval.is_zero()) return false;
    MultiPoly pnum(result.gen_vars), pden(result.gen_vars);
    for (size_t i = 0; i < m; ++i) {
      if (!v[i].is_zero()) pnum.add_term(monos[i], v[i]);
      if (!v[m + i].is_zero()) pden.add_term(monos[i], v[m + i]);
    }
    RatFunc expr(pnum, pden);
    result.expr = expr;
    result.found = true;
    return true;
  };

  for (const auto& v : basis)
    if (try_solution(v)) break;
  if (!result.found) {
    for (size_t i = 0; i < basis.size() && !result.found; ++i) {
      for (size_t j = i + 1; j < basis.size() && !result.found; ++j) {
        std::vector<Cyclotomic> v(cols);
        for (size_t c = 0; c < cols; ++c) v[c] = basis[i][c] + basis[j][c];
        try_solution(v);
      }
    }
  }
  if (result.found) {
    // self-verification: the returned expression must evaluate to the target
    if (!(ansatz_evaluate(result, gens) == target))
      throw std::domain_error("ansatz self-verification failed");
  }
  return result;
}

AnsatzExpr ansatz_membership_escalating(const RatFunc& target,
                                        const std::vector<std::pair<std::string, RatFunc>>& gens,
                                        int cap) {
  for (int bound = 1; bound <= cap; bound = bound * 2) {
    AnsatzExpr e = ansatz_membership(target, gens, bound);
    if (e.found) return e;
  }
  AnsatzExpr miss;
  std::vector<std::string> names;
  for (const auto& [name, g] : gens) names.push_back(name);
  miss.gen_vars = make_vars(names);
  return miss;
}

}  // namespace noether
