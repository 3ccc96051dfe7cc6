#include "noether/group_action.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace noether {

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    int rep = 1;
    std::string name = tok;
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      rep = std::stoi(tok.substr(caret + 1));
    }
    for (int i = 0; i < rep; ++i) w.push_back(name);
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) out << " ";
    out << w[i];
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

void ActionSpec::add_generator(const std::string& name, SubstitutionMap map) {
  if (!same_vars(map.domain, vars_)) throw std::domain_error("generator domain mismatch for " + name);
  gens_.emplace_back(name, std::move(map));
}

const SubstitutionMap& ActionSpec::generator(const std::string& name) const {
  for (const auto& [n, m] : gens_)
    if (n == name) return m;
  throw std::domain_error("unknown generator " + name);
}

std::vector<std::string> ActionSpec::generator_names() const {
  std::vector<std::string> names;
  for (const auto& [n, m] : gens_) names.push_back(n);
  return names;
}

SubstitutionMap ActionSpec::word_map(const Word& w) const {
  SubstitutionMap m = SubstitutionMap::identity(vars_, order_);
  // rightmost generator acts first
  for (auto it = w.rbegin(); it != w.rend(); ++it) m = generator(*it).after(m);
  return m;
}

RatFunc ActionSpec::apply_word(const Word& w, const RatFunc& f) const {
  RatFunc r = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = substitute(r, generator(*it));
  return r;
}

std::vector<RelationReport> ActionSpec::verify_presentation() const {
  std::vector<RelationReport> reports;
  for (const Word& rel : relations_) {
    RelationReport rep;
    rep.relation = rel;
    SubstitutionMap m = word_map(rel);
    rep.pass = m.is_identity();
    rep.detail = rep.pass ? "acts as identity on all variables and zeta" : "relation fails: " + m.str();
    reports.push_back(std::move(rep));
  }
  return reports;
}

bool ActionSpec::check_semi_invariant(const Word& w, const RatFunc& f, const Cyclotomic& scalar,
                                      const RatFunc& target) const {
  return apply_word(w, f) == RatFunc::constant(vars_, scalar.promoted(order_)) * target;
}

std::vector<SubstitutionMap> ActionSpec::enumerate_group(size_t cap) const {
  std::vector<SubstitutionMap> elements;
  std::set<std::string> seen;
  std::deque<size_t> queue;
  elements.push_back(SubstitutionMap::identity(vars_, order_));
  seen.insert(elements.back().str());
  queue.push_back(0);
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (const auto& [name, gen] : gens_) {
      SubstitutionMap next = gen.after(elements[cur]);
      std::string key = next.str();
      if (seen.insert(key).second) {
        elements.push_back(std::move(next));
        if (elements.size() > cap) throw std::domain_error("group enumeration exceeded cap; action not finite?");
        queue.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

std::vector<RatFunc> dft_change(int n, const VarSet& xvars) {
  if (!Cyclotomic::order_supported(n)) throw std::domain_error("unsupported cyclotomic order " + std::to_string(n));
  if (static_cast<int>(xvars->size()) != n) throw std::domain_error("dft_change needs n variables");
  std::vector<RatFunc> ys;
  for (int i = 0; i < n; ++i) {
    MultiPoly p(xvars);
    for (int j = 0; j < n; ++j) {
      Exps e(xvars->size(), 0);
      e[static_cast<size_t>(j)] = 1;
      p.add_term(std::move(e), Cyclotomic::zeta_pow(n, -static_cast<long>(i) * j));
    }
    ys.push_back(RatFunc(std::move(p)));
  }
  return ys;
}

std::vector<RatFunc> dft_inverse(int n, const VarSet& yvars) {
  if (static_cast<int>(yvars->size()) != n) throw std::domain_error("dft_inverse needs n variables");
  std::vector<RatFunc> xs;
  Cyclotomic inv_n = Cyclotomic(Rational(1, n));
  for (int j = 0; j < n; ++j) {
    MultiPoly p(yvars);
    for (int i = 0; i < n; ++i) {
      Exps e(yvars->size(), 0);
      e[static_cast<size_t>(i)] = 1;
      p.add_term(std::move(e), Cyclotomic::zeta_pow(n, static_cast<long>(i) * j) * inv_n);
    }
    xs.push_back(RatFunc(std::move(p)));
  }
  return xs;
}

RatFunc operator_poly_apply(const ActionSpec& spec, const std::string& gen, const std::vector<Cyclotomic>& coeffs,
                            const RatFunc& f) {
  const SubstitutionMap& g = spec.generator(gen);
  RatFunc acc = RatFunc::constant(spec.vars(), Rational(0));
  RatFunc cur = f;  // gen^k(f)
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero())
      acc = acc + RatFunc::constant(spec.vars(), coeffs[k].promoted(spec.cyc_order())) * cur;
    if (k + 1 < coeffs.size()) cur = substitute(cur, g);
  }
  return acc;
}

RatFunc apply_shifted_generator(const ActionSpec& spec, const std::string& gen, const Cyclotomic& c,
                                const RatFunc& f) {
  return substitute(f, spec.generator(gen)) +
         RatFunc::constant(spec.vars(), c.promoted(spec.cyc_order())) * f;
}

}  // namespace noether
