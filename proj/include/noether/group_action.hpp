#ifndef NOETHER_GROUP_ACTION_HPP
#define NOETHER_GROUP_ACTION_HPP

#include <string>
#include <vector>

#include "noether/ratfunc.hpp"

namespace noether {

// All subscript arithmetic on indexed variables goes through here.
inline int mod_index(long i, int m) {
  long r = i % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

// A word in generator names; acts as the composition with the rightmost
// generator applied first.
using Word = std::vector<std::string>;

Word parse_word(const std::string& s);  // e.g. "tau rho^3"
std::string word_str(const Word& w);

struct RelationReport {
  Word relation;
  bool pass = false;
  std::string detail;
};

// Generators and relations of a finite group acting on a rational function
// field by substitution automorphisms.
class ActionSpec {
 public:
  ActionSpec(VarSet vars, int cyc_order) : vars_(std::move(vars)), order_(cyc_order) {}

  void add_generator(const std::string& name, SubstitutionMap map);
  void add_relation(Word w) { relations_.push_back(std::move(w)); }

  const VarSet& vars() const { return vars_; }
  int cyc_order() const { return order_; }
  const SubstitutionMap& generator(const std::string& name) const;
  std::vector<std::string> generator_names() const;
  const std::vector<Word>& relations() const { return relations_; }

  SubstitutionMap word_map(const Word& w) const;
  RatFunc apply_word(const Word& w, const RatFunc& f) const;
  RatFunc apply_word(const std::string& w, const RatFunc& f) const { return apply_word(parse_word(w), f); }

  // Checks that every declared relation fixes all variables and zeta.
  std::vector<RelationReport> verify_presentation() const;

  // apply_word(w, f) == scalar * target, exactly.
  bool check_semi_invariant(const Word& w, const RatFunc& f, const Cyclotomic& scalar, const RatFunc& target) const;
  bool check_semi_invariant(const std::string& w, const RatFunc& f, const Cyclotomic& scalar,
                            const RatFunc& target) const {
    return check_semi_invariant(parse_word(w), f, scalar, target);
  }

  // All distinct automorphisms generated, identity first, BFS order.
  std::vector<SubstitutionMap> enumerate_group(size_t cap = 512) const;

 private:
  VarSet vars_;
  int order_;
  std::vector<std::pair<std::string, SubstitutionMap>> gens_;
  std::vector<Word> relations_;
};

// y_i = sum_j zeta^(-i*j) x_j for the n variables of `xvars`, over Q(zeta_n).
std::vector<RatFunc> dft_change(int n, const VarSet& xvars);

// Inverse transform: x_j = (1/n) sum_i zeta^(i*j) y_i in the y-universe.
std::vector<RatFunc> dft_inverse(int n, const VarSet& yvars);

// sum_k coeffs[k] * gen^k(f).
RatFunc operator_poly_apply(const ActionSpec& spec, const std::string& gen, const std::vector<Cyclotomic>& coeffs,
                            const RatFunc& f);

// (gen + c)(f) = gen(f) + c*f, the linear operator factor used to build z_i.
RatFunc apply_shifted_generator(const ActionSpec& spec, const std::string& gen, const Cyclotomic& c, const RatFunc& f);

}  // namespace noether

#endif
