#ifndef NOETHER_ANSATZ_HPP
#define NOETHER_ANSATZ_HPP

#include <string>
#include <utility>
#include <vector>

#include "noether/ratfunc.hpp"

namespace noether {

// Result of a bounded-degree search for an expression of a target in given generators.
struct AnsatzExpr {
  bool found = false;
  VarSet gen_vars;  // formal universe named after the generators
  RatFunc expr;     // P/Q in the generators; evaluates exactly to the target
};

// Searches for target = P(gens)/Q(gens) with deg P, deg Q <= degree_bound by
// solving an exact linear system over the coefficient field. A miss is not a
// proof of non-membership.
AnsatzExpr ansatz_membership(const RatFunc& target,
                             const std::vector<std::pair<std::string, RatFunc>>& gens,
                             int degree_bound);

// Escalation loop: tries bounds 1, 2, 4, ... up to cap.
AnsatzExpr ansatz_membership_escalating(const RatFunc& target,
                                        const std::vector<std::pair<std::string, RatFunc>>& gens,
                                        int cap);

// Evaluate a formal generator expression back into the ambient field.
RatFunc ansatz_evaluate(const AnsatzExpr& e, const std::vector<std::pair<std::string, RatFunc>>& gens);

}  // namespace noether

#endif
