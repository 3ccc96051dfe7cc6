#ifndef NOETHER_DESCENT_HPP
#define NOETHER_DESCENT_HPP

#include <cstdint>
#include <random>

#include "noether/ansatz.hpp"
#include "noether/group_action.hpp"

namespace noether {

// Deterministic integer draw in [lo, hi]; avoids the implementation-defined
// std::uniform_int_distribution so seeded runs reproduce everywhere.
int rand_range(std::mt19937_64& rng, int lo, int hi);

// g(x) = A(g) x + B(g) on the fibre variables; entries free of those variables.
struct AffineCocycle {
  VarSet vars;                       // full universe
  std::vector<std::string> fibre;    // the descended variables, in order
  std::vector<SubstitutionMap> group;  // identity first
  std::vector<std::vector<std::vector<RatFunc>>> A;  // [g][row][col]
  std::vector<std::vector<RatFunc>> B;               // [g][row]
  bool law_ok = false;  // A(gh) = g(A(h))A(g), B(gh) = g(A(h))B(g) + g(B(h))
};

// One-dimensional case: g(x) = a_g x + b_g.
struct LineCocycle {
  VarSet vars;
  std::string fibre;
  std::vector<SubstitutionMap> group;
  std::vector<RatFunc> a, b;
  bool law_ok = false;
};

// Reads the cocycle off the enumerated group of `spec`; throws if some image
// is not affine in the fibre variables.
AffineCocycle extract_affine(const ActionSpec& spec, const std::vector<std::string>& fibre);
LineCocycle extract_line(const ActionSpec& spec, const std::string& fibre);

struct DescentCertificate {
  bool invariance_ok = false;  // every group element fixes every invariant
  bool roundtrip_ok = false;   // forward/inverse substitution maps compose to identity
  int retries = 0;
  bool ok() const { return invariance_ok && roundtrip_ok; }
};

struct AffineDescent {
  std::vector<RatFunc> invariants;  // one per fibre variable
  SubstitutionMap forward;          // fibre var -> its invariant, rest fixed
  SubstitutionMap inverse;
  DescentCertificate cert;
};

// P = sum_g g(C) A(g) for a seeded random C; invariants are Px plus the
// average of the resulting additive cocycle. Throws when retries exhaust.
AffineDescent trivialize_affine(const AffineCocycle& c, std::uint64_t seed);

struct LineDescent {
  RatFunc invariant;  // c*X + e, where X = (x - p)^r
  RatFunc c, e;
  RatFunc base_point;     // p, the fixed point of the kernel (zero when r = 1)
  int kernel_order = 1;   // r = order of the subgroup acting trivially on the base
  SubstitutionMap forward, inverse;  // variable change, only built when r = 1
  bool hilbert90_ok = false;         // g(c) = c / alpha_g on the quotient cocycle
  bool minpoly_ok = false;           // r > 1: orbit polynomial of x over the kernel is
                                     // (T - p)^r - (invariant - e)/c, checked exactly
  DescentCertificate cert;
  bool ok() const {
    return cert.invariance_ok && hilbert90_ok && (kernel_order == 1 ? cert.roundtrip_ok : minpoly_ok);
  }
};

// Elements acting trivially on the base form a finite cyclic kernel of affine
// maps x -> a x + b; its invariant is X = (x - p)^r for the common fixed point
// p. The quotient acts affinely on X and is trivialized by the Hilbert-90
// multiplier c = sum_g alpha_g g(d) for seeded random d, then additive
// averaging. Throws when retries exhaust.
LineDescent line_descent(const LineCocycle& c, std::uint64_t seed);

struct InvolutionUV {
  RatFunc u, v;
  SubstitutionMap sigma;             // x -> a/x, y -> b/y
  bool invariance_ok = false;        // sigma fixes u and v
  bool minpoly_ok = false;           // coefficients of x's orbit polynomial lie in the u,v field
  bool y_ok = false;                 // y recovered from u, v, x
  std::vector<AnsatzExpr> minpoly_exprs;
  AnsatzExpr y_expr;
  bool ok() const { return invariance_ok && minpoly_ok && y_ok; }
};

// The two displayed invariants of the involution x -> a/x, y -> b/y:
//   u = (x - a/x) / (xy - ab/(xy)),  v = (y - b/y) / (xy - ab/(xy)).
// `params` names extra base variables allowed in the membership expressions.
InvolutionUV involution_uv(const VarSet& vars, const std::string& xname, const std::string& yname,
                           const RatFunc& a, const RatFunc& b, int ansatz_cap = 8,
                           const std::vector<std::string>& params = {});

// Exact identity in Q(a, b, x, y), with u, v as above:
//   (x - a/x) / ((ay/x) - (bx/y)) = -u / (bu^2 - av^2).
bool verify_identity_1();

// Numeric re-check of the same identity at `count` random rational points
// (plain rational arithmetic, no polynomial machinery). Points hitting an
// excluded denominator locus are skipped and redrawn.
bool identity1_specializations(int count, std::uint64_t seed);

struct TwoVarInvariants {
  bool found = false;
  RatFunc f, g;                           // the two invariant generators
  std::vector<RatFunc> minpoly_coeffs;    // orbit polynomial of x1, ascending
  std::vector<AnsatzExpr> coeff_exprs;    // each non-leading coefficient in {f, g}
  AnsatzExpr x2_expr;                     // x2 in {f, g, x1}
  size_t group_order = 0;
};

// Bounded search over orbit sums of monomials x1^i x2^j, |i|,|j| <= bound, for
// a pair of invariants generating the fixed field, certified by the orbit
// polynomial of x1 plus recovery of x2.
TwoVarInvariants monomial_fixed_2var(const ActionSpec& spec, const std::string& x1,
                                     const std::string& x2, int bound, int ansatz_cap);

}  // namespace noether

#endif
