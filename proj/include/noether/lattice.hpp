#ifndef NOETHER_LATTICE_HPP
#define NOETHER_LATTICE_HPP

#include <array>
#include <optional>

#include "noether/ratfunc.hpp"

namespace noether {

// Exponent vector of a monomial in y_1, y_2, y_4, y_8, y_7, y_5, indexed in
// the doubling orbit of 1 mod 9 so the rho-action is the cyclic shift.
inline constexpr std::array<int, 6> kOrbitIndex = {1, 2, 4, 8, 7, 5};

using GroupRingElt = std::array<Int, 6>;

// Character value: sum_j e_j * orbit_index_j mod 9 (the j with sigma(y)=zeta^j y).
int phi_char(const GroupRingElt& e);

// The rho-action on exponent vectors: cyclic shift by one position.
GroupRingElt rho_shift(const GroupRingElt& e);

using IntMat6 = std::array<std::array<Int, 6>, 6>;

Int det_bareiss(IntMat6 m);
Int det_cofactor(const IntMat6& m);  // independent oracle

// Kernel of the character map, stored as a Hermite-normal-form basis (rows).
class LatticeIdeal {
 public:
  static LatticeIdeal kernel_lattice();

  const IntMat6& basis() const { return basis_; }
  Int index() const;  // |det| of the basis = [Lambda : M]
  bool contains(const GroupRingElt& e) const;
  // Coordinates of e in the HNF basis; nullopt if e is not in the lattice.
  std::optional<GroupRingElt> coords(const GroupRingElt& e) const;

 private:
  IntMat6 basis_;
  explicit LatticeIdeal(IntMat6 b) : basis_(b) {}
};

struct FreeGeneratorWitness {
  bool found = false;
  GroupRingElt gen{};
  Int orbit_det = 0;       // determinant of the orbit matrix in lattice coordinates (+-1)
  Int orbit_det_oracle = 0;  // recomputed by cofactor expansion
  int bound = 0;
};

// Exhaustive search (increasing max-norm, then lexicographic) for e in M whose
// rho-orbit is a Z-basis of M.
FreeGeneratorWitness find_free_generator(const LatticeIdeal& m, int bound);

// The monomial prod y_i^(e_i) as a rational function; yvars must contain the
// six names y1, y2, y4, y5, y7, y8.
RatFunc monomial_from_exponents(const GroupRingElt& e, const VarSet& yvars);

}  // namespace noether

#endif
