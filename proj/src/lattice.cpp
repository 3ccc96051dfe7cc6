#include "noether/lattice.hpp"

#include "noether/group_action.hpp"

namespace noether {

int phi_char(const GroupRingElt& e) {
  Int s = 0;
  for (size_t j = 0; j < 6; ++j) s += e[j] * kOrbitIndex[j];
  return mod_index(static_cast<long>(s % 9), 9);
}

GroupRingElt rho_shift(const GroupRingElt& e) {
  GroupRingElt r;
  for (size_t j = 0; j < 6; ++j) r[(j + 1) % 6] = e[j];
  return r;
}

Int det_bareiss(IntMat6 m) {
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k < 5; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < 6 && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == 6) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < 6; ++i) {
      for (size_t j = k + 1; j < 6; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[5][5];
}

namespace {

Int det_cofactor_impl(const std::vector<std::vector<Int>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Int det = 0;
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] != 0) {
      std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
      for (size_t i = 1; i < n; ++i) {
        size_t cc = 0;
        for (size_t j = 0; j < n; ++j) {
          if (j == c) continue;
          minor[i - 1][cc++] = m[i][j];
        }
      }
      det += sign * m[0][c] * det_cofactor_impl(minor);
    }
    sign = -sign;
  }
  return det;
}

}  // namespace

Int det_cofactor(const IntMat6& m) {
  std::vector<std::vector<Int>> v(6, std::vector<Int>(6));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) v[i][j] = m[i][j];
  return det_cofactor_impl(v);
}

namespace {

// Row-style HNF: upper triangular, positive diagonal, entries above the
// diagonal reduced into [0, pivot).
IntMat6 hermite_normal_form(IntMat6 rows) {
  for (size_t col = 0; col < 6; ++col) {
    // Euclidean elimination below the pivot row.
    bool changed = true;
    while (changed) {
      changed = false;
      size_t piv = col;
      for (size_t r = col; r < 6; ++r)
        if (rows[r][col] != 0 && (rows[piv][col] == 0 || abs(rows[r][col]) < abs(rows[piv][col]))) piv = r;
      if (rows[piv][col] == 0) throw std::domain_error("HNF: rank deficient lattice basis");
      std::swap(rows[col], rows[piv]);
      for (size_t r = col + 1; r < 6; ++r) {
        if (rows[r][col] == 0) continue;
        Int q = rows[r][col] / rows[col][col];
        for (size_t j = 0; j < 6; ++j) rows[r][j] -= q * rows[col][j];
        if (rows[r][col] != 0) changed = true;
      }
    }
    if (rows[col][col] < 0)
      for (size_t j = 0; j < 6; ++j) rows[col][j] = -rows[col][j];
    // Reduce entries above the pivot.
    for (size_t r = 0; r < col; ++r) {
      Int q = rows[r][col] / rows[col][col];
      if (rows[r][col] - q * rows[col][col] < 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < 6; ++j) rows[r][j] -= q * rows[col][j];
    }
  }
  return rows;
}

}  // namespace

LatticeIdeal LatticeIdeal::kernel_lattice() {
  // Generators: 9*e_0 and e_j - idx_j*e_0 (each has character zero).
  IntMat6 rows{};
  rows[0][0] = 9;
  for (size_t j = 1; j < 6; ++j) {
    rows[j][j] = 1;
    rows[j][0] = -kOrbitIndex[j];
  }
  LatticeIdeal m(hermite_normal_form(rows));
  if (m.index() != 9) throw std::domain_error("kernel lattice index is not 9");
  // rho-equivariance: the shift of every basis vector stays in the lattice.
  for (size_t r = 0; r < 6; ++r) {
    GroupRingElt e;
    for (size_t j = 0; j < 6; ++j) e[j] = m.basis_[r][j];
    if (!m.contains(rho_shift(e))) throw std::domain_error("kernel lattice not closed under rho");
  }
  return m;
}

Int LatticeIdeal::index() const {
  Int d = 1;
  for (size_t i = 0; i < 6; ++i) d *= basis_[i][i];
  return abs(d);
}

std::optional<GroupRingElt> LatticeIdeal::coords(const GroupRingElt& e) const {
  GroupRingElt rem = e;
  GroupRingElt x{};
  for (size_t i = 0; i < 6; ++i) {
    if (rem[i] % basis_[i][i] != 0) return std::nullopt;
    x[i] = rem[i] / basis_[i][i];
    for (size_t j = 0; j < 6; ++j) rem[j] -= x[i] * basis_[i][j];
  }
  for (size_t j = 0; j < 6; ++j)
    if (rem[j] != 0) return std::nullopt;
  return x;
}

bool LatticeIdeal::contains(const GroupRingElt& e) const { return coords(e).has_value(); }

FreeGeneratorWitness find_free_generator(const LatticeIdeal& m, int bound) {
  FreeGeneratorWitness w;
  if (bound < 1) throw std::domain_error("find_free_generator: bound must be >= 1");
  for (int norm = 1; norm <= bound; ++norm) {
    GroupRingElt e{};
    std::array<int, 6> v{};
    for (size_t i = 0; i < 6; ++i) v[i] = -norm;
    while (true) {
      int maxabs = 0;
      for (int c : v) maxabs = std::max(maxabs, std::abs(c));
      if (maxabs == norm) {
        for (size_t i = 0; i < 6; ++i) e[i] = v[i];
        if (phi_char(e) == 0) {
          IntMat6 orbit{};
          GroupRingElt cur = e;
          bool all_in = true;
          for (size_t r = 0; r < 6; ++r) {
            auto c = m.coords(cur);
            if (!c) {
              all_in = false;
              break;
            }
            for (size_t j = 0; j < 6; ++j) orbit[r][j] = (*c)[j];
            cur = rho_shift(cur);
          }
          if (all_in) {
            Int d = det_bareiss(orbit);
            if (d == 1 || d == -1) {
              Int d2 = det_cofactor(orbit);
              if (d2 != d) throw std::domain_error("determinant oracle mismatch");
              w.found = true;
              w.gen = e;
              w.orbit_det = d;
              w.orbit_det_oracle = d2;
              w.bound = norm;
              return w;
            }
          }
        }
      }
      // lexicographic increment over [-norm, norm]^6
      int pos = 5;
      while (pos >= 0 && v[static_cast<size_t>(pos)] == norm) --pos;
      if (pos < 0) break;
      ++v[static_cast<size_t>(pos)];
      for (size_t k = static_cast<size_t>(pos) + 1; k < 6; ++k) v[k] = -norm;
    }
  }
  w.bound = bound;
  return w;
}

RatFunc monomial_from_exponents(const GroupRingElt& e, const VarSet& yvars) {
  MultiPoly num = MultiPoly::constant(yvars, Rational(1));
  MultiPoly den = MultiPoly::constant(yvars, Rational(1));
  for (size_t j = 0; j < 6; ++j) {
    if (e[j] == 0) continue;
    std::string name = "y" + std::to_string(kOrbitIndex[j]);
    int p = static_cast<int>(e[j]);
    if (p > 0)
      num = num * MultiPoly::var(yvars, name, p);
    else
      den = den * MultiPoly::var(yvars, name, -p);
  }
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace noether
