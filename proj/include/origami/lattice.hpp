#pragma once

// Small dense integer linear algebra over Z (exact, arbitrary precision).

#include <optional>
#include <vector>

#include "origami/arith.hpp"

namespace origami {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major

IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
IntMatrix transpose(const IntMatrix& a);
IntMatrix subtract(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntVector& v);

/// Row-style Hermite normal form: u * a = h with u unimodular. The first
/// `rank` rows of h are nonzero, with positive pivots at `pivots` and entries
/// above each pivot reduced into [0, pivot).
struct RowEchelon {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
  std::vector<int> pivots;
};
RowEchelon row_echelon(const IntMatrix& a, int columns);

/// Coefficients c with sum_k c[k] * h[k] == v over the nonzero rows of h,
/// or nullopt when v is not in their integer span.
std::optional<IntVector> lattice_coordinates(const RowEchelon& e, const IntVector& v);

/// Rows form a basis of {x in Z^n : a x = 0}. The basis is saturated: it
/// spans the kernel over Z, not just a finite-index sublattice.
IntMatrix kernel_basis(const IntMatrix& a, int columns);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

}  // namespace origami
