#include "origami/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace origami {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("matrix/vector shapes do not match");
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += a[i][k] * v[k];
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix out(a[0].size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

IntMatrix subtract(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  }
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

namespace {

void add_multiple(IntVector& row, const IntVector& other, const Integer& factor) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] += factor * other[j];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RowEchelon row_echelon(const IntMatrix& a, int columns) {
  RowEchelon e;
  e.h = a;
  const int m = static_cast<int>(a.size());
  e.u = identity_matrix(m);
  int r = 0;
  for (int col = 0; col < columns && r < m; ++col) {
    // Euclid on column `col` among rows r..m-1.
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i) {
        if (e.h[i][col] != 0 && (best < 0 || abs(e.h[i][col]) < abs(e.h[best][col]))) best = i;
      }
      if (best < 0) break;
      std::swap(e.h[r], e.h[best]);
      std::swap(e.u[r], e.u[best]);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (e.h[i][col] == 0) continue;
        Integer q = floor_div(e.h[i][col], e.h[r][col]);
        add_multiple(e.h[i], e.h[r], -q);
        add_multiple(e.u[i], e.u[r], -q);
        if (e.h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (e.h[r][col] == 0) continue;
    if (e.h[r][col] < 0) {
      for (auto& x : e.h[r]) x = -x;
      for (auto& x : e.u[r]) x = -x;
    }
    for (int i = 0; i < r; ++i) {
      Integer q = floor_div(e.h[i][col], e.h[r][col]);
      if (q == 0) continue;
      add_multiple(e.h[i], e.h[r], -q);
      add_multiple(e.u[i], e.u[r], -q);
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.rank = r;
  return e;
}

std::optional<IntVector> lattice_coordinates(const RowEchelon& e, const IntVector& v) {
  IntVector rest = v;
  IntVector coeff(e.rank, 0);
  for (int k = 0; k < e.rank; ++k) {
    const int col = e.pivots[k];
    const Integer& pivot = e.h[k][col];
    if (rest[col] % pivot != 0) return std::nullopt;
    coeff[k] = rest[col] / pivot;
    add_multiple(rest, e.h[k], -coeff[k]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

IntMatrix kernel_basis(const IntMatrix& a, int columns) {
  // u * a^T = h; the rows of u whose h-row vanishes span ker(a).
  IntMatrix at(columns, IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < columns; ++j) at[j][i] = a[i][j];
  }
  RowEchelon e = row_echelon(at, static_cast<int>(a.size()));
  return IntMatrix(e.u.begin() + e.rank, e.u.end());
}

Integer determinant(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign_flip = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign_flip = -sign_flip;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign_flip * m[n - 1][n - 1];
}

}  // namespace origami
