#include "quotsing/ratlinalg.hpp"

#include "quotsing/error.hpp"

namespace quotsing {

RowReduction reduced_row_echelon(RatMatrix a) {
  RowReduction out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    BigRational inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      BigRational f = -a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j].add_product(f, a[r][j]);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rref = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& a) { return reduced_row_echelon(a).pivot_columns.size(); }

std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t columns) {
  RowReduction red = reduced_row_echelon(a);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(columns);
    v[free] = BigRational(1);
    for (std::size_t i = 0; i < red.pivot_columns.size(); ++i) v[red.pivot_columns[i]] = -red.rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t columns) {
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  RowReduction red = reduced_row_echelon(std::move(aug));
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == columns) return std::nullopt;
  RatVector x(columns);
  for (std::size_t i = 0; i < red.pivot_columns.size(); ++i) x[red.pivot_columns[i]] = red.rref[i][columns];
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].resize(2 * n);
    aug[i][n + i] = BigRational(1);
  }
  RowReduction red = reduced_row_echelon(std::move(aug));
  if (red.pivot_columns.size() < n || red.pivot_columns[n - 1] != n - 1) {
    throw Error(ErrorKind::InvalidLattice, "matrix is singular");
  }
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = red.rref[i][n + j];
  }
  return inv;
}

BigRational determinant(const RatMatrix& a) {
  RatMatrix m = a;
  const std::size_t n = m.size();
  BigRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return BigRational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    BigRational inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      BigRational f = -(m[i][c] * inv);
      for (std::size_t j = c; j < n; ++j) m[i][j].add_product(f, m[c][j]);
    }
  }
  return det;
}

RatMatrix transpose(const RatMatrix& a, std::size_t columns) {
  RatMatrix t(columns, RatVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < columns; ++j) t[j][i] = a[i][j];
  }
  return t;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  RatMatrix out(a.size(), RatVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j].add_product(a[i][k], b[k][j]);
    }
  }
  return out;
}

BigRational dot(const RatVector& a, const RatVector& b) {
  BigRational s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

RatVector row_times(const RatVector& x, const RatMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RatVector out(cols);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j].add_product(x[k], a[k][j]);
  }
  return out;
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix id(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = BigRational(1);
  return id;
}

}  // namespace quotsing
