#include "quotsing/intlinalg.hpp"

#include <algorithm>
#include <cstdint>

namespace quotsing {

namespace {

// The algorithms below run over either int64 (with overflow traps) or BigInt.
// Inputs that fit in a word try the int64 instantiation first and rerun on
// BigInt if any intermediate overflows.
struct Overflow {};

using Small = std::int64_t;

Small checked_mul(Small a, Small b) {
  Small r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
Small checked_add(Small a, Small b) {
  Small r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
Small checked_sub(Small a, Small b) {
  Small r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

void sub_mul(Small& x, const Small& q, const Small& y) { x = checked_sub(x, checked_mul(q, y)); }
void sub_mul(BigInt& x, const BigInt& q, const BigInt& y) { x -= q * y; }
void add_mul(Small& x, const Small& q, const Small& y) { x = checked_add(x, checked_mul(q, y)); }
void add_mul(BigInt& x, const BigInt& q, const BigInt& y) { x += q * y; }
void add_to(Small& x, const Small& y) { x = checked_add(x, y); }
void add_to(BigInt& x, const BigInt& y) { x += y; }
void negate(Small& x) { x = checked_sub(0, x); }
void negate(BigInt& x) { x = -x; }

Small magnitude(Small x) { return x < 0 ? checked_sub(0, x) : x; }
BigInt magnitude(const BigInt& x) { return abs(x); }

Small floor_div(Small a, Small b) {
  if (b == -1) return checked_sub(0, a);
  Small q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(Small d, Small x) { return d == -1 || x % d == 0; }
bool divides(const BigInt& d, const BigInt& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
void row_axpy(std::vector<T>& target, const T& q, const std::vector<T>& source) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (source[j] != 0) sub_mul(target[j], q, source[j]);
  }
}

template <class T>
Mat<T> identity_of(std::size_t n) {
  Mat<T> id(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = T(1);
  return id;
}

template <class T>
struct Echelon {
  Mat<T> echelon;
  Mat<T> transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

template <class T>
Echelon<T> row_echelon(Mat<T> a) {
  Echelon<T> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  out.echelon = std::move(a);
  out.transform = identity_of<T>(rows);
  Mat<T>& e = out.echelon;
  Mat<T>& t = out.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (e[i][c] != 0 && (best == rows || magnitude(e[i][c]) < magnitude(e[best][c]))) best = i;
      }
      if (best == rows) break;
      std::swap(e[best], e[r]);
      std::swap(t[best], t[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (e[i][c] == 0) continue;
        T q = floor_div(e[i][c], e[r][c]);
        row_axpy(e[i], q, e[r]);
        row_axpy(t[i], q, t[r]);
        if (e[i][c] != 0) done = false;
      }
      if (done) {
        out.pivot_columns.push_back(c);
        ++r;
        break;
      }
    }
  }
  out.rank = r;
  return out;
}

template <class T>
Mat<T> hermite(Mat<T> a) {
  Echelon<T> ech = row_echelon(std::move(a));
  Mat<T> h(ech.echelon.begin(), ech.echelon.begin() + static_cast<std::ptrdiff_t>(ech.rank));
  for (std::size_t r = 0; r < ech.rank; ++r) {
    std::size_t c = ech.pivot_columns[r];
    if (h[r][c] < 0) {
      for (auto& x : h[r]) negate(x);
    }
    for (std::size_t i = 0; i < r; ++i) {
      T q = floor_div(h[i][c], h[r][c]);
      row_axpy(h[i], q, h[r]);
    }
  }
  return h;
}

template <class T>
struct Smith {
  Mat<T> u, v, v_inverse;
  std::vector<T> diagonal;
};

template <class T>
Smith<T> smith(Mat<T> s) {
  const std::size_t rows = s.size();
  const std::size_t cols = rows == 0 ? 0 : s[0].size();
  Smith<T> out;
  out.u = identity_of<T>(rows);
  out.v = identity_of<T>(cols);
  out.v_inverse = identity_of<T>(cols);
  Mat<T>& u = out.u;
  Mat<T>& v = out.v;
  Mat<T>& vinv = out.v_inverse;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : s) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
    std::swap(vinv[x], vinv[y]);
  };
  // col_j -= q * col_t, mirrored as row_t += q * row_j on the inverse.
  auto col_axpy = [&](std::size_t j, const T& q, std::size_t t) {
    if (q == 0) return;
    for (auto& row : s) sub_mul(row[j], q, row[t]);
    for (auto& row : v) sub_mul(row[j], q, row[t]);
    for (std::size_t k = 0; k < cols; ++k) add_mul(vinv[t][k], q, vinv[j][k]);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    bool finished = false;
    while (!finished) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (s[i][j] != 0 && (bi == rows || magnitude(s[i][j]) < magnitude(s[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      std::swap(s[bi], s[t]);
      std::swap(u[bi], u[t]);
      swap_cols(bj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        T q = floor_div(s[i][t], s[t][t]);
        row_axpy(s[i], q, s[t]);
        row_axpy(u[i], q, u[t]);
        if (s[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        T q = floor_div(s[t][j], s[t][t]);
        col_axpy(j, q, t);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      finished = true;
      for (std::size_t i = t + 1; i < rows && finished; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!divides(s[t][t], s[i][j])) {
            for (std::size_t k = 0; k < cols; ++k) add_to(s[t][k], s[i][k]);
            for (std::size_t k = 0; k < rows; ++k) add_to(u[t][k], u[i][k]);
            finished = false;
            break;
          }
        }
      }
    }
    if (s[t][t] < 0) {
      for (auto& x : s[t]) negate(x);
      for (auto& x : u[t]) negate(x);
    }
  }
  out.diagonal.resize(diag);
  for (std::size_t t = 0; t < diag; ++t) out.diagonal[t] = s[t][t];
  return out;
}

bool to_small(const IntMatrix& a, Mat<Small>& out) {
  out.assign(a.size(), {});
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& x : a[i]) {
      if (!x.fits_slong_p()) return false;
      out[i].push_back(x.get_si());
    }
  }
  return true;
}

IntMatrix to_big(const Mat<Small>& a) {
  IntMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (auto x : a[i]) out[i].emplace_back(static_cast<signed long>(x));
  }
  return out;
}

template <class T>
IntegerEchelon export_echelon(Echelon<T>&& e) {
  IntegerEchelon out;
  if constexpr (std::is_same_v<T, Small>) {
    out.echelon = to_big(e.echelon);
    out.transform = to_big(e.transform);
  } else {
    out.echelon = std::move(e.echelon);
    out.transform = std::move(e.transform);
  }
  out.rank = e.rank;
  out.pivot_columns = std::move(e.pivot_columns);
  return out;
}

}  // namespace

std::optional<SmallMatrix> hermite_normal_form_small(SmallMatrix a) {
  try {
    return hermite(std::move(a));
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

std::optional<SmallSmithForm> smith_normal_form_small(SmallMatrix a) {
  try {
    Smith<Small> s = smith(std::move(a));
    return SmallSmithForm{std::move(s.u), std::move(s.v), std::move(s.v_inverse), std::move(s.diagonal)};
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

IntMatrix integer_identity(std::size_t n) { return identity_of<BigInt>(n); }

IntMatrix integer_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntegerEchelon integer_row_echelon(const IntMatrix& a) {
  Mat<Small> small;
  if (to_small(a, small)) {
    try {
      return export_echelon(row_echelon(std::move(small)));
    } catch (const Overflow&) {
    }
  }
  return export_echelon(row_echelon(a));
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  Mat<Small> small;
  if (to_small(a, small)) {
    try {
      return to_big(hermite(std::move(small)));
    } catch (const Overflow&) {
    }
  }
  return hermite(a);
}

IntMatrix integer_left_kernel(const IntMatrix& a) {
  IntegerEchelon ech = integer_row_echelon(a);
  IntMatrix kernel(ech.transform.begin() + static_cast<std::ptrdiff_t>(ech.rank), ech.transform.end());
  if (kernel.empty()) return kernel;
  return hermite_normal_form(kernel);
}

SmithForm smith_normal_form(const IntMatrix& a) {
  Mat<Small> small;
  if (to_small(a, small)) {
    try {
      Smith<Small> s = smith(std::move(small));
      SmithForm out{to_big(s.u), to_big(s.v), to_big(s.v_inverse), {}};
      for (auto x : s.diagonal) out.diagonal.emplace_back(static_cast<signed long>(x));
      return out;
    } catch (const Overflow&) {
    }
  }
  Smith<BigInt> s = smith(a);
  return SmithForm{std::move(s.u), std::move(s.v), std::move(s.v_inverse), std::move(s.diagonal)};
}

}  // namespace quotsing
