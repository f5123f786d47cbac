#include <random>

#include "doctest.h"
#include "quotsing/error.hpp"
#include "quotsing/intlinalg.hpp"
#include "quotsing/ratlinalg.hpp"
#include "support.hpp"

using namespace quotsing;
using namespace testing_support;

namespace {

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long x : r) out.back().emplace_back(x);
  }
  return out;
}

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int spread = 9) {
  std::uniform_int_distribution<long> c(-spread, spread);
  IntMatrix m(rows, IntVector(cols));
  for (auto& r : m) {
    for (auto& x : r) x = c(rng);
  }
  return m;
}

IntMatrix scaled(IntMatrix m, const BigInt& c) {
  for (auto& r : m) {
    for (auto& x : r) x *= c;
  }
  return m;
}

BigInt int_det(const IntMatrix& m) {
  RatMatrix r;
  for (const auto& row : m) {
    r.emplace_back();
    for (const auto& x : row) r.back().emplace_back(x);
  }
  return determinant(r).numerator();
}

bool is_hermite(const IntMatrix& h) {
  std::size_t last = 0;
  for (std::size_t r = 0; r < h.size(); ++r) {
    std::size_t p = 0;
    while (p < h[r].size() && h[r][p] == 0) ++p;
    if (p == h[r].size() || h[r][p] <= 0) return false;
    if (r > 0 && p <= last) return false;
    for (std::size_t i = 0; i < r; ++i) {
      if (h[i][p] < 0 || h[i][p] >= h[r][p]) return false;
    }
    last = p;
  }
  return true;
}

void check_smith(const IntMatrix& a, const SmithForm& s) {
  const IntMatrix d = integer_multiply(integer_multiply(s.u, a), s.v);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      CHECK(d[i][j] == (i == j ? s.diagonal[i] : BigInt(0)));
    }
  }
  CHECK(abs(int_det(s.u)) == 1);
  CHECK(abs(int_det(s.v)) == 1);
  CHECK(integer_multiply(s.v, s.v_inverse) == integer_identity(s.v.size()));
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    CHECK(s.diagonal[i] >= 0);
    if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    else CHECK(s.diagonal[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("hermite_normal_form: small examples") {
  CHECK(hermite_normal_form(imat({{2, 0}, {0, 3}, {1, 1}})) == imat({{1, 0}, {0, 1}}));
  CHECK(hermite_normal_form(imat({{3, 3}, {0, 6}})) == imat({{3, 3}, {0, 6}}));
  CHECK(hermite_normal_form(imat({{3, 9}, {0, 6}})) == imat({{3, 3}, {0, 6}}));
  CHECK(hermite_normal_form(imat({{0, 0}, {0, 0}})).empty());
  CHECK(hermite_normal_form(imat({{4, 6}})) == imat({{4, 6}}));
}

TEST_CASE("hermite_normal_form: canonical, invariant under row operations, word and GMP paths agree") {
  std::mt19937_64 rng(kSeed + 10);
  const BigInt huge = BigInt(1) << 70;
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    const IntMatrix a = random_int_matrix(rows, cols, rng);
    const IntMatrix h = hermite_normal_form(a);
    CHECK(is_hermite(h));
    CHECK(hermite_normal_form(h) == h);
    IntMatrix p;
    for (const auto& r : random_unimodular(rows, rng).p) {
      p.emplace_back();
      for (const auto& x : r) p.back().push_back(x.numerator());
    }
    CHECK(hermite_normal_form(integer_multiply(p, a)) == h);
    CHECK(hermite_normal_form(scaled(a, huge)) == scaled(h, huge));

    SmallMatrix s;
    for (const auto& r : a) {
      s.emplace_back();
      for (const auto& x : r) s.back().push_back(x.get_si());
    }
    const auto hs = hermite_normal_form_small(s);
    REQUIRE(hs.has_value());
    REQUIRE(hs->size() == h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) CHECK(h[i][j] == BigInt(static_cast<long>((*hs)[i][j])));
    }
  }
}

TEST_CASE("smith_normal_form: textbook example and properties") {
  const auto s = smith_normal_form(imat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(s.diagonal == std::vector<BigInt>{2, 6, 12});
  check_smith(imat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), s);

  std::mt19937_64 rng(kSeed + 11);
  const BigInt huge = BigInt(1) << 66;
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    const IntMatrix a = random_int_matrix(rows, cols, rng, t % 3 == 0 ? 2 : 20);
    const auto sa = smith_normal_form(a);
    check_smith(a, sa);
    const auto sb = smith_normal_form(scaled(a, huge));
    check_smith(scaled(a, huge), sb);
    for (std::size_t i = 0; i < sa.diagonal.size(); ++i) CHECK(sb.diagonal[i] == sa.diagonal[i] * huge);
    if (rows == cols) {
      BigInt product = 1;
      for (const auto& x : sa.diagonal) product *= x;
      CHECK(abs(int_det(a)) == product);
    }
  }
}

TEST_CASE("integer_left_kernel and row echelon") {
  std::mt19937_64 rng(kSeed + 12);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix a = random_int_matrix(4, 2 + t % 2, rng);
    const auto k = integer_left_kernel(a);
    CHECK(k.size() == 4 - integer_row_echelon(a).rank);
    for (const auto& row : integer_multiply(k, a)) {
      for (const auto& x : row) CHECK(x == 0);
    }
    // Saturated: the kernel basis has trivial elementary divisors.
    if (!k.empty()) {
      for (const auto& d : smith_normal_form(k).diagonal) CHECK(d == 1);
    }
    const auto e = integer_row_echelon(a);
    CHECK(integer_multiply(e.transform, a) == e.echelon);
    CHECK(abs(int_det(e.transform)) == 1);
  }
}

TEST_CASE("rational linear algebra") {
  const RatMatrix a{{q(1), q(2)}, {q(3), q(4)}};
  CHECK(determinant(a) == q(-2));
  CHECK(multiply(a, inverse(a)) == identity_matrix(2));
  CHECK(rank(RatMatrix{{q(1), q(2)}, {q(2), q(4)}}) == 1);
  const auto ns = nullspace(RatMatrix{{q(1), q(2), q(3)}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(v, RatVector{q(1), q(2), q(3)}).is_zero());
  const auto x = solve(a, RatVector{q(5), q(6)}, 2);
  REQUIRE(x.has_value());
  CHECK(row_times(*x, transpose(a, 2)) == RatVector{q(5), q(6)});
  CHECK_FALSE(solve(RatMatrix{{q(1), q(1)}, {q(2), q(2)}}, RatVector{q(1), q(3)}, 2).has_value());
  CHECK_THROWS_AS(inverse(RatMatrix{{q(1), q(2)}, {q(2), q(4)}}), Error);
}
