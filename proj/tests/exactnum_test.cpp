#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "quotsing/error.hpp"
#include "support.hpp"

using namespace quotsing;
using namespace testing_support;

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial; returns the remainder through `rem`.
Poly poly_divmod(Poly a, const Poly& b, Poly& rem) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) {
    rem = a;
    return {0};
  }
  Poly quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  rem = a;
  return quot;
}

Poly x_pow_minus_one(std::uint64_t k) {
  Poly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  return p;
}

int naive_mobius(std::uint64_t m) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    mu = -mu;
  }
  return m > 1 ? -mu : mu;
}

// Phi_m = prod_{d | m} (x^{m/d} - 1)^{mu(d)}, as numerator / denominator.
Poly mobius_product(std::uint64_t m) {
  Poly num{1}, den{1};
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    const int mu = naive_mobius(d);
    if (mu == 1) num = poly_mul(num, x_pow_minus_one(m / d));
    if (mu == -1) den = poly_mul(den, x_pow_minus_one(m / d));
  }
  // The denominator has leading coefficient 1, so long division is exact.
  Poly rem;
  Poly out = poly_divmod(num, den, rem);
  for (const auto& r : rem) REQUIRE(r == 0);
  return out;
}

RootOfUnityLog rl(std::uint64_t order, std::uint64_t exponent) { return RootOfUnityLog{order, exponent}; }

CyclotomicNumber random_element(std::uint64_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5), den(1, 4);
  std::vector<BigRational> coeffs(cyclotomic_context(m).phi);
  for (auto& x : coeffs) x = BigRational(c(rng), den(rng));
  return CyclotomicNumber::from_coeffs(m, coeffs);
}

}  // namespace

TEST_CASE("bigrational: canonical form and mixed small/GMP arithmetic") {
  CHECK(q(6, -4) == q(-3, 2));
  CHECK(q(6, -4).denominator() == 2);
  CHECK(BigRational::parse("-10/4") == q(-5, 2));
  CHECK_THROWS_AS(BigRational::parse("1/0"), Error);
  CHECK_THROWS_AS(BigRational::parse("1.5"), Error);
  CHECK_THROWS_AS(q(1) / q(0), Error);

  const BigRational big = BigRational(std::numeric_limits<std::int64_t>::max()) + q(1);
  CHECK_FALSE(big.is_small());
  CHECK(big.numerator() == BigInt("9223372036854775808"));
  CHECK((big - q(1)).is_small());
  CHECK(big - q(1) == BigRational(std::numeric_limits<std::int64_t>::max()));
  CHECK(big > q(1));
  CHECK(-big < BigRational(std::numeric_limits<std::int64_t>::min() + 1));
  CHECK(BigRational(std::numeric_limits<std::int64_t>::min()).numerator() == BigInt("-9223372036854775808"));

  CHECK(q(7, 3).floor() == 2);
  CHECK(q(-7, 3).floor() == -3);
  CHECK(q(-7, 3).ceil() == -2);
  CHECK(q(-7, 3).frac() == q(2, 3));
  CHECK(q(5).frac().is_zero());
  CHECK(q(3, 4).to_string() == "3/4");
  CHECK(q(-8, 2).to_string() == "-4");
}

TEST_CASE("bigrational: agrees with GMP rationals on random operands") {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> wide(-(std::int64_t{1} << 62), std::int64_t{1} << 62);
  std::uniform_int_distribution<std::int64_t> narrow(-50, 50);
  for (int t = 0; t < 3000; ++t) {
    auto pick = [&] { return t % 2 ? wide(rng) : narrow(rng); };
    std::int64_t an = pick(), ad = pick(), bn = pick(), bd = pick();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    const BigRational a(an, ad), b(bn, bd);
    mpq_class A(BigInt(static_cast<signed long>(an)), BigInt(static_cast<signed long>(ad)));
    mpq_class B(BigInt(static_cast<signed long>(bn)), BigInt(static_cast<signed long>(bd)));
    A.canonicalize();
    B.canonicalize();
    CHECK((a + b).to_mpq() == A + B);
    CHECK((a - b).to_mpq() == A - B);
    CHECK((a * b).to_mpq() == A * B);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == A / B);
    CHECK(((a <=> b) < 0) == (A < B));
    BigRational acc = a;
    acc.add_product(a, b);
    CHECK(acc.to_mpq() == A + A * B);
    if (!a.is_zero()) CHECK(a * a.inverse() == q(1));
    CHECK((a + b - b).hash() == a.hash());
  }
}

TEST_CASE("cyclotomic_polynomial: listed values and the Moebius product") {
  CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == Poly{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == Poly{1, 0, -1, 0, 1});
  for (std::uint64_t m : {12ULL, 30ULL, 36ULL, 105ULL}) CHECK(cyclotomic_polynomial(m) == mobius_product(m));
  for (std::uint64_t m = 1; m <= 60; ++m) {
    CHECK(euler_phi(m) + 1 == cyclotomic_polynomial(m).size());
    CHECK(mobius(m) == naive_mobius(m));
  }
}

TEST_CASE("cyclotomic_polynomial: Phi_m divides x^m - 1 for m <= 200") {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    Poly rem;
    poly_divmod(x_pow_minus_one(m), cyclotomic_polynomial(m), rem);
    bool zero = true;
    for (const auto& r : rem) zero = zero && r == 0;
    CHECK_MESSAGE(zero, "m = " << m);
  }
}

TEST_CASE("cyclotomic: field operations") {
  const auto z4 = CyclotomicNumber::zeta(4, 1);
  CHECK(z4 * z4 == CyclotomicNumber::rational(q(-1), 4));

  const auto z3 = CyclotomicNumber::zeta(3, 1);
  CHECK(z3.inverse() == CyclotomicNumber::zeta(3, 2));
  CHECK(z3.inverse() == CyclotomicNumber::rational(q(-1), 3) - z3);

  // zeta_6 is a root of x^2 - x + 1, so zeta_6 + zeta_6^5 = zeta_6 + conj = 1.
  const auto z6 = CyclotomicNumber::zeta(6, 1);
  CHECK(z6 * z6 - z6 + CyclotomicNumber::one(6) == CyclotomicNumber::zero(6));
  CHECK(z6 + CyclotomicNumber::zeta(6, 5) == CyclotomicNumber::one(6));

  CHECK(CyclotomicNumber::zeta(5, -1) == CyclotomicNumber::zeta(5, 4));
  CHECK(CyclotomicNumber::zeta(7, 3).pow(7).is_one());
  CHECK(CyclotomicNumber::zeta(7, 3).field_trace() == q(-1));
  CHECK(CyclotomicNumber::rational(q(2, 3), 5).field_trace() == q(8, 3));
  CHECK_THROWS_AS(CyclotomicNumber::zero(5).inverse(), Error);
  CHECK_THROWS_AS(CyclotomicNumber::zeta(3, 1) + CyclotomicNumber::zeta(5, 1), Error);
  CHECK_THROWS_AS(CyclotomicNumber::from_coeffs(5, {q(1)}), Error);
}

TEST_CASE("cyclotomic: a * inv(a) = 1 and ring axioms on random elements") {
  std::mt19937_64 rng(kSeed + 1);
  for (std::uint64_t m : {1ULL, 2ULL, 3ULL, 5ULL, 8ULL, 9ULL, 12ULL, 15ULL, 20ULL, 21ULL}) {
    for (int t = 0; t < 6; ++t) {
      const auto a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      // Numeric evaluation commutes with multiplication.
      CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-9L);
    }
  }
}

TEST_CASE("cyclotomic: embed") {
  CHECK(CyclotomicNumber::zeta(2, 1).embed(4) == CyclotomicNumber::zeta(4, 2));
  for (std::uint64_t t : {1ULL, 6ULL, 35ULL}) CHECK(CyclotomicNumber::one(1).embed(t).is_one());
  CHECK(CyclotomicNumber::zeta(3, 1).embed(12) == CyclotomicNumber::zeta(12, 4));
  CHECK(std::abs(evaluate(CyclotomicNumber::zeta(3, 1).embed(12)) - evaluate(CyclotomicNumber::zeta(3, 1))) < 1e-15L);
  CHECK_THROWS_AS(CyclotomicNumber::zeta(3, 1).embed(10), Error);

  std::mt19937_64 rng(kSeed + 2);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{3, 12}, {4, 20}, {5, 15}, {6, 18}, {9, 36}, {7, 14}};
  for (auto [m, t] : pairs) {
    for (int k = 0; k < 5; ++k) {
      const auto a = random_element(m, rng), b = random_element(m, rng);
      CHECK((a * b).embed(t) == a.embed(t) * b.embed(t));
      CHECK((a + b).embed(t) == a.embed(t) + b.embed(t));
      CHECK(std::abs(evaluate(a.embed(t)) - evaluate(a)) < 1e-9L);
    }
  }
}

TEST_CASE("root_of_unity_log: listed values and the powering oracle") {
  CHECK(root_of_unity_log(CyclotomicNumber::one(7)) == rl(1, 1));
  CHECK(root_of_unity_log(CyclotomicNumber::rational(q(-1), 4)) == rl(2, 1));
  CHECK(root_of_unity_log(CyclotomicNumber::rational(q(-1), 3)) == rl(2, 1));
  CHECK(root_of_unity_log(CyclotomicNumber::zeta(3, 2)) == rl(3, 2));
  CHECK_THROWS_AS(root_of_unity_log(CyclotomicNumber::rational(q(2), 3)), Error);

  // Oracle: the order is the least k with a^k = 1; the exponent is found by
  // walking powers of the library's primitive k-th root.
  auto oracle = [](const CyclotomicNumber& a) {
    std::uint64_t k = 1;
    for (CyclotomicNumber p = a; !p.is_one(); p *= a) ++k;
    const auto root = primitive_root_in(a.conductor(), k);
    CyclotomicNumber p = root;
    for (std::uint64_t j = 1; j <= k; ++j, p *= root) {
      if (p == a) return rl(k, j);
    }
    return rl(0, 0);
  };
  for (std::uint64_t m : {3ULL, 5ULL, 7ULL, 8ULL, 9ULL, 12ULL}) {
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(m); ++j) {
      CHECK(root_of_unity_log(CyclotomicNumber::zeta(m, j)) == oracle(CyclotomicNumber::zeta(m, j)));
      const auto neg = -CyclotomicNumber::zeta(m, j);
      CHECK(root_of_unity_log(neg) == oracle(neg));
    }
  }
}

TEST_CASE("root_of_unity_log: (m/gcd, j/gcd) for every m <= 60, 1 <= j <= m") {
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t j = 1; j <= m; ++j) {
      const std::uint64_t g = std::gcd(m, j);
      const auto got = root_of_unity_log(CyclotomicNumber::zeta(m, static_cast<std::int64_t>(j)));
      CHECK_MESSAGE(got == rl(m / g, j / g), "m=" << m << " j=" << j);
    }
  }
}
