#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "quotsing/bigrational.hpp"

namespace quotsing {

std::uint64_t euler_phi(std::uint64_t m);
int mobius(std::uint64_t m);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(std::uint64_t m);

/// Precomputed data for Q(zeta_m). Contexts are created once per conductor
/// and shared; they are immutable after construction.
struct CyclotomicContext {
  std::uint64_t m = 1;
  std::size_t phi = 1;
  /// Phi_m with the leading 1 dropped: x^phi = -sum tail[j].second * x^tail[j].first.
  std::vector<std::pair<std::size_t, std::int64_t>> tail;
  /// Canonical coefficients of zeta_m^k for k in [0, m), row-major m x phi.
  std::vector<std::int64_t> powers;
  /// Ramanujan sums c_m(k) = Tr(zeta_m^k) for k in [0, m).
  std::vector<std::int64_t> ramanujan;
  /// phi zero coefficients, shared by every zero value.
  std::vector<BigRational> zeros;
  /// row_hash(power(k)) -> k, for matching roots of unity.
  std::unordered_multimap<std::uint64_t, std::uint64_t> power_lookup;

  static std::uint64_t row_hash(std::span<const std::int64_t> row, std::int64_t sign = 1) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : row) h = (h ^ static_cast<std::uint64_t>(sign * x)) * 0x100000001b3ULL;
    return h;
  }

  std::span<const std::int64_t> power(std::uint64_t k) const {
    return {powers.data() + (k % m) * phi, phi};
  }
};

const CyclotomicContext& cyclotomic_context(std::uint64_t m);

/// Exact element of Q(zeta_m), stored in the power basis modulo Phi_m.
///
/// Only Q(zeta_m) is modelled, not an algebraic closure: every finite matrix
/// group of exponent dividing m is conjugate into GL_n(Q(zeta_m)), which is
/// all the invariant computations need. Conductors never change implicitly;
/// use `embed` to move to a larger field.
class CyclotomicNumber {
 public:
  /// Zero in Q(zeta_1) = Q.
  CyclotomicNumber();

  static CyclotomicNumber zero(std::uint64_t m);
  static CyclotomicNumber one(std::uint64_t m);
  static CyclotomicNumber rational(const BigRational& q, std::uint64_t m);
  /// zeta_m^k for any integer k.
  static CyclotomicNumber zeta(std::uint64_t m, std::int64_t k);
  /// Takes canonical coefficients; the vector length must equal phi(m).
  static CyclotomicNumber from_coeffs(std::uint64_t m, std::vector<BigRational> coeffs);
  /// sum_k values[k] * zeta_m^k for a vector of any length (exponents taken mod m).
  static CyclotomicNumber from_power_sum(std::uint64_t m, std::span<const BigRational> values);

  std::uint64_t conductor() const noexcept { return m_; }
  const std::vector<BigRational>& coeffs() const {
    return coeffs_.empty() ? cyclotomic_context(m_).zeros : coeffs_;
  }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Value as a rational; only valid when is_rational().
  const BigRational& rational_value() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber scaled(const BigRational& q) const;

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(std::int64_t k) const;

  /// Image under zeta_m -> zeta_{target}^{target/m}.
  CyclotomicNumber embed(std::uint64_t target) const;

  /// Trace from Q(zeta_m) down to Q.
  BigRational field_trace() const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.m_ != b.m_) return false;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return a.is_zero() && b.is_zero();
    return a.coeffs_ == b.coeffs_;
  }

  /// Adds a*b into this, sharing the reduction step.
  void add_product(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  bool add_product_small(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber(std::uint64_t m, std::vector<BigRational> coeffs)
      : m_(m), coeffs_(std::move(coeffs)) {}
  std::vector<BigRational>& mutable_coeffs();

  std::uint64_t m_ = 1;
  // Empty means zero; anything that writes goes through mutable_coeffs().
  std::vector<BigRational> coeffs_;
};

/// Reduces sum_k poly[k] x^k modulo Phi_m in place and truncates to phi(m).
void reduce_modulo_cyclotomic(const CyclotomicContext& ctx, std::vector<BigRational>& poly);

struct RootOfUnityLog {
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  bool operator==(const RootOfUnityLog&) const = default;
};

/// Order k and exponent j with a = zeta_k^j, where zeta_k is the library's
/// primitive k-th root inside Q(zeta_m): zeta_m^{m/k} when k | m, and
/// -zeta_m^{(m+1)/2} as zeta_{2m} when m is odd.
RootOfUnityLog root_of_unity_log(const CyclotomicNumber& a);

/// zeta_k in the convention used by root_of_unity_log (k must divide lcm(2, m)).
CyclotomicNumber primitive_root_in(std::uint64_t m, std::uint64_t k);

}  // namespace quotsing

template <>
struct std::hash<quotsing::CyclotomicNumber> {
  std::size_t operator()(const quotsing::CyclotomicNumber& a) const noexcept { return a.hash(); }
};
