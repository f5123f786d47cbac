#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace quotsing {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline and handled with 128-bit intermediates; larger values live in
/// a GMP rational. The split is canonical: a value that fits inline is never
/// held in the GMP form, so equality is a field-by-field comparison.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I> && sizeof(I) <= 8) {
      if (value > INT64_MIN) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
      assign_i128(static_cast<__int128>(value), 1);
    } else if constexpr (std::is_signed_v<I>) {
      assign_i128(static_cast<__int128>(value), 1);
    } else {
      assign_i128(static_cast<__int128>(static_cast<unsigned __int128>(value)), 1);
    }
  }
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(const BigInt& value);
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& value);

  BigRational(const BigRational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) copy_big(other);
  }
  BigRational(BigRational&& other) noexcept = default;
  BigRational& operator=(const BigRational& other);
  BigRational& operator=(BigRational&& other) noexcept = default;
  ~BigRational() = default;

  /// Parses "p" or "p/q" (optional leading sign, decimal digits only).
  static BigRational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  mpq_class to_mpq() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept;
  int sign() const noexcept;

  /// Numerator and denominator both fit in int64 (the inline representation).
  bool is_small() const noexcept { return !big_; }
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  /// True when the value is an integer representable as int64.
  bool fits_int64() const noexcept { return !big_ && den_ == 1; }
  std::int64_t to_int64() const {
    if (!fits_int64()) throw_not_int64();
    return num_;
  }
  double to_double() const;

  BigInt floor() const;
  /// q - floor(q), in [0, 1).
  BigRational frac() const;
  BigInt ceil() const;
  BigRational abs() const;
  BigRational inverse() const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  /// this += a * b without materialising the product when everything is small.
  void add_product(const BigRational& a, const BigRational& b);

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  friend bool operator==(const BigRational& a, const BigRational& b) noexcept;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  [[noreturn]] void throw_not_int64() const;
  void copy_big(const BigRational& other);
  void assign_i128(__int128 num, __int128 den);
  void assign_mpq(mpq_class&& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace quotsing

template <>
struct std::hash<quotsing::BigRational> {
  std::size_t operator()(const quotsing::BigRational& q) const noexcept { return q.hash(); }
};
