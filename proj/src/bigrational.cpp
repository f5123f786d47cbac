#include "quotsing/bigrational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "quotsing/error.hpp"

namespace quotsing {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotARootOfUnity: return "NotARootOfUnity";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorKind::PseudoReflectionPresent: return "PseudoReflectionPresent";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::NotQGorenstein: return "NotQGorenstein";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotASubgroupOfG: return "NotASubgroupOfG";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::HNotAbelianNormal: return "HNotAbelianNormal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt from_u128(u128 v) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  hi <<= 64;
  hi += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return hi;
}

BigInt from_i128(i128 v) {
  if (v >= 0) return from_u128(static_cast<u128>(v));
  return -from_u128(static_cast<u128>(-(v + 1)) + 1);
}

bool fits_small(i128 v) { return v > kMin && v <= kMax; }

}  // namespace

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  assign_i128(num, den);
}

BigRational::BigRational(const BigInt& value) { assign_mpq(mpq_class(value)); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign_mpq(std::move(q));
}

BigRational::BigRational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  assign_mpq(std::move(q));
}

void BigRational::copy_big(const BigRational& other) { big_ = std::make_unique<mpq_class>(*other.big_); }

BigRational& BigRational::operator=(const BigRational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void BigRational::assign_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (fits_small(num) && fits_small(den)) {
    std::int64_t n = static_cast<std::int64_t>(num), d = static_cast<std::int64_t>(den);
    if (d != 1) {
      const std::int64_t g = std::gcd(n, d);
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
    big_.reset();
    return;
  }
  if (den != 1) {
    u128 g = gcd128(static_cast<u128>(num < 0 ? -num : num), static_cast<u128>(den));
    if (g != 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  if (fits_small(num) && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(from_i128(num), from_i128(den));
    num_ = 0;
    den_ = 1;
  }
}

void BigRational::assign_mpq(mpq_class&& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
  }
}

BigRational BigRational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  if (!valid_int(num_text, true)) {
    throw Error(ErrorKind::ParseError, "invalid rational '" + std::string(text) + "'");
  }
  BigInt num(std::string(strip_plus(num_text)));
  if (slash == std::string_view::npos) return BigRational(num);
  std::string_view den_text = text.substr(slash + 1);
  if (!valid_int(den_text, false)) {
    throw Error(ErrorKind::ParseError, "invalid rational '" + std::string(text) + "'");
  }
  return BigRational(num, BigInt(std::string(den_text)));
}

BigInt BigRational::numerator() const {
  if (big_) return big_->get_num();
  return BigInt(static_cast<long>(num_));
}

BigInt BigRational::denominator() const {
  if (big_) return big_->get_den();
  return BigInt(static_cast<long>(den_));
}

mpq_class BigRational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool BigRational::is_integer() const noexcept {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int BigRational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

double BigRational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

void BigRational::throw_not_int64() const {
  throw Error(ErrorKind::InvalidWeights, "value " + to_string() + " is not a 64-bit integer");
}

BigInt BigRational::floor() const {
  BigInt n = numerator(), d = denominator(), q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigRational BigRational::frac() const {
  if (!big_) {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    BigRational out;
    out.num_ = r;
    out.den_ = r == 0 ? 1 : den_;
    return out;
  }
  return *this - BigRational(floor());
}

BigInt BigRational::ceil() const {
  BigInt n = numerator(), d = denominator(), q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational BigRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  BigRational r;
  if (big_) {
    mpq_class q = 1 / *big_;
    r.assign_mpq(std::move(q));
  } else {
    r.assign_i128(den_, num_);
  }
  return r;
}

std::string BigRational::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t BigRational::hash() const noexcept {
  if (big_) {
    std::size_t h = mpz_get_ui(mpq_numref(big_->get_mpq_t())) * 0x9e3779b97f4a7c15ULL;
    h ^= mpz_get_ui(mpq_denref(big_->get_mpq_t())) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(mpz_size(mpq_numref(big_->get_mpq_t())));
  }
  std::size_t h = static_cast<std::size_t>(num_) * 0x9e3779b97f4a7c15ULL;
  return h ^ (static_cast<std::size_t>(den_) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2));
}

BigRational BigRational::operator-() const {
  BigRational r;
  if (big_) {
    mpq_class q = -*big_;
    r.assign_mpq(std::move(q));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  BigRational r;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
        r.num_ = s;
        return r;
      }
      r.assign_i128(static_cast<i128>(a.num_) + b.num_, 1);
      return r;
    }
    if (a.den_ == b.den_) {
      r.assign_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    } else {
      r.assign_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                    static_cast<i128>(a.den_) * b.den_);
    }
    return r;
  }
  r.assign_mpq(a.to_mpq() + b.to_mpq());
  return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  BigRational r;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s) && s != kMin) {
        r.num_ = s;
        return r;
      }
      r.assign_i128(static_cast<i128>(a.num_) - b.num_, 1);
      return r;
    }
    if (a.den_ == b.den_) {
      r.assign_i128(static_cast<i128>(a.num_) - b.num_, a.den_);
    } else {
      r.assign_i128(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                    static_cast<i128>(a.den_) * b.den_);
    }
    return r;
  }
  r.assign_mpq(a.to_mpq() - b.to_mpq());
  return r;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  BigRational r;
  if (a.is_zero() || b.is_zero()) return r;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
        r.num_ = p;
        return r;
      }
      r.assign_i128(static_cast<i128>(a.num_) * b.num_, 1);
      return r;
    }
    r.assign_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    return r;
  }
  r.assign_mpq(a.to_mpq() * b.to_mpq());
  return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  BigRational r;
  if (a.is_zero()) return r;
  if (!a.big_ && !b.big_) {
    r.assign_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    return r;
  }
  r.assign_mpq(a.to_mpq() / b.to_mpq());
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  if (!big_ && !rhs.big_ && den_ == 1 && rhs.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(num_, rhs.num_, &s) && s != kMin) {
      num_ = s;
      return *this;
    }
  }
  return *this = *this + rhs;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  if (!big_ && !rhs.big_ && den_ == 1 && rhs.den_ == 1) {
    std::int64_t s;
    if (!__builtin_sub_overflow(num_, rhs.num_, &s) && s != kMin) {
      num_ = s;
      return *this;
    }
  }
  return *this = *this - rhs;
}

BigRational& BigRational::operator*=(const BigRational& rhs) { return *this = *this * rhs; }
BigRational& BigRational::operator/=(const BigRational& rhs) { return *this = *this / rhs; }

void BigRational::add_product(const BigRational& a, const BigRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t p, s;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) && s != kMin) {
      num_ = s;
      return;
    }
  }
  *this = *this + a * b;
}

bool operator==(const BigRational& a, const BigRational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace quotsing
