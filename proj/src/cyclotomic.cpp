#include "quotsing/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "quotsing/error.hpp"

namespace quotsing {

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

int mobius(std::uint64_t m) {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

namespace {

const std::vector<BigInt>& cyclotomic_polynomial_memo(std::uint64_t m,
                                                      std::map<std::uint64_t, std::vector<BigInt>>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<BigInt>& divisor = cyclotomic_polynomial_memo(d, memo);
    std::size_t deg = divisor.size() - 1;
    std::size_t top = poly.size() - 1;
    std::vector<BigInt> quotient(top - deg + 1, 0);
    for (std::size_t k = top + 1; k-- > deg;) {
      BigInt c = poly[k];
      if (c == 0) continue;
      quotient[k - deg] = c;
      for (std::size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= c * divisor[j];
    }
    poly = std::move(quotient);
  }
  return memo[m] = std::move(poly);
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::NotADivisor, "conductor must be positive");
  std::map<std::uint64_t, std::vector<BigInt>> memo;
  return cyclotomic_polynomial_memo(m, memo);
}

namespace {

std::unique_ptr<CyclotomicContext> build_context(std::uint64_t m) {
  auto ctx = std::make_unique<CyclotomicContext>();
  ctx->m = m;
  std::vector<BigInt> poly = cyclotomic_polynomial(m);
  ctx->phi = poly.size() - 1;
  ctx->zeros.resize(ctx->phi);
  for (std::size_t j = 0; j < ctx->phi; ++j) {
    if (poly[j] == 0) continue;
    if (!poly[j].fits_slong_p()) throw Error(ErrorKind::NotADivisor, "conductor too large");
    ctx->tail.emplace_back(j, poly[j].get_si());
  }
  const std::size_t phi = ctx->phi;
  ctx->powers.assign(m * phi, 0);
  std::vector<std::int64_t> cur(phi + 1, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    std::copy(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(phi), ctx->powers.begin() + static_cast<std::ptrdiff_t>(k * phi));
    // multiply by x, then fold the x^phi term back
    for (std::size_t j = phi; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    std::int64_t c = cur[phi];
    cur[phi] = 0;
    if (c != 0) {
      for (auto [j, t] : ctx->tail) {
        std::int64_t prod, diff;
        if (__builtin_mul_overflow(c, t, &prod) || __builtin_sub_overflow(cur[j], prod, &diff)) {
          throw Error(ErrorKind::NotADivisor, "conductor too large for power table");
        }
        cur[j] = diff;
      }
    }
  }
  ctx->power_lookup.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) ctx->power_lookup.emplace(CyclotomicContext::row_hash(ctx->power(k)), k);
  const std::uint64_t phi_m = phi;
  ctx->ramanujan.resize(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    std::uint64_t g = std::gcd(k, m);
    std::uint64_t q = m / g;
    ctx->ramanujan[k] = static_cast<std::int64_t>(mobius(q)) * static_cast<std::int64_t>(phi_m / euler_phi(q));
  }
  return ctx;
}

}  // namespace

const CyclotomicContext& cyclotomic_context(std::uint64_t m) {
  thread_local std::uint64_t last_m = 0;
  thread_local const CyclotomicContext* last_ctx = nullptr;
  if (m == last_m) return *last_ctx;
  if (m == 0) throw Error(ErrorKind::NotADivisor, "conductor must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<CyclotomicContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = build_context(m);
  last_m = m;
  last_ctx = slot.get();
  return *slot;
}

void reduce_modulo_cyclotomic(const CyclotomicContext& ctx, std::vector<BigRational>& poly) {
  const std::size_t phi = ctx.phi;
  for (std::size_t k = poly.size(); k-- > phi;) {
    if (poly[k].is_zero()) continue;
    const BigRational c = -poly[k];
    for (auto [j, t] : ctx.tail) poly[k - phi + j].add_product(c, BigRational(t));
  }
  poly.resize(phi);
}

CyclotomicNumber::CyclotomicNumber() : m_(1), coeffs_(1) {}

CyclotomicNumber CyclotomicNumber::zero(std::uint64_t m) {
  cyclotomic_context(m);
  return CyclotomicNumber(m, {});
}

std::vector<BigRational>& CyclotomicNumber::mutable_coeffs() {
  if (coeffs_.empty()) coeffs_.resize(cyclotomic_context(m_).phi);
  return coeffs_;
}

CyclotomicNumber CyclotomicNumber::one(std::uint64_t m) { return rational(BigRational(1), m); }

CyclotomicNumber CyclotomicNumber::rational(const BigRational& q, std::uint64_t m) {
  CyclotomicNumber r = zero(m);
  if (!q.is_zero()) r.mutable_coeffs()[0] = q;
  return r;
}

CyclotomicNumber CyclotomicNumber::zeta(std::uint64_t m, std::int64_t k) {
  const auto& ctx = cyclotomic_context(m);
  std::int64_t mm = static_cast<std::int64_t>(m);
  std::uint64_t e = static_cast<std::uint64_t>(((k % mm) + mm) % mm);
  auto row = ctx.power(e);
  std::vector<BigRational> coeffs(row.begin(), row.end());
  return CyclotomicNumber(m, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::from_coeffs(std::uint64_t m, std::vector<BigRational> coeffs) {
  if (coeffs.size() != cyclotomic_context(m).phi) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(cyclotomic_context(m).phi) + " coefficients for conductor " +
                    std::to_string(m));
  }
  return CyclotomicNumber(m, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::from_power_sum(std::uint64_t m, std::span<const BigRational> values) {
  const auto& ctx = cyclotomic_context(m);
  std::vector<BigRational> folded(std::max<std::size_t>(m, ctx.phi));
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k].is_zero()) folded[k % m] += values[k];
  }
  reduce_modulo_cyclotomic(ctx, folded);
  return CyclotomicNumber(m, std::move(folded));
}

bool CyclotomicNumber::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicNumber::is_one() const noexcept { return !coeffs_.empty() && coeffs_[0].is_one() && is_rational(); }

bool CyclotomicNumber::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

const BigRational& CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::NonIntegerMultiplicity, to_string() + " is not rational");
  return coeffs()[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r(*this);
  for (auto& c : r.coeffs_) {
    if (!c.is_zero()) c = -c;
  }
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (m_ != rhs.m_) throw Error(ErrorKind::ConductorMismatch, std::to_string(m_) + " vs " + std::to_string(rhs.m_));
  if (rhs.coeffs_.empty()) return *this;
  auto& c = mutable_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) c[i] += rhs.coeffs_[i];
  }
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  if (m_ != rhs.m_) throw Error(ErrorKind::ConductorMismatch, std::to_string(m_) + " vs " + std::to_string(rhs.m_));
  if (rhs.coeffs_.empty()) return *this;
  auto& c = mutable_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) c[i] -= rhs.coeffs_[i];
  }
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) { return *this = *this * rhs; }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber r = CyclotomicNumber::zero(a.m_);
  r.add_product(a, b);
  return r;
}

void CyclotomicNumber::add_product(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.m_ != b.m_ || a.m_ != m_) {
    throw Error(ErrorKind::ConductorMismatch, std::to_string(a.m_) + " vs " + std::to_string(b.m_));
  }
  if (a.coeffs_.empty() || b.coeffs_.empty()) return;
  const std::size_t phi = mutable_coeffs().size();
  if (phi == 1) {
    coeffs_[0].add_product(a.coeffs_[0], b.coeffs_[0]);
    return;
  }
  if (add_product_small(a, b)) return;
  std::vector<BigRational> prod(2 * phi - 1);
  bool any_high = false;
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
      any_high = any_high || (i + j >= phi);
    }
  }
  if (any_high) reduce_modulo_cyclotomic(cyclotomic_context(m_), prod);
  for (std::size_t i = 0; i < phi; ++i) {
    if (!prod[i].is_zero()) coeffs_[i] += prod[i];
  }
}

bool CyclotomicNumber::add_product_small(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  // Integral operands with word-sized coefficients: convolve and reduce in 128-bit arithmetic.
  constexpr std::int64_t kLimit = std::int64_t{1} << 31;
  constexpr __int128 kSafe = static_cast<__int128>(1) << 100;
  const std::size_t phi = coeffs_.size();
  auto small = [&](const std::vector<BigRational>& v) {
    for (const auto& x : v) {
      if (!x.fits_int64()) return false;
      std::int64_t y = x.to_int64();
      if (y >= kLimit || y <= -kLimit) return false;
    }
    return true;
  };
  if (!small(a.coeffs_) || !small(b.coeffs_) || !small(coeffs_)) return false;
  thread_local std::vector<__int128> prod;
  thread_local std::vector<std::int64_t> av, bv;
  prod.assign(2 * phi - 1, 0);
  av.resize(phi);
  bv.resize(phi);
  for (std::size_t i = 0; i < phi; ++i) {
    av[i] = a.coeffs_[i].to_int64();
    bv[i] = b.coeffs_[i].to_int64();
  }
  for (std::size_t i = 0; i < phi; ++i) {
    if (av[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (bv[j] != 0) prod[i + j] += static_cast<__int128>(av[i]) * bv[j];
    }
  }
  const auto& ctx = cyclotomic_context(m_);
  for (std::size_t k = 2 * phi - 2; k >= phi; --k) {
    const __int128 top = prod[k];
    if (top == 0) continue;
    if (top > kSafe || top < -kSafe) return false;
    prod[k] = 0;
    for (const auto& [e, c] : ctx.tail) prod[k - phi + e] -= top * c;
  }
  for (std::size_t i = 0; i < phi; ++i) {
    const __int128 v = prod[i] + coeffs_[i].to_int64();
    if (v > INT64_MAX || v < INT64_MIN) return false;
  }
  for (std::size_t i = 0; i < phi; ++i) {
    if (prod[i] != 0) coeffs_[i] = BigRational(static_cast<std::int64_t>(prod[i] + coeffs_[i].to_int64()));
  }
  return true;
}

CyclotomicNumber CyclotomicNumber::scaled(const BigRational& q) const {
  CyclotomicNumber r(*this);
  for (auto& c : r.coeffs_) {
    if (!c.is_zero()) c *= q;
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
  const std::size_t phi = coeffs_.size();
  if (phi == 1) return CyclotomicNumber(m_, {coeffs_[0].inverse()});
  // Solve (a * x) = 1 via the multiplication matrix: column k holds a * zeta^k.
  std::vector<std::vector<BigRational>> mat(phi, std::vector<BigRational>(phi + 1));
  for (std::size_t k = 0; k < phi; ++k) {
    CyclotomicNumber col = *this * zeta(m_, static_cast<std::int64_t>(k));
    for (std::size_t i = 0; i < phi; ++i) mat[i][k] = col.coeffs()[i];
  }
  mat[0][phi] = BigRational(1);
  for (std::size_t col = 0; col < phi; ++col) {
    std::size_t pivot = col;
    while (pivot < phi && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == phi) throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
    std::swap(mat[pivot], mat[col]);
    BigRational inv = mat[col][col].inverse();
    for (std::size_t j = col; j <= phi; ++j) {
      if (!mat[col][j].is_zero()) mat[col][j] *= inv;
    }
    for (std::size_t i = 0; i < phi; ++i) {
      if (i == col || mat[i][col].is_zero()) continue;
      BigRational f = -mat[i][col];
      for (std::size_t j = col; j <= phi; ++j) mat[i][j].add_product(f, mat[col][j]);
    }
  }
  std::vector<BigRational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = mat[i][phi];
  return CyclotomicNumber(m_, std::move(x));
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t k) const {
  CyclotomicNumber base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  CyclotomicNumber result = one(m_);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::embed(std::uint64_t target) const {
  if (target == 0 || target % m_ != 0) {
    throw Error(ErrorKind::NotADivisor, std::to_string(m_) + " does not divide " + std::to_string(target));
  }
  if (target == m_) return *this;
  const std::uint64_t step = target / m_;
  std::vector<BigRational> spread(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[i * step] = coeffs_[i];
  return from_power_sum(target, spread);
}

BigRational CyclotomicNumber::field_trace() const {
  const auto& ctx = cyclotomic_context(m_);
  BigRational t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) t.add_product(coeffs_[i], BigRational(ctx.ramanujan[i]));
  return t;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (c.is_zero()) continue;
    BigRational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "z" << m_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t CyclotomicNumber::hash() const noexcept {
  // Zero coefficients are skipped so both zero representations agree.
  std::size_t h = m_ * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) h = (h ^ (coeffs_[i].hash() + i * 0x632be59bd9b4e019ULL)) * 0x100000001b3ULL;
  }
  return h;
}

CyclotomicNumber primitive_root_in(std::uint64_t m, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::NotADivisor, "order must be positive");
  if (m % k == 0) return CyclotomicNumber::zeta(m, static_cast<std::int64_t>(m / k));
  if (m % 2 == 1 && (2 * m) % k == 0) {
    CyclotomicNumber z2m = -CyclotomicNumber::zeta(m, static_cast<std::int64_t>((m + 1) / 2));
    return z2m.pow(static_cast<std::int64_t>(2 * m / k));
  }
  throw Error(ErrorKind::NotADivisor, std::to_string(k) + " does not divide lcm(2, " + std::to_string(m) + ")");
}

RootOfUnityLog root_of_unity_log(const CyclotomicNumber& a) {
  const std::uint64_t m = a.conductor();
  if (a.is_zero()) throw Error(ErrorKind::NotARootOfUnity, "zero");
  // Roots of unity in Q(zeta_m) are exactly the +-zeta_m^j, so look them up in the power table.
  const auto& ctx = cyclotomic_context(m);
  const auto& c = a.coeffs();
  thread_local std::vector<std::int64_t> row;
  row.resize(ctx.phi);
  for (std::size_t i = 0; i < ctx.phi; ++i) {
    if (!c[i].fits_int64()) throw Error(ErrorKind::NotARootOfUnity, a.to_string());
    row[i] = c[i].small_num();
  }
  for (std::int64_t sign : {1, -1}) {
    auto [lo, hi] = ctx.power_lookup.equal_range(CyclotomicContext::row_hash(row, sign));
    for (auto it = lo; it != hi; ++it) {
      const std::uint64_t j = it->second;
      const auto p = ctx.power(j);
      bool match = true;
      for (std::size_t i = 0; i < ctx.phi && match; ++i) match = sign * row[i] == p[i];
      if (!match) continue;
      // zeta_m^j with j written over 2m when m is odd and the sign is negative; see primitive_root_in.
      std::uint64_t full = m, t = j;
      if (sign < 0) {
        if (m % 2 == 0) {
          t = (j + m / 2) % m;
        } else {
          full = 2 * m;
          t = (m + 2 * j) % full;
        }
      }
      if (t == 0) return {1, 1};
      const std::uint64_t g = std::gcd(full, t);
      return {full / g, t / g};
    }
  }
  throw Error(ErrorKind::NotARootOfUnity, a.to_string());
}

}  // namespace quotsing
