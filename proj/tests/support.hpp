#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "quotsing/catalog.hpp"
#include "quotsing/cyclotomic.hpp"
#include "quotsing/matgroup.hpp"
#include "quotsing/ratlinalg.hpp"

namespace testing_support {

using namespace quotsing;

inline constexpr std::uint64_t kSeed = 0x5eed2024ULL;

inline BigRational q(std::int64_t p, std::int64_t d = 1) { return BigRational(p, d); }

inline RatVector rv(std::initializer_list<BigRational> xs) { return RatVector(xs); }

inline GroupElement mat2(std::uint64_t m, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return GroupElement::from_rational({{q(a), q(b)}, {q(c), q(d)}}, m);
}

inline GroupElement diag(std::uint64_t m, std::vector<std::int64_t> k) { return GroupElement::diagonal(m, k); }

/// Numeric value of sum c_k zeta_m^k with zeta_m = exp(2 pi i / m).
inline std::complex<long double> evaluate(const CyclotomicNumber& a) {
  const long double pi = 3.141592653589793238462643383279502884L;
  std::complex<long double> s = 0;
  const auto& c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const long double t = 2 * pi * static_cast<long double>(k) / static_cast<long double>(a.conductor());
    s += static_cast<long double>(c[k].to_double()) * std::polar(1.0L, t);
  }
  return s;
}

/// Naive closure: multiply everything found so far by everything, until no
/// new element appears. Hash set keyed on the exact entries.
inline std::unordered_set<GroupElement> naive_closure(const std::vector<GroupElement>& gens) {
  std::unordered_set<GroupElement> set;
  std::vector<GroupElement> list;
  auto add = [&](const GroupElement& g) {
    if (set.insert(g).second) list.push_back(g);
  };
  add(GroupElement::identity(gens.front().dim(), gens.front().conductor()));
  for (const auto& g : gens) add(g);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<GroupElement> snapshot = list;
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        const std::size_t before = list.size();
        add(a * b);
        grew = grew || list.size() != before;
      }
    }
  }
  return set;
}

/// Random unimodular integer matrix as a product of elementary moves, with its inverse.
struct Unimodular {
  RatMatrix p;
  RatMatrix p_inv;
};

inline Unimodular random_unimodular(std::size_t n, std::mt19937_64& rng, int moves = 6, int spread = 2) {
  RatMatrix p = identity_matrix(n);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-spread, spread);
    for (int t = 0; t < moves; ++t) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      const BigRational c(coef(rng));
      for (std::size_t k = 0; k < n; ++k) p[i][k] += c * p[j][k];
      if (rng() % 3 == 0) std::swap(p[i], p[j]);
    }
  }
  return {p, inverse(p)};
}

inline GroupElement conjugate_by(const GroupElement& g, const Unimodular& u) {
  return GroupElement::from_rational(u.p, g.conductor()) * g * GroupElement::from_rational(u.p_inv, g.conductor());
}

/// The groups the nonabelian criteria quantify over.
inline std::vector<NamedGroup> nonabelian_suite() { return reference_suite(); }

}  // namespace testing_support
