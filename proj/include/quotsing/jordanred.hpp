#pragma once

#include <cstdint>
#include <vector>

#include "quotsing/matgroup.hpp"

namespace quotsing {

/// Full multiplication table of a closed group, by element index.
class CayleyTable {
 public:
  explicit CayleyTable(const FiniteMatrixGroup& g);

  const FiniteMatrixGroup& group() const noexcept { return *group_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t product(std::size_t i, std::size_t j) const { return table_[i * order_ + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t conjugate(std::size_t g, std::size_t h) const { return product(product(g, h), inverse(g)); }
  std::size_t power(std::size_t i, std::uint64_t k) const;
  bool commute(std::size_t i, std::size_t j) const { return product(i, j) == product(j, i); }

 private:
  const FiniteMatrixGroup* group_;
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

struct SubgroupWitness {
  std::vector<std::size_t> elements;  // sorted indices into the parent group
  bool is_abelian = false;
  bool is_normal = false;
  std::size_t index = 1;               // [G:H]
  std::uint64_t quotient_exponent = 1;  // exponent of G/H
  bool heuristic = false;              // search was not exhaustive

  bool contains(std::size_t i) const;
};

/// Closes the given elements inside G and records abelian/normal/index data.
SubgroupWitness verify_subgroup(const CayleyTable& table, const std::vector<std::size_t>& generators);

/// Largest abelian normal subgroup; ties go to the lexicographically smallest
/// index set. Exhaustive for |G| <= 512, greedy (and flagged) above.
SubgroupWitness find_abelian_normal(const CayleyTable& table);

/// Every maximal abelian normal subgroup (exhaustive for |G| <= 512).
std::vector<SubgroupWitness> maximal_abelian_normal_subgroups(const CayleyTable& table);

/// Center of G.
SubgroupWitness center(const CayleyTable& table);

struct HPrime {
  std::size_t element = 0;
  bool in_subgroup = false;
  bool centralized = false;  // g h' g^-1 = h'
  bool det_ok = false;       // det(h') = det(h)^c'
  bool ok() const { return in_subgroup && centralized && det_ok; }
};

/// h' = prod_{i < c'} g^i h g^-i. Throws HNotAbelianNormal when H is not
/// abelian and normal or h is outside H, InvalidExponent when g^c' is not in H.
HPrime construct_h_prime(const CayleyTable& table, const SubgroupWitness& h_sub, std::size_t g, std::size_t h,
                         std::uint64_t c_prime);

struct DivisibilityReport {
  std::uint64_t d_g = 1;
  std::uint64_t d_h = 1;
  std::size_t index = 1;
  std::uint64_t exponent = 1;
  std::uint64_t c_prime = 1;
  bool divides = false;
  bool h_prime_checks = false;  // every (g, h) pair with this c'
};

/// c_prime = 0 selects [G:H]; any other value must be a multiple of the
/// order of every gH in G/H (InvalidExponent otherwise).
DivisibilityReport divisibility_report(const CayleyTable& table, const SubgroupWitness& h_sub,
                                       std::uint64_t c_prime = 0);

}  // namespace quotsing
