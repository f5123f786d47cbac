#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quotsing/cyclotomic.hpp"

namespace quotsing {

inline constexpr std::size_t kDefaultClosureCap = 20000;
inline constexpr std::uint64_t kDefaultOrderCap = 100000;

/// Invertible n x n matrix over Q(zeta_m), all entries at the same conductor.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::size_t n, std::uint64_t conductor, std::vector<CyclotomicNumber> entries);

  static GroupElement identity(std::size_t n, std::uint64_t conductor);
  /// diag(zeta_m^k_1, ..., zeta_m^k_n).
  static GroupElement diagonal(std::uint64_t conductor, const std::vector<std::int64_t>& zeta_exponents);
  /// Rational matrix placed in Q(zeta_m).
  static GroupElement from_rational(const std::vector<std::vector<BigRational>>& rows, std::uint64_t conductor);

  std::size_t dim() const noexcept { return n_; }
  std::uint64_t conductor() const noexcept { return m_; }
  const CyclotomicNumber& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<CyclotomicNumber>& entries() const noexcept { return entries_; }

  bool is_identity() const;
  bool is_diagonal() const;

  CyclotomicNumber trace() const;
  CyclotomicNumber det() const;
  /// rank(g - I) by exact elimination over Q(zeta_m).
  std::size_t rank_minus_identity() const;
  GroupElement inverse() const;
  GroupElement embed(std::uint64_t target) const;
  GroupElement pow(std::uint64_t k) const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t m_ = 1;
  std::vector<CyclotomicNumber> entries_;
};

/// Smallest d >= 1 with g^d = 1.
std::uint64_t element_order(const GroupElement& g, std::uint64_t cap = kDefaultOrderCap);

/// g != 1 and rank(g - I) = 1.
bool is_pseudo_reflection(const GroupElement& g);

struct ConjugacyClasses {
  /// Each class is sorted; classes are ordered by their smallest index.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

/// Finite subgroup of GL_n(Q(zeta_m)) given by generators and its full
/// element list (identity first, then breadth-first insertion order).
/// Immutable once closed; derived data is computed lazily and shared.
class FiniteMatrixGroup {
 public:
  /// Breadth-first closure. Throws CapExceeded when more than `cap` elements
  /// appear (an infinite group or an input that is too large).
  static FiniteMatrixGroup close(std::vector<GroupElement> generators, std::size_t cap = kDefaultClosureCap);
  static FiniteMatrixGroup trivial(std::size_t n, std::uint64_t conductor);
  /// The cyclic group generated by diag(zeta_d^e_1, ..., zeta_d^e_n), listed as
  /// g^0, g^1, ... without any matrix products. Same element order as `close`.
  static FiniteMatrixGroup cyclic_diagonal(std::uint64_t d, const std::vector<std::uint64_t>& e,
                                           std::size_t cap = kDefaultClosureCap);

  std::size_t dim() const noexcept { return n_; }
  std::uint64_t conductor() const noexcept { return m_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const GroupElement& g) const;
  /// index_of(element(i) * element(j)), computed by table lookups.
  std::size_t product_index(std::size_t i, std::size_t j) const;
  /// index_of(element(i) * generators()[s]), from the closure table.
  std::size_t right_multiply_generator(std::size_t i, std::size_t s) const;
  std::uint64_t order_of(std::size_t i) const;
  std::size_t inverse_index(std::size_t i) const;

  /// True when the generators commute pairwise.
  bool is_abelian() const;
  const ConjugacyClasses& conjugacy_classes() const;
  /// lcm of element orders.
  std::uint64_t exponent() const;

 private:
  struct Lazy;

  std::size_t n_ = 0;
  std::uint64_t m_ = 1;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<GroupElement> elements_;
  std::shared_ptr<Lazy> lazy_;
};

std::vector<std::size_t> pseudo_reflection_indices(const FiniteMatrixGroup& g);
std::vector<GroupElement> pseudo_reflections(const FiniteMatrixGroup& g);

}  // namespace quotsing

template <>
struct std::hash<quotsing::GroupElement> {
  std::size_t operator()(const quotsing::GroupElement& g) const noexcept { return g.hash(); }
};
