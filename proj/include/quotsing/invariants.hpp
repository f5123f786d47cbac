#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quotsing/matgroup.hpp"

namespace quotsing {

/// Eigenvalues of a finite-order g written as zeta_d^{e_i}, 1 <= e_i <= d,
/// where d is the order of g. Eigenvalue 1 is recorded as e = d.
struct EigenExponents {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> exps;                        // ascending
  /// (exponent, multiplicity) for the distinct exponents, ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> multiplicities;

  std::size_t dim() const noexcept { return exps.size(); }
  /// sum e_i / d.
  BigRational age_prime() const;
  /// age_prime minus the multiplicity of eigenvalue 1.
  BigRational age() const;
  /// #{i : e_i < d}.
  std::size_t ell() const;
  /// Exponents of g^k.
  EigenExponents power(std::uint64_t k) const;

  bool operator==(const EigenExponents& o) const { return order == o.order && exps == o.exps; }

  /// Builds the record from exponents in 1..d, in any order.
  static EigenExponents from_exponents(std::uint64_t d, std::vector<std::uint64_t> exps);
};

/// Multiplicities from m_e = (1/d) sum_j zeta_d^{-ej} tr(g^j) in Q(zeta_lcm(m, d));
/// diagonal matrices are read off directly.
EigenExponents eigen_exponents(const GroupElement& g);

/// Same, with the traces tr(g^0), ..., tr(g^{d-1}) already at hand.
EigenExponents eigen_exponents_from_traces(std::size_t n, const std::vector<CyclotomicNumber>& traces);

BigRational age_prime(const GroupElement& g);
BigRational age_usual(const GroupElement& g);

/// Per-conjugacy-class eigen data, shared by every group invariant.
struct GroupAnalysis {
  std::vector<EigenExponents> class_exponents;  // indexed like conjugacy_classes().classes
  std::vector<std::size_t> inverse_class;       // class of g^{-1} for g in class c
};

/// Classes are visited in order; a representative's powers inherit exponents
/// through EigenExponents::power, so a cyclic group needs one trace walk.
GroupAnalysis analyze(const FiniteMatrixGroup& g);

/// lcm of the orders of det(s) over generators s. No pseudo-reflection check.
std::uint64_t determinant_index(const FiniteMatrixGroup& g);

/// determinant_index, after rejecting groups that contain pseudo-reflections.
std::uint64_t gorenstein_index(const FiniteMatrixGroup& g);

struct MldResult {
  BigRational value;
  std::size_t witness = 0;  // smallest element index attaining the minimum
};

MldResult mld(const FiniteMatrixGroup& g);
MldResult mld(const FiniteMatrixGroup& g, const GroupAnalysis& analysis);
BigRational total_mld(const FiniteMatrixGroup& g);
BigRational total_mld(const FiniteMatrixGroup& g, const GroupAnalysis& analysis);

/// age'(g) + age'(g^-1) against 2n - ell(g) for one class representative.
struct PairingCheck {
  std::size_t representative = 0;
  std::size_t inverse_representative = 0;
  BigRational age_prime;
  BigRational inverse_age_prime;
  std::size_t ell = 0;
  bool ok = false;
};

struct SingularityReport {
  std::size_t n = 0;
  std::size_t order = 0;
  BigRational mld;
  std::optional<BigRational> total_mld;  // absent for the trivial group
  std::uint64_t index = 1;
  std::size_t mld_witness = 0;
  bool bound_ok = false;
  bool smooth_iff_trivial_ok = false;
  bool gorenstein_ok = false;
  bool pairing_ok = false;
  std::vector<PairingCheck> pairings;  // nonidentity class representatives

  bool all_ok() const { return bound_ok && smooth_iff_trivial_ok && gorenstein_ok && pairing_ok; }
};

SingularityReport shokurov_report(const FiniteMatrixGroup& g);
SingularityReport shokurov_report(const FiniteMatrixGroup& g, const GroupAnalysis& analysis);

/// Throws PseudoReflectionPresent listing every offending element index.
void require_no_pseudo_reflections(const FiniteMatrixGroup& g);

}  // namespace quotsing
