#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotsing/parse.hpp"

namespace quotsing {

struct ScanRow {
  std::string descriptor;
  std::size_t n = 0;
  std::size_t order = 0;
  BigRational mld;
  BigInt index = 1;
  bool bound_ok = false;
  bool smooth_ok = false;
  bool gor_ok = false;
  bool oracle_agree = false;
  std::vector<std::uint64_t> exponents;  // cyclic rows only; sort key after (n, order)

  bool operator==(const ScanRow&) const = default;
};

struct ScanFilters {
  std::optional<BigRational> mld;
  /// Keep one tuple per orbit of e -> u e mod d, gcd(u, d) = 1.
  bool up_to_iso = false;
};

/// Sorted exponent tuples 1 <= e_1 <= ... <= e_n <= d of faithful,
/// pseudo-reflection-free cyclic groups of order d.
std::vector<std::vector<std::uint64_t>> cyclic_types(std::size_t n, std::uint64_t d, bool up_to_iso = false);

/// gcd(d, e_1, ..., e_n) = 1.
bool is_faithful(std::uint64_t d, const std::vector<std::uint64_t>& e);
/// Faithful 1/d(e) contains a pseudo-reflection iff some n-1 of the e_j share
/// a factor with d.
bool has_pseudo_reflection(std::uint64_t d, const std::vector<std::uint64_t>& e);

/// Both computation paths for one cyclic type; throws OracleDisagreement
/// naming the descriptor when they differ.
ScanRow analyze_cyclic(const CyclicSpec& spec);

std::vector<ScanRow> scan_cyclic(std::size_t n, std::uint64_t d_max, const ScanFilters& filters = {});

/// Canonical row order: (n, order, exponent tuple), then descriptor.
void sort_rows(std::vector<ScanRow>& rows);

struct IndexCell {
  std::size_t n = 0;
  BigRational mld;
  BigInt max_index = 1;
  std::string witness;  // first row attaining the max
  std::size_t rows = 0;
  bool gorenstein_cell = false;  // mld = n - 1 and max index 1
};

/// Max index per (n, mld), sorted by n then mld.
std::vector<IndexCell> empirical_index_table(const std::vector<ScanRow>& rows);

}  // namespace quotsing
