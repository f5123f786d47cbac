#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quotsing/bigrational.hpp"

namespace quotsing {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// transform * input = echelon, with transform unimodular. The first `rank`
/// rows of `echelon` are nonzero with strictly increasing pivot columns.
struct IntegerEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

IntegerEchelon integer_row_echelon(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`:
/// positive pivots, entries above each pivot reduced into [0, pivot). Only
/// the nonzero rows are returned.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Basis of the saturated lattice {x in Z^rows : x a = 0}.
IntMatrix integer_left_kernel(const IntMatrix& a);

/// u * a * v = s with u, v unimodular and s diagonal, s_ii | s_(i+1)(i+1).
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, nonnegative
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Word-sized variants. They return nullopt when an intermediate overflows;
/// callers then fall back to the BigInt versions.
using SmallMatrix = std::vector<std::vector<std::int64_t>>;

struct SmallSmithForm {
  SmallMatrix u;
  SmallMatrix v;
  SmallMatrix v_inverse;
  std::vector<std::int64_t> diagonal;
};

std::optional<SmallMatrix> hermite_normal_form_small(SmallMatrix a);
std::optional<SmallSmithForm> smith_normal_form_small(SmallMatrix a);

IntMatrix integer_identity(std::size_t n);
IntMatrix integer_multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace quotsing
