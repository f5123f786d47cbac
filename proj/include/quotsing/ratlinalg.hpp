#pragma once

#include <optional>
#include <vector>

#include "quotsing/bigrational.hpp"

namespace quotsing {

using RatVector = std::vector<BigRational>;
using RatMatrix = std::vector<RatVector>;  // row-major

struct RowReduction {
  RatMatrix rref;
  std::vector<std::size_t> pivot_columns;
};

RowReduction reduced_row_echelon(RatMatrix a);
std::size_t rank(const RatMatrix& a);

/// Basis of {x : a x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t columns);

/// A solution of a x = b with free variables set to zero, or nullopt.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t columns);

RatMatrix inverse(const RatMatrix& a);
BigRational determinant(const RatMatrix& a);
RatMatrix transpose(const RatMatrix& a, std::size_t columns);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
BigRational dot(const RatVector& a, const RatVector& b);
/// Row vector times matrix.
RatVector row_times(const RatVector& x, const RatMatrix& a);
RatMatrix identity_matrix(std::size_t n);

}  // namespace quotsing
