#include "quotsing/catalog.hpp"

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

GroupElement integer_matrix(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t m) {
  std::vector<std::vector<BigRational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (auto x : r) q.back().emplace_back(x);
  }
  return GroupElement::from_rational(q, m);
}

GroupElement scalar(std::size_t n, std::uint64_t m, std::int64_t k) {
  return GroupElement::diagonal(m, std::vector<std::int64_t>(n, k));
}

}  // namespace

FiniteMatrixGroup cyclic_group(std::uint64_t d, const std::vector<std::uint64_t>& e) {
  std::vector<std::int64_t> k;
  for (auto x : e) {
    if (x < 1 || x > d) throw Error(ErrorKind::InvalidWeights, "exponent " + std::to_string(x) + " outside 1..d");
    k.push_back(static_cast<std::int64_t>(x));
  }
  return FiniteMatrixGroup::close({GroupElement::diagonal(d, k)});
}

FiniteMatrixGroup binary_dihedral(std::uint64_t order) {
  if (order < 8 || order % 4 != 0) throw Error(ErrorKind::InvalidWeights, "binary dihedral order must be 4k, k >= 2");
  const std::uint64_t m = order / 2;
  return FiniteMatrixGroup::close(
      {GroupElement::diagonal(m, {1, -1}), integer_matrix({{0, 1}, {-1, 0}}, m)});
}

FiniteMatrixGroup quaternion_group() { return binary_dihedral(8); }

FiniteMatrixGroup mixed_determinant_group() {
  return FiniteMatrixGroup::close({GroupElement::diagonal(12, {4, 4}), integer_matrix({{0, 1}, {-1, 0}}, 12)});
}

FiniteMatrixGroup scalar_quaternion_group() {
  return FiniteMatrixGroup::close({scalar(2, 12, 4), GroupElement::diagonal(12, {3, -3}),
                                   integer_matrix({{0, 1}, {-1, 0}}, 12)});
}

FiniteMatrixGroup heisenberg_group() {
  return FiniteMatrixGroup::close(
      {GroupElement::diagonal(3, {0, 1, 2}), integer_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 3)});
}

FiniteMatrixGroup cube_rotation_group() {
  return FiniteMatrixGroup::close({integer_matrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, 1),
                                   integer_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 1)});
}

FiniteMatrixGroup quaternion_plus_scalar_group() {
  return FiniteMatrixGroup::close({GroupElement::diagonal(12, {3, -3, 0}),
                                   integer_matrix({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}, 12), scalar(3, 12, 4)});
}

std::vector<NamedGroup> reference_suite() {
  std::vector<NamedGroup> out;
  out.push_back({"quaternion_8", quaternion_group()});
  for (std::uint64_t order : {8, 12, 16, 20, 24}) {
    out.push_back({"binary_dihedral_" + std::to_string(order), binary_dihedral(order)});
  }
  out.push_back({"mixed_determinant_12", mixed_determinant_group()});
  out.push_back({"scalar_quaternion_24", scalar_quaternion_group()});
  out.push_back({"heisenberg_27", heisenberg_group()});
  out.push_back({"cube_rotations_24", cube_rotation_group()});
  out.push_back({"quaternion_plus_scalar_24", quaternion_plus_scalar_group()});
  return out;
}

}  // namespace quotsing
