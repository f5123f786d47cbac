#pragma once

#include <string>
#include <vector>

#include "quotsing/matgroup.hpp"

namespace quotsing {

/// <diag(zeta_d^e_1, ..., zeta_d^e_n)> over Q(zeta_d).
FiniteMatrixGroup cyclic_group(std::uint64_t d, const std::vector<std::uint64_t>& e);

/// Binary dihedral group of order 4k in SL_2: <diag(zeta_2k, zeta_2k^-1), [[0,1],[-1,0]]>.
FiniteMatrixGroup binary_dihedral(std::uint64_t order);

/// Quaternion group of order 8 (the binary dihedral group of order 8).
FiniteMatrixGroup quaternion_group();

/// <diag(zeta_3, zeta_3), [[0,1],[-1,0]]>: cyclic of order 12 with det of order 3.
FiniteMatrixGroup mixed_determinant_group();

/// <zeta_3 I_2, Q8>: nonabelian of order 24 with det of order 3.
FiniteMatrixGroup scalar_quaternion_group();

/// <diag(1, zeta_3, zeta_3^2), cyclic permutation> in SL_3, order 27.
FiniteMatrixGroup heisenberg_group();

/// Rotation group of the cube in SO(3), order 24.
FiniteMatrixGroup cube_rotation_group();

/// <Q8 + 1, zeta_3 I_3> in GL_3, order 24.
FiniteMatrixGroup quaternion_plus_scalar_group();

struct NamedGroup {
  std::string name;
  FiniteMatrixGroup group;
};

/// The fixed reference suite of non-cyclic-diagonal groups.
std::vector<NamedGroup> reference_suite();

}  // namespace quotsing
