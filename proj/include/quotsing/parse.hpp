#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quotsing/matgroup.hpp"
#include "quotsing/toriclat.hpp"

namespace quotsing {

/// Cyclic type 1/d(e_1, ..., e_n).
struct CyclicSpec {
  std::uint64_t d = 1;
  std::vector<std::uint64_t> e;
  /// The generator itself is a pseudo-reflection (n-1 exponents equal d).
  bool pseudo_reflection = false;

  std::string descriptor() const;
  RatVector weights() const;
  FiniteMatrixGroup group(std::size_t cap = kDefaultClosureCap) const;
};

struct GroupSpec {
  std::size_t n = 0;
  std::uint64_t conductor = 1;
  std::vector<GroupElement> generators;
  std::string name;
};

struct ConeSpec {
  QuotLattice lattice;
  std::vector<RatVector> rays;
  std::optional<std::vector<std::size_t>> face;
};

using InputSpec = std::variant<CyclicSpec, GroupSpec, ConeSpec>;

/// "1/d(e1,...,en)" with optional whitespace. ParseError carries the byte
/// offset; InvalidWeights flags exponents outside 1..d.
CyclicSpec parse_cyclic(std::string_view text);

/// Cyclic shorthand, group JSON, or cone JSON (detected by shape).
InputSpec parse_input(std::string_view text);

/// Reads a file, or treats the argument itself as input when no such file exists.
InputSpec parse_input_argument(const std::string& argument);

/// Closure cap from QUOTSING_CAP when set, else the default.
std::size_t closure_cap_from_env();

/// Closes a spec (cyclic or explicit generators) into a group.
FiniteMatrixGroup group_from_spec(const InputSpec& spec, std::size_t cap);

/// Cone and lattice from a spec; a cyclic spec becomes the standard cone over
/// its weight lattice.
ConeSpec cone_from_spec(const InputSpec& spec);

}  // namespace quotsing
