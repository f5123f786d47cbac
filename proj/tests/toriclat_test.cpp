#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "quotsing/error.hpp"
#include "quotsing/invariants.hpp"
#include "quotsing/scan.hpp"
#include "quotsing/toriclat.hpp"
#include "support.hpp"

using namespace quotsing;
using namespace testing_support;

namespace {

QuotLattice weights(std::size_t n, std::vector<RatVector> w) { return lattice_from_weights(n, w); }

// Every point of (0,1]^n with coordinates in (1/D)Z, filtered by membership.
std::vector<RatVector> box_by_membership(const QuotLattice& lattice, std::int64_t D) {
  const std::size_t n = lattice.dim();
  std::vector<RatVector> out;
  std::vector<std::int64_t> k(n, 1);
  while (true) {
    RatVector p;
    for (auto x : k) p.emplace_back(x, D);
    if (lattice.contains(p)) out.push_back(p);
    std::size_t i = 0;
    while (i < n && k[i] == D) k[i++] = 1;
    if (i == n) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t common_denominator(const std::vector<RatVector>& ws) {
  std::int64_t d = 1;
  for (const auto& w : ws) {
    for (const auto& x : w) d = std::lcm(d, x.denominator().get_si());
  }
  return d;
}

BigRational coordinate_sum(const RatVector& v) {
  BigRational s;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("lattice_from_weights") {
  CHECK(weights(2, {}).index_over_Zn() == 1);
  CHECK(weights(2, {}) == QuotLattice::standard(2));
  const auto l3 = weights(2, {rv({q(1, 3), q(1, 3)})});
  CHECK(l3.index_over_Zn() == 3);
  const auto l4 = weights(2, {rv({q(1, 4), q(3, 4)})});
  CHECK(l4.index_over_Zn() == 4);
  // Determinant oracle: the index is 1 / |det basis|.
  CHECK(determinant(l4.basis()).abs() == q(1, 4));
  CHECK(l4.contains(rv({q(1, 2), q(1, 2)})));
  CHECK_FALSE(l4.contains(rv({q(1, 2), q(0)})));
  CHECK_THROWS_AS(weights(2, {rv({q(0), q(1, 2)})}), Error);
  CHECK_THROWS_AS(weights(2, {rv({q(1, 2)})}), Error);
  CHECK_THROWS_AS(QuotLattice::from_generators(2, {rv({q(1), q(1)})}), Error);
}

TEST_CASE("box_points: listed values") {
  CHECK(box_points(QuotLattice::standard(2)) == std::vector<RatVector>{rv({q(1), q(1)})});
  CHECK(box_points(weights(2, {rv({q(1, 3), q(1, 3)})})) ==
        std::vector<RatVector>{rv({q(1, 3), q(1, 3)}), rv({q(2, 3), q(2, 3)}), rv({q(1), q(1)})});
  CHECK(box_points(weights(2, {rv({q(1, 4), q(3, 4)})})) ==
        std::vector<RatVector>{rv({q(1, 4), q(3, 4)}), rv({q(1, 2), q(1, 2)}), rv({q(3, 4), q(1, 4)}),
                               rv({q(1), q(1)})});
}

TEST_CASE("box_points: membership enumeration oracle and the index count") {
  const std::vector<std::vector<RatVector>> cases{
      {rv({q(1, 5), q(2, 5)})},
      {rv({q(1, 6), q(1, 2), q(5, 6)})},
      {rv({q(1, 2), q(1, 2), q(1)}), rv({q(1), q(1, 3), q(2, 3)})},
      {rv({q(1, 4), q(1, 4), q(1, 2)}), rv({q(1, 2), q(1), q(1, 2)})},
      {rv({q(1, 2), q(1)}), rv({q(1), q(1, 2)})},
  };
  for (const auto& ws : cases) {
    const auto lattice = weights(ws.front().size(), ws);
    const auto pts = box_points(lattice);
    CHECK(pts == box_by_membership(lattice, common_denominator(ws)));
    CHECK(BigInt(static_cast<unsigned long>(pts.size())) == lattice.index_over_Zn());
  }
}

TEST_CASE("box points biject with a diagonal group, with phi(u) = age'") {
  for (auto [d, e] : std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>{
           {7, {1, 3}}, {12, {1, 5, 7}}, {10, {2, 5, 3}}}) {
    const auto g = cyclic_group(d, e);
    const auto lattice = lattice_from_group(g);
    const auto pts = box_points(lattice);
    CHECK(pts.size() == g.order());
    std::set<RatVector> image;
    for (const auto& x : g.elements()) {
      RatVector u = weight_vector(x);
      for (auto& c : u) {
        if (c.is_zero()) c = q(1);
      }
      CHECK(std::binary_search(pts.begin(), pts.end(), u));
      CHECK(coordinate_sum(u) == age_prime(x));
      image.insert(u);
    }
    CHECK(image.size() == pts.size());
  }
}

TEST_CASE("primitivize") {
  const auto l3 = weights(2, {rv({q(1, 3), q(1, 3)})});
  const auto p3 = primitivize(l3);
  CHECK(p3.lattice == l3);
  CHECK(p3.t == std::vector<BigInt>{1, 1});

  const auto refl = weights(2, {rv({q(1, 2), q(1)})});
  const auto pr = primitivize(refl);
  CHECK(pr.t == std::vector<BigInt>{2, 1});
  CHECK(pr.lattice == QuotLattice::standard(2));
  CHECK(primitivize(QuotLattice::standard(3)).lattice == QuotLattice::standard(3));

  // Idempotent, and the toric invariants only see primitive ray generators.
  const std::vector<std::vector<RatVector>> cases{
      {rv({q(1, 2), q(1)})}, {rv({q(1, 2), q(1, 3), q(1)})}, {rv({q(1, 4), q(1, 2), q(3, 4)})},
      {rv({q(1, 6), q(1), q(1, 2)}), rv({q(1), q(1, 3), q(2, 3)})}};
  for (const auto& ws : cases) {
    const std::size_t n = ws.front().size();
    const auto lattice = weights(n, ws);
    const auto p = primitivize(lattice);
    CHECK(primitivize(p.lattice).lattice == p.lattice);
    const Cone c = Cone::make(identity_matrix(n), lattice);
    const Cone cp = Cone::make(identity_matrix(n), p.lattice);
    CHECK(toric_mld(c, lattice, c.whole()) == toric_mld(cp, p.lattice, cp.whole()));
    CHECK(toric_index(c, lattice) == toric_index(cp, p.lattice));
  }
}

TEST_CASE("support_vector") {
  const auto z2 = Cone::standard(2);
  CHECK(support_vector(z2, QuotLattice::standard(2)).m == rv({q(1), q(1)}));
  const auto l3 = weights(2, {rv({q(1, 3), q(1, 3)})});
  CHECK(support_vector(Cone::make(identity_matrix(2), l3), l3).m == rv({q(1), q(1)}));
  // Duality: (p, q) pairs integrally with N iff p + q = 0 mod 3, so 3m is the
  // first multiple of m in M.
  for (std::int64_t k = 1; k <= 3; ++k) {
    bool integral = true;
    for (const auto& row : l3.basis()) integral = integral && dot(rv({q(k), q(k)}), row).is_integer();
    CHECK(integral == (k == 3));
  }

  const auto z3 = QuotLattice::standard(3);
  const Cone bad = Cone::make({rv({q(1), q(0), q(0)}), rv({q(0), q(1), q(0)}), rv({q(1), q(1), q(2)}),
                               rv({q(1), q(1), q(1)})},
                              z3);
  CHECK(bad.rays().size() == 4);
  try {
    support_vector(bad, z3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotQGorenstein);
  }
}

TEST_CASE("toric_index and toric_mld: listed values") {
  for (std::size_t n : {1, 2, 3, 4}) {
    const auto c = Cone::standard(n);
    CHECK(toric_index(c, QuotLattice::standard(n)) == 1);
    CHECK(toric_mld(c, QuotLattice::standard(n), c.whole()) == BigRational(static_cast<std::int64_t>(n)));
  }
  const auto l3 = weights(2, {rv({q(1, 3), q(1, 3)})});
  const auto c3 = Cone::make(identity_matrix(2), l3);
  CHECK(toric_index(c3, l3) == 3);
  CHECK(toric_mld(c3, l3, c3.whole()) == q(2, 3));
  CHECK(toric_mld(c3, l3, c3.whole()) == mld(cyclic_group(3, {1, 1})).value);
  const auto l4 = weights(2, {rv({q(1, 4), q(3, 4)})});
  CHECK(toric_index(Cone::make(identity_matrix(2), l4), l4) == 1);

  const auto n3 = weights(3, {rv({q(1, 2), q(1, 2), q(1)})});
  const auto c = Cone::make(identity_matrix(3), n3);
  CHECK(toric_mld(c, n3, require_face(c, {0, 1})) == q(2));
  CHECK(toric_mld(c, n3, require_face(c, {2})) == q(3));
  CHECK(toric_mld(c, n3, require_face(c, {})) == q(3));
}

TEST_CASE("cones: faces, errors, non-simplicial cones") {
  const auto c = Cone::standard(3);
  CHECK(faces(c).size() == 8);
  CHECK(c.facets().size() == 3);

  const auto z3 = QuotLattice::standard(3);
  const Cone square = Cone::make({rv({q(1), q(0), q(1)}), rv({q(0), q(1), q(1)}), rv({q(-1), q(0), q(1)}),
                                  rv({q(0), q(-1), q(1)})},
                                 z3);
  CHECK_FALSE(square.is_simplicial());
  CHECK(square.facets().size() == 4);
  CHECK(faces(square).size() == 10);
  CHECK_THROWS_AS(require_face(square, {0, 2}), Error);
  CHECK(require_face(square, {0, 1}).dim == 2);
  // Gorenstein cone over a square: m = (0, 0, 1), index 1, mld 1 at the apex
  // (attained at the interior point (0, 0, 1)).
  CHECK(support_vector(square, z3).m == rv({q(0), q(0), q(1)}));
  CHECK(toric_index(square, z3) == 1);
  CHECK(toric_mld(square, z3, square.whole()) == q(1));

  CHECK_THROWS_AS(Cone::make({rv({q(1), q(0)}), rv({q(-1), q(0)})}, QuotLattice::standard(2)), Error);
  CHECK_THROWS_AS(Cone::make({rv({q(0), q(0)})}, QuotLattice::standard(2)), Error);
  // Rays are rescaled to primitive lattice vectors and duplicates collapse.
  const Cone dup = Cone::make({rv({q(2), q(0)}), rv({q(1), q(0)}), rv({q(0), q(3)})}, QuotLattice::standard(2));
  CHECK(dup.rays() == std::vector<RatVector>{rv({q(1), q(0)}), rv({q(0), q(1)})});
}

TEST_CASE("enumeration radius soundness and shortcut agreement") {
  std::vector<std::pair<Cone, QuotLattice>> cones;
  for (auto [d, e] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
           {5, {1, 2}}, {7, {1, 2, 4}}, {8, {1, 3, 5}}, {6, {1, 1, 2, 3}}}) {
    RatVector w;
    for (auto x : e) w.emplace_back(x, d);
    const auto lattice = weights(e.size(), {w});
    cones.emplace_back(Cone::make(identity_matrix(e.size()), lattice), lattice);
  }
  const auto z3 = QuotLattice::standard(3);
  cones.emplace_back(Cone::make({rv({q(1), q(0), q(1)}), rv({q(0), q(1), q(1)}), rv({q(-1), q(0), q(1)}),
                                 rv({q(0), q(-1), q(1)})},
                                z3),
                     z3);
  for (const auto& [cone, lattice] : cones) {
    for (const auto& f : faces(cone)) {
      const auto base = toric_mld(cone, lattice, f);
      CHECK(toric_mld(cone, lattice, f, MldOptions{2, false}) == base);
      CHECK(toric_mld(cone, lattice, f, MldOptions{0, true}) == base);
    }
  }
}

TEST_CASE("orbit localization: face mld = codim + mld of the restricted cone") {
  const auto n3 = weights(3, {rv({q(1, 2), q(1, 2), q(1)})});
  const auto c = Cone::make(identity_matrix(3), n3);
  for (const auto& f : faces(c)) {
    if (f.dim == 0) continue;
    const auto r = restrict_to_face(c, n3, f);
    const auto local = toric_mld(r.cone, r.lattice, r.cone.whole());
    CHECK(toric_mld(c, n3, f) == BigRational(static_cast<std::int64_t>(3 - f.dim)) + local);
  }
  CHECK_THROWS_AS(restrict_to_face(c, n3, Face{{}, 0}), Error);
}

TEST_CASE("toric_gorenstein_check") {
  const auto l4 = weights(2, {rv({q(1, 4), q(3, 4)})});
  const auto r4 = toric_gorenstein_check(Cone::make(identity_matrix(2), l4), l4);
  CHECK(r4.ok);
  CHECK(r4.rows.back().mld == q(1));
  CHECK(r4.rows.back().face_index == 1);
  const auto l3 = weights(2, {rv({q(1, 3), q(1, 3)})});
  CHECK(toric_gorenstein_check(Cone::make(identity_matrix(2), l3), l3).ok);
  CHECK(toric_gorenstein_check(Cone::standard(3), QuotLattice::standard(3)).ok);
}

TEST_CASE("two paths agree on products of cyclic groups") {
  const std::vector<std::vector<GroupElement>> gens{
      {diag(6, {3, 3, 0}), diag(6, {0, 2, 4})},
      {diag(4, {1, 1}), diag(4, {2, 0})},
      {diag(12, {4, 8, 0}), diag(12, {0, 3, 9})},
  };
  for (const auto& gs : gens) {
    const auto g = FiniteMatrixGroup::close(gs);
    if (!pseudo_reflection_indices(g).empty()) continue;
    const auto lattice = lattice_from_group(g);
    const auto cone = Cone::make(identity_matrix(g.dim()), lattice);
    CHECK(toric_mld(cone, lattice, cone.whole()) == mld(g).value);
    CHECK(toric_index(cone, lattice) == BigInt(static_cast<unsigned long>(gorenstein_index(g))));
    CHECK(box_points(lattice).size() == g.order());
  }
}
