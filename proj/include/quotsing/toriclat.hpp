#pragma once

#include <vector>

#include "quotsing/intlinalg.hpp"
#include "quotsing/matgroup.hpp"
#include "quotsing/ratlinalg.hpp"

namespace quotsing {

/// Full-rank lattice N in Q^n, stored as a canonical Hermite basis (rows).
class QuotLattice {
 public:
  QuotLattice() = default;

  /// Lattice generated by the given vectors. Throws InvalidLattice unless
  /// they span Q^n.
  static QuotLattice from_generators(std::size_t n, const std::vector<RatVector>& generators);
  static QuotLattice standard(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  const RatMatrix& basis() const noexcept { return basis_; }
  const RatMatrix& basis_inverse() const noexcept { return inverse_; }

  bool contains_Zn() const;
  /// [N : Z^n]; throws InvalidLattice when Z^n is not contained in N.
  BigInt index_over_Zn() const;
  /// Coordinates of v in the basis (always defined, since the basis spans Q^n).
  RatVector coordinates(const RatVector& v) const;
  bool contains(const RatVector& v) const;

  bool operator==(const QuotLattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  std::size_t n_ = 0;
  RatMatrix basis_;
  RatMatrix inverse_;
};

/// N = Z^n + sum Z w for weight vectors with entries in (0, 1].
QuotLattice lattice_from_weights(std::size_t n, const std::vector<RatVector>& weights);

/// Points of N in the half-open box (0,1]^n, sorted lexicographically.
std::vector<RatVector> box_points(const QuotLattice& lattice);

struct Primitivization {
  QuotLattice lattice;
  std::vector<BigInt> t;  // axis i is rescaled by t_i
};

/// Rescales each axis so that every standard basis vector becomes primitive.
Primitivization primitivize(const QuotLattice& lattice);

/// Face of a cone, recorded by the indices of the cone's rays it contains.
struct Face {
  std::vector<std::size_t> rays;
  std::size_t dim = 0;
  bool operator==(const Face&) const = default;
};

/// Strongly convex rational polyhedral cone. Rays are stored as primitive
/// vectors of N; duplicates are dropped, other rays are kept as given.
class Cone {
 public:
  Cone() = default;

  static Cone make(std::vector<RatVector> rays, const QuotLattice& lattice);
  static Cone standard(std::size_t n);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RatVector>& rays() const noexcept { return rays_; }
  bool is_simplicial() const noexcept { return rays_.size() == dim_; }
  bool is_full_dimensional() const noexcept { return dim_ == n_; }

  /// Facets as ray-index sets with inward normals.
  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<RatVector>& facet_normals() const noexcept { return normals_; }

  /// The whole cone as a face.
  Face whole() const;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<RatVector> rays_;
  std::vector<Face> facets_;
  std::vector<RatVector> normals_;
};

/// Every face, from the apex {0} up to the cone itself, ordered by dimension
/// then by ray-index set.
std::vector<Face> faces(const Cone& cone);

/// The face of `cone` with exactly these ray indices; throws NotAFace when
/// no face has that ray set.
Face require_face(const Cone& cone, std::vector<std::size_t> rays);

struct SupportVector {
  RatVector m;
  std::vector<RatVector> defined_modulo;  // basis of the annihilator of the cone's span
};

/// Solves <m, u_i> = 1 over every ray; NotQGorenstein when inconsistent.
SupportVector support_vector(const Cone& cone, const QuotLattice& lattice);

/// Smallest r >= 1 with some m' in the dual of N satisfying <m', u_i> = r on
/// every ray of the face.
BigInt toric_index(const Cone& cone, const QuotLattice& lattice);
BigInt toric_index(const Cone& cone, const QuotLattice& lattice, const Face& face);

struct MldOptions {
  std::size_t extra_radius = 0;
  /// Skip the box shortcut and always enumerate.
  bool force_enumeration = false;
};

/// n - dim(face) + min <m, u> over lattice points u in the relative interior
/// of the face.
BigRational toric_mld(const Cone& cone, const QuotLattice& lattice, const Face& face, MldOptions options = {});

/// The face as a full-dimensional cone in Z^c, using a basis of N cap span(face).
struct FaceRestriction {
  Cone cone;
  QuotLattice lattice;
  RatMatrix basis;  // rows: basis of N cap span(face) in Q^n
};

FaceRestriction restrict_to_face(const Cone& cone, const QuotLattice& lattice, const Face& face);

struct FaceGorensteinRow {
  Face face;
  BigRational mld;
  BigInt face_index;     // Cartier index of K at the face's orbit
  BigInt subcone_index;  // same for a simplicial subcone on dim(face) independent rays
  bool ok = true;
};

struct ToricGorensteinReport {
  std::vector<FaceGorensteinRow> rows;
  BigInt cone_index;
  bool ok = true;
};

/// Per-face table; a face whose orbit mld is n - 1 must have index 1.
ToricGorensteinReport toric_gorenstein_check(const Cone& cone, const QuotLattice& lattice);

/// u^(g) = (e_1/d, ..., e_n/d) for a diagonal g of order d, in coordinate order.
RatVector weight_vector(const GroupElement& g);

/// N = Z^n + sum over generators of Z u^(g); every generator must be diagonal.
QuotLattice lattice_from_group(const FiniteMatrixGroup& g);

}  // namespace quotsing
