#include "quotsing/toriclat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {


struct Integerized {
  IntMatrix m;
  BigInt scale;
};

Integerized integerize(const RatMatrix& a) {
  BigInt d = 1;
  for (const auto& row : a) {
    for (const auto& x : row) d = lcm(d, x.denominator());
  }
  Integerized out{IntMatrix(a.size()), d};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& x : a[i]) out.m[i].push_back(x.numerator() * (d / x.denominator()));
  }
  return out;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& x : a[i]) {
      if (!x.is_integer()) throw Error(ErrorKind::InvalidLattice, "expected integral coordinates, got " + x.to_string());
      out[i].push_back(x.numerator());
    }
  }
  return out;
}

// Word-sized copies of rational matrices, for the int64 fast paths.
std::optional<SmallMatrix> small_integerize(const RatMatrix& a, std::int64_t& scale) {
  std::int64_t d = 1;
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (!x.is_small()) return std::nullopt;
      const std::int64_t g = std::gcd(d, x.small_den());
      if (__builtin_mul_overflow(d / g, x.small_den(), &d)) return std::nullopt;
    }
  }
  SmallMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& x : a[i]) {
      std::int64_t v;
      if (__builtin_mul_overflow(x.small_num(), d / x.small_den(), &v)) return std::nullopt;
      out[i].push_back(v);
    }
  }
  scale = d;
  return out;
}

std::optional<SmallMatrix> small_integer(const RatMatrix& a) {
  SmallMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& x : a[i]) {
      if (!x.is_small()) return std::nullopt;
      if (x.small_den() != 1) {
        throw Error(ErrorKind::InvalidLattice, "expected integral coordinates, got " + x.to_string());
      }
      out[i].push_back(x.small_num());
    }
  }
  return out;
}

// Runs fn on the Smith form of an integral matrix, word-sized when possible.
template <class Fn>
auto with_smith_form(const RatMatrix& a, Fn&& fn) {
  if (auto small = small_integer(a)) {
    if (auto snf = smith_normal_form_small(std::move(*small))) return fn(*snf);
  }
  return fn(smith_normal_form(to_integer(a)));
}

/// Visits every element sum c_i g_i (0 <= c_i < orders_i), reduced into
/// [0,1)^k. The generators must give a direct sum decomposition of the
/// quotient group. The visited vector is reused between calls.
template <class Fn>
void for_each_direct_sum_point(const std::vector<RatVector>& gens, const std::vector<BigInt>& orders, std::size_t k,
                               Fn&& fn) {
  const std::size_t r = gens.size();
  std::vector<BigInt> digit(r, 0);
  RatVector cur(k), p(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) p[j] = cur[j].frac();
    fn(p);
    // Odometer step; a wrapped digit subtracts orders[i] * gens[i], which is integral.
    std::size_t i = 0;
    for (; i < r; ++i) {
      for (std::size_t j = 0; j < k; ++j) cur[j] += gens[i][j];
      if (++digit[i] < orders[i]) break;
      digit[i] = 0;
      for (std::size_t j = 0; j < k; ++j) cur[j] = cur[j].frac();
    }
    if (i == r) break;
  }
}

std::vector<RatVector> direct_sum_points(const std::vector<RatVector>& gens, const std::vector<BigInt>& orders,
                                         std::size_t k) {
  std::vector<RatVector> out;
  for_each_direct_sum_point(gens, orders, k, [&](const RatVector& p) { out.push_back(p); });
  return out;
}

// Generators of N / Z^n as a direct sum of cyclic groups.
void box_generators(const QuotLattice& lattice, std::vector<RatVector>& gens, std::vector<BigInt>& orders) {
  const std::size_t n = lattice.dim();
  if (!lattice.contains_Zn()) throw Error(ErrorKind::InvalidLattice, "Z^n is not contained in the lattice");
  with_smith_form(lattice.basis_inverse(), [&](const auto& snf) {
    for (std::size_t i = 0; i < n; ++i) {
      if (snf.diagonal[i] == 1) continue;
      RatVector g(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (snf.v_inverse[i][k] == 0) continue;
        const BigRational c(snf.v_inverse[i][k]);
        for (std::size_t j = 0; j < n; ++j) g[j].add_product(c, lattice.basis()[k][j]);
      }
      gens.push_back(std::move(g));
      orders.emplace_back(snf.diagonal[i]);
    }
    return 0;
  });
}

/// Smallest coordinate sum over the nonzero points of N in (0,1]^n.
BigRational min_box_sum(const QuotLattice& lattice) {
  std::vector<RatVector> gens;
  std::vector<BigInt> orders;
  box_generators(lattice, gens, orders);
  const std::size_t n = lattice.dim();
  std::optional<BigRational> best;
  const BigRational one(1);
  BigRational s;
  for_each_direct_sum_point(gens, orders, n, [&](const RatVector& p) {
    s = BigRational();
    for (const auto& x : p) s += x.is_zero() ? one : x;
    if (!best || s < *best) best = s;
  });
  return *best;
}

void for_each_combination(std::size_t total, std::size_t choose,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(choose);
  for (std::size_t i = 0; i < choose; ++i) idx[i] = i;
  if (choose > total) return;
  while (true) {
    fn(idx);
    std::size_t i = choose;
    while (i > 0 && idx[i - 1] == total - choose + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < choose; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatMatrix pick(const std::vector<RatVector>& rays, const std::vector<std::size_t>& idx) {
  RatMatrix out;
  for (auto i : idx) out.push_back(rays[i]);
  return out;
}

struct FacetData {
  std::vector<Face> facets;
  std::vector<RatVector> normals;
};

/// Facets of cone(rays) inside its span of dimension `dim`, each with a
/// normal that is positive on the cone and lies in the span.
FacetData compute_facets_uncached(const std::vector<RatVector>& rays, std::size_t n, std::size_t dim) {
  FacetData out;
  if (dim == 0) return out;
  const std::vector<RatVector> perp = nullspace(rays, n);
  std::set<std::vector<std::size_t>> seen;
  for_each_combination(rays.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
    RatMatrix sys = pick(rays, subset);
    if (rank(sys) != dim - 1) return;
    sys.insert(sys.end(), perp.begin(), perp.end());
    auto null = nullspace(sys, n);
    if (null.size() != 1) return;
    RatVector h = null.front();
    int sign = 0;
    std::vector<std::size_t> zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int s = dot(h, rays[i]).sign();
      if (s == 0) {
        zero.push_back(i);
      } else if (sign == 0) {
        sign = s;
      } else if (s != sign) {
        return;
      }
    }
    if (!seen.insert(zero).second) return;
    if (sign < 0) {
      for (auto& x : h) x = -x;
    }
    out.facets.push_back(Face{zero, dim - 1});
    out.normals.push_back(std::move(h));
  });
  return out;
}

// Scans rebuild the same cone for every lattice, so remember the last answer.
FacetData compute_facets(const std::vector<RatVector>& rays, std::size_t n, std::size_t dim) {
  thread_local std::vector<RatVector> last_rays;
  thread_local std::size_t last_n = 0, last_dim = 0;
  thread_local FacetData last;
  if (n != last_n || dim != last_dim || rays != last_rays) {
    last = compute_facets_uncached(rays, n, dim);
    last_rays = rays;
    last_n = n;
    last_dim = dim;
  }
  return last;
}

std::vector<std::size_t> first_independent_subset(const std::vector<RatVector>& rays, std::size_t dim) {
  std::vector<std::size_t> chosen;
  RatMatrix acc;
  for (std::size_t i = 0; i < rays.size() && chosen.size() < dim; ++i) {
    acc.push_back(rays[i]);
    if (rank(acc) == acc.size()) {
      chosen.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

/// Lattice N cap span(S) in lambda-coordinates for independent rays S:
/// generators U_i / s_i (modulo Z^c) with orders s_i.
struct SpanLattice {
  std::vector<RatVector> gens;
  std::vector<BigInt> orders;
};

SpanLattice span_lattice(const RatMatrix& rs, const QuotLattice& lattice) {
  const std::size_t c = rs.size();
  return with_smith_form(multiply(rs, lattice.basis_inverse()), [&](const auto& snf) {
    SpanLattice out;
    for (std::size_t i = 0; i < c; ++i) {
      const BigInt s(snf.diagonal[i]);
      if (s == 0) throw Error(ErrorKind::InvalidLattice, "rays are not independent");
      RatVector g(c);
      for (std::size_t j = 0; j < c; ++j) g[j] = BigRational(BigInt(snf.u[i][j]), s);
      out.gens.push_back(std::move(g));
      out.orders.push_back(s);
    }
    return out;
  });
}

BigInt index_of_rays(const std::vector<RatVector>& rays, const QuotLattice& lattice) {
  if (rays.empty()) return 1;
  const std::size_t k = rays.size();
  std::vector<BigInt> w(k, 0);
  std::vector<BigInt> diagonal;
  with_smith_form(multiply(rays, lattice.basis_inverse()), [&](const auto& snf) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) w[i] += BigInt(snf.u[i][j]);
    }
    for (const auto& x : snf.diagonal) diagonal.emplace_back(x);
    return 0;
  });
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt s = i < diagonal.size() ? diagonal[i] : BigInt(0);
    if (s == 0) {
      if (w[i] != 0) throw Error(ErrorKind::NotQGorenstein, "no support vector takes the value 1 on every ray");
      continue;
    }
    r = lcm(r, s / gcd(s, w[i]));
  }
  return r;
}

}  // namespace

QuotLattice QuotLattice::from_generators(std::size_t n, const std::vector<RatVector>& generators) {
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator has the wrong length");
  }
  QuotLattice out;
  out.n_ = n;
  out.basis_.assign(n, RatVector(n));
  std::int64_t scale = 1;
  std::optional<SmallMatrix> hs;
  if (auto small = small_integerize(generators, scale)) hs = hermite_normal_form_small(std::move(*small));
  if (hs) {
    if (hs->size() != n) throw Error(ErrorKind::InvalidLattice, "generators do not span Q^" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.basis_[i][j] = BigRational((*hs)[i][j], scale);
    }
  } else {
    Integerized z = integerize(generators);
    IntMatrix h = hermite_normal_form(z.m);
    if (h.size() != n) throw Error(ErrorKind::InvalidLattice, "generators do not span Q^" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.basis_[i][j] = BigRational(h[i][j], z.scale);
    }
  }
  out.inverse_ = inverse(out.basis_);
  return out;
}

QuotLattice QuotLattice::standard(std::size_t n) { return from_generators(n, identity_matrix(n)); }

bool QuotLattice::contains_Zn() const {
  for (const auto& row : inverse_) {
    for (const auto& x : row) {
      if (!x.is_integer()) return false;
    }
  }
  return true;
}

BigInt QuotLattice::index_over_Zn() const {
  if (!contains_Zn()) throw Error(ErrorKind::InvalidLattice, "Z^n is not contained in the lattice");
  BigRational inv = determinant(inverse_).abs();
  return inv.numerator();
}

RatVector QuotLattice::coordinates(const RatVector& v) const {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector has the wrong length");
  return row_times(v, inverse_);
}

bool QuotLattice::contains(const RatVector& v) const {
  for (const auto& x : coordinates(v)) {
    if (!x.is_integer()) return false;
  }
  return true;
}

QuotLattice lattice_from_weights(std::size_t n, const std::vector<RatVector>& weights) {
  RatMatrix gens = identity_matrix(n);
  for (const auto& w : weights) {
    if (w.size() != n) throw Error(ErrorKind::InvalidWeights, "weight vector has the wrong length");
    for (const auto& x : w) {
      if (x.sign() <= 0 || x > BigRational(1)) {
        throw Error(ErrorKind::InvalidWeights, "weight entry " + x.to_string() + " is outside (0, 1]");
      }
    }
    gens.push_back(w);
  }
  return QuotLattice::from_generators(n, gens);
}

std::vector<RatVector> box_points(const QuotLattice& lattice) {
  std::vector<RatVector> gens;
  std::vector<BigInt> orders;
  box_generators(lattice, gens, orders);
  std::vector<RatVector> pts = direct_sum_points(gens, orders, lattice.dim());
  for (auto& p : pts) {
    for (auto& x : p) {
      if (x.is_zero()) x = BigRational(1);
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

Primitivization primitivize(const QuotLattice& lattice) {
  const std::size_t n = lattice.dim();
  const auto pts = box_points(lattice);
  Primitivization out;
  out.t.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    BigRational best(1);
    for (const auto& p : pts) {
      bool on_axis = true;
      for (std::size_t j = 0; j < n && on_axis; ++j) on_axis = j == i || p[j].is_one();
      if (on_axis && p[i] < best) best = p[i];
    }
    // Axis points form a cyclic subgroup of Q/Z, so best = 1/t_i.
    out.t[i] = best.denominator();
  }
  RatMatrix scaled = lattice.basis();
  for (auto& row : scaled) {
    for (std::size_t j = 0; j < n; ++j) row[j] *= BigRational(out.t[j]);
  }
  out.lattice = QuotLattice::from_generators(n, scaled);
  return out;
}

Cone Cone::make(std::vector<RatVector> rays, const QuotLattice& lattice) {
  Cone out;
  out.n_ = lattice.dim();
  for (auto& r : rays) {
    RatVector c = lattice.coordinates(r);
    RatVector prim(c.size());
    std::int64_t scale = 1;
    if (auto small = small_integerize({c}, scale)) {
      std::int64_t content = 0;
      for (auto x : small->front()) content = std::gcd(content, x);
      if (content == 0) throw Error(ErrorKind::InvalidLattice, "zero ray");
      for (std::size_t j = 0; j < c.size(); ++j) prim[j] = BigRational(small->front()[j] / content);
    } else {
      // Primitive integer coordinates: clear denominators, then divide by the content.
      Integerized z = integerize({c});
      BigInt content = 0;
      for (const auto& x : z.m.front()) content = gcd(content, x);
      if (content == 0) throw Error(ErrorKind::InvalidLattice, "zero ray");
      for (std::size_t j = 0; j < c.size(); ++j) prim[j] = BigRational(BigInt(z.m.front()[j] / content));
    }
    RatVector v = row_times(prim, lattice.basis());
    if (std::find(out.rays_.begin(), out.rays_.end(), v) == out.rays_.end()) out.rays_.push_back(std::move(v));
  }
  out.dim_ = out.rays_.empty() ? 0 : rank(out.rays_);
  FacetData fd = compute_facets(out.rays_, out.n_, out.dim_);
  if (out.dim_ > 0 && (fd.normals.empty() || rank(fd.normals) != out.dim_)) {
    throw Error(ErrorKind::NotStronglyConvex, "the cone contains a line");
  }
  out.facets_ = std::move(fd.facets);
  out.normals_ = std::move(fd.normals);
  return out;
}

Cone Cone::standard(std::size_t n) { return make(identity_matrix(n), QuotLattice::standard(n)); }

Face Cone::whole() const {
  Face f;
  f.dim = dim_;
  for (std::size_t i = 0; i < rays_.size(); ++i) f.rays.push_back(i);
  return f;
}

std::vector<Face> faces(const Cone& cone) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{cone.whole().rays};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& facet : cone.facets()) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), facet.rays.begin(), facet.rays.end(),
                            std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  if (seen.insert(std::vector<std::size_t>{}).second) queue.emplace_back();
  std::vector<Face> out;
  for (auto& r : queue) {
    std::size_t d = r.empty() ? 0 : rank(pick(cone.rays(), r));
    out.push_back(Face{std::move(r), d});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.rays < b.rays;
  });
  return out;
}

Face require_face(const Cone& cone, std::vector<std::size_t> rays) {
  std::sort(rays.begin(), rays.end());
  if (rays.size() == cone.rays().size() && (rays.empty() || rays.back() == rays.size() - 1)) return cone.whole();
  for (auto& f : faces(cone)) {
    if (f.rays == rays) return f;
  }
  std::string list;
  for (auto i : rays) list += (list.empty() ? "" : ",") + std::to_string(i);
  throw Error(ErrorKind::NotAFace, "rays {" + list + "} do not form a face");
}

SupportVector support_vector(const Cone& cone, const QuotLattice& lattice) {
  const std::size_t n = lattice.dim();
  if (cone.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "cone and lattice dimensions differ");
  SupportVector out;
  const auto& rays = cone.rays();
  if (rays.empty()) {
    out.m.assign(n, BigRational());
    out.defined_modulo = identity_matrix(n);
    return out;
  }
  auto m = solve(rays, RatVector(rays.size(), BigRational(1)), n);
  if (!m) throw Error(ErrorKind::NotQGorenstein, "no m with <m, u_i> = 1 on every ray");
  out.m = std::move(*m);
  out.defined_modulo = nullspace(rays, n);
  return out;
}

BigInt toric_index(const Cone& cone, const QuotLattice& lattice) {
  return index_of_rays(cone.rays(), lattice);
}

BigInt toric_index(const Cone& cone, const QuotLattice& lattice, const Face& face) {
  Face f = require_face(cone, face.rays);
  return index_of_rays(pick(cone.rays(), f.rays), lattice);
}

BigRational toric_mld(const Cone& cone, const QuotLattice& lattice, const Face& face, MldOptions options) {
  const Face f = require_face(cone, face.rays);
  const std::size_t n = lattice.dim();
  const std::size_t c = f.dim;
  const RatVector m = support_vector(cone, lattice).m;
  if (c == 0) return BigRational(static_cast<std::int64_t>(n));
  const std::vector<RatVector> tau = pick(cone.rays(), f.rays);

  if (c == n && tau.size() == n && !options.force_enumeration) {
    // Simplicial full-dimensional: points of N in the half-open parallelepiped,
    // read in ray coordinates where <m, u> is the coordinate sum.
    if (tau == identity_matrix(n)) return min_box_sum(lattice);
    return min_box_sum(QuotLattice::from_generators(n, multiply(lattice.basis(), inverse(tau))));
  }

  const FacetData tau_facets = compute_facets(tau, n, c);
  auto in_relint = [&](const RatVector& u) {
    for (const auto& h : tau_facets.normals) {
      if (dot(h, u).sign() <= 0) return false;
    }
    return true;
  };
  const BigRational radius(static_cast<std::int64_t>(tau.size() + options.extra_radius));
  std::optional<BigRational> best;
  for_each_combination(tau.size(), c, [&](const std::vector<std::size_t>& subset) {
    RatMatrix rs = pick(tau, subset);
    if (rank(rs) != c) return;
    SpanLattice span = span_lattice(rs, lattice);
    for (const auto& base : direct_sum_points(span.gens, span.orders, c)) {
      RatVector lambda = base;
      BigRational phi;
      for (const auto& x : base) phi += x;
      // Walk nonnegative integer shifts with coordinate sum bounded by the radius.
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == c) {
          if (phi.is_zero()) return;
          if (best && phi >= *best) return;
          if (in_relint(row_times(lambda, rs))) best = phi;
          return;
        }
        const BigRational saved_l = lambda[i], saved_p = phi;
        while (phi <= radius) {
          rec(i + 1);
          lambda[i] += BigRational(1);
          phi += BigRational(1);
        }
        lambda[i] = saved_l;
        phi = saved_p;
      };
      rec(0);
    }
  });
  if (!best) throw Error(ErrorKind::NotQGorenstein, "no interior lattice point within the enumeration radius");
  return BigRational(static_cast<std::int64_t>(n - c)) + *best;
}

FaceRestriction restrict_to_face(const Cone& cone, const QuotLattice& lattice, const Face& face) {
  const Face f = require_face(cone, face.rays);
  const std::size_t n = lattice.dim();
  const std::size_t c = f.dim;
  if (c == 0) throw Error(ErrorKind::NotAFace, "the apex has no interior to restrict to");
  const std::vector<RatVector> tau = pick(cone.rays(), f.rays);
  RatMatrix rs = pick(tau, first_independent_subset(tau, c));
  SpanLattice span = span_lattice(rs, lattice);
  // N cap span(tau) = Z^c + sum Z g_i in lambda-coordinates.
  RatMatrix lambda_gens = identity_matrix(c);
  lambda_gens.insert(lambda_gens.end(), span.gens.begin(), span.gens.end());
  QuotLattice lambda_lattice = QuotLattice::from_generators(c, lambda_gens);
  FaceRestriction out;
  out.basis = multiply(lambda_lattice.basis(), rs);
  const RatMatrix basis_t = transpose(out.basis, n);
  std::vector<RatVector> coords;
  for (const auto& u : tau) {
    auto x = solve(basis_t, u, c);
    if (!x) throw Error(ErrorKind::InvalidLattice, "ray outside the face span");
    coords.push_back(std::move(*x));
  }
  out.lattice = QuotLattice::standard(c);
  out.cone = Cone::make(std::move(coords), out.lattice);
  return out;
}

ToricGorensteinReport toric_gorenstein_check(const Cone& cone, const QuotLattice& lattice) {
  support_vector(cone, lattice);
  ToricGorensteinReport out;
  out.cone_index = toric_index(cone, lattice);
  const BigRational n_minus_1(static_cast<std::int64_t>(lattice.dim()) - 1);
  for (const auto& f : faces(cone)) {
    FaceGorensteinRow row;
    row.face = f;
    row.mld = toric_mld(cone, lattice, f);
    const std::vector<RatVector> tau = pick(cone.rays(), f.rays);
    row.face_index = index_of_rays(tau, lattice);
    row.subcone_index = index_of_rays(pick(tau, first_independent_subset(tau, f.dim)), lattice);
    row.ok = row.mld != n_minus_1 || (row.face_index == 1 && row.subcone_index == 1);
    out.ok = out.ok && row.ok;
    out.rows.push_back(std::move(row));
  }
  return out;
}

RatVector weight_vector(const GroupElement& g) {
  if (!g.is_diagonal()) throw Error(ErrorKind::NotDiagonal, "weight vectors need a diagonal element");
  std::vector<RootOfUnityLog> logs;
  logs.reserve(g.dim());
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    logs.push_back(root_of_unity_log(g(i, i)));
    d = lcm_u64(d, logs.back().order);
  }
  RatVector u;
  u.reserve(g.dim());
  for (const auto& l : logs) {
    u.emplace_back(static_cast<std::int64_t>(l.exponent * (d / l.order)), static_cast<std::int64_t>(d));
  }
  return u;
}

QuotLattice lattice_from_group(const FiniteMatrixGroup& g) {
  std::vector<RatVector> weights;
  for (const auto& s : g.generators()) weights.push_back(weight_vector(s));
  return lattice_from_weights(g.dim(), weights);
}

}  // namespace quotsing
