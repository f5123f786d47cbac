#include "quotsing/jordanred.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

constexpr std::size_t kExhaustiveLimit = 512;

void require_abelian_normal(const SubgroupWitness& h) {
  if (!h.is_abelian || !h.is_normal) {
    throw Error(ErrorKind::HNotAbelianNormal, "subgroup is not abelian and normal");
  }
}

/// Classes that commute elementwise with each other; self-loops mark classes
/// whose own elements commute.
struct ClassGraph {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<bool>> compatible;
};

ClassGraph class_graph(const CayleyTable& t) {
  ClassGraph g;
  g.classes = t.group().conjugacy_classes().classes;
  const std::size_t k = g.classes.size();
  g.compatible.assign(k, std::vector<bool>(k, true));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      bool ok = true;
      for (auto x : g.classes[a]) {
        for (auto y : g.classes[b]) {
          if (!t.commute(x, y)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      g.compatible[a][b] = g.compatible[b][a] = ok;
    }
  }
  return g;
}

std::vector<std::size_t> union_of(const ClassGraph& g, const std::vector<std::size_t>& clique) {
  std::vector<std::size_t> out;
  for (auto c : clique) out.insert(out.end(), g.classes[c].begin(), g.classes[c].end());
  std::sort(out.begin(), out.end());
  return out;
}

// A maximal clique of pairwise commuting classes is itself an abelian normal
// subgroup: the subgroup it generates is abelian, normal, and its classes form
// a clique containing the maximal one.
std::vector<std::vector<std::size_t>> maximal_cliques(const ClassGraph& g) {
  const std::size_t k = g.classes.size();
  std::vector<std::size_t> vertices;
  for (std::size_t v = 0; v < k; ++v) {
    if (g.compatible[v][v]) vertices.push_back(v);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> bk = [&](std::vector<std::size_t> p,
                                                                                   std::vector<std::size_t> x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (auto u : p) {
      std::size_t deg = 0;
      for (auto v : p) deg += g.compatible[u][v] ? 1 : 0;
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    std::vector<std::size_t> candidates;
    for (auto v : p) {
      if (v == pivot || !g.compatible[pivot][v]) candidates.push_back(v);
    }
    for (auto v : candidates) {
      std::vector<std::size_t> np, nx;
      for (auto w : p) {
        if (w != v && g.compatible[v][w]) np.push_back(w);
      }
      for (auto w : x) {
        if (g.compatible[v][w]) nx.push_back(w);
      }
      r.push_back(v);
      bk(np, nx);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  bk(vertices, {});
  return out;
}

std::vector<std::size_t> greedy_clique(const ClassGraph& g, std::size_t seed) {
  std::vector<std::size_t> clique;
  auto fits = [&](std::size_t v) {
    if (!g.compatible[v][v]) return false;
    for (auto c : clique) {
      if (!g.compatible[v][c]) return false;
    }
    return true;
  };
  // The center first, then the seed, then everything else in order.
  for (std::size_t v = 0; v < g.classes.size(); ++v) {
    if (g.classes[v].size() == 1 && fits(v)) clique.push_back(v);
  }
  if (fits(seed)) clique.push_back(seed);
  for (std::size_t v = 0; v < g.classes.size(); ++v) {
    if (std::find(clique.begin(), clique.end(), v) == clique.end() && fits(v)) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<std::vector<std::size_t>> candidate_subgroups(const CayleyTable& t, bool& heuristic) {
  ClassGraph g = class_graph(t);
  std::vector<std::vector<std::size_t>> cliques;
  heuristic = t.order() > kExhaustiveLimit;
  if (!heuristic) {
    cliques = maximal_cliques(g);
  } else {
    for (std::size_t s = 0; s < g.classes.size(); ++s) cliques.push_back(greedy_clique(g, s));
  }
  std::set<std::vector<std::size_t>> sets;
  for (const auto& c : cliques) sets.insert(union_of(g, c));
  return {sets.begin(), sets.end()};
}

}  // namespace

CayleyTable::CayleyTable(const FiniteMatrixGroup& g) : group_(&g), order_(g.order()) {
  table_.resize(order_ * order_);
  inverse_.assign(order_, 0);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      std::size_t k = g.product_index(i, j);
      table_[i * order_ + j] = k;
      if (k == 0) inverse_[i] = j;
    }
  }
}

std::size_t CayleyTable::power(std::size_t i, std::uint64_t k) const {
  std::size_t r = 0;
  for (std::uint64_t s = 0; s < k; ++s) r = product(r, i);
  return r;
}

bool SubgroupWitness::contains(std::size_t i) const { return std::binary_search(elements.begin(), elements.end(), i); }

SubgroupWitness verify_subgroup(const CayleyTable& t, const std::vector<std::size_t>& generators) {
  const std::size_t order = t.order();
  std::vector<bool> in(order, false);
  std::vector<std::size_t> elems{0};
  in[0] = true;
  for (auto s : generators) {
    if (s >= order) throw Error(ErrorKind::NotASubgroupOfG, "index " + std::to_string(s) + " is out of range");
  }
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (auto s : generators) {
      std::size_t y = t.product(elems[q], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  SubgroupWitness w;
  std::sort(elems.begin(), elems.end());
  w.elements = std::move(elems);
  if (order % w.elements.size() != 0) throw Error(ErrorKind::NotASubgroupOfG, "closure violates Lagrange");
  w.index = order / w.elements.size();
  w.is_abelian = true;
  for (std::size_t a = 0; a < w.elements.size() && w.is_abelian; ++a) {
    for (std::size_t b = a + 1; b < w.elements.size(); ++b) {
      if (!t.commute(w.elements[a], w.elements[b])) {
        w.is_abelian = false;
        break;
      }
    }
  }
  w.is_normal = true;
  for (auto g : t.group().generator_indices()) {
    for (auto h : w.elements) {
      if (!in[t.conjugate(g, h)]) {
        w.is_normal = false;
        break;
      }
    }
    if (!w.is_normal) break;
  }
  w.quotient_exponent = 1;
  for (std::size_t g = 0; g < order; ++g) {
    std::uint64_t k = 1;
    std::size_t p = g;
    while (!in[p]) {
      p = t.product(p, g);
      ++k;
    }
    w.quotient_exponent = lcm_u64(w.quotient_exponent, k);
  }
  return w;
}

SubgroupWitness center(const CayleyTable& t) {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < t.order(); ++i) {
    bool central = true;
    for (auto g : t.group().generator_indices()) {
      if (!t.commute(i, g)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(i);
  }
  return verify_subgroup(t, z);
}

std::vector<SubgroupWitness> maximal_abelian_normal_subgroups(const CayleyTable& t) {
  bool heuristic = false;
  std::vector<SubgroupWitness> out;
  for (const auto& set : candidate_subgroups(t, heuristic)) {
    SubgroupWitness w = verify_subgroup(t, set);
    w.heuristic = heuristic;
    if (w.elements != set || !w.is_abelian || !w.is_normal) {
      throw Error(ErrorKind::NotASubgroupOfG, "class clique did not give an abelian normal subgroup");
    }
    out.push_back(std::move(w));
  }
  return out;
}

SubgroupWitness find_abelian_normal(const CayleyTable& t) {
  auto all = maximal_abelian_normal_subgroups(t);
  auto best = std::min_element(all.begin(), all.end(), [](const SubgroupWitness& a, const SubgroupWitness& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() > b.elements.size();
    return a.elements < b.elements;
  });
  return *best;
}

HPrime construct_h_prime(const CayleyTable& t, const SubgroupWitness& hs, std::size_t g, std::size_t h,
                         std::uint64_t c_prime) {
  require_abelian_normal(hs);
  if (!hs.contains(h)) throw Error(ErrorKind::HNotAbelianNormal, "h is not an element of H");
  if (c_prime == 0 || !hs.contains(t.power(g, c_prime))) {
    throw Error(ErrorKind::InvalidExponent, "g^" + std::to_string(c_prime) + " is not in H");
  }
  HPrime out;
  std::size_t acc = 0;
  std::size_t conj = h;
  for (std::uint64_t i = 0; i < c_prime; ++i) {
    acc = t.product(acc, conj);
    conj = t.conjugate(g, conj);
  }
  out.element = acc;
  out.in_subgroup = hs.contains(acc);
  out.centralized = t.conjugate(g, acc) == acc;
  const auto& grp = t.group();
  out.det_ok = grp.element(acc).det() == grp.element(h).det().pow(static_cast<std::int64_t>(c_prime));
  return out;
}

DivisibilityReport divisibility_report(const CayleyTable& t, const SubgroupWitness& hs, std::uint64_t c_prime) {
  require_abelian_normal(hs);
  const auto& grp = t.group();
  DivisibilityReport r;
  for (const auto& s : grp.generators()) r.d_g = lcm_u64(r.d_g, root_of_unity_log(s.det()).order);
  for (auto i : hs.elements) r.d_h = lcm_u64(r.d_h, root_of_unity_log(grp.element(i).det()).order);
  r.index = hs.index;
  r.exponent = hs.quotient_exponent;
  r.c_prime = c_prime == 0 ? hs.index : c_prime;
  r.divides = (r.exponent * r.d_h) % r.d_g == 0;
  r.h_prime_checks = true;
  for (std::size_t g = 0; g < t.order() && r.h_prime_checks; ++g) {
    for (auto h : hs.elements) {
      if (!construct_h_prime(t, hs, g, h, r.c_prime).ok()) {
        r.h_prime_checks = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace quotsing
