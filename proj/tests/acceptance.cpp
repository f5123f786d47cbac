// Acceptance run: one PASS/FAIL line per criterion, fixed seeds throughout.
// Usage: acceptance <quotsing-cli> <golden scan_n2_d30.csv>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "quotsing/error.hpp"
#include "quotsing/invariants.hpp"
#include "quotsing/jordanred.hpp"
#include "quotsing/scan.hpp"
#include "quotsing/serialize.hpp"
#include "quotsing/toriclat.hpp"
#include "support.hpp"

using namespace quotsing;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* what;
  double budget_seconds;  // 0: no stated bound
  std::function<Outcome()> run;
};

std::string str(std::uint64_t x) { return std::to_string(x); }

// Shared inputs, built once.
std::vector<ScanRow> g_rows;
std::vector<FiniteMatrixGroup> g_abelian;

std::vector<FiniteMatrixGroup> random_abelian_groups(std::size_t count) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::size_t> dim(2, 4), factors(1, 3);
  std::uniform_int_distribution<std::uint64_t> ord(2, 12);
  std::vector<FiniteMatrixGroup> out;
  while (out.size() < count) {
    const std::size_t n = dim(rng);
    const std::size_t k = factors(rng);
    std::vector<std::uint64_t> orders(k);
    std::uint64_t m = 1;
    for (auto& d : orders) {
      d = ord(rng);
      m = std::lcm(m, d);
    }
    std::vector<GroupElement> gens;
    for (auto d : orders) {
      std::uniform_int_distribution<std::int64_t> ex(0, static_cast<std::int64_t>(d) - 1);
      std::vector<std::int64_t> e(n);
      for (auto& x : e) x = ex(rng) * static_cast<std::int64_t>(m / d);
      gens.push_back(GroupElement::diagonal(m, e));
    }
    try {
      auto g = FiniteMatrixGroup::close(gens, 500);
      if (g.order() < 2 || !pseudo_reflection_indices(g).empty()) continue;
      out.push_back(std::move(g));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
  }
  return out;
}

Outcome two_path_agreement() {
  Outcome o;
  for (std::size_t n : {2, 3}) {
    const auto rows = scan_cyclic(n, 60);
    std::size_t expected = 0;
    for (std::uint64_t d = 2; d <= 60; ++d) expected += cyclic_types(n, d).size();
    if (rows.size() != expected) o.fail("n=" + str(n) + ": " + str(rows.size()) + " rows, expected " + str(expected));
    for (const auto& r : rows) {
      if (!r.oracle_agree) o.fail(r.descriptor + " paths disagree");
      // Third path for the index: d / gcd(d, sum e).
      const std::uint64_t d = r.order;
      const std::uint64_t s = std::accumulate(r.exponents.begin(), r.exponents.end(), std::uint64_t{0});
      if (r.index != BigInt(static_cast<unsigned long>(d / std::gcd(d, s)))) o.fail(r.descriptor + " index");
    }
    g_rows.insert(g_rows.end(), rows.begin(), rows.end());
  }
  o.detail = str(g_rows.size()) + " cyclic types" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome weston_cross_check() {
  Outcome o;
  g_abelian = random_abelian_groups(200);
  for (const auto& g : g_abelian) {
    const auto lattice = lattice_from_group(g);
    const auto cone = Cone::make(identity_matrix(g.dim()), lattice);
    const auto d = determinant_index(g);
    if (toric_index(cone, lattice) != BigInt(static_cast<unsigned long>(d))) {
      o.fail("order " + str(g.order()) + " dim " + str(g.dim()) + ": d(G)=" + str(d));
    }
  }
  o.detail = str(g_abelian.size()) + " groups" + (o.ok ? "" : ": " + o.detail);
  return o;
}

std::vector<NamedGroup> criterion3_suite() {
  auto suite = reference_suite();
  for (std::size_t n = 1; n <= 3; ++n) suite.push_back({"trivial_" + str(n), FiniteMatrixGroup::trivial(n, 1)});
  return suite;
}

Outcome trichotomy() {
  Outcome o;
  auto check = [&](const std::string& name, std::size_t n, const BigRational& m, const BigInt& index, bool trivial) {
    const BigRational bn(static_cast<std::int64_t>(n));
    if (m > bn) o.fail(name + ": mld > n");
    if ((m > bn - 1) != trivial) o.fail(name + ": mld > n-1 does not match triviality");
    if (m == bn - 1 && index != 1) o.fail(name + ": mld = n-1 with index " + index.get_str());
  };
  for (const auto& r : g_rows) check(r.descriptor, r.n, r.mld, r.index, r.order == 1);
  std::size_t checked = g_rows.size();
  for (const auto& ng : criterion3_suite()) {
    const auto rep = shokurov_report(ng.group);
    check(ng.name, rep.n, rep.mld, BigInt(static_cast<unsigned long>(rep.index)), ng.group.order() == 1);
    if (!rep.all_ok()) o.fail(ng.name + ": report checks");
    ++checked;
  }
  o.detail = str(checked) + " singularities" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome pairing_identity() {
  Outcome o;
  std::size_t reps = 0;
  for (const auto& ng : criterion3_suite()) {
    const auto& g = ng.group;
    const auto n = static_cast<std::int64_t>(g.dim());
    for (const auto& cls : g.conjugacy_classes().classes) {
      const auto& x = g.element(cls.front());
      if (x.is_identity()) continue;
      const auto ell = static_cast<std::int64_t>(eigen_exponents(x).ell());
      if (ell < 2) o.fail(ng.name + ": ell < 2");
      if (age_prime(x) + age_prime(x.inverse()) != BigRational(2 * n - ell)) o.fail(ng.name + ": pairing");
      ++reps;
    }
    if (!shokurov_report(g).pairing_ok) o.fail(ng.name + ": report pairing flag");
  }
  o.detail = str(reps) + " class representatives" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome eigen_exponent_recovery() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<std::uint64_t> ord(1, 60);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = dim(rng);
    const std::uint64_t d = ord(rng);
    std::uniform_int_distribution<std::uint64_t> ex(1, d);
    std::vector<std::uint64_t> e(n);
    std::vector<std::int64_t> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = static_cast<std::int64_t>(e[i] = ex(rng));
    // Planted multiset, reduced to the true order of the matrix.
    std::uint64_t gd = d;
    for (auto x : e) gd = std::gcd(gd, x);
    const std::uint64_t order = d / gd;
    std::vector<std::uint64_t> planted;
    for (auto x : e) planted.push_back((x / gd) % order == 0 ? order : (x / gd) % order);
    std::sort(planted.begin(), planted.end());

    const auto h = conjugate_by(GroupElement::diagonal(d, k), random_unimodular(n, rng, 8, 2));
    const auto got = eigen_exponents(h);
    if (got.order != order || got.exps != planted) {
      std::ostringstream s;
      s << "trial " << t << ": 1/" << d << " planted";
      for (auto x : e) s << ' ' << x;
      o.fail(s.str());
    }
  }
  o.detail = "500 conjugated diagonals" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome h_prime_and_divisibility() {
  Outcome o;
  std::size_t pairs = 0, subgroups = 0;
  for (const auto& ng : criterion3_suite()) {
    const auto& g = ng.group;
    const CayleyTable t(g);
    std::set<std::vector<std::size_t>> seen;
    std::vector<SubgroupWitness> hs = maximal_abelian_normal_subgroups(t);
    hs.push_back(find_abelian_normal(t));
    hs.push_back(center(t));
    for (const auto& w : hs) {
      if (!seen.insert(w.elements).second) continue;
      ++subgroups;
      if (!w.is_abelian || !w.is_normal) o.fail(ng.name + ": witness not abelian normal");
      const auto c = static_cast<std::uint64_t>(w.index);
      for (std::size_t x = 0; x < g.order(); ++x) {
        const auto& gx = g.element(x);
        for (auto h : w.elements) {
          const auto r = construct_h_prime(t, w, x, h, c);
          const auto& hp = g.element(r.element);
          // Rebuild h' from matrices: prod_{i < c} g^i h g^-i.
          GroupElement acc = GroupElement::identity(g.dim(), g.conductor());
          GroupElement gi = acc;
          for (std::uint64_t i = 0; i < c; ++i, gi = gi * gx) acc = acc * (gi * g.element(h) * gi.inverse());
          if (!(acc == hp)) o.fail(ng.name + ": h' differs from the matrix product");
          if (!(gx * hp * gx.inverse() == hp)) o.fail(ng.name + ": h' not centralized");
          if (!(hp.det() == g.element(h).det().pow(static_cast<std::int64_t>(c)))) o.fail(ng.name + ": det(h')");
          if (!std::binary_search(w.elements.begin(), w.elements.end(), r.element)) o.fail(ng.name + ": h' not in H");
          if (!r.ok()) o.fail(ng.name + ": h' flags");
          ++pairs;
        }
      }
      const auto rep = divisibility_report(t, w);
      if ((rep.exponent * rep.d_h) % rep.d_g != 0 || !rep.divides || !rep.h_prime_checks) {
        o.fail(ng.name + ": d(G) does not divide exponent * d(H)");
      }
    }
  }
  o.detail = str(subgroups) + " subgroups, " + str(pairs) + " (g, h) pairs" + (o.ok ? "" : ": " + o.detail);
  return o;
}

Outcome orbit_localization() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  std::uniform_int_distribution<std::int64_t> entry(-2, 2), den(2, 7), weights(1, 2);
  std::size_t cones = 0, face_checks = 0;
  while (cones < 50) {
    const std::size_t n = dim(rng);
    // Rays: identity plus random upper-triangular mixing keeps them independent.
    RatMatrix rays = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) rays[i][j] = BigRational(entry(rng));
    }
    std::vector<RatVector> ws(static_cast<std::size_t>(weights(rng)));
    for (auto& w : ws) {
      const std::int64_t dd = den(rng);
      std::uniform_int_distribution<std::int64_t> num(1, dd);
      for (std::size_t i = 0; i < n; ++i) w.emplace_back(num(rng), dd);
    }
    const auto lattice = lattice_from_weights(n, ws);
    if (lattice.index_over_Zn() > 200) continue;
    const Cone cone = Cone::make(rays, lattice);
    if (!cone.is_simplicial() || !cone.is_full_dimensional()) continue;
    ++cones;
    for (const auto& f : faces(cone)) {
      if (f.dim == 0 || f.dim == n) continue;
      const auto r = restrict_to_face(cone, lattice, f);
      const auto local = toric_mld(r.cone, r.lattice, r.cone.whole());
      const auto global = toric_mld(cone, lattice, f);
      if (global != BigRational(static_cast<std::int64_t>(n - f.dim)) + local) {
        o.fail("dim " + str(n) + " face of dim " + str(f.dim) + ": " + global.to_string() + " vs " +
               local.to_string());
      }
      ++face_checks;
    }
  }
  o.detail = "50 cones, " + str(face_checks) + " proper faces" + (o.ok ? "" : ": " + o.detail);
  return o;
}

// phi(u(g)) is compared with the per-class exponents from analyze(), which
// come from one generator and EigenExponents::power rather than per-entry logs.
void check_bijection(const FiniteMatrixGroup& g, const std::vector<RatVector>& box, Outcome& o, const std::string& name) {
  const auto analysis = analyze(g);
  const auto& class_of = g.conjugacy_classes().class_of;
  std::vector<char> hit(box.size(), 0);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    RatVector u = weight_vector(g.element(i));
    BigRational sum;
    for (auto& c : u) {
      if (c.is_zero()) c = BigRational(1);
      sum += c;
    }
    const auto it = std::lower_bound(box.begin(), box.end(), u);
    if (it == box.end() || *it != u) {
      o.fail(name + ": u(g) is not a box point");
      continue;
    }
    if (!hit[it - box.begin()]++) ++distinct;
    if (sum != analysis.class_exponents[class_of[i]].age_prime()) o.fail(name + ": phi(u(g)) != age'(g)");
  }
  if (distinct != box.size() || g.order() != box.size()) o.fail(name + ": not a bijection");
}

Outcome box_points_count() {
  Outcome o;
  std::size_t lattices = 0;
  for (const auto& r : g_rows) {
    RatVector w;
    for (auto e : r.exponents) w.emplace_back(static_cast<std::int64_t>(e), static_cast<std::int64_t>(r.order));
    const auto lattice = lattice_from_weights(r.n, {w});
    const auto box = box_points(lattice);
    if (BigInt(static_cast<unsigned long>(box.size())) != lattice.index_over_Zn()) o.fail(r.descriptor + ": count");
    check_bijection(FiniteMatrixGroup::cyclic_diagonal(r.order, r.exponents), box, o, r.descriptor);
    ++lattices;
  }
  for (const auto& g : g_abelian) {
    const auto lattice = lattice_from_group(g);
    const auto box = box_points(lattice);
    if (BigInt(static_cast<unsigned long>(box.size())) != lattice.index_over_Zn() || box.size() != g.order()) {
      o.fail("abelian group of order " + str(g.order()) + ": count");
    }
    check_bijection(g, box, o, "abelian group of order " + str(g.order()));
    ++lattices;
  }
  o.detail = str(lattices) + " lattices" + (o.ok ? "" : ": " + o.detail);
  return o;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
  status = pclose(p);
  return out;
}

Outcome determinism(const std::string& cli, const std::string& golden_path) {
  Outcome o;
  const std::string cmd = "'" + cli + "' scan --n 2 --dmax 30 --csv";
  int s1 = 0, s2 = 0;
  const auto a = run_command(cmd, s1);
  const auto b = run_command(cmd, s2);
  if (s1 != 0 || s2 != 0) o.fail("nonzero exit status");
  if (a != b) o.fail("two runs differ");
  std::ifstream in(golden_path, std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  if (!in) o.fail("cannot read " + golden_path);
  else if (golden.str() != a) o.fail("output differs from the golden file");
  if (to_csv(scan_cyclic(2, 30)) != a) o.fail("library CSV differs from the CLI");
  o.detail = str(a.size()) + " bytes" + (o.ok ? "" : ": " + o.detail);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <quotsing-cli> <golden-csv>\n";
    return 2;
  }
  const std::string cli = argv[1], golden = argv[2];
  const std::vector<Criterion> criteria{
      {1, "two-path agreement, n in {2,3}, d <= 60", 60, two_path_agreement},
      {2, "d(G) equals the toric index on 200 random abelian groups", 120, weston_cross_check},
      {3, "trichotomy over the scan and the fixed suite", 60, trichotomy},
      {4, "pairing identity on class representatives", 0, pairing_identity},
      {5, "eigen-exponents of 500 conjugated diagonals", 0, eigen_exponent_recovery},
      {6, "h' centralized, det(h') = det(h)^c', divisibility", 120, h_prime_and_divisibility},
      {7, "orbit localization on 50 simplicial cones", 60, orbit_localization},
      {8, "box points: count and bijection with age'", 0, box_points_count},
      {9, "scan --n 2 --dmax 30 --csv is byte-deterministic", 0, [&] { return determinism(cli, golden); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && secs > c.budget_seconds) o.fail(o.detail + "; over the time budget");
    char timing[64];
    if (c.budget_seconds > 0) std::snprintf(timing, sizeof timing, "%.1fs/%.0fs", secs, c.budget_seconds);
    else std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " [" << timing << "] " << c.what << " -- "
              << o.detail << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
