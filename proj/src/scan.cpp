#include "quotsing/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "quotsing/error.hpp"
#include "quotsing/invariants.hpp"

namespace quotsing {

namespace {

std::vector<std::uint64_t> canonical_orbit_rep(std::uint64_t d, const std::vector<std::uint64_t>& e) {
  std::vector<std::uint64_t> best = e;
  for (std::uint64_t u = 2; u < d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    std::vector<std::uint64_t> img;
    for (auto x : e) {
      std::uint64_t y = (u * x) % d;
      img.push_back(y == 0 ? d : y);
    }
    std::sort(img.begin(), img.end());
    best = std::min(best, img);
  }
  return best;
}

}  // namespace

bool is_faithful(std::uint64_t d, const std::vector<std::uint64_t>& e) {
  std::uint64_t g = d;
  for (auto x : e) g = std::gcd(g, x);
  return g == 1;
}

bool has_pseudo_reflection(std::uint64_t d, const std::vector<std::uint64_t>& e) {
  if (d == 1) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t g = d;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j != i) g = std::gcd(g, e[j]);
    }
    if (g > 1) return true;
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> cyclic_types(std::size_t n, std::uint64_t d, bool up_to_iso) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> e(n, 1);
  while (true) {
    if (is_faithful(d, e) && !has_pseudo_reflection(d, e) && (!up_to_iso || canonical_orbit_rep(d, e) == e)) {
      out.push_back(e);
    }
    // Next nondecreasing tuple.
    std::size_t i = n;
    while (i > 0 && e[i - 1] == d) --i;
    if (i == 0) break;
    ++e[i - 1];
    for (std::size_t j = i; j < n; ++j) e[j] = e[i - 1];
  }
  return out;
}

ScanRow analyze_cyclic(const CyclicSpec& spec) {
  const std::size_t n = spec.e.size();
  FiniteMatrixGroup g = spec.group();
  SingularityReport rep = shokurov_report(g);

  QuotLattice lattice = lattice_from_weights(n, {spec.weights()});
  Cone cone = Cone::make(identity_matrix(n), lattice);
  BigRational toric = toric_mld(cone, lattice, cone.whole());
  BigInt index = toric_index(cone, lattice);

  ScanRow row;
  row.descriptor = spec.descriptor();
  row.n = n;
  row.order = g.order();
  row.mld = rep.mld;
  row.index = rep.index;
  row.bound_ok = rep.bound_ok;
  row.smooth_ok = rep.smooth_iff_trivial_ok;
  row.gor_ok = rep.gorenstein_ok;
  row.exponents = spec.e;
  row.oracle_agree = toric == rep.mld && index == BigInt(rep.index);
  if (!row.oracle_agree) {
    throw Error(ErrorKind::OracleDisagreement, row.descriptor + ": group path mld " + rep.mld.to_string() +
                                                   " index " + std::to_string(rep.index) + ", toric path mld " +
                                                   toric.to_string() + " index " + index.get_str());
  }
  return row;
}

std::vector<ScanRow> scan_cyclic(std::size_t n, std::uint64_t d_max, const ScanFilters& filters) {
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "scan needs n >= 1");
  std::vector<CyclicSpec> work;
  for (std::uint64_t d = 2; d <= d_max; ++d) {
    for (auto& e : cyclic_types(n, d, filters.up_to_iso)) {
      CyclicSpec spec;
      spec.d = d;
      spec.e = std::move(e);
      work.push_back(std::move(spec));
    }
  }
  std::vector<std::optional<ScanRow>> slots(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
      try {
        ScanRow row = analyze_cyclic(work[i]);
        if (!filters.mld || row.mld == *filters.mld) slots[i] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = work.size();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<ScanRow> rows;
  for (auto& r : slots) {
    if (r) rows.push_back(std::move(*r));
  }
  sort_rows(rows);
  return rows;
}

void sort_rows(std::vector<ScanRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.order != b.order) return a.order < b.order;
    if (a.exponents != b.exponents) return a.exponents < b.exponents;
    return a.descriptor < b.descriptor;
  });
}

std::vector<IndexCell> empirical_index_table(const std::vector<ScanRow>& rows) {
  std::map<std::pair<std::size_t, BigRational>, IndexCell> cells;
  for (const auto& r : rows) {
    auto [it, fresh] = cells.try_emplace({r.n, r.mld});
    IndexCell& c = it->second;
    if (fresh) {
      c.n = r.n;
      c.mld = r.mld;
      c.max_index = r.index;
      c.witness = r.descriptor;
    } else if (r.index > c.max_index) {
      c.max_index = r.index;
      c.witness = r.descriptor;
    }
    ++c.rows;
  }
  std::vector<IndexCell> out;
  for (auto& [key, c] : cells) {
    c.gorenstein_cell = c.max_index == 1 && c.mld == BigRational(static_cast<std::int64_t>(c.n) - 1);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace quotsing
