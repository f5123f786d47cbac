#include "quotsing/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

EigenExponents from_multiplicities(std::uint64_t d, const std::vector<std::int64_t>& mult) {
  std::vector<std::uint64_t> exps;
  for (std::uint64_t e = 1; e <= d; ++e) {
    for (std::int64_t r = 0; r < mult[e % d]; ++r) exps.push_back(e);
  }
  return EigenExponents::from_exponents(d, std::move(exps));
}

// Floating-point estimate of the multiplicities, used only to propose a
// candidate that is then certified exactly.
std::optional<std::vector<std::int64_t>> estimate_multiplicities(std::size_t n,
                                                                  const std::vector<CyclotomicNumber>& traces) {
  const std::size_t d = traces.size();
  const std::uint64_t m = traces.front().conductor();
  const double two_pi = 2.0 * std::numbers::pi;
  const std::size_t phi = traces.front().coeffs().size();
  std::vector<std::complex<double>> basis(phi);
  for (std::size_t i = 0; i < phi; ++i) basis[i] = std::polar(1.0, two_pi * static_cast<double>(i) / static_cast<double>(m));
  std::vector<std::complex<double>> t(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& c = traces[j].coeffs();
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) s += c[i].to_double() * basis[i];
    }
    t[j] = s;
  }
  std::vector<std::complex<double>> unit(d);
  for (std::size_t k = 0; k < d; ++k) unit[k] = std::polar(1.0, -two_pi * static_cast<double>(k) / static_cast<double>(d));
  std::vector<std::int64_t> mult(d, 0);
  std::int64_t total = 0;
  for (std::size_t e = 0; e < d && total < static_cast<std::int64_t>(n); ++e) {
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += unit[(e * j) % d] * t[j];
    const double v = s.real() / static_cast<double>(d);
    const double r = std::round(v);
    if (std::abs(v - r) > 0.25 || r < 0) return std::nullopt;
    mult[e] = static_cast<std::int64_t>(r);
    total += mult[e];
  }
  if (total != static_cast<std::int64_t>(n)) return std::nullopt;
  return mult;
}

// Exact evaluation of m_e through the field trace of Q(zeta_L):
// m_e = (1/(d phi(L))) sum_j sum_i a_{j,i} c_L(i L/m - e j L/d).
std::vector<BigRational> exact_multiplicities(const std::vector<CyclotomicNumber>& traces) {
  const std::uint64_t d = traces.size();
  const std::uint64_t m = traces.front().conductor();
  const std::uint64_t big = lcm_u64(m, d);
  const auto& ctx = cyclotomic_context(big);
  const std::uint64_t step_m = big / m;
  const std::uint64_t step_d = big / d;
  std::vector<BigRational> out(d);
  const BigRational scale(1, static_cast<std::int64_t>(d * ctx.phi));
  for (std::uint64_t e = 0; e < d; ++e) {
    BigRational s;
    for (std::uint64_t j = 0; j < d; ++j) {
      const auto& a = traces[j].coeffs();
      const std::uint64_t shift = ((e * j) % d) * step_d;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        const std::uint64_t k = (i * step_m + big - shift) % big;
        s.add_product(a[i], BigRational(ctx.ramanujan[k]));
      }
    }
    out[e] = s * scale;
  }
  return out;
}

// Checks tr(g^j) = sum_e mult[e] zeta_d^{ej} for every j. Because the
// d x d character matrix is invertible, passing this pins the multiset.
bool certify(const std::vector<CyclotomicNumber>& traces, const std::vector<std::int64_t>& mult) {
  const std::uint64_t d = traces.size();
  const std::uint64_t m = traces.front().conductor();
  const std::uint64_t big = lcm_u64(m, d);
  const auto& ctx = cyclotomic_context(big);
  const std::uint64_t step_m = big / m;
  const std::uint64_t step_d = big / d;
  std::vector<std::int64_t> lhs(ctx.phi), rhs(ctx.phi);
  for (std::uint64_t j = 0; j < d; ++j) {
    std::fill(lhs.begin(), lhs.end(), 0);
    std::fill(rhs.begin(), rhs.end(), 0);
    const auto& a = traces[j].coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      if (!a[i].fits_int64()) return false;
      const std::int64_t c = a[i].to_int64();
      if (step_m == 1) {
        // zeta_m^i with i < phi(m) is already a basis vector.
        lhs[i] += c;
        continue;
      }
      auto row = ctx.power(i * step_m);
      for (std::size_t k = 0; k < ctx.phi; ++k) lhs[k] += c * row[k];
    }
    for (std::uint64_t e = 0; e < d; ++e) {
      if (mult[e] == 0) continue;
      auto row = ctx.power(((e * j) % d) * step_d);
      for (std::size_t k = 0; k < ctx.phi; ++k) rhs[k] += mult[e] * row[k];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// Eigenvalues of a diagonal matrix are its diagonal entries.
EigenExponents diagonal_exponents(const GroupElement& g) {
  std::vector<RootOfUnityLog> logs;
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    logs.push_back(root_of_unity_log(g(i, i)));
    d = lcm_u64(d, logs.back().order);
  }
  std::vector<std::uint64_t> exps;
  for (const auto& l : logs) exps.push_back(l.exponent % l.order == 0 ? d : l.exponent * (d / l.order));
  return EigenExponents::from_exponents(d, std::move(exps));
}

std::vector<std::size_t> pseudo_reflection_classes(const FiniteMatrixGroup& g, const GroupAnalysis& a) {
  std::vector<std::size_t> out;
  const auto& cc = g.conjugacy_classes();
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    const auto& ex = a.class_exponents[c];
    // For diagonalizable g, rank(g - I) = n - (multiplicity of eigenvalue 1).
    if (ex.order > 1 && ex.ell() == 1) out.insert(out.end(), cc.classes[c].begin(), cc.classes[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void reject_pseudo_reflections(const FiniteMatrixGroup& g, const GroupAnalysis& a) {
  auto offenders = pseudo_reflection_classes(g, a);
  if (offenders.empty()) return;
  std::string list;
  for (auto i : offenders) list += (list.empty() ? "" : ", ") + std::to_string(i);
  throw Error(ErrorKind::PseudoReflectionPresent, "group contains pseudo-reflections at element indices " + list,
              offenders);
}

}  // namespace

EigenExponents EigenExponents::from_exponents(std::uint64_t d, std::vector<std::uint64_t> exps) {
  EigenExponents out;
  out.order = d;
  std::sort(exps.begin(), exps.end());
  for (auto e : exps) {
    if (!out.multiplicities.empty() && out.multiplicities.back().first == e) {
      ++out.multiplicities.back().second;
    } else {
      out.multiplicities.emplace_back(e, 1);
    }
  }
  out.exps = std::move(exps);
  return out;
}

BigRational EigenExponents::age_prime() const {
  std::uint64_t s = 0;
  for (auto e : exps) s += e;
  return BigRational(static_cast<std::int64_t>(s), static_cast<std::int64_t>(order));
}

BigRational EigenExponents::age() const {
  std::int64_t ones = 0;
  if (!multiplicities.empty() && multiplicities.back().first == order) {
    ones = static_cast<std::int64_t>(multiplicities.back().second);
  }
  return age_prime() - BigRational(ones);
}

std::size_t EigenExponents::ell() const {
  return static_cast<std::size_t>(std::count_if(exps.begin(), exps.end(), [&](auto e) { return e < order; }));
}

EigenExponents EigenExponents::power(std::uint64_t k) const {
  const std::uint64_t g = std::gcd(order, k);
  const std::uint64_t d = order / g;
  const std::uint64_t f = (k / g) % d;
  std::vector<std::uint64_t> out;
  out.reserve(exps.size());
  for (auto e : exps) {
    const std::uint64_t x = (f * e) % d;
    out.push_back(x == 0 ? d : x);
  }
  return from_exponents(d, std::move(out));
}

EigenExponents eigen_exponents_from_traces(std::size_t n, const std::vector<CyclotomicNumber>& traces) {
  if (traces.empty()) throw Error(ErrorKind::DimensionMismatch, "no traces supplied");
  const std::uint64_t d = traces.size();
  if (auto guess = estimate_multiplicities(n, traces); guess && certify(traces, *guess)) {
    return from_multiplicities(d, *guess);
  }
  std::vector<BigRational> exact = exact_multiplicities(traces);
  std::vector<std::int64_t> mult(d, 0);
  std::int64_t total = 0;
  for (std::uint64_t e = 0; e < d; ++e) {
    if (!exact[e].is_integer() || exact[e].sign() < 0 || !exact[e].fits_int64()) {
      throw Error(ErrorKind::NonIntegerMultiplicity,
                  "multiplicity of exponent " + std::to_string(e == 0 ? d : e) + " is " + exact[e].to_string());
    }
    mult[e] = exact[e].to_int64();
    total += mult[e];
  }
  if (total != static_cast<std::int64_t>(n) || !certify(traces, mult)) {
    throw Error(ErrorKind::NonIntegerMultiplicity, "multiplicities do not reproduce the traces");
  }
  return from_multiplicities(d, mult);
}

EigenExponents eigen_exponents(const GroupElement& g) {
  if (g.is_diagonal()) return diagonal_exponents(g);
  const std::uint64_t d = element_order(g);
  std::vector<CyclotomicNumber> traces;
  traces.reserve(d);
  GroupElement p = GroupElement::identity(g.dim(), g.conductor());
  for (std::uint64_t j = 0; j < d; ++j) {
    traces.push_back(p.trace());
    p = p * g;
  }
  return eigen_exponents_from_traces(g.dim(), traces);
}

BigRational age_prime(const GroupElement& g) { return eigen_exponents(g).age_prime(); }
BigRational age_usual(const GroupElement& g) { return eigen_exponents(g).age(); }

GroupAnalysis analyze(const FiniteMatrixGroup& g) {
  const auto& cc = g.conjugacy_classes();
  const std::size_t classes = cc.classes.size();
  GroupAnalysis out;
  out.class_exponents.resize(classes);
  out.inverse_class.assign(classes, classes);
  std::vector<bool> done(classes, false);
  for (std::size_t c = 0; c < classes; ++c) {
    if (done[c]) continue;
    const std::size_t x = cc.classes[c].front();
    const bool diagonal = g.element(x).is_diagonal();
    std::vector<std::size_t> walk{0};
    std::vector<CyclotomicNumber> traces;
    if (!diagonal) traces.push_back(g.element(0).trace());
    for (std::size_t p = x; p != 0; p = g.product_index(p, x)) {
      walk.push_back(p);
      if (!diagonal) traces.push_back(g.element(p).trace());
      if (walk.size() > g.order()) throw Error(ErrorKind::OrderCapExceeded, "power walk exceeded |G|");
    }
    const std::size_t d = walk.size();
    const EigenExponents ex = diagonal ? diagonal_exponents(g.element(x)) : eigen_exponents_from_traces(g.dim(), traces);
    if (ex.order != d) throw Error(ErrorKind::OrderCapExceeded, "eigenvalue order disagrees with the power walk");
    for (std::size_t k = (d == 1 ? 0 : 1); k < d; ++k) {
      const std::size_t ck = cc.class_of[walk[k]];
      if (done[ck]) continue;
      out.class_exponents[ck] = ex.power(k);
      out.inverse_class[ck] = cc.class_of[walk[(d - k) % d]];
      done[ck] = true;
    }
  }
  return out;
}

std::uint64_t determinant_index(const FiniteMatrixGroup& g) {
  std::uint64_t r = 1;
  for (const auto& s : g.generators()) r = lcm_u64(r, root_of_unity_log(s.det()).order);
  return r;
}

void require_no_pseudo_reflections(const FiniteMatrixGroup& g) { reject_pseudo_reflections(g, analyze(g)); }

std::uint64_t gorenstein_index(const FiniteMatrixGroup& g) {
  require_no_pseudo_reflections(g);
  return determinant_index(g);
}

MldResult mld(const FiniteMatrixGroup& g) { return mld(g, analyze(g)); }

MldResult mld(const FiniteMatrixGroup& g, const GroupAnalysis& analysis) {
  reject_pseudo_reflections(g, analysis);
  const auto& cc = g.conjugacy_classes();
  MldResult best;
  bool have = false;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    BigRational a = analysis.class_exponents[c].age_prime();
    if (!have || a < best.value) {
      best.value = a;
      best.witness = cc.classes[c].front();
      have = true;
    }
  }
  return best;
}

BigRational total_mld(const FiniteMatrixGroup& g) { return total_mld(g, analyze(g)); }

BigRational total_mld(const FiniteMatrixGroup& g, const GroupAnalysis& analysis) {
  if (g.order() == 1) throw Error(ErrorKind::TrivialGroup, "total mld needs a nonidentity element");
  reject_pseudo_reflections(g, analysis);
  const auto& cc = g.conjugacy_classes();
  std::optional<BigRational> best;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    if (c == cc.class_of[0]) continue;
    BigRational a = analysis.class_exponents[c].age();
    if (!best || a < *best) best = a;
  }
  return *best;
}

SingularityReport shokurov_report(const FiniteMatrixGroup& g) { return shokurov_report(g, analyze(g)); }

SingularityReport shokurov_report(const FiniteMatrixGroup& g, const GroupAnalysis& analysis) {
  reject_pseudo_reflections(g, analysis);
  SingularityReport r;
  r.n = g.dim();
  r.order = g.order();
  MldResult m = mld(g, analysis);
  r.mld = m.value;
  r.mld_witness = m.witness;
  if (g.order() > 1) r.total_mld = total_mld(g, analysis);
  r.index = determinant_index(g);

  const BigRational n(static_cast<std::int64_t>(r.n));
  const BigRational n_minus_1 = n - BigRational(1);
  r.bound_ok = r.mld <= n;
  r.smooth_iff_trivial_ok = (r.mld > n_minus_1) == (r.order == 1);
  r.gorenstein_ok = r.mld != n_minus_1 || r.index == 1;

  const auto& cc = g.conjugacy_classes();
  r.pairing_ok = true;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    if (c == cc.class_of[0]) continue;
    PairingCheck p;
    const std::size_t inv = analysis.inverse_class[c];
    p.representative = cc.classes[c].front();
    p.inverse_representative = cc.classes[inv].front();
    p.age_prime = analysis.class_exponents[c].age_prime();
    p.inverse_age_prime = analysis.class_exponents[inv].age_prime();
    p.ell = analysis.class_exponents[c].ell();
    p.ok = p.ell >= 2 && p.age_prime + p.inverse_age_prime == BigRational(static_cast<std::int64_t>(2 * r.n - p.ell));
    r.pairing_ok = r.pairing_ok && p.ok;
    r.pairings.push_back(std::move(p));
  }
  return r;
}

}  // namespace quotsing
