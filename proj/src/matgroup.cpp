#include "quotsing/matgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

/// Row reduction over Q(zeta_m). Inverses are taken only when a pivot has
/// something below it to clear, so diagonal input costs no field inversions.
struct FieldElimination {
  std::size_t rank = 0;
  CyclotomicNumber det;
};

FieldElimination eliminate(std::vector<CyclotomicNumber> a, std::size_t n, std::uint64_t m) {
  FieldElimination out;
  out.det = CyclotomicNumber::one(m);
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p * n + c].is_zero()) ++p;
    if (p == n) {
      out.det = CyclotomicNumber::zero(m);
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[r * n + j]);
      negate = !negate;
    }
    std::optional<CyclotomicNumber> inv;
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i * n + c].is_zero()) continue;
      if (!inv) inv = a[r * n + c].inverse();
      CyclotomicNumber f = -(a[i * n + c] * *inv);
      for (std::size_t j = c; j < n; ++j) {
        if (!a[r * n + j].is_zero()) a[i * n + j].add_product(f, a[r * n + j]);
      }
    }
    if (!out.det.is_zero()) out.det = out.det * a[r * n + c];
    ++r;
  }
  out.rank = r;
  if (negate && !out.det.is_zero()) out.det = -out.det;
  return out;
}

}  // namespace

GroupElement::GroupElement(std::size_t n, std::uint64_t conductor, std::vector<CyclotomicNumber> entries)
    : n_(n), m_(conductor), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n_ * n_) + " entries");
  }
  for (const auto& e : entries_) {
    if (e.conductor() != m_) {
      throw Error(ErrorKind::ConductorMismatch,
                  "entry at conductor " + std::to_string(e.conductor()) + " in a matrix over " + std::to_string(m_));
    }
  }
}

GroupElement GroupElement::identity(std::size_t n, std::uint64_t conductor) {
  std::vector<CyclotomicNumber> e(n * n, CyclotomicNumber::zero(conductor));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = CyclotomicNumber::one(conductor);
  return GroupElement(n, conductor, std::move(e));
}

GroupElement GroupElement::diagonal(std::uint64_t conductor, const std::vector<std::int64_t>& zeta_exponents) {
  const std::size_t n = zeta_exponents.size();
  const CyclotomicNumber zero = CyclotomicNumber::zero(conductor);
  GroupElement g;
  g.n_ = n;
  g.m_ = conductor;
  g.entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.entries_.push_back(i == j ? CyclotomicNumber::zeta(conductor, zeta_exponents[i]) : zero);
    }
  }
  return g;
}

GroupElement GroupElement::from_rational(const std::vector<std::vector<BigRational>>& rows, std::uint64_t conductor) {
  const std::size_t n = rows.size();
  std::vector<CyclotomicNumber> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    for (const auto& q : row) e.push_back(CyclotomicNumber::rational(q, conductor));
  }
  return GroupElement(n, conductor, std::move(e));
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& e = entries_[i * n_ + j];
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool GroupElement::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !entries_[i * n_ + j].is_zero()) return false;
    }
  }
  return true;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
  if (a.m_ != b.m_) {
    throw Error(ErrorKind::ConductorMismatch, std::to_string(a.m_) + " vs " + std::to_string(b.m_));
  }
  const std::size_t n = a.n_;
  std::vector<CyclotomicNumber> out(n * n, CyclotomicNumber::zero(a.m_));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a.entries_[i * n + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& bkj = b.entries_[k * n + j];
        if (bkj.is_zero()) continue;
        out[i * n + j].add_product(aik, bkj);
      }
    }
  }
  GroupElement r;
  r.n_ = n;
  r.m_ = a.m_;
  r.entries_ = std::move(out);
  return r;
}

CyclotomicNumber GroupElement::trace() const {
  if (n_ == 0) return CyclotomicNumber::zero(m_);
  CyclotomicNumber t = entries_[0];
  for (std::size_t i = 1; i < n_; ++i) t += entries_[i * n_ + i];
  return t;
}

CyclotomicNumber GroupElement::det() const { return eliminate(entries_, n_, m_).det; }

std::size_t GroupElement::rank_minus_identity() const {
  std::vector<CyclotomicNumber> a = entries_;
  for (std::size_t i = 0; i < n_; ++i) a[i * n_ + i] -= CyclotomicNumber::one(m_);
  return eliminate(std::move(a), n_, m_).rank;
}

GroupElement GroupElement::inverse() const {
  const std::size_t n = n_;
  const std::size_t w = 2 * n;
  std::vector<CyclotomicNumber> a(n * w, CyclotomicNumber::zero(m_));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = entries_[i * n + j];
    a[i * w + n + i] = CyclotomicNumber::one(m_);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * w + c].is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::SingularGenerator, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < w; ++j) std::swap(a[p * w + j], a[c * w + j]);
    }
    if (!a[c * w + c].is_one()) {
      CyclotomicNumber inv = a[c * w + c].inverse();
      for (std::size_t j = 0; j < w; ++j) {
        if (!a[c * w + j].is_zero()) a[c * w + j] = a[c * w + j] * inv;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * w + c].is_zero()) continue;
      CyclotomicNumber f = -a[i * w + c];
      for (std::size_t j = 0; j < w; ++j) {
        if (!a[c * w + j].is_zero()) a[i * w + j].add_product(f, a[c * w + j]);
      }
    }
  }
  std::vector<CyclotomicNumber> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(a[i * w + n + j]);
  }
  return GroupElement(n, m_, std::move(out));
}

GroupElement GroupElement::embed(std::uint64_t target) const {
  std::vector<CyclotomicNumber> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.embed(target));
  return GroupElement(n_, target, std::move(out));
}

GroupElement GroupElement::pow(std::uint64_t k) const {
  GroupElement result = identity(n_, m_);
  GroupElement base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < n_; ++j) os << (j == 0 ? "" : ", ") << entries_[i * n_ + j].to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t GroupElement::hash() const noexcept {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ULL + m_;
  for (const auto& e : entries_) h = (h ^ e.hash()) * 0x100000001b3ULL;
  return h;
}

std::uint64_t element_order(const GroupElement& g, std::uint64_t cap) {
  GroupElement p = g;
  for (std::uint64_t d = 1; d <= cap; ++d) {
    if (p.is_identity()) return d;
    p = p * g;
  }
  throw Error(ErrorKind::OrderCapExceeded, "no identity within " + std::to_string(cap) + " powers");
}

bool is_pseudo_reflection(const GroupElement& g) { return g.rank_minus_identity() == 1; }

struct FiniteMatrixGroup::Lazy {
  std::once_flag index_once;
  std::unordered_multimap<std::size_t, std::size_t> index;
  // BFS data: element k > 0 was first reached as element(parent[k]) * generator(via[k]);
  // right[i * ngens + s] is the index of element(i) * generator(s).
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::vector<std::size_t> right;
  std::once_flag classes_once;
  ConjugacyClasses classes;
  std::once_flag exponent_once;
  std::uint64_t exponent = 1;
};

FiniteMatrixGroup FiniteMatrixGroup::trivial(std::size_t n, std::uint64_t conductor) {
  return close({GroupElement::identity(n, conductor)});
}

FiniteMatrixGroup FiniteMatrixGroup::close(std::vector<GroupElement> generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::DimensionMismatch, "at least one generator is required");
  FiniteMatrixGroup g;
  g.n_ = generators.front().dim();
  g.m_ = generators.front().conductor();
  for (const auto& s : generators) {
    if (s.dim() != g.n_) throw Error(ErrorKind::DimensionMismatch, "generators have different dimensions");
    if (s.conductor() != g.m_) {
      throw Error(ErrorKind::ConductorMismatch, "generators have different conductors");
    }
    if (s.det().is_zero()) throw Error(ErrorKind::SingularGenerator, s.to_string());
  }
  g.generators_ = std::move(generators);
  g.lazy_ = std::make_shared<Lazy>();
  auto& index = g.lazy_->index;

  auto find = [&](const GroupElement& x, std::size_t h) -> std::optional<std::size_t> {
    auto [lo, hi] = index.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (g.elements_[it->second] == x) return it->second;
    }
    return std::nullopt;
  };

  auto& lz = *g.lazy_;
  GroupElement id = GroupElement::identity(g.n_, g.m_);
  index.emplace(id.hash(), 0);
  g.elements_.push_back(std::move(id));
  lz.parent.push_back(0);
  lz.via.push_back(0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t si = 0; si < g.generators_.size(); ++si) {
      GroupElement y = g.elements_[i] * g.generators_[si];
      std::size_t h = y.hash();
      if (auto k = find(y, h)) {
        lz.right.push_back(*k);
        continue;
      }
      if (g.elements_.size() >= cap) {
        throw Error(ErrorKind::CapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
      }
      lz.right.push_back(g.elements_.size());
      lz.parent.push_back(i);
      lz.via.push_back(si);
      index.emplace(h, g.elements_.size());
      g.elements_.push_back(std::move(y));
    }
  }
  for (const auto& s : g.generators_) g.generator_indices_.push_back(*find(s, s.hash()));
  std::call_once(lz.index_once, [] {});
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::cyclic_diagonal(std::uint64_t d, const std::vector<std::uint64_t>& e,
                                                     std::size_t cap) {
  if (d == 0) throw Error(ErrorKind::InvalidWeights, "d must be positive");
  if (e.empty()) throw Error(ErrorKind::DimensionMismatch, "at least one exponent is required");
  std::uint64_t g0 = d;
  for (auto x : e) g0 = std::gcd(g0, x % d);
  const std::uint64_t order = d / g0;
  if (order > cap) throw Error(ErrorKind::CapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
  FiniteMatrixGroup g;
  g.n_ = e.size();
  g.m_ = d;
  g.lazy_ = std::make_shared<Lazy>();
  auto& lz = *g.lazy_;
  std::vector<CyclotomicNumber> zetas;
  zetas.reserve(d);
  for (std::uint64_t j = 0; j < d; ++j) zetas.push_back(CyclotomicNumber::zeta(d, static_cast<std::int64_t>(j)));
  const std::size_t n = e.size();
  const CyclotomicNumber zero = CyclotomicNumber::zero(d);
  g.elements_.reserve(order);
  lz.parent.reserve(order);
  lz.via.reserve(order);
  lz.right.reserve(order);
  std::vector<CyclotomicNumber> entries;
  for (std::uint64_t p = 0; p < order; ++p) {
    entries.assign(n * n, zero);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = zetas[(p * (e[i] % d)) % d];
    g.elements_.emplace_back(n, d, std::move(entries));
    lz.parent.push_back(p == 0 ? 0 : p - 1);
    lz.via.push_back(0);
    lz.right.push_back((p + 1) % order);
  }
  g.generators_.push_back(order == 1 ? g.elements_[0] : g.elements_[1]);
  g.generator_indices_.push_back(order == 1 ? 0 : 1);
  return g;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const GroupElement& x) const {
  std::call_once(lazy_->index_once, [this] {
    for (std::size_t i = 0; i < elements_.size(); ++i) lazy_->index.emplace(elements_[i].hash(), i);
  });
  auto [lo, hi] = lazy_->index.equal_range(x.hash());
  for (auto it = lo; it != hi; ++it) {
    if (elements_[it->second] == x) return it->second;
  }
  return std::nullopt;
}

std::size_t FiniteMatrixGroup::product_index(std::size_t i, std::size_t j) const {
  if (i >= elements_.size() || j >= elements_.size()) throw std::out_of_range("element index");
  // Spell element j as a word in the generators and apply it letter by letter.
  const auto& lz = *lazy_;
  const std::size_t ngens = generators_.size();
  thread_local std::vector<std::size_t> word;
  word.clear();
  for (std::size_t k = j; k != 0; k = lz.parent[k]) word.push_back(lz.via[k]);
  std::size_t r = i;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = lz.right[r * ngens + *it];
  return r;
}

std::size_t FiniteMatrixGroup::right_multiply_generator(std::size_t i, std::size_t s) const {
  return lazy_->right.at(i * generators_.size() + s);
}

std::uint64_t FiniteMatrixGroup::order_of(std::size_t i) const {
  std::uint64_t k = 1;
  for (std::size_t p = i; p != 0; p = product_index(p, i)) ++k;
  return i == 0 ? 1 : k;
}

std::size_t FiniteMatrixGroup::inverse_index(std::size_t i) const {
  std::size_t prev = 0;
  for (std::size_t p = i; p != 0; p = product_index(p, i)) prev = p;
  return i == 0 ? 0 : prev;
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (!(generators_[a] * generators_[b] == generators_[b] * generators_[a])) return false;
    }
  }
  return true;
}

const ConjugacyClasses& FiniteMatrixGroup::conjugacy_classes() const {
  std::call_once(lazy_->classes_once, [this] {
    ConjugacyClasses& cc = lazy_->classes;
    const std::size_t order = elements_.size();
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    cc.class_of.assign(order, kUnassigned);
    if (is_abelian()) {
      for (std::size_t i = 0; i < order; ++i) {
        cc.class_of[i] = i;
        cc.classes.push_back({i});
      }
      return;
    }
    std::vector<std::size_t> inverses;
    for (auto gi : generator_indices_) inverses.push_back(inverse_index(gi));
    for (std::size_t start = 0; start < order; ++start) {
      if (cc.class_of[start] != kUnassigned) continue;
      const std::size_t id = cc.classes.size();
      std::vector<std::size_t> members{start};
      cc.class_of[start] = id;
      for (std::size_t q = 0; q < members.size(); ++q) {
        const std::size_t x = members[q];
        for (std::size_t s = 0; s < generators_.size(); ++s) {
          std::size_t y = product_index(product_index(generator_indices_[s], x), inverses[s]);
          if (cc.class_of[y] == kUnassigned) {
            cc.class_of[y] = id;
            members.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      cc.classes.push_back(std::move(members));
    }
  });
  return lazy_->classes;
}

std::uint64_t FiniteMatrixGroup::exponent() const {
  std::call_once(lazy_->exponent_once, [this] {
    std::uint64_t e = 1;
    for (const auto& cls : conjugacy_classes().classes) {
      e = lcm_u64(e, order_of(cls.front()));
    }
    lazy_->exponent = e;
  });
  return lazy_->exponent;
}

std::vector<std::size_t> pseudo_reflection_indices(const FiniteMatrixGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& cls : g.conjugacy_classes().classes) {
    if (is_pseudo_reflection(g.element(cls.front()))) out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> pseudo_reflections(const FiniteMatrixGroup& g) {
  std::vector<GroupElement> out;
  for (auto i : pseudo_reflection_indices(g)) out.push_back(g.element(i));
  return out;
}

}  // namespace quotsing
