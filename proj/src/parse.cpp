#include "quotsing/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quotsing/error.hpp"
#include "quotsing/serialize.hpp"

namespace quotsing {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 18) fail("integer too large");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CyclicSpec cyclic_from_json(const Json& j) {
  if (j.is_string()) return parse_cyclic(j.get<std::string>());
  if (!j.is_object() || !j.contains("d") || !j.contains("e")) {
    throw Error(ErrorKind::ParseError, "cyclic spec needs \"d\" and \"e\"");
  }
  std::ostringstream s;
  s << "1/" << j.at("d").get<std::int64_t>() << "(";
  bool first = true;
  for (const auto& x : j.at("e")) {
    s << (first ? "" : ",") << x.get<std::int64_t>();
    first = false;
  }
  s << ")";
  return parse_cyclic(s.str());
}

CyclotomicNumber entry_from_json(const Json& j, std::uint64_t conductor) {
  if (j.is_object() && j.contains("zeta")) return CyclotomicNumber::zeta(conductor, j.at("zeta").get<std::int64_t>());
  if (j.is_object()) {
    CyclotomicNumber a = cyclotomic_from_json(j);
    return a.embed(conductor);
  }
  return CyclotomicNumber::rational(rational_from_json(j), conductor);
}

GroupSpec group_from_json(const Json& j) {
  GroupSpec g;
  g.n = j.at("n").get<std::size_t>();
  g.conductor = j.value("conductor", std::uint64_t{1});
  if (g.conductor == 0) throw Error(ErrorKind::ParseError, "conductor must be positive");
  g.name = j.value("name", std::string());
  for (const auto& mat : j.at("generators")) {
    if (!mat.is_array() || mat.size() != g.n) throw Error(ErrorKind::DimensionMismatch, "generator is not n x n");
    std::vector<CyclotomicNumber> entries;
    for (const auto& row : mat) {
      if (!row.is_array() || row.size() != g.n) throw Error(ErrorKind::DimensionMismatch, "generator is not n x n");
      for (const auto& x : row) entries.push_back(entry_from_json(x, g.conductor));
    }
    g.generators.emplace_back(g.n, g.conductor, std::move(entries));
  }
  if (g.generators.empty()) g.generators.push_back(GroupElement::identity(g.n, g.conductor));
  return g;
}

ConeSpec cone_from_json(const Json& j) {
  ConeSpec c;
  std::size_t n = 0;
  if (j.contains("cyclic")) {
    CyclicSpec s = cyclic_from_json(j.at("cyclic"));
    n = s.e.size();
    c.lattice = lattice_from_weights(n, {s.weights()});
  } else if (j.contains("lattice_basis")) {
    RatMatrix basis;
    for (const auto& row : j.at("lattice_basis")) {
      basis.emplace_back();
      for (const auto& x : row) basis.back().push_back(rational_from_json(x));
    }
    n = j.value("n", basis.size());
    c.lattice = QuotLattice::from_generators(n, basis);
  } else {
    n = j.at("n").get<std::size_t>();
    std::vector<RatVector> weights;
    if (j.contains("weights")) {
      for (const auto& w : j.at("weights")) {
        weights.emplace_back();
        for (const auto& x : w) weights.back().push_back(rational_from_json(x));
      }
    }
    c.lattice = lattice_from_weights(n, weights);
  }
  if (j.contains("n") && j.at("n").get<std::size_t>() != n) {
    throw Error(ErrorKind::DimensionMismatch, "\"n\" disagrees with the lattice");
  }
  if (j.contains("rays")) {
    for (const auto& r : j.at("rays")) {
      c.rays.emplace_back();
      for (const auto& x : r) c.rays.back().push_back(rational_from_json(x));
    }
  } else {
    c.rays = identity_matrix(n);
  }
  if (j.contains("face")) c.face = j.at("face").get<std::vector<std::size_t>>();
  return c;
}

}  // namespace

std::string CyclicSpec::descriptor() const {
  std::string s = "1/" + std::to_string(d) + "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

RatVector CyclicSpec::weights() const {
  RatVector w;
  for (auto x : e) w.emplace_back(static_cast<std::int64_t>(x), static_cast<std::int64_t>(d));
  return w;
}

FiniteMatrixGroup CyclicSpec::group(std::size_t cap) const {
  return FiniteMatrixGroup::cyclic_diagonal(d, e, cap);
}

CyclicSpec parse_cyclic(std::string_view text) {
  Cursor c(text);
  if (c.integer() != 1) c.fail("cyclic shorthand must start with 1/");
  c.expect('/');
  CyclicSpec s;
  s.d = c.integer();
  if (s.d == 0) c.fail("d must be positive");
  c.expect('(');
  do {
    s.e.push_back(c.integer());
  } while (c.peek(',') && (c.expect(','), true));
  c.expect(')');
  c.finish();
  std::size_t at_d = 0;
  for (auto x : s.e) {
    if (x < 1 || x > s.d) {
      throw Error(ErrorKind::InvalidWeights,
                  "exponent " + std::to_string(x) + " is outside 1.." + std::to_string(s.d) + " in " + s.descriptor());
    }
    if (x == s.d) ++at_d;
  }
  s.pseudo_reflection = s.e.size() >= 1 && at_d + 1 == s.e.size();
  return s;
}

InputSpec parse_input(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size() || text[i] != '{') return parse_cyclic(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON at position ") + std::to_string(e.byte));
  }
  try {
    if (j.contains("generators")) return group_from_json(j);
    if (j.contains("rays") || j.contains("lattice_basis") || j.contains("weights")) return cone_from_json(j);
    if (j.contains("cyclic")) return cyclic_from_json(j.at("cyclic"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  throw Error(ErrorKind::ParseError, "unrecognised input: expected generators, rays, lattice_basis or cyclic");
}

InputSpec parse_input_argument(const std::string& argument) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) return parse_input(read_file(argument));
  return parse_input(argument);
}

std::size_t closure_cap_from_env() {
  const char* v = std::getenv("QUOTSING_CAP");
  if (v == nullptr || *v == '\0') return kDefaultClosureCap;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) throw Error(ErrorKind::ParseError, std::string("bad QUOTSING_CAP value '") + v + "'");
  return static_cast<std::size_t>(cap);
}

FiniteMatrixGroup group_from_spec(const InputSpec& spec, std::size_t cap) {
  if (const auto* c = std::get_if<CyclicSpec>(&spec)) return c->group(cap);
  if (const auto* g = std::get_if<GroupSpec>(&spec)) return FiniteMatrixGroup::close(g->generators, cap);
  throw Error(ErrorKind::ParseError, "input describes a cone, not a group");
}

ConeSpec cone_from_spec(const InputSpec& spec) {
  if (const auto* c = std::get_if<ConeSpec>(&spec)) return *c;
  if (const auto* c = std::get_if<CyclicSpec>(&spec)) {
    return ConeSpec{lattice_from_weights(c->e.size(), {c->weights()}), identity_matrix(c->e.size()), std::nullopt};
  }
  const auto& g = std::get<GroupSpec>(spec);
  FiniteMatrixGroup grp = FiniteMatrixGroup::close(g.generators, closure_cap_from_env());
  return ConeSpec{lattice_from_group(grp), identity_matrix(g.n), std::nullopt};
}

}  // namespace quotsing
