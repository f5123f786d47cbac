#include "quotsing/serialize.hpp"

#include <sstream>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

Json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad integer " + j.dump());
    return z;
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string face_label(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.rays.size(); ++i) s += (i ? "," : "") + std::to_string(f.rays[i]);
  return s + "}";
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quote in CSV row");
  out.push_back(std::move(cur));
  return out;
}

bool parse_flag(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorKind::ParseError, "expected true/false, got '" + s + "'");
}

std::vector<std::uint64_t> exponents_of(const std::string& descriptor) {
  try {
    return parse_cyclic(descriptor).e;
  } catch (const Error&) {
    return {};
  }
}

}  // namespace

Json to_json(const BigRational& q) { return Json::array({big_to_json(q.numerator()), big_to_json(q.denominator())}); }

BigRational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error(ErrorKind::ParseError, "rational must be [num, den]");
    BigInt den = big_from_json(j[1]);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in " + j.dump());
    return BigRational(big_from_json(j[0]), den);
  }
  if (j.is_number_integer()) return BigRational(j.get<std::int64_t>());
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected a rational, got " + j.dump());
}

Json to_json(const CyclotomicNumber& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"m", a.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("coeffs")) {
    throw Error(ErrorKind::ParseError, "cyclotomic number needs \"m\" and \"coeffs\"");
  }
  const auto m = j.at("m").get<std::uint64_t>();
  if (m == 0) throw Error(ErrorKind::ParseError, "conductor must be positive");
  std::vector<BigRational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return CyclotomicNumber::from_coeffs(m, std::move(coeffs));
}

Json to_json(const GroupElement& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(to_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const EigenExponents& e) {
  return Json{{"order", e.order}, {"exps", e.exps}, {"age_prime", to_json(e.age_prime())}, {"ell", e.ell()}};
}

Json to_json(const SingularityReport& r) {
  Json pairings = Json::array();
  for (const auto& p : r.pairings) {
    pairings.push_back(Json{{"representative", p.representative},
                            {"inverse_representative", p.inverse_representative},
                            {"age_prime", to_json(p.age_prime)},
                            {"inverse_age_prime", to_json(p.inverse_age_prime)},
                            {"ell", p.ell},
                            {"ok", p.ok}});
  }
  return Json{{"n", r.n},
              {"order", r.order},
              {"mld", to_json(r.mld)},
              {"mld_witness", r.mld_witness},
              {"total_mld", r.total_mld ? to_json(*r.total_mld) : Json(nullptr)},
              {"index", r.index},
              {"bound_ok", r.bound_ok},
              {"smooth_iff_trivial_ok", r.smooth_iff_trivial_ok},
              {"gorenstein_ok", r.gorenstein_ok},
              {"pairing_ok", r.pairing_ok},
              {"pairings", pairings}};
}

Json to_json(const ToricGorensteinReport& r) {
  Json rows = Json::array();
  for (const auto& f : r.rows) {
    rows.push_back(Json{{"face", f.face.rays},
                        {"dim", f.face.dim},
                        {"mld", to_json(f.mld)},
                        {"index", big_to_json(f.face_index)},
                        {"subcone_index", big_to_json(f.subcone_index)},
                        {"ok", f.ok}});
  }
  return Json{{"cone_index", big_to_json(r.cone_index)}, {"ok", r.ok}, {"faces", rows}};
}

Json to_json(const DivisibilityReport& r) {
  return Json{{"dG", r.d_g},           {"dH", r.d_h},           {"index", r.index},
              {"exponent", r.exponent}, {"c_prime", r.c_prime}, {"divides", r.divides},
              {"h_prime_checks", r.h_prime_checks}};
}

Json to_json(const ScanRow& row) {
  return Json{{"descriptor", row.descriptor},
              {"n", row.n},
              {"order", row.order},
              {"mld", to_json(row.mld)},
              {"index", big_to_json(row.index)},
              {"bound_ok", row.bound_ok},
              {"smooth_ok", row.smooth_ok},
              {"gor_ok", row.gor_ok},
              {"oracle_agree", row.oracle_agree}};
}

ScanRow row_from_json(const Json& j) {
  ScanRow row;
  row.descriptor = j.at("descriptor").get<std::string>();
  row.n = j.at("n").get<std::size_t>();
  row.order = j.at("order").get<std::size_t>();
  row.mld = rational_from_json(j.at("mld"));
  row.index = big_from_json(j.at("index"));
  row.bound_ok = j.at("bound_ok").get<bool>();
  row.smooth_ok = j.at("smooth_ok").get<bool>();
  row.gor_ok = j.at("gor_ok").get<bool>();
  row.oracle_agree = j.at("oracle_agree").get<bool>();
  row.exponents = exponents_of(row.descriptor);
  return row;
}

Json to_json(const std::vector<IndexCell>& table) {
  Json out = Json::array();
  for (const auto& c : table) {
    out.push_back(Json{{"n", c.n},
                       {"mld", to_json(c.mld)},
                       {"max_index", big_to_json(c.max_index)},
                       {"witness", c.witness},
                       {"rows", c.rows},
                       {"gorenstein_cell", c.gorenstein_cell}});
  }
  return out;
}

std::string to_text(const SingularityReport& r) {
  std::ostringstream os;
  os << "n: " << r.n << "\n"
     << "order: " << r.order << "\n"
     << "mld: " << r.mld.to_string() << "\n"
     << "mld witness: element " << r.mld_witness << "\n"
     << "total mld: " << (r.total_mld ? r.total_mld->to_string() : "undefined (trivial group)") << "\n"
     << "index: " << r.index << "\n"
     << "bound_ok: " << flag(r.bound_ok) << "\n"
     << "smooth_iff_trivial_ok: " << flag(r.smooth_iff_trivial_ok) << "\n"
     << "gorenstein_ok: " << flag(r.gorenstein_ok) << "\n"
     << "pairing_ok: " << flag(r.pairing_ok) << " (" << r.pairings.size() << " classes)\n";
  return os.str();
}

std::string to_text(const ToricGorensteinReport& r, std::size_t n) {
  std::ostringstream os;
  os << "n: " << n << "\n"
     << "cone index: " << r.cone_index.get_str() << "\n";
  for (const auto& f : r.rows) {
    os << "face " << face_label(f.face) << " dim " << f.face.dim << ": mld " << f.mld.to_string() << ", index "
       << f.face_index.get_str() << ", subcone index " << f.subcone_index.get_str() << (f.ok ? "" : "  FAILED")
       << "\n";
  }
  os << "gorenstein_check: " << flag(r.ok) << "\n";
  return os.str();
}

std::string to_text(const DivisibilityReport& r) {
  std::ostringstream os;
  os << "d(G): " << r.d_g << "\n"
     << "d(H): " << r.d_h << "\n"
     << "index: " << r.index << "\n"
     << "exponent(G/H): " << r.exponent << "\n"
     << "c': " << r.c_prime << "\n"
     << "divides: " << flag(r.divides) << "\n"
     << "h_prime_checks: " << flag(r.h_prime_checks) << "\n";
  return os.str();
}

std::string to_text(const std::vector<IndexCell>& table) {
  std::ostringstream os;
  for (const auto& c : table) {
    os << "n=" << c.n << " mld=" << c.mld.to_string() << " max_index=" << c.max_index.get_str()
       << " witness=" << c.witness << " rows=" << c.rows << (c.gorenstein_cell ? " gorenstein_cell" : "") << "\n";
  }
  return os.str();
}

std::string csv_header() { return "descriptor,n,order,mld_num,mld_den,index,bound_ok,smooth_ok,gor_ok,oracle_agree"; }

std::string to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const auto& r : rows) {
    os << '"' << r.descriptor << "\"," << r.n << ',' << r.order << ',' << r.mld.numerator().get_str() << ','
       << r.mld.denominator().get_str() << ',' << r.index.get_str() << ',' << flag(r.bound_ok) << ','
       << flag(r.smooth_ok) << ',' << flag(r.gor_ok) << ',' << flag(r.oracle_agree) << "\n";
  }
  return os.str();
}

ScanRow row_from_csv(std::string_view line) {
  auto f = split_csv(line);
  if (f.size() != 10) throw Error(ErrorKind::ParseError, "CSV row needs 10 fields, got " + std::to_string(f.size()));
  ScanRow row;
  row.descriptor = f[0];
  try {
    row.n = std::stoull(f[1]);
    row.order = std::stoull(f[2]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad integer field in CSV row");
  }
  row.mld = BigRational::parse(f[3] + "/" + f[4]);
  if (row.index.set_str(f[5], 10) != 0) throw Error(ErrorKind::ParseError, "bad index '" + f[5] + "'");
  row.bound_ok = parse_flag(f[6]);
  row.smooth_ok = parse_flag(f[7]);
  row.gor_ok = parse_flag(f[8]);
  row.oracle_agree = parse_flag(f[9]);
  row.exponents = exponents_of(row.descriptor);
  return row;
}

std::vector<ScanRow> rows_from_csv(std::string_view text) {
  std::vector<ScanRow> rows;
  std::size_t start = 0;
  bool header = true;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != csv_header()) throw Error(ErrorKind::ParseError, "unexpected CSV header");
      header = false;
      continue;
    }
    rows.push_back(row_from_csv(line));
  }
  return rows;
}

}  // namespace quotsing
