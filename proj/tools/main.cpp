#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quotsing/catalog.hpp"
#include "quotsing/error.hpp"
#include "quotsing/invariants.hpp"
#include "quotsing/jordanred.hpp"
#include "quotsing/parse.hpp"
#include "quotsing/scan.hpp"
#include "quotsing/serialize.hpp"
#include "quotsing/toriclat.hpp"

using namespace quotsing;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;

bool all_diagonal(const FiniteMatrixGroup& g) {
  for (const auto& s : g.generators()) {
    if (!s.is_diagonal()) return false;
  }
  return true;
}

int run_report(const std::string& input, bool json) {
  InputSpec spec = parse_input_argument(input);
  if (const auto* c = std::get_if<CyclicSpec>(&spec); c && c->pseudo_reflection) {
    std::cerr << "note: " << c->descriptor() << " is generated by a pseudo-reflection\n";
  }
  FiniteMatrixGroup g = group_from_spec(spec, closure_cap_from_env());
  SingularityReport r;
  try {
    r = shokurov_report(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PseudoReflectionPresent) {
      std::cerr << "error: " << e.what() << "\n";
      for (auto i : e.offenders()) std::cerr << "  element " << i << ": " << g.element(i).to_string() << "\n";
      return kInputError;
    }
    throw;
  }
  bool ok = r.all_ok();
  Json toric = nullptr;
  if (all_diagonal(g)) {
    QuotLattice lattice = lattice_from_group(g);
    Cone cone = Cone::make(identity_matrix(g.dim()), lattice);
    BigRational tm = toric_mld(cone, lattice, cone.whole());
    BigInt ti = toric_index(cone, lattice);
    bool agree = tm == r.mld && ti == BigInt(r.index);
    ok = ok && agree;
    toric = Json{{"mld", to_json(tm)}, {"index", ti.get_str()}, {"oracle_agree", agree}};
  }
  if (json) {
    Json j = to_json(r);
    j["toric"] = toric;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(r);
    if (!toric.is_null()) {
      std::cout << "toric mld: " << rational_from_json(toric["mld"]).to_string() << "\n"
                << "toric index: " << toric["index"].get<std::string>() << "\n"
                << "oracle_agree: " << (toric["oracle_agree"].get<bool>() ? "true" : "false") << "\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

int run_toric(const std::string& input, bool json) {
  ConeSpec spec = cone_from_spec(parse_input_argument(input));
  Cone cone = Cone::make(spec.rays, spec.lattice);
  ToricGorensteinReport r = toric_gorenstein_check(cone, spec.lattice);
  Json face_json = nullptr;
  if (spec.face) {
    Face f = require_face(cone, *spec.face);
    face_json = Json{{"face", f.rays}, {"mld", to_json(toric_mld(cone, spec.lattice, f))},
                     {"index", toric_index(cone, spec.lattice, f).get_str()}};
  }
  if (json) {
    Json j = to_json(r);
    j["n"] = spec.lattice.dim();
    j["support_vector"] = Json::array();
    for (const auto& x : support_vector(cone, spec.lattice).m) j["support_vector"].push_back(to_json(x));
    j["selected_face"] = face_json;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(r, spec.lattice.dim());
    if (!face_json.is_null()) {
      std::cout << "selected face mld: " << rational_from_json(face_json["mld"]).to_string()
                << ", index " << face_json["index"].get<std::string>() << "\n";
    }
  }
  return r.ok ? kOk : kCheckFailed;
}

int run_scan(std::size_t n, std::uint64_t d_max, bool csv, bool json, bool up_to_iso, const std::string& mld,
             bool table) {
  ScanFilters filters;
  filters.up_to_iso = up_to_iso;
  if (!mld.empty()) filters.mld = BigRational::parse(mld);
  std::vector<ScanRow> rows = scan_cyclic(n, d_max, filters);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.bound_ok && r.smooth_ok && r.gor_ok && r.oracle_agree;
  auto cells = empirical_index_table(rows);
  if (csv) {
    std::cout << to_csv(rows);
  } else if (json) {
    Json j;
    j["rows"] = Json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r));
    j["index_table"] = to_json(cells);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << r.descriptor << " order=" << r.order << " mld=" << r.mld.to_string()
                << " index=" << r.index.get_str() << "\n";
    }
    if (table) std::cout << to_text(cells);
  }
  return ok ? kOk : kCheckFailed;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad element index '" + item + "'");
    }
  }
  return out;
}

int run_jordan(const std::string& input, const std::string& subgroup, std::uint64_t c_prime, bool json) {
  FiniteMatrixGroup g = group_from_spec(parse_input_argument(input), closure_cap_from_env());
  CayleyTable table(g);
  SubgroupWitness h = subgroup.empty() ? find_abelian_normal(table) : verify_subgroup(table, parse_index_list(subgroup));
  DivisibilityReport r = divisibility_report(table, h, c_prime);
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "order: " << g.order() << "\n"
              << "subgroup order: " << h.elements.size() << (h.heuristic ? " (heuristic search)" : "") << "\n"
              << to_text(r);
  }
  return r.divides && r.h_prime_checks ? kOk : kCheckFailed;
}

int run_selftest(bool json) {
  struct Line {
    std::string name;
    bool ok;
  };
  std::vector<Line> lines;
  auto check = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    lines.push_back({name, ok});
  };
  check("cyclic 1/3(1,1) mld 2/3 index 3", [] {
    auto r = shokurov_report(parse_cyclic("1/3(1,1)").group());
    return r.mld == BigRational(2, 3) && r.index == 3 && r.all_ok();
  });
  check("cyclic 1/4(1,3) mld 1 index 1", [] {
    auto r = shokurov_report(parse_cyclic("1/4(1,3)").group());
    return r.mld == BigRational(1) && r.index == 1 && r.all_ok();
  });
  check("quaternion group classes 1,1,2,2,2", [] {
    auto g = quaternion_group();
    std::vector<std::size_t> sizes;
    for (const auto& c : g.conjugacy_classes().classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return g.order() == 8 && sizes == std::vector<std::size_t>{1, 1, 2, 2, 2};
  });
  check("two paths agree for n=2, d<=12", [] { return !scan_cyclic(2, 12).empty(); });
  check("reference suite trichotomy", [] {
    for (const auto& ng : reference_suite()) {
      if (!shokurov_report(ng.group).all_ok()) return false;
    }
    return true;
  });
  check("toric face localization on 1/2(1,1,0) lattice", [] {
    QuotLattice n = QuotLattice::from_generators(
        3, {{BigRational(1), BigRational(0), BigRational(0)},
            {BigRational(0), BigRational(1), BigRational(0)},
            {BigRational(0), BigRational(0), BigRational(1)},
            {BigRational(1, 2), BigRational(1, 2), BigRational(0)}});
    Cone c = Cone::make(identity_matrix(3), n);
    return toric_mld(c, n, require_face(c, {0, 1})) == BigRational(2);
  });
  bool ok = true;
  for (const auto& l : lines) ok = ok && l.ok;
  if (json) {
    Json j = Json::array();
    for (const auto& l : lines) j.push_back(Json{{"check", l.name}, {"ok", l.ok}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) std::cout << (l.ok ? "PASS " : "FAIL ") << l.name << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quotsing: mld, Gorenstein index and Shokurov checks for quotient and toric singularities"};
  app.require_subcommand(1);
  bool json = false;
  bool seedless = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--seedless", seedless, "accepted for compatibility; every run is deterministic");

  std::string input;
  auto* report = app.add_subcommand("report", "full singularity report for a group or cyclic type");
  report->add_option("input", input, "cyclic shorthand, JSON text, or a file")->required();

  std::string cone_input;
  auto* toric = app.add_subcommand("toric", "per-orbit mld and index of a toric cone");
  toric->add_option("cone", cone_input, "cone JSON file or text")->required();

  std::size_t n = 2;
  std::uint64_t d_max = 10;
  bool csv = false, up_to_iso = false, table = false;
  std::string mld_filter;
  auto* scan = app.add_subcommand("scan", "scan cyclic quotient types through both computation paths");
  scan->add_option("--n", n, "dimension")->check(CLI::PositiveNumber);
  scan->add_option("--dmax", d_max, "largest group order")->check(CLI::Range(2, 100000));
  scan->add_flag("--csv", csv, "CSV output");
  scan->add_flag("--up-to-iso", up_to_iso, "one tuple per unit-multiplier orbit");
  scan->add_option("--mld", mld_filter, "keep rows with this exact mld, e.g. 1 or 2/3");
  scan->add_flag("--table", table, "append the empirical index table");

  std::string group_input, subgroup;
  std::uint64_t c_prime = 0;
  auto* jordan = app.add_subcommand("jordan", "abelian normal subgroup, h' and divisibility checks");
  jordan->add_option("group", group_input, "group JSON file or text")->required();
  jordan->add_option("--subgroup", subgroup, "comma-separated element indices generating H");
  jordan->add_option("--c-prime", c_prime, "exponent c' for h' (default [G:H]); any multiple of exponent(G/H)");

  auto* selftest = app.add_subcommand("selftest", "quick built-in checks");

  for (auto* sub : {report, toric, scan, jordan, selftest}) {
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_flag("--seedless", seedless, "accepted for compatibility");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*report) return run_report(input, json);
    if (*toric) return run_toric(cone_input, json);
    if (*scan) return run_scan(n, d_max, csv, json, up_to_iso, mld_filter, table);
    if (*jordan) return run_jordan(group_input, subgroup, c_prime, json);
    if (*selftest) return run_selftest(json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_check_failure() ? kCheckFailed : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
