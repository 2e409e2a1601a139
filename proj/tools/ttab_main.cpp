#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttab/closed_forms.hpp"
#include "ttab/oracle.hpp"
#include "ttab/phi.hpp"
#include "ttab/shape_spec.hpp"
#include "ttab/symfunc.hpp"
#include "ttab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ttab;

namespace {

// Exit codes: 0 ok, 1 bad invocation, 2 verification failure, 3 unsupported
// input, 4 budget exceeded.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::too_large:
      return 4;
    default:
      return 3;
  }
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

json read_json_input(const std::string& path) {
  if (path.empty() || path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) raise(Errc::parse_error, "cannot open " + path);
  return json::parse(in);
}

void write_json_output(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

std::vector<std::vector<long>> rows_from_json(const json& j) {
  std::vector<std::vector<long>> rows;
  for (const auto& row : j) rows.push_back(row.get<std::vector<long>>());
  return rows;
}

json tableau_to_json(const SkewSsyt& t) {
  json j;
  j["outer"] = t.outer.parts();
  j["inner"] = t.inner.parts();
  j["rows"] = t.rows;
  return j;
}

SkewSsyt tableau_from_json(const json& j, bool reverse) {
  SkewSsyt t;
  t.outer = make_partition(j.at("outer").get<std::vector<int>>());
  t.inner = j.contains("inner") ? make_partition(j.at("inner").get<std::vector<int>>())
                                : Partition();
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  t.reverse = reverse;
  return t;
}

struct CountOptions {
  std::string shape_spec;
  std::string method = "all";
  long max_cells = 22;
};

int run_count(const CountOptions& opt) {
  TruncatedShape shape = parse_shape_spec(opt.shape_spec);
  Family fam = detect_family(shape);
  bool want_formula = opt.method == "formula" || opt.method == "all";
  bool want_oracle = opt.method == "oracle" || opt.method == "all";
  bool want_limit = opt.method == "limit" || opt.method == "all";
  bool single = opt.method != "all";

  auto formula_count = [&]() -> ExactInt {
    switch (fam.kind) {
      case Family::Kind::staircase_box:
        return count_staircase_minus_box(fam.n);
      case Family::Kind::rect_staircase:
        return count_rect_minus_staircase(fam.n, fam.m, fam.k);
      case Family::Kind::rect_almost_square:
        return count_rect_minus_almost_square(fam.n, fam.m, fam.k);
      default:
        raise(Errc::unsupported_family,
              "no product formula for " + canonical_shape_spec(shape));
    }
  };
  auto limit_count = [&]() -> ExactInt {
    switch (fam.kind) {
      case Family::Kind::staircase_box:
        return count_staircase_minus_box_via_limit(fam.n);
      case Family::Kind::rect_staircase:
        return count_rect_minus_staircase_via_limit(fam.n, fam.m, fam.k);
      case Family::Kind::rect_almost_square:
        return count_rect_minus_almost_square_via_limit(fam.n, fam.m, fam.k);
      default:
        raise(Errc::unsupported_family,
              "no closed generating function for " + canonical_shape_spec(shape));
    }
  };

  json out;
  out["shape"] = canonical_shape_spec(shape);
  json results = json::array();
  std::vector<CountResult> values;
  auto add = [&](CountResult::Method method, const char* method_name,
                 const std::function<ExactInt()>& fn) {
    auto start = std::chrono::steady_clock::now();
    CountResult res{fn(), method, canonical_shape_spec(shape)};
    json rec;
    rec["method"] = method_name;
    rec["count"] = res.value.get_str();
    rec["elapsed_ms"] = elapsed_ms(start);
    results.push_back(rec);
    values.push_back(std::move(res));
  };
  // In single-method mode errors propagate; under "all" a method that does
  // not apply is simply skipped.
  auto attempt = [&](bool wanted, CountResult::Method method, const char* name,
                     const std::function<ExactInt()>& fn) {
    if (!wanted) return;
    if (single) {
      add(method, name, fn);
      return;
    }
    try {
      add(method, name, fn);
    } catch (const Error&) {
    }
  };
  attempt(want_formula, CountResult::Method::formula, "formula", formula_count);
  attempt(want_oracle, CountResult::Method::oracle, "oracle",
          [&]() { return count_syt_oracle(shape, opt.max_cells); });
  attempt(want_limit, CountResult::Method::limit, "limit", limit_count);

  if (values.empty()) raise(Errc::unsupported_family, "no method applied to this shape");
  if (single) {
    for (auto& [key, value] : results[0].items()) out[key] = value;
  } else {
    bool agreement = true;
    for (const auto& v : values) agreement = agreement && (v.value == values.front().value);
    out["results"] = results;
    out["agreement"] = agreement;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gf(const std::string& shape_spec, int order, const std::string& method) {
  TruncatedShape shape = parse_shape_spec(shape_spec);
  auto start = std::chrono::steady_clock::now();
  QSeries series(order);
  if (method == "oracle") {
    series = pp_series_oracle(shape, order);
  } else if (method == "closed") {
    Family fam = detect_family(shape);
    if (fam.reflected) {
      raise(Errc::unsupported_family,
            "closed series forms need width <= height; use the reflected shape");
    }
    switch (fam.kind) {
      case Family::Kind::staircase_box:
        series = gf_staircase_minus_box(fam.n, order);
        break;
      case Family::Kind::rect_staircase:
        series = gf_rect_minus_staircase(fam.n, fam.m, fam.k, order);
        break;
      case Family::Kind::rect_almost_square:
        series = gf_rect_minus_almost_square(fam.n, fam.m, fam.k, order);
        break;
      default:
        raise(Errc::unsupported_family,
              "no closed generating function for " + canonical_shape_spec(shape));
    }
  } else {
    raise(Errc::parse_error, "method must be closed or oracle");
  }
  json out;
  out["shape"] = canonical_shape_spec(shape);
  out["method"] = method;
  out["order"] = order;
  out["coefficients"] = series.coeff_strings();
  out["elapsed_ms"] = elapsed_ms(start);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, const VerifyBudget& budget, bool as_json) {
  SuiteResult res = run_suite(suite, budget);
  if (as_json) {
    json out;
    out["suite"] = res.suite;
    json cases = json::array();
    for (const auto& c : res.cases) {
      json jc;
      jc["name"] = c.name;
      jc["status"] = c.informational ? "info" : (c.pass ? "pass" : "fail");
      jc["detail"] = c.detail;
      cases.push_back(jc);
    }
    out["cases"] = cases;
    out["pass"] = res.pass();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : res.cases) {
      const char* status = c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL");
      std::cout << status << "  " << res.suite << ": " << c.name;
      if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
      std::cout << "\n";
    }
    std::cout << (res.pass() ? "OK" : "FAILED") << "  " << res.suite << " ("
              << res.checked() << " checks, " << res.failed() << " failures)\n";
  }
  return res.pass() ? 0 : 2;
}

int run_phi(const std::string& in_path, const std::string& out_path, bool inverse,
            bool roundtrip) {
  json in = read_json_input(in_path);
  json out;
  if (!inverse) {
    TruncatedShape shape = parse_shape_spec(in.at("shape").get<std::string>());
    Filling T = Filling::from_rows(shape, rows_from_json(in.at("rows")));
    if (shape.kind() == ShapeKind::shifted) {
      SkewSsyt P = phi_shifted(T);
      out["P"] = tableau_to_json(P);
      if (roundtrip) {
        int n = shape.outer().length();
        int k = shape.trunc().empty() ? 0 : shape.trunc().part(1);
        out["roundtrip"] = (phi_shifted_inverse(P, n, k) == T);
      }
    } else {
      auto [P, Q] = phi_straight(T);
      out["P"] = tableau_to_json(P);
      out["Q"] = tableau_to_json(Q);
      if (roundtrip) {
        Family fam = detect_family(shape);
        out["roundtrip"] = (phi_straight_inverse(P, Q, fam.n, fam.m, fam.k) == T);
      }
    }
  } else {
    int n = in.at("n").get<int>();
    int k = in.at("k").get<int>();
    Filling T = in.contains("Q")
                    ? phi_straight_inverse(tableau_from_json(in.at("P"), true),
                                           tableau_from_json(in.at("Q"), true), n,
                                           in.at("m").get<int>(), k)
                    : phi_shifted_inverse(tableau_from_json(in.at("P"), true), n, k);
    out["shape"] = canonical_shape_spec(T.shape);
    out["rows"] = T.rows;
  }
  write_json_output(out, out_path);
  return 0;
}

int run_rsk(const std::string& in_path, const std::string& out_path, bool inverse) {
  json in = read_json_input(in_path);
  json out;
  if (!inverse) {
    IntMatrix A{rows_from_json(in.at("matrix"))};
    auto [P, Q] = rsk(A);
    out["P"] = tableau_to_json(P);
    out["Q"] = tableau_to_json(Q);
  } else {
    IntMatrix A = rsk_inverse(tableau_from_json(in.at("P"), false),
                              tableau_from_json(in.at("Q"), false),
                              in.value("rows", 0), in.value("cols", 0));
    out["matrix"] = A.a;
  }
  write_json_output(out, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration for truncated tableaux and plane partitions"};
  app.require_subcommand(1);

  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "count standard tableaux of a truncated shape");
  count->add_option("--shape", count_opt.shape_spec, "shape spec")->required();
  count->add_option("--method", count_opt.method, "formula|oracle|limit|all")
      ->check(CLI::IsMember({"formula", "oracle", "limit", "all"}));
  count->add_option("--max-cells", count_opt.max_cells, "enumeration budget");

  std::string gf_shape, gf_method = "closed";
  int gf_order = kDefaultSeriesOrder;
  auto* gf = app.add_subcommand("gf", "volume generating function coefficients");
  gf->add_option("--shape", gf_shape, "shape spec")->required();
  gf->add_option("--order", gf_order, "series truncation order");
  gf->add_option("--method", gf_method, "closed|oracle")
      ->check(CLI::IsMember({"closed", "oracle"}));

  std::string verify_suite;
  VerifyBudget budget;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_suite, "suite name")->required();
  verify->add_option("--max-n", budget.max_n, "largest staircase size");
  verify->add_option("--max-cells", budget.max_cells, "cell budget");
  verify->add_option("--order", budget.order, "series order");
  verify->add_flag("--json", verify_json, "machine-readable output");

  std::string phi_in, phi_out;
  bool phi_inverse = false, phi_roundtrip = false;
  auto* phi = app.add_subcommand("phi", "diagonal bijection on fillings (JSON in/out)");
  phi->add_option("--in", phi_in, "input file or - for stdin");
  phi->add_option("--out", phi_out, "output file or - for stdout");
  phi->add_flag("--inverse", phi_inverse, "apply the inverse map");
  phi->add_flag("--roundtrip", phi_roundtrip, "report forward+inverse equality");

  std::string rsk_in, rsk_out;
  bool rsk_inverse_flag = false;
  auto* rskcmd = app.add_subcommand("rsk", "insertion correspondence (JSON in/out)");
  rskcmd->add_option("--in", rsk_in, "input file or - for stdin");
  rskcmd->add_option("--out", rsk_out, "output file or - for stdout");
  rskcmd->add_flag("--inverse", rsk_inverse_flag, "apply the inverse correspondence");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return run_count(count_opt);
    if (*gf) return run_gf(gf_shape, gf_order, gf_method);
    if (*verify) return run_verify(verify_suite, budget, verify_json);
    if (*phi) return run_phi(phi_in, phi_out, phi_inverse, phi_roundtrip);
    if (*rskcmd) return run_rsk(rsk_in, rsk_out, rsk_inverse_flag);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
