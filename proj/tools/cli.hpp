#pragma once

// Command implementations behind the `diskmetrics` executable. Each command
// writes to the given streams and returns the process exit status.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diskmetrics/diskmetrics.hpp"
#include "selftest.hpp"

namespace diskmetrics::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kSelfTestFailed = 4 };

inline int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ParseError ? kUsage : kDomain;
}

namespace detail {

inline double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::ParseError, "malformed complex literal '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses "x+yi", "x-yi", "x", "yi" with optional spaces. The Unicode minus
/// sign U+2212 is accepted in place of '-'.
inline Point parse_point(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s.push_back('-');
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      s.push_back(text[i]);
    }
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {detail::parse_real(s, text), 0.0};

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, detail::parse_real(s, text)};
  const std::string_view sv(s);
  return {detail::parse_real(sv.substr(0, split), text), detail::parse_real(sv.substr(split), text)};
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline std::string format_point(Point z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

inline nlohmann::ordered_json point_json(Point z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

// ---------------------------------------------------------------- eval

struct EvalRequest {
  Point a;
  Point b;
  std::vector<std::string> routes{"all"};
  std::string format = "text";
};

inline const std::vector<Route>& evaluable_routes() {
  static const std::vector<Route> routes{Route::radial,  Route::equal_modulus, Route::orthocircle,
                                         Route::via_rho, Route::hmid,          Route::quadratic};
  return routes;
}

inline VamResult run_route(Route r, Point a, Point b, const ToleranceConfig& tol) {
  switch (r) {
    case Route::radial: return vam_radial(a, b, tol);
    case Route::equal_modulus: return vam_equal_modulus(a, b, tol);
    case Route::orthocircle: return vam_orthocircle(a, b, tol);
    case Route::via_rho: return vam_via_rho(a, b, tol);
    case Route::hmid: return vam_hmid(a, b, tol);
    case Route::quadratic: return vam_quadratic(a, b, tol);
    case Route::coincident: break;
  }
  return VamResult{};
}

inline int cmd_eval(const EvalRequest& req, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol;
  try {
    diskmetrics::detail::require_in_disk(req.a, "a");
    diskmetrics::detail::require_in_disk(req.b, "b");
    const bool all = std::find(req.routes.begin(), req.routes.end(), "all") != req.routes.end();
    std::vector<Route> wanted;
    if (all) {
      wanted = evaluable_routes();
    } else {
      for (const auto& name : req.routes) {
        const auto r = route_from_string(name);
        if (!r || *r == Route::coincident) throw Error(ErrorKind::ParseError, "unknown route '" + name + "'");
        wanted.push_back(*r);
      }
    }

    nlohmann::ordered_json doc;
    doc["a"] = point_json(req.a);
    doc["b"] = point_json(req.b);
    nlohmann::ordered_json routes = nlohmann::ordered_json::object();
    std::vector<double> values;
    std::optional<OracleReport> oracle;

    const bool coincident = std::abs(req.a - req.b) <= tol.eq_tol * diskmetrics::detail::scale_of(req.a, req.b);
    if (coincident) {
      routes["coincident"] = {{"v", 0.0}, {"diagnostics", nlohmann::ordered_json::object()}};
      values.push_back(0.0);
    } else {
      for (Route r : wanted) {
        VamResult res;
        try {
          res = run_route(r, req.a, req.b, tol);
        } catch (const Error& e) {
          // Routes whose preconditions fail are skipped under "all".
          if (all) continue;
          throw;
        }
        nlohmann::ordered_json entry;
        entry["v"] = res.value;
        if (res.extremal_point) entry["extremal_point"] = point_json(*res.extremal_point);
        entry["diagnostics"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : res.diagnostics) entry["diagnostics"][k] = v;
        routes[std::string(to_string(r))] = entry;
        values.push_back(res.value);
      }
      oracle = vam_bruteforce(req.a, req.b);
    }
    doc["routes"] = routes;
    if (oracle) {
      doc["oracle"] = {{"v", oracle->value}, {"argmax", point_json(oracle->argmax)}};
      values.push_back(oracle->value);
    } else {
      doc["oracle"] = nullptr;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    doc["max_discrepancy"] = values.empty() ? 0.0 : *hi - *lo;

    if (req.format == "json") {
      out << doc.dump(2) << "\n";
    } else {
      out << "a = " << format_point(req.a) << "\nb = " << format_point(req.b) << "\n";
      for (const auto& [name, entry] : doc["routes"].items()) {
        out << std::left << std::setw(14) << name << " v = " << format_double(entry["v"].get<double>());
        if (entry.contains("extremal_point")) {
          out << "  at " << format_point({entry["extremal_point"][0].get<double>(), entry["extremal_point"][1].get<double>()});
        }
        out << "\n";
      }
      if (oracle) {
        out << std::left << std::setw(14) << "oracle" << " v = " << format_double(oracle->value) << "  at "
            << format_point(oracle->argmax) << "\n";
      }
      out << "max_discrepancy = " << format_double(doc["max_discrepancy"].get<double>()) << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

// ---------------------------------------------------------------- grid

struct GridRequest {
  Point fixed_b;
  int n = 64;
  std::string output_path;
};

/// Cell centres of an n x n grid over [-1,1]^2, in row-major order
/// (increasing re, then im); centres outside the open disk are dropped.
inline std::vector<Point> grid_points(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double re = -1.0 + (2.0 * i + 1.0) / n;
    for (int j = 0; j < n; ++j) {
      const double im = -1.0 + (2.0 * j + 1.0) / n;
      const Point z(re, im);
      if (std::abs(z) < 1.0) pts.push_back(z);
    }
  }
  return pts;
}

inline std::string render_grid_csv(Point fixed_b, int n) {
  const std::vector<Point> pts = grid_points(n);
  std::vector<double> v(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { v[i] = vam(pts[i], fixed_b).value; });
  std::string csv = "re,im,v\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    csv += format_double(pts[i].real()) + "," + format_double(pts[i].imag()) + "," + format_double(v[i]) + "\n";
  }
  return csv;
}

inline int cmd_grid(const GridRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.n < 2) throw Error(ErrorKind::ParseError, "grid resolution must be at least 2");
    diskmetrics::detail::require_in_disk(req.fixed_b, "b");
    const std::string csv = render_grid_csv(req.fixed_b, req.n);
    std::ofstream file(req.output_path, std::ios::binary);
    if (!file || !(file << csv) || !file.flush()) {
      throw Error(ErrorKind::IoError, "cannot write '" + req.output_path + "'");
    }
    out << "wrote " << std::count(csv.begin(), csv.end(), '\n') - 1 << " rows to " << req.output_path << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::IoError ? kDomain : exit_code_for(e.kind());
  }
}

// ---------------------------------------------------------------- schwarz

struct SchwarzRequest {
  double K = 1.0;
  std::string map = "mobius";
  int samples = 1000;
  std::uint64_t seed = 42;
};

struct SchwarzWitness {
  Point a, b, fa, fb;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct SchwarzReport {
  int samples = 0;
  int violations = 0;
  double max_ratio = 0.0;  // largest lhs / rhs
  double min_slack = std::numeric_limits<double>::infinity();  // smallest rhs - lhs
  std::vector<SchwarzWitness> witnesses;  // closest to equality first
};

inline SchwarzReport run_schwarz(const SchwarzRequest& req) {
  if (!(req.K >= 1.0) || !std::isfinite(req.K)) throw Error(ErrorKind::ParseError, "--k must be >= 1");
  if (req.map != "mobius" && req.map != "stretch") throw Error(ErrorKind::ParseError, "--map must be mobius or stretch");
  if (req.samples < 1) throw Error(ErrorKind::ParseError, "--samples must be positive");

  std::vector<SchwarzWitness> rows(static_cast<std::size_t>(req.samples));
  const SeedStream root(req.seed);
  parallel_for(rows.size(), [&](std::size_t i) {
    SeedStream stream = root.split(i);
    const auto [a, b] = random_pair(stream);
    const DiskAutomorphism f = req.map == "mobius" ? DiskAutomorphism::mobius(random_disk_point(stream, 0.95))
                                                   : DiskAutomorphism::radial_stretch(req.K);
    SchwarzWitness w{a, b, f.apply(a), f.apply(b)};
    const SchwarzVamBound bound = main3_bound(w.a, w.b, w.fa, w.fb, req.K);
    w.lhs = bound.lhs;
    w.rhs = bound.rhs;
    rows[i] = w;
  });

  SchwarzReport rep;
  rep.samples = req.samples;
  for (const auto& w : rows) {
    if (w.lhs > w.rhs * (1.0 + selftest::kInequalitySlack)) ++rep.violations;
    rep.max_ratio = std::max(rep.max_ratio, w.lhs / w.rhs);
    rep.min_slack = std::min(rep.min_slack, w.rhs - w.lhs);
  }
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return rows[x].lhs / rows[x].rhs > rows[y].lhs / rows[y].rhs; });
  for (std::size_t i = 0; i < std::min<std::size_t>(3, order.size()); ++i) rep.witnesses.push_back(rows[order[i]]);
  return rep;
}

inline int cmd_schwarz(const SchwarzRequest& req, std::ostream& out, std::ostream& err) {
  try {
    const SchwarzReport rep = run_schwarz(req);
    out << "map = " << req.map << ", K = " << format_double(req.K) << ", samples = " << rep.samples
        << ", seed = " << req.seed << "\n";
    out << "violations = " << rep.violations << "\n";
    out << "max lhs/rhs = " << format_double(rep.max_ratio) << "\n";
    out << "min slack (rhs - lhs) = " << format_double(rep.min_slack) << "\n";
    out << "near-equality witnesses:\n";
    for (const auto& w : rep.witnesses) {
      out << "  a = " << format_point(w.a) << ", b = " << format_point(w.b) << ", lhs = " << format_double(w.lhs)
          << ", rhs = " << format_double(w.rhs) << "\n";
    }
    return rep.violations == 0 ? kOk : kSelfTestFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

// ---------------------------------------------------------------- selftest

struct SelfTestRequest {
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

inline int cmd_selftest(const SelfTestRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.samples < 1) throw Error(ErrorKind::ParseError, "--samples must be at least 1");
    if (!(req.tol > 0.0)) throw Error(ErrorKind::ParseError, "--tol must be positive");
    const auto results = selftest::run_all(req.samples, req.seed, req.tol);
    bool ok = true;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << " worst = " << std::setprecision(3)
          << std::scientific << r.worst << "  limit = " << r.limit << std::defaultfloat << "\n";
      ok = ok && r.passed;
    }
    out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? kOk : kSelfTestFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace diskmetrics::cli
