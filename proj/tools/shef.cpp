// Command-line front end: generate coefficient tables, locate zeros,
// compare zero densities, and manipulate Riordan pairs. CSV or JSON out.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sheflab/family.hpp"
#include "sheflab/locus.hpp"
#include "sheflab/sheffer.hpp"

using namespace sheflab;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCheck = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  unsigned precision = 256;
  double cert_tol = 1e-30;
  std::string format = "csv";
  std::string out;
  int jobs = 1;
  unsigned long long seed = 0;  // reserved for randomized suites
};

// ---- output plumbing --------------------------------------------------------

// Atomic write: stage into a sibling temp file, then rename over the target.
void write_out(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(g.out);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << text;
  }
  fs::rename(tmp, target);
}

std::string real_str(const Real& x) {
  // shortest round-trip decimal at the value's working precision
  return x.str(0, std::ios_base::scientific);
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

json finish(const Global& g, json config, json results, json checks,
            const std::string& csv) {
  if (g.format == "json") {
    json doc;
    doc["config"] = std::move(config);
    doc["results"] = std::move(results);
    doc["checks"] = std::move(checks);
    write_out(g, doc.dump(2) + "\n");
  } else {
    write_out(g, csv);
  }
  return checks;
}

// ---- pair parsing -----------------------------------------------------------

TruncatedSeries<Rational> parse_series(const std::string& text, int order) {
  TruncatedSeries<Rational> s(order);
  std::stringstream ss(text);
  std::string tok;
  int k = 0;
  while (std::getline(ss, tok, ';')) {
    if (k > order) throw ConfigError("series has more than order+1 coefficients");
    try {
      s[k++] = Rational(tok);
    } catch (const std::exception&) {
      throw ConfigError("bad rational coefficient '" + tok + "'");
    }
  }
  if (k == 0) throw ConfigError("empty coefficient list");
  return s;
}

ShefferPair<Rational> named_pair(const std::string& name, int order) {
  if (name == "bernoulli") return bernoulli_pair(order);
  if (name == "bernoulli-cognate") return bernoulli_cognate_pair(order);
  if (name == "euler") return euler_pair(order);
  if (name == "hermite") return hermite_pair(order);
  if (name == "1,z") return monomial_pair(order);
  if (name == "exp,z") {
    TruncatedSeries<Rational> g(order), z(order);
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
      if (k > 0) fact *= k;
      g[k] = Rational(1) / fact;
    }
    if (order >= 1) z[1] = 1;
    return {{g, z}, "exp,z"};
  }
  // custom: "g0;g1;... / f0;f1;..." (ordinary coefficients)
  auto slash = name.find('/');
  if (slash == std::string::npos)
    throw ConfigError("unknown pair '" + name +
                      "' (named: bernoulli, bernoulli-cognate, euler, hermite, 1,z, exp,z; "
                      "custom: \"g0;g1;.../f0;f1;...\")");
  auto g = parse_series(name.substr(0, slash), order);
  auto f = parse_series(name.substr(slash + 1), order);
  try {
    return {{g, f}, "custom"};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("inadmissible pair: ") + e.what());
  }
}

std::optional<FamilyParams> named_family(const std::string& name) {
  if (name == "example1-left") return example1_left();
  if (name == "example1-right") return example1_right();
  return std::nullopt;
}

// ---- subcommands ------------------------------------------------------------

struct GenerateArgs {
  std::string pair;
  std::string family;
  int n = 4;
};

int cmd_generate(const Global& g, const GenerateArgs& a) {
  RiordanMatrix<Rational> m;
  std::string label = a.pair;
  if (!a.family.empty()) {
    auto fp = named_family(a.family);
    if (!fp) throw ConfigError("unknown family preset '" + a.family + "'");
    m = materialize(build_pair<Rational>(*fp, a.n).pair.pair(), a.n);
    label = a.family;
  } else {
    m = materialize(named_pair(a.pair, a.n).pair(), a.n);
  }

  std::string csv = "n,k,a\n";
  json rows = json::array();
  for (int n = 0; n < static_cast<int>(m.size()); ++n) {
    for (int k = 0; k <= n; ++k) {
      csv += csv_join({std::to_string(n), std::to_string(k),
                       "\"" + m[n][k].str() + "\""});
      rows.push_back({{"n", n}, {"k", k}, {"a", m[n][k].str()}});
    }
  }
  finish(g, {{"command", "generate"}, {"pair", label}, {"n", a.n}},
         rows, json::object(), csv);
  return 0;
}

struct ZerosArgs {
  std::string pair;
  std::string family;
  int n = 12;
};

int cmd_zeros(const Global& g, const ZerosArgs& a) {
  ScopedPrecision guard(g.precision);
  RootOptions ropts;
  ropts.cert_tol = g.cert_tol;
  ropts.start_bits = g.precision;

  RootSet rs;
  Real line_c;
  Real tol;
  std::string label;
  if (!a.family.empty()) {
    auto fp = named_family(a.family);
    if (!fp) throw ConfigError("unknown family preset '" + a.family + "'");
    ExperimentOptions eopts;
    eopts.precision_bits = g.precision;
    eopts.cert_tol = g.cert_tol;
    auto res = run_experiment(*fp, a.n, eopts);
    rs = res.roots;
    line_c = res.line_c;
    tol = res.line_tol;
    label = a.family;
  } else {
    auto pair = named_pair(a.pair, a.n);
    auto poly = sheffer_poly(pair, a.n);
    rs = find_roots(poly, ropts);
    // symmetry line for Appell pairs; otherwise classify against Re = 0
    const auto& f = pair.pair().f;
    bool appell = true;
    for (int k = 2; k <= f.order(); ++k)
      if (!(f[k] == 0)) appell = false;
    line_c = appell ? to_real(-appell_symmetry_exponent(pair.pair().g) / (2 * f[1]))
                    : Real(0);
    tol = std::max(Real("1e-8"), Real("1e-6") / a.n);
    label = a.pair;
  }

  auto rep = classify(rs, line_c, tol);
  auto cls = [&](const Complex& z) -> std::string {
    for (const auto& w : rep.real_axis)
      if (w == z) return "real";
    for (const auto& w : rep.on_line)
      if (w == z) return "on_line";
    return "other";
  };

  std::string csv = "n,re,im,residual,multiplicity,class,flag\n";
  json rows = json::array();
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    const auto& r = rs.roots[i];
    std::string flag = rs.converged ? "" : "unconverged";
    csv += csv_join({std::to_string(a.n), real_str(r.re), real_str(r.im),
                     real_str(rs.residuals[i]), std::to_string(rs.multiplicity[i]),
                     cls(r), flag});
    rows.push_back({{"n", a.n}, {"re", real_str(r.re)}, {"im", real_str(r.im)},
                    {"residual", real_str(rs.residuals[i])},
                    {"multiplicity", rs.multiplicity[i]}, {"class", cls(r)},
                    {"flag", flag}});
  }
  json checks = {{"converged", rs.converged},
                 {"precision_bits", rs.precision_bits},
                 {"on_line", rep.on_line.size()},
                 {"real", rep.real_axis.size()},
                 {"other", rep.other.size()},
                 {"line_re", real_str(line_c)},
                 {"line_tol", real_str(tol)}};
  finish(g, {{"command", "zeros"}, {"pair", label}, {"n", a.n},
             {"precision", g.precision}},
         rows, checks, csv);
  return rs.converged ? 0 : kExitNumeric;
}

struct DensityArgs {
  std::string family;
  std::string z1 = "1", z2 = "3";
  int grid = 0;
  int n = 0;
  int bins = 20;
};

int cmd_density(const Global& g, const DensityArgs& a) {
  ScopedPrecision guard(g.precision);
  FamilyParams fp;
  if (!a.family.empty()) {
    auto named = named_family(a.family);
    if (!named) throw ConfigError("unknown family preset '" + a.family + "'");
    fp = *named;
  } else {
    try {
      fp.z1 = Rational(a.z1);
      fp.z2 = Rational(a.z2);
    } catch (const std::exception&) {
      throw ConfigError("bad rational --z1/--z2");
    }
    // zero-free-on-axis defaults; the density depends only on (z1, z2)
    fp.p = -4;
    fp.p_star = -1;
    fp.q = -2;
    fp.q_star = 1;
  }
  fp.validate();
  const Real z1 = to_real(fp.z1), z2 = to_real(fp.z2);
  auto cp = critical_params(z1, z2);

  std::string csv;
  json results = json::object();
  json checks = {{"T", real_str(cp.T)}, {"T1", real_str(cp.T1)}, {"T2", real_str(cp.T2)}};

  if (a.grid > 0) {
    csv = "x,density\n";
    json rows = json::array();
    for (int i = 1; i < a.grid; ++i) {
      Real x = cp.T * i / a.grid;
      Real d = limiting_density(x, z1, z2);
      csv += csv_join({real_str(x), real_str(d)});
      rows.push_back({{"x", real_str(x)}, {"density", real_str(d)}});
    }
    results["curve"] = std::move(rows);
  }

  if (a.n > 0) {
    ExperimentOptions eopts;
    eopts.precision_bits = g.precision;
    eopts.cert_tol = g.cert_tol;
    auto res = run_experiment(fp, a.n, eopts);
    if (!res.roots.converged) {
      std::cerr << "root finding did not certify at " << res.roots.precision_bits
                << " bits\n";
      return kExitNumeric;
    }
    auto cmp = empirical_vs_limit(res, fp, a.bins);
    if (a.grid == 0) csv = "bin_lo,bin_hi,empirical_mass,analytic_mass\n";
    json rows = json::array();
    for (const auto& b : cmp.bins) {
      if (a.grid == 0)
        csv += csv_join({real_str(b.lo), real_str(b.hi), real_str(b.empirical_mass),
                         real_str(b.analytic_mass)});
      rows.push_back({{"bin_lo", real_str(b.lo)}, {"bin_hi", real_str(b.hi)},
                      {"empirical_mass", real_str(b.empirical_mass)},
                      {"analytic_mass", real_str(b.analytic_mass)}});
    }
    results["histogram"] = std::move(rows);
    checks["l1_distance"] = real_str(cmp.l1_distance);
    checks["parity_ok"] = res.parity_ok;
  }

  finish(g, {{"command", "density"}, {"z1", fp.z1.str()}, {"z2", fp.z2.str()},
             {"grid", a.grid}, {"n", a.n}, {"bins", a.bins}},
         results, checks, csv);
  return 0;
}

struct RiordanArgs {
  std::string op;  // cognate | mul | inv | matrix
  std::string pair;
  std::string a, b;
  int n = 8;
};

std::string series_csv(const char* which, const TruncatedSeries<Rational>& s) {
  std::string csv;
  for (int k = 0; k <= s.order(); ++k)
    csv += csv_join({which, std::to_string(k), "\"" + s[k].str() + "\""});
  return csv;
}

json series_json(const TruncatedSeries<Rational>& s) {
  json arr = json::array();
  for (int k = 0; k <= s.order(); ++k) arr.push_back(s[k].str());
  return arr;
}

int cmd_riordan(const Global& g, const RiordanArgs& a) {
  json config = {{"command", "riordan"}, {"op", a.op}, {"n", a.n}};
  if (a.op == "matrix") {
    auto m = materialize(named_pair(a.pair, a.n).pair(), a.n);
    std::string csv = "n,k,a\n";
    json rows = json::array();
    for (int n = 0; n < static_cast<int>(m.size()); ++n)
      for (int k = 0; k <= n; ++k) {
        csv += csv_join({std::to_string(n), std::to_string(k),
                         "\"" + m[n][k].str() + "\""});
        rows.push_back({{"n", n}, {"k", k}, {"a", m[n][k].str()}});
      }
    config["pair"] = a.pair;
    finish(g, config, rows, json::object(), csv);
    return 0;
  }

  RiordanPair<Rational> out = identity_pair<Rational>(a.n);
  if (a.op == "cognate") {
    out = cognate_map(named_pair(a.pair, a.n + 1).pair());
    config["pair"] = a.pair;
  } else if (a.op == "inv") {
    out = group_inv(named_pair(a.pair, a.n).pair());
    config["pair"] = a.pair;
  } else if (a.op == "mul") {
    if (a.a.empty() || a.b.empty()) throw ConfigError("mul needs --a and --b");
    out = group_mul(named_pair(a.a, a.n).pair(), named_pair(a.b, a.n).pair());
    config["a"] = a.a;
    config["b"] = a.b;
  } else {
    throw ConfigError("unknown riordan op '" + a.op + "' (cognate|mul|inv|matrix)");
  }

  std::string csv = "series,k,a\n" + series_csv("g", out.g) + series_csv("f", out.f);
  json results = {{"g", series_json(out.g)}, {"f", series_json(out.f)}};
  finish(g, config, results, json::object(), csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sheffer/Riordan polynomial laboratory"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--precision", g.precision, "working precision in bits")
      ->capture_default_str();
  app.add_option("--cert-tol", g.cert_tol, "root certificate tolerance")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (atomic write); stdout if omitted");
  app.add_option("--jobs", g.jobs, "parallel experiment limit")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized suites");

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "coefficient table of a pair");
  gen->add_option("--pair", ga.pair, "named or custom pair");
  gen->add_option("--family", ga.family, "family preset");
  gen->add_option("--n", ga.n, "max row")->capture_default_str();

  ZerosArgs za;
  auto* zc = app.add_subcommand("zeros", "zeros of the n-th polynomial");
  zc->add_option("--pair", za.pair, "named or custom pair");
  zc->add_option("--family", za.family, "family preset");
  zc->add_option("--n", za.n, "polynomial degree")->capture_default_str();

  DensityArgs da;
  auto* dc = app.add_subcommand("density", "limiting zero density / histogram");
  dc->add_option("--family", da.family, "family preset");
  dc->add_option("--z1", da.z1, "left base point (rational)")->capture_default_str();
  dc->add_option("--z2", da.z2, "right base point (rational)")->capture_default_str();
  dc->add_option("--grid", da.grid, "density curve sample count");
  dc->add_option("--n", da.n, "experiment degree for the histogram");
  dc->add_option("--bins", da.bins, "histogram bins")->capture_default_str();

  RiordanArgs ra;
  auto* rc = app.add_subcommand("riordan", "pair algebra: cognate|mul|inv|matrix");
  rc->add_option("op", ra.op, "operation")->required();
  rc->add_option("--pair", ra.pair, "named or custom pair");
  rc->add_option("--a", ra.a, "left pair for mul");
  rc->add_option("--b", ra.b, "right pair for mul");
  rc->add_option("--n", ra.n, "truncation order")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(g, ga);
    if (zc->parsed()) return cmd_zeros(g, za);
    if (dc->parsed()) return cmd_density(g, da);
    if (rc->parsed()) return cmd_riordan(g, ra);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
