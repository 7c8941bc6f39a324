// Command-line driver: every library operation behind one subcommand, with
// machine-readable output on stdout and progress/errors on stderr.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symdisc/errors.hpp"
#include "symdisc/hermite.hpp"
#include "symdisc/json_io.hpp"
#include "symdisc/montecarlo.hpp"
#include "symdisc/nearest.hpp"
#include "symdisc/quadrature.hpp"
#include "symdisc/strata.hpp"

namespace {

using nlohmann::json;
using namespace symdisc;

struct CommonOpts {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
};

void add_format(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
}

void add_seed_threads(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed,
                  "Random seed; the fixed default makes runs reproducible")
      ->capture_default_str();
  cmd->add_option("--threads", c.threads,
                  "Worker threads (results do not depend on this)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct MatrixInput {
  std::string inline_text;
  std::string path;

  SymmetricMatrix load() const {
    if (!inline_text.empty()) return matrix_from_string(inline_text);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return matrix_from_string(buf.str());
  }
};

void add_matrix_input(CLI::App* cmd, MatrixInput& m) {
  auto* a = cmd->add_option("--matrix", m.inline_text,
                            "Inline matrix, e.g. '[[1,0],[0,3]]'");
  auto* b = cmd->add_option("--input", m.path,
                            "Path to a matrix file (JSON or plain text)");
  a->excludes(b);
  cmd->callback([&m, cmd] {
    if (m.inline_text.empty() && m.path.empty()) {
      throw CLI::RequiredError(cmd->get_name() +
                               ": one of --matrix/--input is required");
    }
  });
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// key,value lines; nested structures arrive pre-flattened by the caller
void print_csv_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::cout << "key,value\n";
  for (const auto& [k, v] : kv) {
    std::cout << csv_quote(k) << "," << csv_quote(v) << "\n";
  }
}

std::string matrix_csv_field(const SymmetricMatrix& m) {
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ";";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += " ";
      s += fmt_double(m(i, j));
    }
  }
  return s;
}

void emit_report(const MonteCarloReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("experiment", rep.experiment);
    for (const auto& [k, v] : rep.params) kv.emplace_back("param." + k, fmt_double(v));
    kv.emplace_back("estimate", fmt_double(rep.estimate));
    kv.emplace_back("std_error", fmt_double(rep.std_error));
    kv.emplace_back("n_samples", std::to_string(rep.n_samples));
    kv.emplace_back("seed", std::to_string(rep.seed));
    for (const auto& [k, v] : rep.extras) kv.emplace_back("extra." + k, fmt_double(v));
    print_csv_pairs(kv);
    if (!rep.per_trial.empty()) {
      std::cout << "trial,value\n";
      for (size_t i = 0; i < rep.per_trial.size(); ++i) {
        std::cout << i << "," << fmt_double(rep.per_trial[i]) << "\n";
      }
    }
    return;
  }
  std::cout << rep.experiment << ":\n";
  for (const auto& [k, v] : rep.params) std::cout << "  " << k << " = " << v << "\n";
  std::cout << "  estimate  = " << fmt_double(rep.estimate) << "\n"
            << "  std_error = " << fmt_double(rep.std_error) << "\n"
            << "  samples   = " << rep.n_samples << ", seed = " << rep.seed
            << "\n";
  for (const auto& [k, v] : rep.extras) {
    std::cout << "  " << k << " = " << fmt_double(v) << "\n";
  }
}

void emit_critical_point(const CriticalPoint& cp, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(cp).dump(2) << "\n";
  } else if (format == "csv") {
    print_csv_pairs({{"partition", cp.partition.to_string()},
                     {"distance", fmt_double(cp.distance)},
                     {"matrix", matrix_csv_field(cp.matrix)},
                     {"global_min", cp.global_min ? "true" : "false"},
                     {"degenerate", cp.degenerate ? "true" : "false"}});
  } else {
    std::cout << "partition  " << cp.partition.to_string() << "\n"
              << "distance   " << fmt_double(cp.distance) << "\n"
              << "global_min " << (cp.global_min ? "yes" : "no")
              << (cp.degenerate ? "   [degenerate]" : "") << "\n"
              << "matrix:\n";
    for (const auto& row : cp.matrix.to_rows()) {
      std::cout << "  ";
      for (double x : row) std::cout << "  " << fmt_double(x);
      std::cout << "\n";
    }
  }
}

std::vector<int> parse_w(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      w.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("cannot parse multiplicity vector entry: " + tok);
    }
  }
  if (w.empty()) throw ParseError("empty multiplicity vector");
  return w;
}

int run_nearest(const MatrixInput& input, const NearestOptions& opts,
                const CommonOpts& common) {
  const auto a = input.load();
  const auto cp = nearest_in_discriminant(a, opts);
  emit_critical_point(cp, common.format);
  return 0;
}

int run_critical(const MatrixInput& input, const std::string& w_text,
                 const NearestOptions& opts, const CommonOpts& common) {
  const auto a = input.load();
  MultiplicityVector w(parse_w(w_text));
  const auto points = critical_points(a, w, opts);
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& cp : points) arr.push_back(to_json(cp));
    std::cout << json{{"n", a.dim()},
                      {"w", to_json(w)},
                      {"count", points.size()},
                      {"points", arr}}
                     .dump(2)
              << "\n";
  } else if (common.format == "csv") {
    std::cout << "partition,distance,global_min,degenerate\n";
    for (const auto& cp : points) {
      std::cout << csv_quote(cp.partition.to_string()) << ","
                << fmt_double(cp.distance) << ","
                << (cp.global_min ? "true" : "false") << ","
                << (cp.degenerate ? "true" : "false") << "\n";
    }
  } else {
    std::cout << points.size() << " critical points on stratum w = "
              << w.to_string() << " (ED degree " << eddeg(w).get_str()
              << ")\n";
    for (const auto& cp : points) {
      std::cout << "  " << cp.partition.to_string() << "  distance "
                << fmt_double(cp.distance) << (cp.global_min ? "  <- min" : "")
                << (cp.degenerate ? "  [degenerate]" : "") << "\n";
    }
  }
  return 0;
}

int run_spherical(const MatrixInput& input, const NearestOptions& opts,
                  const CommonOpts& common) {
  const auto a = input.load();
  const auto cp = spherical_nearest(a, opts);
  emit_critical_point(cp, common.format);
  return 0;
}

int run_strata(int n, const CommonOpts& common) {
  const auto ws = enumerate_multiplicity_vectors(n, true);
  if (common.format == "json") {
    json rows = json::array();
    for (const auto& w : ws) {
      rows.push_back(json{{"w", to_json(w)},
                          {"codim", stratum_codim(w)},
                          {"planes", count_planes(w).get_str()},
                          {"eddeg", eddeg(w).get_str()}});
    }
    std::cout << json{{"n", n}, {"rows", rows}}.dump(2) << "\n";
  } else if (common.format == "csv") {
    std::cout << "w,codim,planes,eddeg\n";
    for (const auto& w : ws) {
      std::cout << csv_quote(w.to_string()) << "," << stratum_codim(w) << ","
                << count_planes(w).get_str() << "," << eddeg(w).get_str()
                << "\n";
    }
  } else {
    const int wcol = 2 * n + 4;
    std::cout << "proper strata for n = " << n << "\n"
              << std::left << std::setw(wcol) << "w" << std::setw(7) << "codim"
              << std::setw(8) << "planes" << "EDdeg\n";
    for (const auto& w : ws) {
      std::cout << std::left << std::setw(wcol) << w.to_string() << std::setw(7)
                << stratum_codim(w) << std::setw(8) << count_planes(w).get_str()
                << eddeg(w).get_str() << "\n";
    }
  }
  return 0;
}

int run_moment(int k, const CommonOpts& common) {
  const auto poly = second_moment_poly(k);
  const auto integral = second_moment_integral(k);
  if (common.format == "json") {
    std::cout << json{{"k", k},
                      {"polynomial", to_json(poly)},
                      {"integral", to_json(integral)},
                      {"integral_value", integral.to_double()}}
                     .dump(2)
              << "\n";
  } else if (common.format == "csv") {
    std::string coeffs;
    for (int i = 0; i <= poly.degree(); ++i) {
      if (i) coeffs += ";";
      coeffs += poly.coeff(i).get_str();
    }
    print_csv_pairs({{"k", std::to_string(k)},
                     {"polynomial", coeffs},
                     {"integral", integral.to_string()},
                     {"integral_value", fmt_double(integral.to_double())}});
  } else {
    std::cout << "p_" << k << "(u) = " << poly.to_string() << "\n"
              << "integral against exp(-u^2): " << integral.to_string()
              << " = " << fmt_double(integral.to_double()) << "\n";
  }
  return 0;
}

int run_verify_charpol(int max_k, const CommonOpts& common) {
  int exact = 0;
  json rows = json::array();
  for (int k = 1; k <= max_k; ++k) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
    const ClosedFormScalar expected =
        ClosedFormScalar::make(mpq_class(factorial(k + 2), pw), 0, 1);
    const ClosedFormScalar got = second_moment_integral(k);
    const bool ok = (got == expected);
    if (ok) ++exact;
    rows.push_back(json{{"k", k},
                        {"value", to_json(got)},
                        {"expected", to_json(expected)},
                        {"exact", ok}});
    if (common.format == "pretty") {
      std::cout << "k = " << k << ": " << got.to_string()
                << (ok ? "  ok" : "  MISMATCH, expected " + expected.to_string())
                << "\n";
    }
  }
  const std::string summary =
      std::to_string(exact) + "/" + std::to_string(max_k) + " exact";
  if (common.format == "json") {
    std::cout << json{{"max_k", max_k},
                      {"exact_matches", exact},
                      {"all_exact", exact == max_k},
                      {"summary", summary},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
  } else if (common.format == "csv") {
    std::cout << "k,value,expected,exact\n";
    for (const auto& r : rows) {
      std::cout << r["k"] << "," << csv_quote(r["value"].dump()) << ","
                << csv_quote(r["expected"].dump()) << ","
                << (r["exact"].get<bool>() ? "true" : "false") << "\n";
    }
  } else {
    std::cout << summary << "\n";
  }
  return exact == max_k ? 0 : 1;
}

int run_volume_check(int max_n, const CommonOpts& common) {
  int exact = 0;
  const int total = max_n - 1;
  json rows = json::array();
  for (int n = 2; n <= max_n; ++n) {
    const ClosedFormScalar got = volume_identity_check(n);
    const ClosedFormScalar expected =
        ClosedFormScalar::rational(mpq_class(binomial(n, 2)));
    const bool ok = (got == expected);
    if (ok) ++exact;
    rows.push_back(json{{"n", n},
                        {"value", to_json(got)},
                        {"expected", expected.rational_part().get_str()},
                        {"exact", ok}});
    if (common.format == "pretty") {
      std::cout << "n = " << n << ": " << got.to_string()
                << (ok ? "  ok" : "  MISMATCH, expected " + expected.to_string())
                << "\n";
    }
  }
  const std::string summary =
      std::to_string(exact) + "/" + std::to_string(total) + " exact";
  if (common.format == "json") {
    std::cout << json{{"max_n", max_n},
                      {"exact_matches", exact},
                      {"all_exact", exact == total},
                      {"summary", summary},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
  } else if (common.format == "csv") {
    std::cout << "n,value,expected,exact\n";
    for (const auto& r : rows) {
      std::cout << r["n"] << "," << csv_quote(r["value"].dump()) << ","
                << csv_quote(r["expected"].get<std::string>()) << ","
                << (r["exact"].get<bool>() ? "true" : "false") << "\n";
    }
  } else {
    std::cout << summary << "\n";
  }
  return exact == total ? 0 : 1;
}

int run_goe_sample(int n, int count, const CommonOpts& common) {
  RandomStream rng(common.seed);
  std::vector<SymmetricMatrix> mats;
  mats.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) mats.push_back(goe_sample(n, rng));
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& m : mats) arr.push_back(to_json(m));
    std::cout << json{{"n", n},
                      {"count", count},
                      {"seed", common.seed},
                      {"matrices", arr}}
                     .dump(2)
              << "\n";
  } else if (common.format == "csv") {
    std::cout << "sample,row,entries\n";
    for (size_t s = 0; s < mats.size(); ++s) {
      const auto rows = mats[s].to_rows();
      for (size_t i = 0; i < rows.size(); ++i) {
        std::string entries;
        for (size_t j = 0; j < rows[i].size(); ++j) {
          if (j) entries += ";";
          entries += fmt_double(rows[i][j]);
        }
        std::cout << s << "," << i << "," << csv_quote(entries) << "\n";
      }
    }
  } else {
    for (size_t s = 0; s < mats.size(); ++s) {
      std::cout << "sample " << s << ":\n" << matrix_to_text(mats[s]);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Toolkit for the geometry of symmetric matrices with repeated "
      "eigenvalues: exact constants, spectral strata, nearest-point "
      "computations, and reproducible randomized experiments."};
  app.require_subcommand(1);

  CommonOpts common;
  MatrixInput matrix_in;
  NearestOptions near_opts;
  TwoPlaneOptions plane_opts;
  std::string w_text;
  int n = 3, k = 3, max_k = 30, max_n = 30, count = 1, config = 1;
  int quad_points = 24;
  std::int64_t samples = 100000, trials = 200;
  double eps = 0.1;

  auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--degeneracy-tol", near_opts.degeneracy_tol,
                    "Reject input whose minimal eigenvalue gap is below this "
                    "(scaled by 1 + the input norm)")
        ->capture_default_str();
    cmd->add_option("--tie-tol", near_opts.tie_tol,
                    "Distances within this of each other count as tied")
        ->capture_default_str();
    cmd->add_option("--merge-tol", near_opts.merge_tol,
                    "Projected eigenvalue groups closer than this (scaled) "
                    "flag the point as degenerate")
        ->capture_default_str();
  };

  auto* nearest_cmd = app.add_subcommand(
      "nearest", "Nearest symmetric matrix with a repeated eigenvalue");
  add_matrix_input(nearest_cmd, matrix_in);
  add_tolerances(nearest_cmd);
  add_format(nearest_cmd, common);

  auto* critical_cmd = app.add_subcommand(
      "critical", "All distance-critical points on a spectral stratum");
  add_matrix_input(critical_cmd, matrix_in);
  critical_cmd
      ->add_option("--w", w_text,
                   "Multiplicity vector, comma separated (e.g. 2,1,0,0)")
      ->required();
  add_tolerances(critical_cmd);
  add_format(critical_cmd, common);

  auto* spherical_cmd = app.add_subcommand(
      "spherical",
      "Nearest unit-norm matrix with a repeated eigenvalue (unit-norm input)");
  add_matrix_input(spherical_cmd, matrix_in);
  add_tolerances(spherical_cmd);
  add_format(spherical_cmd, common);

  auto* strata_cmd = app.add_subcommand(
      "strata", "Table of proper strata: w, codim, plane count, ED degree");
  strata_cmd->add_option("--n", n, "Matrix dimension")
      ->required()
      ->check(CLI::Range(1, 20));
  add_format(strata_cmd, common);

  auto* moment_cmd = app.add_subcommand(
      "moment",
      "Exact E det(Q - u I)^2 over GOE(k): polynomial and its Gaussian "
      "integral");
  moment_cmd->add_option("--k", k, "GOE dimension")
      ->required()
      ->check(CLI::Range(0, 60));
  add_format(moment_cmd, common);

  auto* charpol_cmd = app.add_subcommand(
      "verify-charpol",
      "Exact sweep: integral of E det(Q - u I)^2 equals sqrt(pi)(k+2)!/2^(k+1)");
  charpol_cmd->add_option("--max-k", max_k, "Upper k")
      ->check(CLI::Range(1, 60))
      ->capture_default_str();
  add_format(charpol_cmd, common);

  auto* volcheck_cmd = app.add_subcommand(
      "volume-check",
      "Exact sweep: the volume-ratio identity collapses to C(n,2)");
  volcheck_cmd->add_option("--max-n", max_n, "Upper n")
      ->check(CLI::Range(2, 60))
      ->capture_default_str();
  add_format(volcheck_cmd, common);

  auto* gap_cmd = app.add_subcommand(
      "gap-prob", "Monte Carlo estimate of P{min eigenvalue gap <= eps}");
  gap_cmd->add_option("--n", n, "Matrix dimension")->required()->check(CLI::Range(2, 100));
  gap_cmd->add_option("--eps", eps, "Gap threshold")->required()->check(CLI::NonNegativeNumber);
  gap_cmd->add_option("--samples", samples, "Sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_seed_threads(gap_cmd, common);
  add_format(gap_cmd, common);

  auto* plane_cmd = app.add_subcommand(
      "two-plane",
      "Count unit-norm repeated-eigenvalue matrices in random 3-dimensional "
      "subspaces");
  plane_cmd->add_option("--n", n, "Matrix dimension")->required()->check(CLI::Range(3, 12));
  plane_cmd->add_option("--trials", trials, "Number of random subspaces")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plane_cmd->add_option("--grid-density", plane_opts.grid_density,
                        "Minimum spherical search-grid vertex count")
      ->check(CLI::Range(12, 50000))
      ->capture_default_str();
  plane_cmd->add_option("--accept-gap", plane_opts.accept_gap,
                        "Refined gap below this counts as a zero")
      ->capture_default_str();
  plane_cmd->add_option("--reject-ceiling", plane_opts.reject_ceiling,
                        "Refined gap above accept but below this flags the "
                        "trial unresolved")
      ->capture_default_str();
  plane_cmd->add_option("--cluster-radius", plane_opts.cluster_radius,
                        "Zeros within this distance are identified")
      ->capture_default_str();
  add_seed_threads(plane_cmd, common);
  add_format(plane_cmd, common);

  auto* restricted_cmd = app.add_subcommand(
      "restricted-volume",
      "Volume share of one spectral configuration of the repeated eigenvalue");
  restricted_cmd->add_option("--n", n, "Matrix dimension")->required()->check(CLI::Range(2, 40));
  restricted_cmd
      ->add_option("--config", config,
                   "Configuration index: number of simple eigenvalues below "
                   "the repeated one, plus one")
      ->required()
      ->check(CLI::PositiveNumber);
  restricted_cmd->add_option("--samples", samples, "Sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  restricted_cmd
      ->add_option("--quad-points", quad_points, "Gauss-Hermite node count")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_seed_threads(restricted_cmd, common);
  add_format(restricted_cmd, common);

  auto* goe_cmd =
      app.add_subcommand("goe-sample", "Draw Gaussian orthogonal ensemble matrices");
  goe_cmd->add_option("--n", n, "Matrix dimension")->required()->check(CLI::Range(1, 200));
  goe_cmd->add_option("--count", count, "Number of draws")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  add_seed_threads(goe_cmd, common);
  add_format(goe_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(nearest_cmd)) {
      return run_nearest(matrix_in, near_opts, common);
    }
    if (app.got_subcommand(critical_cmd)) {
      return run_critical(matrix_in, w_text, near_opts, common);
    }
    if (app.got_subcommand(spherical_cmd)) {
      return run_spherical(matrix_in, near_opts, common);
    }
    if (app.got_subcommand(strata_cmd)) return run_strata(n, common);
    if (app.got_subcommand(moment_cmd)) return run_moment(k, common);
    if (app.got_subcommand(charpol_cmd)) {
      return run_verify_charpol(max_k, common);
    }
    if (app.got_subcommand(volcheck_cmd)) {
      return run_volume_check(max_n, common);
    }
    if (app.got_subcommand(gap_cmd)) {
      const auto rep =
          gap_probability(n, eps, samples, common.seed, common.threads);
      emit_report(rep, common.format);
      return 0;
    }
    if (app.got_subcommand(plane_cmd)) {
      std::cerr << "running " << trials << " subspace trials (n = " << n
                << ")...\n";
      const auto rep = two_plane_count(n, trials, common.seed, plane_opts,
                                       common.threads);
      emit_report(rep, common.format);
      const double unresolved = rep.extras.at("unresolved_trials");
      if (2.0 * unresolved > static_cast<double>(rep.n_samples)) {
        std::cerr << "error: " << unresolved
                  << " unresolved trials dominate the run\n";
        return 1;
      }
      return 0;
    }
    if (app.got_subcommand(restricted_cmd)) {
      const auto rep = restricted_volume_estimate(
          n, config, samples, quad_points, common.seed, common.threads);
      emit_report(rep, common.format);
      return 0;
    }
    if (app.got_subcommand(goe_cmd)) return run_goe_sample(n, count, common);
  } catch (const DegenerateInputError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
