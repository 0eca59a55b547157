// Command-line front end: every experiment of the library behind one binary,
// emitting machine-readable JSON or CSV reports.
//
// Exit codes: 0 success, 2 argument/precondition error, 3 numerical
// non-convergence or unwritable output.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracops/bounds.hpp"
#include "fracops/fracint.hpp"
#include "fracops/generator.hpp"
#include "fracops/grid.hpp"
#include "fracops/norm_est.hpp"
#include "fracops/report_io.hpp"
#include "fracops/special.hpp"

namespace {

using namespace fracops;

struct RunConfig {
  std::string command;
  double alpha = 1.0;
  double alpha2 = 0.5;       // second order for semigroup-check
  double alpha0 = 0.5;       // reference order for alpha-continuity
  std::string p = "2";       // "inf" allowed
  double t0 = 0.0;
  double t1 = 1.0;
  long long n = 1024;
  std::string scheme = "trapezoid";
  std::string path = "direct";
  unsigned seed = 0;
  std::string format = "json";
  std::string output;        // empty = stdout
  std::string family = "constant";
  double nu = -0.5;
  int degree = 2;
  long long dim = 1;
  std::string input;         // table family CSV
  std::string alphas = "0.1,0.05,0.025";
  std::string horizons = "4,16,64,256";
  std::string degrees = "1,2,4,8,16";
  long long k = 3;
};

LebesgueExponent parse_p(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return LebesgueExponent::infinity();
  return LebesgueExponent(std::stod(text));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty numeric list");
  return out;
}

Scheme parse_scheme(const std::string& text) {
  if (text == "rectangle") return Scheme::rectangle;
  if (text == "trapezoid") return Scheme::trapezoid;
  throw std::invalid_argument("scheme must be rectangle or trapezoid");
}

ConvPath parse_path(const std::string& text) {
  if (text == "direct") return ConvPath::direct;
  if (text == "fft") return ConvPath::fft;
  throw std::invalid_argument("path must be direct or fft");
}

int env_thread_cap() {
  const char* env = std::getenv("FRACOPS_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

EstimateOptions make_estimate_options(const RunConfig& cfg) {
  EstimateOptions opts;
  opts.seed = cfg.seed;
  opts.threads = env_thread_cap();
  return opts;
}

FamilyDescriptor parse_family(const RunConfig& cfg, const UniformGrid& grid) {
  if (cfg.family == "constant") return FamilyDescriptor::constant(cfg.dim);
  if (cfg.family == "power") return FamilyDescriptor::power(cfg.nu, cfg.dim);
  if (cfg.family == "monomial") return FamilyDescriptor::monomial(cfg.degree, cfg.dim);
  if (cfg.family == "sigma-p") {
    return FamilyDescriptor::sigma_p(cfg.alpha, parse_p(cfg.p).value(), cfg.dim);
  }
  if (cfg.family == "table") {
    if (cfg.input.empty()) throw std::invalid_argument("table family requires --input");
    return FamilyDescriptor::table(read_table_csv_file(cfg.input, grid).values);
  }
  throw std::invalid_argument("unknown family: " + cfg.family);
}

std::string run_apply(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  SampledFunction f = sample_family(parse_family(cfg, grid), grid);
  SampledFunction result =
      apply_frac_integral(f, FracOrder(cfg.alpha), parse_scheme(cfg.scheme), parse_path(cfg.path));
  return cfg.format == "csv" ? to_csv(result) : to_json(result);
}

std::string run_norm_bounds(const RunConfig& cfg) {
  NormBoundReport report =
      compile_report(FracOrder(cfg.alpha), parse_p(cfg.p), Interval(cfg.t0, cfg.t1));
  return cfg.format == "csv" ? to_csv(report) : to_json(report);
}

std::string run_norm_estimate(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  OperatorMatrix matrix = build_operator_matrix(grid, FracOrder(cfg.alpha), parse_scheme(cfg.scheme));
  NormEstimate estimate = estimate_norm(matrix, parse_p(cfg.p), make_estimate_options(cfg));
  return cfg.format == "csv" ? maximizer_csv(estimate, grid) : to_json(estimate);
}

std::string run_semigroup_check(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  SampledFunction f = sample_family(parse_family(cfg, grid), grid);
  const double defect =
      semigroup_defect(f, FracOrder(cfg.alpha), FracOrder(cfg.alpha2), parse_p(cfg.p));
  if (cfg.format == "csv") {
    return table_csv({"alpha", "alpha2", "p", "n", "defect"},
                     {{cfg.alpha, cfg.alpha2, parse_p(cfg.p).value(), double(cfg.n), defect}});
  }
  JsonObject obj;
  obj.number("alpha", cfg.alpha)
      .number("alpha2", cfg.alpha2)
      .number("p", parse_p(cfg.p).value())
      .integer("n", cfg.n)
      .number("defect", defect);
  return obj.str();
}

std::string run_alpha_continuity(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  ContinuityGap gap =
      alpha_continuity_defect(FracOrder(cfg.alpha), FracOrder(cfg.alpha0), grid, parse_p(cfg.p));
  if (cfg.format == "csv") {
    return table_csv({"alpha", "alpha0", "p", "n", "discrete_gap", "eta_bound"},
                     {{cfg.alpha, cfg.alpha0, parse_p(cfg.p).value(), double(cfg.n),
                       gap.discrete_gap, gap.eta_bound}});
  }
  JsonObject obj;
  obj.number("alpha", cfg.alpha)
      .number("alpha0", cfg.alpha0)
      .number("p", parse_p(cfg.p).value())
      .integer("n", cfg.n)
      .number("discrete_gap", gap.discrete_gap)
      .number("eta_bound", gap.eta_bound);
  return obj.str();
}

std::string run_alpha_zero(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  SampledFunction f = sample_family(parse_family(cfg, grid), grid);
  const auto profile = alpha_zero_profile(f, parse_p(cfg.p), parse_list(cfg.alphas));
  if (cfg.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (const auto& pt : profile) rows.push_back({pt.alpha, pt.defect});
    return table_csv({"alpha", "defect"}, rows);
  }
  std::string points = "[";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) points += ",";
    points += "{\"alpha\":" + format_number(profile[i].alpha) +
              ",\"defect\":" + format_number(profile[i].defect) + "}";
  }
  points += "]";
  JsonObject obj;
  obj.token("points", points);
  int usable = 0;
  for (const auto& pt : profile) usable += pt.alpha > 0.0 && pt.defect > 0.0;
  if (usable >= 2) obj.number("slope", fit_log_log_slope(profile));
  return obj.str();
}

std::string run_generator_check(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  if (cfg.format == "csv") {
    SampledFunction numeric =
        generator_apply(sample_family(FamilyDescriptor::monomial(cfg.degree), grid));
    SampledFunction closed = generator_power_closed_form(cfg.degree, grid);
    std::vector<std::vector<double>> rows;
    for (Index i = 0; i < grid.size(); ++i) {
      rows.push_back({grid.node(i), numeric.values(i, 0), closed.values(i, 0)});
    }
    return table_csv({"t", "numeric", "closed_form"}, rows);
  }
  JsonObject obj;
  obj.integer("degree", cfg.degree)
      .integer("n", cfg.n)
      .number("interior_l2_error", generator_interior_l2_error(cfg.degree, grid));
  return obj.str();
}

std::string run_unboundedness(const RunConfig& cfg) {
  Interval interval(cfg.t0, cfg.t1);
  const auto degrees = parse_list(cfg.degrees);
  std::vector<std::vector<double>> rows;
  for (double d : degrees) {
    RatioBound rb = unboundedness_ratio(int(d), parse_p(cfg.p), interval);
    rows.push_back({d, rb.ratio, rb.bound});
  }
  if (cfg.format == "csv") return table_csv({"n", "ratio", "bound"}, rows);
  std::string points = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) points += ",";
    points += "{\"n\":" + format_number(rows[i][0]) + ",\"ratio\":" + format_number(rows[i][1]) +
              ",\"bound\":" + format_number(rows[i][2]) + "}";
  }
  points += "]";
  JsonObject obj;
  obj.number("p", parse_p(cfg.p).value()).token("points", points);
  return obj.str();
}

std::string run_divergence_demo(const RunConfig& cfg) {
  const auto profile = divergence_profile(FracOrder(cfg.alpha), parse_p(cfg.p), cfg.t0,
                                          parse_list(cfg.horizons), cfg.n);
  if (cfg.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (const auto& pt : profile) rows.push_back({pt.horizon, pt.norm});
    return table_csv({"T", "norm"}, rows);
  }
  std::string points = "[";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) points += ",";
    points += "{\"T\":" + format_number(profile[i].horizon) +
              ",\"norm\":" + format_number(profile[i].norm) + "}";
  }
  points += "]";
  JsonObject obj;
  obj.number("alpha", cfg.alpha).number("p", parse_p(cfg.p).value()).token("points", points);
  return obj.str();
}

std::string run_spectrum(const RunConfig& cfg) {
  UniformGrid grid(Interval(cfg.t0, cfg.t1), cfg.n);
  OperatorMatrix matrix = build_operator_matrix(grid, FracOrder(cfg.alpha), parse_scheme(cfg.scheme));
  Vector sigma = singular_spectrum(matrix, cfg.k, cfg.seed);
  if (cfg.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (Index i = 0; i < sigma.size(); ++i) rows.push_back({double(i + 1), sigma[i]});
    return table_csv({"k", "sigma"}, rows);
  }
  JsonObject obj;
  obj.number("alpha", cfg.alpha).integer("n", cfg.n).number_array("singular_values", sigma);
  return obj.str();
}

int emit(const RunConfig& cfg, const std::string& report) {
  if (cfg.output.empty()) {
    std::cout << report;
    return 0;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "fracops: cannot open output path: " << cfg.output << "\n";
    return 3;
  }
  out << report;
  return out.good() ? 0 : 3;
}

int dispatch(const RunConfig& cfg) {
  std::string report;
  if (cfg.command == "apply") report = run_apply(cfg);
  else if (cfg.command == "norm-bounds") report = run_norm_bounds(cfg);
  else if (cfg.command == "norm-estimate") report = run_norm_estimate(cfg);
  else if (cfg.command == "semigroup-check") report = run_semigroup_check(cfg);
  else if (cfg.command == "alpha-continuity") report = run_alpha_continuity(cfg);
  else if (cfg.command == "alpha-zero") report = run_alpha_zero(cfg);
  else if (cfg.command == "generator-check") report = run_generator_check(cfg);
  else if (cfg.command == "unboundedness") report = run_unboundedness(cfg);
  else if (cfg.command == "divergence-demo") report = run_divergence_demo(cfg);
  else if (cfg.command == "spectrum") report = run_spectrum(cfg);
  else throw std::invalid_argument("unknown command: " + cfg.command);
  return emit(cfg, report);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Discrete Riemann-Liouville fractional integral toolbox"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "fractional order");
    sub->add_option("--p", cfg.p, "Lebesgue exponent, number or 'inf'");
    sub->add_option("--t0", cfg.t0, "interval start");
    sub->add_option("--t1", cfg.t1, "interval end");
    sub->add_option("--n", cfg.n, "grid nodes");
    sub->add_option("--scheme", cfg.scheme, "rectangle | trapezoid");
    sub->add_option("--path", cfg.path, "direct | fft");
    sub->add_option("--seed", cfg.seed, "seed for randomized restarts");
    sub->add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "output path (default stdout)");
    return sub;
  };

  auto* apply = add_common(app.add_subcommand("apply", "evaluate J^alpha f on a grid"));
  apply->add_option("--family", cfg.family, "constant | power | monomial | sigma-p | table");
  apply->add_option("--nu", cfg.nu, "power family exponent (> -1)");
  apply->add_option("--degree", cfg.degree, "monomial family degree");
  apply->add_option("--dim", cfg.dim, "codomain dimension");
  apply->add_option("--input", cfg.input, "CSV file for the table family");

  add_common(app.add_subcommand("norm-bounds", "closed-form bound report"));
  add_common(app.add_subcommand("norm-estimate", "numerical operator-norm estimate"));

  auto* semi = add_common(app.add_subcommand("semigroup-check", "|J^a J^b f - J^{a+b} f|_p"));
  semi->add_option("--alpha2", cfg.alpha2, "second order b");
  semi->add_option("--family", cfg.family, "test family");
  semi->add_option("--nu", cfg.nu, "power family exponent");
  semi->add_option("--degree", cfg.degree, "monomial family degree");

  auto* cont = add_common(app.add_subcommand("alpha-continuity", "discrete gap vs eta bound"));
  cont->add_option("--alpha0", cfg.alpha0, "reference order");

  auto* azero = add_common(app.add_subcommand("alpha-zero", "|J^alpha f - f|_p profile"));
  azero->add_option("--alphas", cfg.alphas, "descending comma list in [0,1)");
  azero->add_option("--family", cfg.family, "test family");
  azero->add_option("--nu", cfg.nu, "power family exponent");
  azero->add_option("--degree", cfg.degree, "monomial family degree");

  auto* gen = add_common(app.add_subcommand("generator-check", "generator vs closed form"));
  gen->add_option("--degree", cfg.degree, "monomial degree");

  auto* unb = add_common(app.add_subcommand("unboundedness", "generator Rayleigh ratios"));
  unb->add_option("--degrees", cfg.degrees, "comma list of monomial degrees");

  auto* div = add_common(app.add_subcommand("divergence-demo", "norm growth on [t0, T]"));
  div->add_option("--horizons", cfg.horizons, "increasing comma list of horizons");

  auto* spec = add_common(app.add_subcommand("spectrum", "top singular values"));
  spec->add_option("--k", cfg.k, "how many singular values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cfg);
  } catch (const NonConvergenceError& e) {
    std::cerr << "fracops: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fracops: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "fracops: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fracops: " << e.what() << "\n";
    return 3;
  }
}
