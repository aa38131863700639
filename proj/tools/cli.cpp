#include "cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracvoigt/csv.hpp"
#include "fracvoigt/errors.hpp"
#include "fracvoigt/expr.hpp"
#include "fracvoigt/mittag_leffler.hpp"
#include "fracvoigt/nonlinear.hpp"
#include "fracvoigt/voigt.hpp"

namespace fracvoigt::cli {

namespace {

constexpr const char* kExpressionHelp =
    "Expressions: numbers, the variable, + - * / ^, unary -, parentheses and\n"
    "exp log sqrt sin cos abs pow(x, y).  ^ is right-associative and binds\n"
    "tighter than unary minus (-2^2 = -4).  No implicit multiplication.\n";

struct Options {
  double alpha = 0.5;
  double beta = 1.0;
  double z = 0.0;
  double eta = 1.0;
  double e_mod = 1.0;
  double t_end = 1.0;
  int n = voigt::kDefaultIntervals;
  double tol = 1e-8;
  int max_iter = 200;
  double damping = 1.0;
  std::string stress_expr;
  std::string stress_csv;
  std::string stress_builtin;
  std::string sigma_expr;
  std::string sigma_csv;
  std::string sigma_builtin;
  std::string output;
  double eps_small = 1e-8;
  double upper = 1e8;
  int samples = 200;
};

// Failure while reading or writing files.
struct IoFailure {
  std::string message;
};

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CLI::Validator order_range(double hi) {
  return CLI::Validator(
      [hi](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0 && v <= hi)) {
          return "value must lie in (0, " + shortest(hi) + "]";
        }
        return {};
      },
      "in (0, " + shortest(hi) + "]");
}

const CLI::Validator kPositive(
    [](std::string& s) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0) || !std::isfinite(v)) {
        return "value must be positive";
      }
      return {};
    },
    "> 0");

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("fracvoigt", sink);
  logger->set_pattern("fracvoigt: %l: %v");
  logger->set_level(spdlog::level::warn);
  if (const char* level = std::getenv("FRACVOIGT_LOG")) {
    logger->set_level(spdlog::level::from_str(level));
  }
  return logger;
}

void emit(const Options& o, std::ostream& out, const Signal& s, const std::vector<std::string>& trailer) {
  if (o.output.empty()) {
    io::write_signal(out, s, trailer);
    return;
  }
  io::write_signal(std::filesystem::path(o.output), s, trailer);
}

Signal stress_signal(const Options& o, spdlog::logger& log) {
  if (!o.stress_csv.empty()) {
    try {
      return io::read_signal(std::filesystem::path(o.stress_csv));
    } catch (const IoError& e) {
      throw IoFailure{"--stress-csv: " + std::string(e.what())};
    }
  }
  const Grid grid(o.t_end, o.n);
  if (!o.stress_expr.empty()) {
    const expr::Expr e = expr::parse(o.stress_expr, "t");
    log.debug("stress expression {}", e.to_string());
    return Signal::sample(grid, e);
  }
  if (o.stress_builtin == "zero") {
    return Signal::zeros(grid);
  }
  if (o.stress_builtin == "unit-step") {
    return Signal::sample(grid, [](double) { return 1.0; });
  }
  return Signal::sample(grid, [](double t) { return t; });
}

nonlinear::ConstitutiveLaw law_from(const Options& o) {
  if (!o.sigma_expr.empty()) {
    return nonlinear::ConstitutiveLaw::expression(expr::parse(o.sigma_expr, "eps"));
  }
  if (!o.sigma_csv.empty()) {
    std::ifstream in(o.sigma_csv, std::ios::binary);
    if (!in) {
      throw IoFailure{"--sigma-csv: cannot open '" + o.sigma_csv + "'"};
    }
    io::CsvTable table;
    try {
      table = io::read_table(in);
    } catch (const IoError& e) {
      throw IoFailure{"--sigma-csv: " + std::string(e.what())};
    }
    return nonlinear::ConstitutiveLaw::table(std::move(table.t), std::move(table.value));
  }
  return nonlinear::ConstitutiveLaw::builtin(o.sigma_builtin);
}

std::vector<std::string> stress_warnings(const Signal& stress, spdlog::logger& log) {
  if (stress[0] == 0.0) {
    return {};
  }
  const std::string msg = "stress at t=0 is " + shortest(stress[0]) +
                          "; the model assumes sigma(0) = 0 (result computed regardless)";
  log.warn("{}", msg);
  return {"warning: " + msg};
}

std::vector<std::string> solver_trailer(const voigt::PicardResult& r) {
  return {"iterations=" + std::to_string(r.iterations), "final_diff=" + fixed17(r.final_diff),
          std::string("converged=") + (r.converged ? "true" : "false")};
}

void add_model(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "fractional order")->required()->check(order_range(1.0));
  sub->add_option("--eta", o.eta, "viscosity")->check(kPositive)->capture_default_str();
  sub->add_option("--e-mod", o.e_mod, "elastic modulus")->check(kPositive)->capture_default_str();
}

void add_grid(CLI::App* sub, Options& o) {
  sub->add_option("--t-end", o.t_end, "end time")->check(kPositive)->capture_default_str();
  sub->add_option("--n", o.n, "number of grid intervals")->check(CLI::Range(1, 1 << 20))->capture_default_str();
}

void add_solver(CLI::App* sub, Options& o, bool damping) {
  sub->add_option("--tol", o.tol, "sup-norm stopping tolerance")->check(kPositive)->capture_default_str();
  sub->add_option("--max-iter", o.max_iter, "iteration limit")->check(CLI::Range(1, 1000000))->capture_default_str();
  if (damping) {
    sub->add_option("--damping", o.damping, "relaxation factor")->check(order_range(1.0))->capture_default_str();
  }
}

void add_stress(CLI::App* sub, Options& o) {
  auto* g = sub->add_option_group("stress", "stress history (exactly one)");
  g->add_option("--stress-expr", o.stress_expr, "stress as an expression in t");
  auto* csv = g->add_option("--stress-csv", o.stress_csv, "stress samples (t,value) on a uniform grid from 0");
  g->add_option("--stress-builtin", o.stress_builtin, "zero | unit-step | ramp")
      ->check(CLI::IsMember({"zero", "unit-step", "ramp"}));
  g->require_option(1);
  csv->excludes(sub->get_option("--t-end"))->excludes(sub->get_option("--n"));
}

void add_law(CLI::App* sub, Options& o) {
  auto* g = sub->add_option_group("law", "constitutive law sigma(eps) (exactly one)");
  g->add_option("--sigma-expr", o.sigma_expr, "stress as an expression in eps");
  g->add_option("--sigma-csv", o.sigma_csv, "table t,value read as (strain, stress)");
  g->add_option("--sigma-builtin", o.sigma_builtin, "zero | constant | reciprocal | exp-decay")
      ->check(CLI::IsMember(nonlinear::ConstitutiveLaw::builtin_names()));
  g->require_option(1);
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("-o,--output", o.output, "CSV output path (default: stdout)");
}

int dispatch(const CLI::App& app, const Options& o, std::ostream& out, spdlog::logger& log) {
  if (app.got_subcommand("ml")) {
    const special::MLParams p(o.alpha, o.beta);
    out << shortest(special::ml_eval(p, o.z)) << '\n';
    return kSuccess;
  }
  if (app.got_subcommand("creep")) {
    const VoigtParams p(o.eta, o.e_mod, o.alpha);
    const Grid grid(o.t_end, o.n);
    emit(o, out, Signal::sample(grid, [&](double t) { return voigt::creep_function(p, t); }), {});
    return kSuccess;
  }
  if (app.got_subcommand("strain")) {
    const VoigtParams p(o.eta, o.e_mod, o.alpha);
    const Signal stress = stress_signal(o, log);
    std::vector<std::string> trailer = stress_warnings(stress, log);
    emit(o, out, voigt::linear_strain(p, stress), trailer);
    return kSuccess;
  }
  if (app.got_subcommand("picard")) {
    const VoigtParams p(o.eta, o.e_mod, o.alpha);
    const Signal stress = stress_signal(o, log);
    std::vector<std::string> trailer = stress_warnings(stress, log);
    const voigt::PicardResult r = voigt::picard_linear(p, stress, {o.tol, o.max_iter, 1.0});
    for (auto& line : solver_trailer(r)) {
      trailer.push_back(std::move(line));
    }
    log.info("picard: {} iterations, final difference {}", r.iterations, r.final_diff);
    emit(o, out, r.solution, trailer);
    if (!r.converged) {
      log.error("picard iteration did not converge in {} iterations", r.iterations);
      return kNotConverged;
    }
    return kSuccess;
  }
  if (app.got_subcommand("solve")) {
    const VoigtParams p(o.eta, o.e_mod, o.alpha);
    const nonlinear::ConstitutiveLaw law = law_from(o);
    const Grid grid(o.t_end, o.n);
    const voigt::PicardResult r = nonlinear::solve_nonlinear(p, law, grid, {o.tol, o.max_iter, o.damping});
    std::vector<std::string> trailer = solver_trailer(r);
    trailer.push_back("residual=" + fixed17(nonlinear::residual(p, law, r.solution)));
    log.info("solve: {} iterations, final difference {}", r.iterations, r.final_diff);
    emit(o, out, r.solution, trailer);
    if (!r.converged) {
      log.error("fixed-point iteration did not converge in {} iterations", r.iterations);
      return kNotConverged;
    }
    return kSuccess;
  }
  // check
  const nonlinear::ConstitutiveLaw law = law_from(o);
  const nonlinear::HypothesisReport r = nonlinear::check_hypotheses(law, {o.eps_small, o.upper, o.samples, 1e-12});
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "is_decreasing=" << flag(r.is_decreasing) << '\n'
      << "is_convex=" << flag(r.is_convex) << '\n'
      << "sigma_at_zero=" << shortest(r.sigma_at_zero) << '\n'
      << "e0_estimate=" << shortest(r.e0_estimate) << '\n'
      << "e_inf_estimate=" << shortest(r.e_inf_estimate) << '\n'
      << "verdict=" << flag(r.verdict) << '\n'
      << "# sampled check of the hypotheses only; existence is not certified\n";
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Options o;
  CLI::App app("Fractional Voigt creep: Mittag-Leffler evaluation, strain and fixed-point solvers",
               "fracvoigt");
  app.require_subcommand(1);
  app.footer(kExpressionHelp);

  auto* ml = app.add_subcommand("ml", "evaluate E_{alpha,beta}(z)");
  ml->add_option("--alpha", o.alpha, "first parameter")->required()->check(order_range(2.0));
  ml->add_option("--beta", o.beta, "second parameter")->check(kPositive)->capture_default_str();
  ml->add_option("--z", o.z, "argument")
      ->required()
      ->check(CLI::Range(-special::kMaxNegativeArgument, special::kMaxPositiveArgument));

  auto* creep = app.add_subcommand("creep", "creep function on a grid");
  add_model(creep, o);
  add_grid(creep, o);
  add_output(creep, o);

  auto* strain = app.add_subcommand("strain", "strain for a given stress history (closed form)");
  add_model(strain, o);
  add_grid(strain, o);
  add_stress(strain, o);
  add_output(strain, o);

  auto* picard = app.add_subcommand("picard", "strain by successive approximations");
  add_model(picard, o);
  add_grid(picard, o);
  add_stress(picard, o);
  add_solver(picard, o, false);
  add_output(picard, o);

  auto* solve = app.add_subcommand("solve", "nonlinear model with stress sigma(eps)");
  add_model(solve, o);
  add_grid(solve, o);
  add_law(solve, o);
  add_solver(solve, o, true);
  add_output(solve, o);

  auto* check = app.add_subcommand("check", "sample a constitutive law against the existence hypotheses");
  add_law(check, o);
  check->add_option("--eps-small", o.eps_small, "small-strain probe")->check(kPositive)->capture_default_str();
  check->add_option("--upper", o.upper, "large-strain probe")->check(kPositive)->capture_default_str();
  check->add_option("--samples", o.samples, "number of log-spaced samples")
      ->check(CLI::Range(3, 100000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "fracvoigt: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "run 'fracvoigt " << sub->get_name() << " --help' for usage\n";
    } else {
      err << "run 'fracvoigt --help' for usage\n";
    }
    return kUsage;
  }

  try {
    return dispatch(app, o, out, *log);
  } catch (const IoFailure& e) {
    err << "fracvoigt: " << e.message << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "fracvoigt: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "fracvoigt: expression error " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "fracvoigt: " << e.what() << '\n';
    return kUsage;
  } catch (const EvaluationError& e) {
    err << "fracvoigt: " << e.what() << '\n';
    return kUsage;
  } catch (const AccuracyError& e) {
    err << "fracvoigt: numerical failure: " << e.what() << '\n';
    return kNotConverged;
  }
}

}  // namespace fracvoigt::cli
