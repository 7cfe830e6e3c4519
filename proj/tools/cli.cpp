#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dtte/dirac_solver.hpp"
#include "dtte/errors.hpp"
#include "dtte/json_io.hpp"
#include "dtte/verification.hpp"

namespace dtte::cli {
namespace {

enum class Format { text, json };

struct CliConfig {
  std::string command;
  double tolerance = 1e-10;
  std::string tetrad = "identity";
  Format format = Format::text;
  std::uint64_t seed = 0;
  double mass = 0.0;
  std::string p = "0,0,0,0";
  std::string a = "0,0,0,0";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    std::string_view field(text.data() + start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(x)) {
      throw UsageError(std::string("malformed number in ") + what + ": '" + std::string(field) + "'");
    }
    values.push_back(x);
    start = comma + 1;
  }
  if (values.size() != count) {
    throw UsageError(std::string(what) + " needs " + std::to_string(count) + " comma-separated reals");
  }
  return values;
}

Covector parse_covector(const std::string& text, const char* what) {
  const auto v = parse_reals(text, 4, what);
  return {v[0], v[1], v[2], v[3]};
}

RealMatrix4 parse_tetrad(const std::string& text) {
  if (text == "identity") return identity_matrix4();
  const auto v = parse_reals(text, 16, "--tetrad");
  RealMatrix4 h{};
  for (int i = 0; i < 16; ++i) h[i / 4][i % 4] = v[i];
  return h;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << fmt_complex(m(i, j));
    out << " ]\n";
  }
}

void print_ket(std::ostream& out, const KetVector& k) {
  out << "(";
  for (int i = 0; i < 4; ++i) out << (i ? ", " : "") << fmt_complex(k[i]);
  out << ")";
}

Json covector_json(const Covector& p) { return Json::array({p[0], p[1], p[2], p[3]}); }

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.tetrad = parse_tetrad(cfg.tetrad);
  build_tetrad(vc.tetrad);
  vc.tolerance = cfg.tolerance;
  vc.seed = cfg.seed;
  const auto checks = run_verification_suite(vc);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });

  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back(Json{{"name", c.name},
                         {"deviation", c.deviation},
                         {"threshold", c.threshold},
                         {"exact", c.exact},
                         {"pass", c.pass}});
    }
    out << Json{{"seed", cfg.seed}, {"tolerance", cfg.tolerance}, {"checks", arr}, {"pass", all}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      char line[160];
      std::snprintf(line, sizeof line, "%-4s %-38s deviation %-10s threshold %s\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), fmt(c.deviation).c_str(), c.exact ? "exact" : fmt(c.threshold).c_str());
      out << line;
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kSuccess : kCheckFailed;
}

int cmd_gamma(const CliConfig& cfg, std::ostream& out) {
  const auto rep = make_representation(parse_tetrad(cfg.tetrad));
  const double defect = anticommutator_defect(rep.gammas());
  if (cfg.format == Format::json) {
    Json j = to_json(rep);
    j["anticommutator_deviation"] = defect;
    out << j.dump(2) << '\n';
  } else {
    for (int mu = 0; mu < 4; ++mu) {
      out << "gamma^" << mu << ":\n";
      print_matrix(out, rep.gamma(mu));
    }
    out << "anticommutator deviation " << fmt(defect) << '\n';
  }
  return kSuccess;
}

int cmd_solve(const CliConfig& cfg, std::ostream& out) {
  const auto rep = make_representation(parse_tetrad(cfg.tetrad));
  const Covector p = parse_covector(cfg.p, "--p");
  const Potential a(parse_covector(cfg.a, "--a"));
  const auto set = solve_planewave(p, a, cfg.mass, rep);
  if (cfg.format == Format::json) {
    out << to_json(set).dump(2) << '\n';
    return kSuccess;
  }
  out << "mass shell (p-a)^2 - m^2 = " << fmt(set.mass_shell) << (set.on_shell ? " (on shell)" : " (off shell)")
      << '\n';
  out << set.solutions.size() << " solution(s)\n";
  for (std::size_t j = 0; j < set.solutions.size(); ++j) {
    out << "  [" << j << "] ket ";
    print_ket(out, set.solutions[j].ket);
    out << "  residual " << fmt(set.solutions[j].residual) << '\n';
  }
  return kSuccess;
}

int cmd_compare(const CliConfig& cfg, std::ostream& out) {
  const auto rep = make_representation(parse_tetrad(cfg.tetrad));
  const Covector p = parse_covector(cfg.p, "--p");
  const Potential a(parse_covector(cfg.a, "--a"));
  const auto set = solve_planewave(p, a, cfg.mass, rep);

  std::vector<std::pair<std::string, PlaneWaveField>> cases;
  cases.emplace_back("t1", PlaneWaveField::wave(p, rep.basis().element(1)));
  for (std::size_t j = 0; j < set.solutions.size(); ++j) {
    cases.emplace_back("solution" + std::to_string(j), PlaneWaveField::wave(p, set.solutions[j].amplitude));
  }

  TheoremReport total;
  total.tolerance = cfg.tolerance;
  total.pass = true;
  Json arr = Json::array();
  for (const auto& [name, psi] : cases) {
    const auto r = verify_theorem(psi, a, cfg.mass, rep, cfg.tolerance);
    total.algebra_residual = std::max(total.algebra_residual, r.algebra_residual);
    total.matrix_residual = std::max(total.matrix_residual, r.matrix_residual);
    total.difference = std::max(total.difference, r.difference);
    total.pass = total.pass && r.pass;
    Json rj = to_json(r);
    rj["psi"] = name;
    arr.push_back(std::move(rj));
  }

  if (cfg.format == Format::json) {
    Json j = to_json(total);
    j["mass"] = cfg.mass;
    j["p"] = covector_json(p);
    j["a"] = covector_json(a.components());
    j["on_shell"] = set.on_shell;
    j["cases"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : arr) {
      out << c.at("psi").get<std::string>() << ": algebra " << fmt(c.at("algebra_residual").get<double>())
          << "  matrix " << fmt(c.at("matrix_residual").get<double>()) << "  difference "
          << fmt(c.at("difference").get<double>()) << '\n';
    }
    out << (total.pass ? "PASS" : "FAIL") << ": max difference " << fmt(total.difference) << " (tolerance "
        << fmt(cfg.tolerance) << ")\n";
  }
  return total.pass ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirac-type tensor equation toolkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  CliConfig cfg;
  std::string format = "text";
  app.add_option("--tolerance", cfg.tolerance, "check threshold")->capture_default_str();
  app.add_option("--tetrad", cfg.tetrad, "identity or 16 comma-separated reals h[mu][a], row-major")
      ->capture_default_str();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--mass", cfg.mass, "mass m >= 0")->capture_default_str();
  app.add_option("--p", cfg.p, "momentum p_mu, 4 comma-separated reals")->capture_default_str();
  app.add_option("--a", cfg.a, "potential a_mu, 4 comma-separated reals")->capture_default_str();

  app.add_subcommand("verify", "run the algebraic identity suite");
  app.add_subcommand("gamma", "print the gamma matrices of the tetrad's ideal basis");
  app.add_subcommand("solve", "plane-wave solutions for momentum p");
  app.add_subcommand("compare", "compare algebra-side and matrix-side residuals");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::text;

  try {
    if (!(cfg.tolerance >= 0.0)) throw UsageError("--tolerance must be non-negative");
    if (!std::isfinite(cfg.mass) || cfg.mass < 0.0) throw UsageError("--mass must be a finite non-negative real");
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "gamma") return cmd_gamma(cfg, out);
    if (cfg.command == "solve") return cmd_solve(cfg, out);
    return cmd_compare(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidTetrad& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace dtte::cli
