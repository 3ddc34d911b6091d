// orbit — batch verification front end.
//
// Subcommands:
//   info    orbit geometry summary (dimensions, metric data, section dims)
//   verify  run one identity check: theorem | tuynman | laplacian | schur
//   star    commutator asymptotics: defect decay slope + antisymmetry ratio
//
// Exit codes: 0 pass, 1 check failed, 2 usage/config error, 3 resource cap,
// 4 numerical conditioning.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitq/errors.hpp"
#include "orbitq/linalg.hpp"
#include "orbitq/orbit.hpp"
#include "orbitq/report.hpp"
#include "orbitq/sections.hpp"
#include "orbitq/star.hpp"

namespace {

using namespace orbitq;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitConditioning = 4;

struct Options {
  std::string group = "su2";
  std::string weight = "1";
  std::vector<int> levels;
  std::string quad = "auto";
  std::uint64_t seed = 12345;
  double tol = -1.0;  // sentinel: resolve a default per check and rule kind
  std::string shift = "karabegov";
  std::string output;
  std::string csv;
  double slope_tol = -0.8;
  double c1_tol = 0.15;
};

int parse_group(const std::string& s) {
  if (s.size() < 3 || s.rfind("su", 0) != 0) {
    throw InvalidArgument("group must look like su2, su3, ... (got '" + s + "')");
  }
  const std::string digits = s.substr(2);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidArgument("group must look like su2, su3, ... (got '" + s + "')");
  }
  const int n = std::stoi(digits);
  if (n < 2) throw InvalidArgument("group rank too small: " + s);
  return n;
}

WeightVec parse_weight(const std::string& s, int rank) {
  WeightVec w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) {
      throw IntegralityError("weight coordinate '" + tok + "' is not an integer");
    }
    w.coords.push_back(Rat(v));
  }
  if (static_cast<int>(w.coords.size()) != rank) {
    throw InvalidArgument("weight needs " + std::to_string(rank) + " coordinates for su" +
                          std::to_string(rank + 1) + ", got " +
                          std::to_string(w.coords.size()));
  }
  return w;
}

int resolve_cap() {
  if (const char* env = std::getenv("ORBITQ_CAP")) {
    try {
      std::size_t used = 0;
      const int cap = std::stoi(env, &used);
      if (used == std::string(env).size() && cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("ORBITQ_CAP must be a positive integer, got '" + std::string(env) +
                          "'");
  }
  return kDefaultDimCap;
}

// Band limit of the widest integrand at the largest requested level: section
// products carry frequency at most <m xi, theta> plus two adjoint weights.
int su2_auto_order(const OrbitSpec& spec, int max_m) {
  long long k = 0;
  for (const auto& c : spec.xi.coords) k += boost::rational_cast<long long>(c);
  return 2 * static_cast<int>(max_m * k + 4);
}

QuadratureRule resolve_rule(const OrbitSpec& spec, const Options& opt, int max_m) {
  const int n = spec.rs.n;
  if (opt.quad == "auto") {
    if (n == 2) return build_su2_quadrature(su2_auto_order(spec, max_m));
    return build_haar_mc(n, 100000, opt.seed);
  }
  const auto colon = opt.quad.find(':');
  if (colon != std::string::npos) {
    const std::string kind = opt.quad.substr(0, colon);
    const std::string arg = opt.quad.substr(colon + 1);
    try {
      if (kind == "su2") return build_su2_quadrature(std::stoi(arg));
      if (kind == "mc") return build_haar_mc(n, std::stoll(arg), opt.seed);
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("bad quadrature parameter in '" + opt.quad + "'");
    } catch (const std::out_of_range&) {
      throw InvalidArgument("bad quadrature parameter in '" + opt.quad + "'");
    }
  }
  throw InvalidArgument("quadrature must be auto, su2:<order>, or mc:<N> (got '" + opt.quad +
                        "')");
}

void emit(const Report& report, const std::string& output_path) {
  for (const auto& row : report.rows) {
    std::ostringstream line;
    line << "  [" << (row.pass ? "PASS" : "FAIL") << "] " << row.label
         << "  value=" << row.value;
    if (row.se > 0.0) line << "  se=" << row.se;
    std::cout << line.str() << "\n";
  }
  std::cout << "check=" << report.check << " tolerance=" << report.tol << " ("
            << report.tolerance_mode << ")"
            << "\nRESULT: " << (report.pass ? "PASS" : "FAIL") << "\n";
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open output path: " + output_path);
    out << report.to_json();
  }
}

Report merge_levels(const std::string& check, std::vector<Report> parts,
                    const std::vector<int>& levels) {
  Report merged;
  merged.check = check;
  if (!parts.empty()) {
    merged.config = parts.front().config;
    merged.config.erase("m");
    merged.tol = parts.front().tol;
    merged.tolerance_mode = parts.front().tolerance_mode;
    merged.seed = parts.front().seed;
    merged.cap = parts.front().cap;
  }
  std::ostringstream ls;
  for (std::size_t i = 0; i < levels.size(); ++i) ls << (i ? "," : "") << levels[i];
  merged.config["levels"] = ls.str();
  merged.pass = true;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (auto row : parts[p].rows) {
      row.label = "m=" + std::to_string(levels[p]) + " " + row.label;
      merged.rows.push_back(std::move(row));
    }
    merged.pass = merged.pass && parts[p].pass;
    merged.max_value = std::max(merged.max_value, parts[p].max_value);
    merged.elapsed_seconds += parts[p].elapsed_seconds;
  }
  return merged;
}

int cmd_info(const Options& opt) {
  const int n = parse_group(opt.group);
  const auto rs = build_root_system(n);
  const OrbitSpec spec = build_orbit(rs, build_lie_basis(rs), parse_weight(opt.weight, rs.rank));

  Report report;
  report.check = "info";
  report.config["group"] = opt.group;
  report.config["weight"] = spec.xi.str();
  report.config["delta"] = spec.delta.str();
  report.config["karabegov_shift"] = spec.karabegov_shift.str();
  report.config["einstein_constant"] =
      spec.einstein ? orbitq::to_string(*spec.einstein) : std::string("none");
  report.config["complement_roots"] = std::to_string(spec.tangent_roots.size());
  report.tolerance_mode = "absolute";
  report.cap = resolve_cap();

  ReportRow dim_row;
  dim_row.label = "dim_real";
  dim_row.value = static_cast<double>(spec.dim_real());
  dim_row.pass = true;
  report.rows.push_back(dim_row);

  std::vector<int> levels = opt.levels.empty() ? std::vector<int>{1, 2, 3, 4} : opt.levels;
  for (int m : levels) {
    if (m < 1) throw InvalidArgument("levels must be >= 1");
    WeightVec mxi = Rat(m) * spec.xi;
    ReportRow row;
    row.label = "section_dim m=" + std::to_string(m);
    row.value = static_cast<double>(weyl_dim(rs, mxi));
    row.pass = true;
    report.rows.push_back(row);
  }
  report.pass = true;
  emit(report, opt.output);
  return kExitPass;
}

int cmd_verify(const Options& opt, const std::string& which) {
  const int n = parse_group(opt.group);
  const auto rs = build_root_system(n);
  const OrbitSpec spec = build_orbit(rs, build_lie_basis(rs), parse_weight(opt.weight, rs.rank));
  const int cap = resolve_cap();
  const std::vector<int> levels = opt.levels.empty() ? std::vector<int>{1} : opt.levels;
  for (int m : levels) {
    if (m < 1) throw InvalidArgument("levels must be >= 1");
  }
  const int max_m = *std::max_element(levels.begin(), levels.end());

  if (which == "laplacian") {
    // Exact homogeneity identity: the invariant Laplacian acts on the moment
    // coordinates of xi as multiplication by -4 delta (level independent).
    Report report;
    report.check = "laplacian";
    report.config["group"] = opt.group;
    report.config["weight"] = spec.xi.str();
    report.tol = opt.tol > 0 ? opt.tol : 1e-12;
    report.tolerance_mode = "absolute";
    report.cap = cap;
    const Eigen::MatrixXd omega = laplace_operator_adjoint(spec);
    const Eigen::VectorXd xi_dual = cartan_dual_coefficients(rs, spec.xi);
    const Eigen::VectorXd delta_dual = cartan_dual_coefficients(rs, spec.delta);
    const double residual = (omega * xi_dual + 4.0 * delta_dual).cwiseAbs().maxCoeff();
    ReportRow row;
    row.label = "laplacian(xi) + 4*delta";
    row.value = residual;
    row.scale = delta_dual.cwiseAbs().maxCoeff();
    row.pass = residual <= report.tol;
    report.rows.push_back(row);
    report.max_value = residual;
    report.pass = row.pass;
    emit(report, opt.output);
    return report.pass ? kExitPass : kExitCheckFailed;
  }

  const QuadratureRule rule = resolve_rule(spec, opt, max_m);
  const bool mc = rule.kind == RuleKind::haar_mc;

  if (which == "schur") {
    const double tol = opt.tol > 0 ? opt.tol : (mc ? 0.05 : 1e-10);
    Report report;
    report.check = "schur";
    report.config["group"] = opt.group;
    report.config["weight"] = spec.xi.str();
    report.config["rule"] = rule.descriptor();
    report.tol = tol;
    report.tolerance_mode = "absolute";
    report.seed = rule.seed;
    report.cap = cap;
    report.pass = true;
    for (int m : levels) {
      const SectionSpace space = section_space(spec, m, rule, cap);
      const int d = space.dim();
      const Matrix target = Matrix::Identity(d, d) / static_cast<double>(d);
      const double value = frobenius_norm(space.gram - target);
      ReportRow row;
      row.label = "m=" + std::to_string(m);
      row.value = value;
      row.scale = 1.0 / static_cast<double>(d);
      row.pass = value <= tol;
      report.rows.push_back(row);
      report.pass = report.pass && row.pass;
      report.max_value = std::max(report.max_value, value);
    }
    emit(report, opt.output);
    return report.pass ? kExitPass : kExitCheckFailed;
  }

  if (which == "theorem" || which == "tuynman") {
    const double tol = opt.tol > 0 ? opt.tol : (mc ? 5.0 : 1e-8);
    ShiftMode shift = ShiftMode::karabegov;
    if (opt.shift == "plain") {
      shift = ShiftMode::plain;
    } else if (opt.shift != "karabegov") {
      throw InvalidArgument("shift must be karabegov or plain, got '" + opt.shift + "'");
    }
    std::vector<Report> parts;
    parts.reserve(levels.size());
    for (int m : levels) {
      parts.push_back(which == "theorem" ? verify_theorem(spec, m, rule, tol, shift, cap)
                                         : verify_tuynman(spec, m, rule, tol, cap));
    }
    const Report merged = merge_levels("verify-" + which, std::move(parts), levels);
    emit(merged, opt.output);
    return merged.pass ? kExitPass : kExitCheckFailed;
  }

  throw InvalidArgument("unknown verify target '" + which +
                        "' (expected theorem, tuynman, laplacian, schur)");
}

int cmd_star(const Options& opt) {
  const int n = parse_group(opt.group);
  const auto rs = build_root_system(n);
  const OrbitSpec spec = build_orbit(rs, build_lie_basis(rs), parse_weight(opt.weight, rs.rank));
  const int cap = resolve_cap();
  const std::vector<int> levels =
      opt.levels.empty() ? std::vector<int>{2, 4, 8, 16, 32} : opt.levels;
  const int max_m = *std::max_element(levels.begin(), levels.end());
  const QuadratureRule rule = resolve_rule(spec, opt, max_m);

  // Default observable pair: the off-torus directions of the first
  // complement root (any non-commuting pair works; this one always exists).
  const int t0 = spec.tangent_roots.front();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(spec.basis.dim());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(spec.basis.dim());
  u[spec.basis.x_index(t0)] = 1.0;
  v[spec.basis.y_index(t0)] = 1.0;

  const AsymptoticSeries series = commutator_defect(spec, u, v, levels, rule, cap);
  bool degenerate = false;
  const std::vector<double> c1 = c1_antisymmetry_series(spec, u, v, levels, rule, &degenerate, cap);

  Report report;
  report.check = "star";
  report.config["group"] = opt.group;
  report.config["weight"] = spec.xi.str();
  report.config["rule"] = rule.descriptor();
  report.config["u"] = spec.basis.names[static_cast<std::size_t>(spec.basis.x_index(t0))];
  report.config["v"] = spec.basis.names[static_cast<std::size_t>(spec.basis.y_index(t0))];
  report.tol = opt.slope_tol;
  report.tolerance_mode = "absolute";
  report.seed = rule.seed;
  report.cap = cap;

  for (std::size_t i = 0; i < levels.size(); ++i) {
    ReportRow row;
    row.label = "defect m=" + std::to_string(levels[i]);
    row.value = series.norms[i];
    row.pass = true;
    report.rows.push_back(row);
    ReportRow crow;
    crow.label = "antisymmetry m=" + std::to_string(levels[i]);
    crow.value = c1[i];
    crow.pass = true;
    report.rows.push_back(crow);
  }
  ReportRow slope_row;
  slope_row.label = "log-log slope";
  slope_row.value = series.fitted_slope;
  slope_row.pass = series.fitted_slope <= opt.slope_tol;
  report.rows.push_back(slope_row);
  ReportRow c1_row;
  c1_row.label = "antisymmetry at largest level";
  c1_row.value = c1.back();
  c1_row.pass = degenerate || c1.back() <= opt.c1_tol;
  report.rows.push_back(c1_row);

  report.max_value = series.fitted_slope;
  report.pass = slope_row.pass && c1_row.pass;

  if (!opt.csv.empty()) {
    std::ofstream out(opt.csv, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open csv path: " + opt.csv);
    out.precision(17);
    out << "m,defect,antisymmetry\n";
    for (std::size_t i = 0; i < levels.size(); ++i) {
      out << levels[i] << "," << series.norms[i] << "," << c1[i] << "\n";
    }
  }
  emit(report, opt.output);
  return report.pass ? kExitPass : kExitCheckFailed;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--group", opt.group, "Group: su2, su3, ...");
  cmd->add_option("--weight", opt.weight, "Dominant integral weight, comma separated");
  cmd->add_option("-m,--level,--levels", opt.levels, "Level(s) m")->delimiter(',');
  cmd->add_option("--quad", opt.quad, "Quadrature: auto, su2:<order>, mc:<N>");
  cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
  cmd->add_option("--tol", opt.tol, "Tolerance (absolute, or SE multiple for mc rules)");
  cmd->add_option("--output", opt.output, "Write the JSON report to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coadjoint-orbit quantization checks"};
  app.require_subcommand(1);

  Options opt;
  std::string which;

  CLI::App* info = app.add_subcommand("info", "Orbit geometry summary");
  add_common(info, opt);

  CLI::App* verify = app.add_subcommand("verify", "Run one identity check");
  add_common(verify, opt);
  verify->add_option("which", which, "theorem | tuynman | laplacian | schur")->required();
  verify->add_option("--shift", opt.shift, "Moment target: karabegov (default) or plain");

  CLI::App* star = app.add_subcommand("star", "Commutator asymptotics");
  add_common(star, opt);
  star->add_option("--csv", opt.csv, "Write the per-level series to this CSV path");
  star->add_option("--slope-tol", opt.slope_tol, "Maximum acceptable log-log slope");
  star->add_option("--c1-tol", opt.c1_tol, "Maximum antisymmetry ratio at the largest level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(opt);
    if (verify->parsed()) return cmd_verify(opt, which);
    if (star->parsed()) return cmd_star(opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error (resource): " << e.what() << "\n";
    return kExitResource;
  } catch (const ConditioningError& e) {
    std::cerr << "error (conditioning): " << e.what() << "\n";
    return kExitConditioning;
  } catch (const InvalidArgument& e) {
    std::cerr << "error (config): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
