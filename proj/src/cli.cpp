#include "netosc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netosc/acceptance.hpp"
#include "netosc/dynamics.hpp"
#include "netosc/errors.hpp"
#include "netosc/oracle.hpp"
#include "netosc/polar.hpp"
#include "netosc/resonance.hpp"
#include "netosc/swing.hpp"
#include "netosc/synchronization.hpp"
#include "netosc/trajectory_io.hpp"

namespace netosc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits = 6) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fmt(Complex z, int digits = 6) {
  if (z.imag() == 0.0) return fmt(z.real(), digits);
  std::string s = fmt(z.real(), digits);
  s += z.imag() < 0.0 ? " - " : " + ";
  return s + fmt(std::abs(z.imag()), digits) + "i";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

double parse_number(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "not a number: '" + token + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Common graph-source and output options.
struct GraphSource {
  std::string builtin;
  std::string path;

  void attach(CLI::App* sub) {
    auto* b = sub->add_option("--builtin", builtin,
                              "builtin network: toy4, zachary, path:N, cycle:N, complete:N, "
                              "syncnet:A..F");
    auto* g = sub->add_option("--graph", path, "edge-list file (1-based ids)");
    b->excludes(g);
    g->excludes(b);
  }

  Graph load() const {
    if (builtin.empty() && path.empty()) throw UsageError("one of --builtin or --graph is required");
    if (!builtin.empty()) return netosc::builtin(builtin);
    return load_edge_list(resolve_data_path(path));
  }

  std::string label() const { return builtin.empty() ? path : builtin; }
};

std::size_t node_index(long node, std::size_t n, const char* what) {
  if (node < 1 || static_cast<std::size_t>(node) > n) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must lie in 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(node - 1);
}

void emit_trajectory(const Trajectory& traj, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_trajectory_csv(out, traj);
  } else {
    write_trajectory_csv(path, traj);
  }
}

// ---------------------------------------------------------------------------

struct SpectrumCmd {
  GraphSource src;
  bool distinct = false;

  void attach(CLI::App* sub) {
    src.attach(sub);
    sub->add_flag("--distinct", distinct, "group repeated eigenvalues");
  }

  void operator()(std::ostream& out) const {
    const Graph g = src.load();
    const SpectralDecomposition d = laplacian_spectrum(g);
    out << "# network " << src.label() << ": n = " << g.n() << ", edges = " << g.edges().size()
        << "\n# frequencies omega_i = sqrt(1 + mu_i)\n";
    out << pad("i", 4) << pad("mu_i", 14) << pad("omega_i", 14);
    if (distinct) out << pad("mult", 6);
    out << '\n';
    if (distinct) {
      const auto groups = distinct_eigenvalues(d);
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const double mu = std::abs(groups[i].value) < kZeroEigenvalueTol ? 0.0 : groups[i].value;
        out << pad(std::to_string(i + 1), 4) << pad(fmt(mu, 6), 14)
            << pad(fmt(std::sqrt(1.0 + mu), 6), 14)
            << pad(std::to_string(groups[i].multiplicity), 6) << '\n';
      }
    } else {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double mu = snapped_eigenvalue(d, i);
        out << pad(std::to_string(i + 1), 4) << pad(fmt(mu, 6), 14)
            << pad(fmt(std::sqrt(1.0 + mu), 6), 14) << '\n';
      }
    }
    if (g.n() >= 2) {
      out << "algebraic connectivity: " << fmt(snapped_eigenvalue(d, d.size() - 2), 6) << '\n';
      out << "density: " << fmt(density(g), 6) << '\n';
    }
  }
};

struct SimulateCmd {
  GraphSource src;
  std::string regime = "coupled";
  std::string x0, v0, power;
  double t_max = 20.0, dt = 0.025;
  long node = 1;
  double amplitude = 1.0, omega = 1.0, gamma = 1.0, alpha = 1.0;
  bool rebalance = false, superpose = false;
  std::string method = "closed";
  std::string out_path;

  void attach(CLI::App* sub) {
    src.attach(sub);
    sub->add_option("--case", regime, "coupled, damped, forced, damped-forced or swing")
        ->check(CLI::IsMember({"coupled", "damped", "forced", "damped-forced", "swing"}));
    sub->add_option("--x0", x0, "initial positions");
    sub->add_option("--v0", v0, "initial velocities");
    sub->add_option("--t-max", t_max, "final time")->check(CLI::PositiveNumber);
    sub->add_option("--dt", dt, "grid step")->check(CLI::PositiveNumber);
    sub->add_option("--node", node, "forced node (1-based)");
    sub->add_option("--amplitude", amplitude, "forcing amplitude F0");
    sub->add_option("--omega", omega, "forcing frequency")->check(CLI::PositiveNumber);
    sub->add_option("--gamma", gamma, "swing damping")->check(CLI::PositiveNumber);
    sub->add_option("--alpha", alpha, "inter-node damping of the damped cases")
        ->check(CLI::PositiveNumber);
    sub->add_option("--power", power, "swing power profile (vector syntax)");
    sub->add_flag("--rebalance", rebalance, "subtract the mean of the power profile");
    sub->add_flag("--superpose", superpose, "allow a non-zero start under sinusoidal forcing");
    sub->add_option("--method", method, "closed (default) or rk4")
        ->check(CLI::IsMember({"closed", "rk4"}));
    sub->add_option("--out", out_path, "CSV output path (default standard output)");
  }

  void operator()(std::ostream& out) const {
    const Graph g = src.load();
    const std::size_t n = g.n();
    const State y0{parse_vector_spec(x0, n), parse_vector_spec(v0, n)};
    CouplingConfig cfg;
    DriveSpec drive = NoDrive{};
    if (regime == "coupled") {
      cfg = regime_config(Regime::Coupled);
    } else if (regime == "damped") {
      cfg = regime_config(Regime::Damped, gamma, alpha);
    } else if (regime == "forced") {
      cfg = regime_config(Regime::Forced);
      drive = SinusoidDrive{node_index(node, n, "--node"), amplitude, omega};
    } else if (regime == "damped-forced") {
      cfg = regime_config(Regime::DampedForced, gamma, alpha);
      drive = SinusoidDrive{node_index(node, n, "--node"), amplitude, omega};
    } else {
      cfg = regime_config(Regime::Swing, gamma);
      if (power.empty()) throw UsageError("--case swing needs --power");
      Vector p = parse_vector_spec(power, n);
      if (rebalance) p.array() -= p.mean();
      PowerProfile{p, gamma}.validate();
      drive = ConstantPower{p};
    }
    Trajectory traj;
    if (method == "rk4") {
      const auto every = static_cast<std::size_t>(std::max(1.0, std::round(dt / 1e-3)));
      traj = rk4_integrate(g, cfg, drive, y0, dt / static_cast<double>(every), t_max, every);
    } else {
      traj = evolve(g, cfg, drive, y0, uniform_grid(t_max, dt), EvolveOptions{superpose});
    }
    emit_trajectory(traj, out_path, out);
  }
};

struct SyncCmd {
  GraphSource src;
  std::string x0, v0;
  double epsilon = 1e-3, alpha = 1.0, dt = 0.025, horizon = 0.0;
  bool empirical = false, fallback = false;
  std::string settle = "first-crossing";

  void attach(CLI::App* sub) {
    src.attach(sub);
    sub->add_option("--x0", x0, "initial positions");
    sub->add_option("--v0", v0, "initial velocities");
    sub->add_option("--epsilon", epsilon, "synchronization threshold")->check(CLI::PositiveNumber);
    sub->add_option("--alpha", alpha, "inter-node damping")->check(CLI::PositiveNumber);
    sub->add_flag("--empirical", empirical, "also measure settle times on a simulated trajectory");
    sub->add_option("--dt", dt, "grid step for the empirical run")->check(CLI::PositiveNumber);
    sub->add_option("--horizon", horizon, "horizon of the empirical run (default 3x max bound)");
    sub->add_option("--settle", settle, "primary settle rule: stays-below or first-crossing")
        ->check(CLI::IsMember({"stays-below", "first-crossing"}));
    sub->add_flag("--fallback", fallback, "use the next mode if the dominant one is not excited");
  }

  void operator()(std::ostream& out) const {
    const Graph g = src.load();
    const std::size_t n = g.n();
    const State y0{parse_vector_spec(x0, n), parse_vector_spec(v0, n)};
    const SyncReport r = sync_time_bounds(g, y0, epsilon, alpha, SyncOptions{fallback});
    out << "# network " << src.label() << ", alpha = " << fmt(alpha, 4)
        << ", epsilon = " << epsilon << ", dt = " << dt << '\n';
    out << "lambda_S: " << fmt(r.lambda_S, 7) << '\n';
    out << "dominant mode: " << r.dominant.mode + 1 << " (mu = " << fmt(r.dominant.mu, 6)
        << ", multiplicity " << r.dominant.multiplicity << ", "
        << (r.dominant.complex_branch ? "complex" : "real") << " branch, lambda = "
        << fmt(r.dominant.lambda, 6) << ")\n";
    if (n > 1) out << "second rate: " << fmt(lambda_S(g, alpha, 2), 7) << '\n';
    out << "mean bound time: " << fmt(r.mean_bound_time, 4) << '\n';

    std::optional<EmpiricalSync> stays, first;
    double used_horizon = horizon;
    if (empirical) {
      if (used_horizon <= 0.0) {
        const double worst =
            *std::max_element(r.per_node_bound_times.begin(), r.per_node_bound_times.end());
        used_horizon = std::max(10.0, 3.0 * worst);
      }
      const Trajectory traj = evolve(g, CouplingConfig{1.0, 0.0, 0.0, alpha}, NoDrive{}, y0,
                                     uniform_grid(used_horizon, dt));
      stays = empirical_sync_time(traj, epsilon, SettleRule::StaysBelow);
      first = empirical_sync_time(traj, epsilon, SettleRule::FirstCrossing);
      const EmpiricalSync& primary = settle == "first-crossing" ? *first : *stays;
      out << "empirical horizon: " << fmt(used_horizon, 3) << '\n';
      out << "empirical max: " << fmt(primary.max, 3) << '\n';
      out << "empirical mean: " << fmt(primary.mean, 3) << '\n';
      out << "empirical (stays below): max " << fmt(stays->max, 3) << ", mean "
          << fmt(stays->mean, 3) << '\n';
      out << "empirical (first crossing): max " << fmt(first->max, 3) << ", mean "
          << fmt(first->mean, 3) << '\n';
    }
    out << pad("node", 6) << pad("bound", 12);
    if (empirical) out << pad("stays", 12) << pad("first", 12);
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out << pad(std::to_string(i + 1), 6) << pad(fmt(r.per_node_bound_times[i], 4), 12);
      if (empirical) out << pad(fmt(stays->per_node[i], 3), 12) << pad(fmt(first->per_node[i], 3), 12);
      out << '\n';
    }
  }
};

struct ResonanceCmd {
  GraphSource src;
  long source = 1;
  long mode = 0;
  double tol = 1e-6;
  double amplitude = 1.0, omega = 0.0, t_max = 60.0, dt = 0.025;
  bool damped = false;
  std::string out_path;

  void attach(CLI::App* sub) {
    src.attach(sub);
    sub->add_option("--source", source, "forced node (1-based)");
    sub->add_option("--mode", mode, "mode to classify (1-based, descending eigenvalues)");
    sub->add_option("--tol", tol, "transparency tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--omega", omega, "forcing frequency for a trajectory")
        ->check(CLI::PositiveNumber);
    sub->add_option("--amplitude", amplitude, "forcing amplitude F0");
    sub->add_option("--t-max", t_max, "trajectory final time")->check(CLI::PositiveNumber);
    sub->add_option("--dt", dt, "trajectory grid step")->check(CLI::PositiveNumber);
    sub->add_flag("--damped", damped, "use the damped network (c1 = 1, c2' = 1)");
    sub->add_option("--out", out_path, "CSV path for the forced trajectory");
  }

  void operator()(std::ostream& out) const {
    const Graph g = src.load();
    const std::size_t n = g.n();
    const std::size_t h = node_index(source, n, "--source");
    const SpectralDecomposition d = laplacian_spectrum(g);
    out << "# network " << src.label() << ", source node " << h + 1 << ", F0 = " << amplitude
        << '\n';
    out << pad("mode", 6) << pad("mu", 12) << pad("omega", 12) << pad("phi(h)", 14) << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      const double mu = snapped_eigenvalue(d, i);
      out << pad(std::to_string(i + 1), 6) << pad(fmt(mu, 6), 12)
          << pad(fmt(std::sqrt(1.0 + mu), 6), 12)
          << pad(fmt(d.vectors(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(i)), 8), 14)
          << '\n';
    }
    if (mode != 0) {
      const std::size_t m = node_index(mode, n, "--mode");
      const ResonanceReport r = resonance_map(d, h, m, tol);
      out << "classification for mode " << m + 1 << " (omega = "
          << fmt(std::sqrt(1.0 + snapped_eigenvalue(d, m)), 6) << ")\n";
      out << pad("node", 6) << pad("influence", 14) << pad("role", 13) << pad("phase", 7) << '\n';
      for (std::size_t k = 0; k < n; ++k) {
        const int ph = r.phases[k];
        out << pad(std::to_string(k + 1), 6)
            << pad(fmt(r.mode_map(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)), 8), 14)
            << pad(to_string(r.roles[k]), 13) << pad(ph > 0 ? "+" : ph < 0 ? "-" : "0", 7) << '\n';
      }
    }
    if (omega > 0.0) {
      const std::vector<double> times = uniform_grid(t_max, dt);
      const Trajectory traj = damped ? forced_damped(g, h, amplitude, omega, times)
                                     : forced_undamped(g, h, amplitude, omega, times);
      if (out_path.empty()) {
        out << "forced trajectory: pass --out to write it\n";
      } else {
        emit_trajectory(traj, out_path, out);
        out << "forced trajectory written to " << out_path << '\n';
      }
    }
  }
};

struct SwingCmd {
  GraphSource src;
  std::string power, x0, v0;
  bool rebalance = false;
  double gamma = 1.0, t_max = 30.0, dt = 0.1;
  std::string out_path;

  void attach(CLI::App* sub) {
    src.attach(sub);
    sub->add_option("--power", power, "power profile (vector syntax or file)")->required();
    sub->add_flag("--rebalance", rebalance, "subtract the mean of the power profile");
    sub->add_option("--gamma", gamma, "damping")->check(CLI::PositiveNumber);
    sub->add_option("--x0", x0, "initial positions");
    sub->add_option("--v0", v0, "initial velocities");
    sub->add_option("--t-max", t_max, "final time")->check(CLI::PositiveNumber);
    sub->add_option("--dt", dt, "grid step")->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "trajectory CSV path");
  }

  void operator()(std::ostream& out) const {
    const Graph g = src.load();
    const std::size_t n = g.n();
    Vector p = parse_vector_spec(power, n);
    if (rebalance) p.array() -= p.mean();
    const PowerProfile prof{p, gamma};
    const Vector xs = steady_state(g, prof);
    const State y0{parse_vector_spec(x0, n), parse_vector_spec(v0, n)};
    const Trajectory traj = swing_solve(g, prof, y0, uniform_grid(t_max, dt));
    out << "# network " << src.label() << ", gamma = " << gamma << ", dt = " << dt
        << ", t_max = " << t_max << '\n';
    out << pad("node", 6) << pad("p", 12) << pad("steady", 12) << pad("peak", 12)
        << pad("peak time", 12) << pad("final", 12) << '\n';
    for (std::size_t k = 0; k < n; ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      out << pad(std::to_string(k + 1), 6) << pad(fmt(p(kk), 6), 12) << pad(fmt(xs(kk), 6), 12);
      try {
        const TransientMetrics m = transient_metrics(traj, k);
        out << pad(fmt(m.first_peak_value, 6), 12) << pad(fmt(m.first_peak_time, 2), 12)
            << pad(fmt(m.steady_state_value, 6), 12);
      } catch (const Error& e) {
        out << pad(std::string(to_string(e.code())), 24)
            << pad(fmt(traj.states.back().x(kk), 6), 12);
      }
      out << '\n';
    }
    if (!out_path.empty()) {
      emit_trajectory(traj, out_path, out);
      out << "trajectory written to " << out_path << '\n';
    }
  }
};

struct PolarCmd {
  GraphSource src;

  void attach(CLI::App* sub) { src.attach(sub); }

  void operator()(std::ostream& out) const {
    const Graph g = src.load();
    const PolarFactors f = polar_decompose(g);
    const std::vector<GEigenpair> gp = eig_G(g, 1.0);
    const std::size_t n = g.n();
    out << "# network " << src.label() << ", G = [[0, I], [-I, -L]]\n";
    out << pad("lambda", 10) << pad("G", 26) << pad("P", 12) << pad("U", 26) << pad("angle", 10)
        << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out << pad("+" + std::to_string(i + 1), 10) << pad(fmt(gp[i].lambda_plus, 4), 26)
          << pad(fmt(f.p_pairs[i].plus, 4), 12) << pad(fmt(f.u_pairs[i].plus, 4), 26)
          << pad(fmt(degrees(f.u_pairs[i].theta), 1), 10) << '\n';
    }
    for (std::size_t j = n; j-- > 0;) {
      out << pad("-" + std::to_string(j + 1), 10) << pad(fmt(gp[j].lambda_minus, 4), 26)
          << pad(fmt(f.p_pairs[j].minus, 4), 12) << pad(fmt(f.u_pairs[j].minus, 4), 26)
          << pad("-", 10) << '\n';
    }
    const Matrix J = symplectic_identity(n);
    const auto m = f.G.rows();
    out << "max |UP - G|: " << (f.U * f.P - f.G).cwiseAbs().maxCoeff() << '\n';
    out << "max |U^T U - I|: "
        << (f.U.transpose() * f.U - Matrix::Identity(m, m)).cwiseAbs().maxCoeff() << '\n';
    out << "max |U^T J U - J|: " << (f.U.transpose() * J * f.U - J).cwiseAbs().maxCoeff() << '\n';
    out << "max |U - [[A, B], [-B, A]]|: " << (f.U - f.analytic_U()).cwiseAbs().maxCoeff()
        << '\n';
  }
};

struct VerifyCmd {
  int criterion = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--criterion", criterion, "run a single criterion")
        ->check(CLI::Range(1, kCriterionCount));
  }

  bool operator()(std::ostream& out) const {
    std::vector<CriterionResult> results;
    if (criterion > 0) {
      results.push_back(run_criterion(criterion));
    } else {
      results = run_acceptance();
    }
    out << format_acceptance(results);
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
  }
};

}  // namespace

std::string resolve_data_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("NETOSC_DATA_DIR"); dir && *dir && fs::path(path).is_relative()) {
    const fs::path candidate = fs::path(dir) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

Vector parse_vector_spec(const std::string& raw, std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  const std::string spec = trim(raw);
  if (spec.empty()) return Vector::Zero(m);

  if (spec.rfind("e:", 0) == 0) {
    Vector v = Vector::Zero(m);
    std::stringstream ss(spec.substr(2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.rfind("e:", 0) == 0) item = item.substr(2);
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected <node>=<value> in '" + spec + "'");
      const double node = parse_number(item.substr(0, eq));
      if (node != std::floor(node) || node < 1.0 || node > static_cast<double>(n)) {
        throw Error(ErrorCode::InvalidArgument, "node id " + trim(item.substr(0, eq)) +
                                                    " outside 1.." + std::to_string(n));
      }
      v(static_cast<Eigen::Index>(node) - 1) = parse_number(item.substr(eq + 1));
    }
    return v;
  }

  std::vector<double> values;
  const bool looks_like_list =
      spec.find_first_not_of("0123456789+-.eE, \t") == std::string::npos;
  if (looks_like_list) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_number(trim(item)));
  } else {
    std::ifstream in(resolve_data_path(spec));
    if (!in) throw Error(ErrorCode::ParseError, "cannot read vector file " + spec);
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) values.push_back(parse_number(tok));
    }
  }
  if (values.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " values, got " +
                                                std::to_string(values.size()));
  }
  return Eigen::Map<Vector>(values.data(), m);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear oscillator networks: spectra, synchronization, resonance, swing dynamics",
               "netosc"};
  app.require_subcommand(1);

  SpectrumCmd spectrum;
  SimulateCmd simulate;
  SyncCmd sync;
  ResonanceCmd resonance;
  SwingCmd swing;
  PolarCmd polar;
  VerifyCmd verify;

  auto* s_spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues and resonance frequencies");
  auto* s_simulate = app.add_subcommand("simulate", "trajectory CSV for one of the five regimes");
  auto* s_sync = app.add_subcommand("sync", "decay rate and synchronization times");
  auto* s_resonance = app.add_subcommand("resonance", "frequencies, influence and resonance maps");
  auto* s_swing = app.add_subcommand("swing", "linear swing equation");
  auto* s_polar = app.add_subcommand("polar", "eigenvalues of G and of its polar factors");
  auto* s_verify = app.add_subcommand("verify", "run the acceptance suite");
  spectrum.attach(s_spectrum);
  simulate.attach(s_simulate);
  sync.attach(s_sync);
  resonance.attach(s_resonance);
  swing.attach(s_swing);
  polar.attach(s_polar);
  verify.attach(s_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (s_spectrum->parsed()) spectrum(out);
    if (s_simulate->parsed()) simulate(out);
    if (s_sync->parsed()) sync(out);
    if (s_resonance->parsed()) resonance(out);
    if (s_swing->parsed()) swing(out);
    if (s_polar->parsed()) polar(out);
    if (s_verify->parsed()) return verify(out) ? kOk : kVerifyFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace netosc::cli
