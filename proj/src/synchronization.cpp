#include "netosc/synchronization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "netosc/errors.hpp"

namespace netosc {

namespace {

constexpr double kRateTieTol = 1e-9;

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  }
}

void check_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  }
}

std::vector<GEigenpair> nonzero_pairs(const SpectralDecomposition& lap, double alpha) {
  std::vector<GEigenpair> pairs = eig_G(lap, CouplingConfig{1.0, 0.0, 0.0, alpha});
  pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                             [](const GEigenpair& p) { return p.mu == 0.0; }),
              pairs.end());
  return pairs;
}

}  // namespace

State asymptotic_state(const State& y0, double t) {
  const auto n = y0.x.size();
  const double sx = y0.x.sum();
  const double sv = y0.v.sum();
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double x = (c * sx + s * sv) / static_cast<double>(n);
  const double v = (-s * sx + c * sv) / static_cast<double>(n);
  return {Vector::Constant(n, x), Vector::Constant(n, v)};
}

std::vector<double> decay_rates(const Graph& g, double alpha) {
  check_alpha(alpha);
  std::vector<double> rates;
  for (const GEigenpair& p : nonzero_pairs(laplacian_spectrum(g), alpha)) {
    rates.push_back(p.lambda_plus.real());
  }
  std::sort(rates.begin(), rates.end(), std::greater<>());
  return rates;
}

double lambda_S(const Graph& g, double alpha, std::size_t order) {
  const std::vector<double> rates = decay_rates(g, alpha);
  if (order == 0 || order > rates.size()) {
    std::ostringstream msg;
    msg << "order " << order << " outside 1.." << rates.size();
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  return rates[order - 1];
}

SyncReport sync_time_bounds(const Graph& g, const State& y0, double epsilon, double alpha,
                            const SyncOptions& opts) {
  check_alpha(alpha);
  check_epsilon(epsilon);
  const auto n = static_cast<Eigen::Index>(g.n());
  if (y0.x.size() != n || y0.v.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "initial state length does not match the graph");
  }
  const SpectralDecomposition lap = laplacian_spectrum(g);
  const std::vector<GEigenpair> pairs = nonzero_pairs(lap, alpha);
  if (pairs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a single node has no decaying mode");
  }

  std::vector<double> levels;
  for (const GEigenpair& p : pairs) levels.push_back(p.lambda_plus.real());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [](double a, double b) { return std::abs(a - b) < kRateTieTol; }),
               levels.end());

  const double scale = std::max(1.0, std::max(y0.x.norm(), y0.v.norm()));
  for (std::size_t level = 0; level < levels.size(); ++level) {
    const double rate = levels[level];
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
    const GEigenpair* first = nullptr;
    std::size_t block = 0;
    for (const GEigenpair& p : pairs) {
      if (std::abs(p.lambda_plus.real() - rate) >= kRateTieTol) continue;
      if (!first) first = &p;
      ++block;
      const Vector phi = lap.vector(p.mode);
      const Complex lam = p.lambda_plus;
      const Complex proj = phi.dot(y0.x) + std::conj(lam) * phi.dot(y0.v);
      c += phi.cast<Complex>() * (proj / (1.0 + std::norm(lam)));
    }
    const double excitation = c.cwiseAbs().maxCoeff();
    if (excitation <= 1e-12 * scale) {
      if (opts.fallback_to_next_mode && level + 1 < levels.size()) continue;
      throw Error(ErrorCode::DominantModeUnexcited,
                  "initial state has no component along the dominant mode");
    }

    SyncReport r;
    r.alpha = alpha;
    r.epsilon = epsilon;
    r.lambda_S = rate;
    r.dominant.mode = first->mode;
    r.dominant.multiplicity = block;
    r.dominant.mu = first->mu;
    r.dominant.lambda = first->lambda_plus;
    r.dominant.complex_branch = first->lambda_plus.imag() != 0.0;
    r.per_node_bound_times.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mag = std::abs(c(i));
      double t = 0.0;
      if (mag > 0.0) t = std::max(0.0, std::log(mag / epsilon) / std::abs(rate));
      r.per_node_bound_times[static_cast<std::size_t>(i)] = t;
    }
    r.mean_bound_time = std::accumulate(r.per_node_bound_times.begin(),
                                        r.per_node_bound_times.end(), 0.0) /
                        static_cast<double>(n);
    return r;
  }
  throw Error(ErrorCode::DominantModeUnexcited, "initial state excites no decaying mode");
}

EmpiricalSync empirical_sync_time(const Trajectory& traj, double epsilon, SettleRule rule) {
  check_epsilon(epsilon);
  if (traj.states.empty() || traj.states.size() != traj.times.size()) {
    throw Error(ErrorCode::InvalidArgument, "trajectory is empty or inconsistent");
  }
  const std::size_t n = traj.n();
  const std::size_t samples = traj.size();
  const State& y0 = traj.states.front();
  const double t0 = traj.times.front();

  // Deviation from the synchronized motion; shared by all nodes.
  std::vector<double> sync_x(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    sync_x[k] = asymptotic_state(y0, traj.times[k] - t0).x(0);
  }

  EmpiricalSync out;
  out.per_node.resize(n);
  std::vector<std::size_t> unsettled;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    auto above = [&](std::size_t k) {
      return std::abs(traj.states[k].x(ii) - sync_x[k]) >= epsilon;
    };
    std::optional<double> settle;
    if (rule == SettleRule::StaysBelow) {
      if (!above(samples - 1)) {
        std::size_t k = samples - 1;
        while (k > 0 && !above(k - 1)) --k;
        settle = traj.times[k];
      }
    } else {
      bool exceeded = false;
      for (std::size_t k = 0; k < samples; ++k) {
        if (above(k)) {
          exceeded = true;
        } else if (exceeded) {
          settle = traj.times[k];
          break;
        }
      }
      if (!exceeded) settle = traj.times.front();
    }
    if (!settle) {
      unsettled.push_back(i);
      continue;
    }
    out.per_node[i] = *settle;
  }
  if (!unsettled.empty()) {
    std::ostringstream msg;
    msg << "nodes never settle within the grid:";
    for (std::size_t i : unsettled) msg << ' ' << i + 1;
    throw Error(ErrorCode::Unsettled, msg.str());
  }
  out.mean = std::accumulate(out.per_node.begin(), out.per_node.end(), 0.0) /
             static_cast<double>(n);
  out.max = *std::max_element(out.per_node.begin(), out.per_node.end());
  return out;
}

double sync_measure(const Trajectory& traj, double t, double epsilon) {
  check_epsilon(epsilon);
  if (traj.states.empty()) throw Error(ErrorCode::InvalidArgument, "empty trajectory");
  std::size_t k = traj.size();
  for (std::size_t j = 0; j < traj.size(); ++j) {
    if (std::abs(traj.times[j] - t) <= 1e-9 * std::max(1.0, std::abs(t))) {
      k = j;
      break;
    }
  }
  if (k == traj.size()) {
    std::ostringstream msg;
    msg << "time " << t << " is not on the trajectory grid";
    throw Error(ErrorCode::GridError, msg.str());
  }
  const State target = asymptotic_state(traj.states.front(), traj.times[k] - traj.times.front());
  const State& s = traj.states[k];
  std::size_t inside = 0;
  for (Eigen::Index i = 0; i < s.x.size(); ++i) {
    const double d = std::hypot(s.x(i) - target.x(i), s.v(i) - target.v(i));
    if (d <= epsilon) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(s.x.size());
}

SyncReport sync_report(const Graph& g, const State& y0, double epsilon, double alpha,
                       bool empirical, double dt, double horizon, SettleRule rule,
                       const SyncOptions& opts) {
  SyncReport r = sync_time_bounds(g, y0, epsilon, alpha, opts);
  if (!empirical) return r;
  if (horizon <= 0.0) {
    const double worst = *std::max_element(r.per_node_bound_times.begin(),
                                           r.per_node_bound_times.end());
    horizon = std::max(10.0, 3.0 * worst);
  }
  const Trajectory traj = evolve(g, CouplingConfig{1.0, 0.0, 0.0, alpha}, NoDrive{}, y0,
                                 uniform_grid(horizon, dt));
  const EmpiricalSync e = empirical_sync_time(traj, epsilon, rule);
  r.empirical_times = e.per_node;
  r.empirical_mean = e.mean;
  r.empirical_max = e.max;
  return r;
}

}  // namespace netosc
