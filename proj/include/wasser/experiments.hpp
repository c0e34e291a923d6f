#ifndef WASSER_EXPERIMENTS_HPP
#define WASSER_EXPERIMENTS_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wasser/measure.hpp"
#include "wasser/transport.hpp"

namespace wasser {

/// zeta(s) = sum_{n>=1} n^{-s} for s > 1, by partial sum plus
/// Euler-Maclaurin tail correction; accurate to ~1e-13.
inline double zeta(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta diverges for s <= 1");
  static std::map<double, double> cache;
  if (auto it = cache.find(s); it != cache.end()) return it->second;
  const double N = 1e6;
  double sum = 0.0;
  for (double n = N - 1; n >= 1.0; n -= 1.0) sum += std::pow(n, -s);
  // Tail from N: integral + midpoint + first Bernoulli correction.
  double tail = std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s) +
                s / 12.0 * std::pow(N, -s - 1.0);
  cache[s] = sum + tail;
  return sum + tail;
}

/// The truncated Dirichlet measure D_{q,m} on the line: mass
/// zeta(q+1)^{-1} n^{-(q+1)} at n for 1 <= n <= m, and the exact
/// remainder 1 - zeta(q+1)^{-1} sum_{n<=m} n^{-(q+1)} at m+1.
struct DirichletTruncation {
  double q;
  std::size_t m;
  DiscreteMeasure<double> measure;
};

inline DirichletTruncation dirichlet_truncation(SpacePtr<double> line, double q,
                                                std::size_t m) {
  if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const double z = 1.0 / zeta(q + 1.0);
  std::vector<Point<double>> atoms;
  std::vector<double> weights;
  double used = 0.0;
  for (std::size_t n = 1; n <= m; ++n) {
    double w = z * std::pow(static_cast<double>(n), -(q + 1.0));
    atoms.emplace_back(static_cast<double>(n));
    weights.push_back(w);
    used += w;
  }
  atoms.emplace_back(static_cast<double>(m + 1));
  weights.push_back(1.0 - used);
  return DirichletTruncation{q, m,
                             DiscreteMeasure<double>(std::move(line),
                                                     std::move(atoms),
                                                     std::move(weights))};
}

struct MomentRow {
  std::size_t m;
  double moment;
};

/// p-moments of D_{q,m} about 0 as m grows. Converges for p < q and
/// grows without bound for p >= q.
inline std::vector<MomentRow> moment_growth(double q, double p,
                                            std::size_t m_max) {
  auto line = std::make_shared<LineSpace<double>>();
  const Point<double> origin(0.0);
  std::vector<MomentRow> rows;
  for (std::size_t m = 1; m <= m_max; ++m) {
    auto d = dirichlet_truncation(line, q, m);
    rows.push_back({m, p_moment(d.measure, origin, p).value});
  }
  return rows;
}

struct ConvergenceTrace {
  double p, q;
  std::vector<std::pair<std::size_t, std::size_t>> indices;  // (m, 2m)
  std::vector<double> distances;                             // W_p values
  std::string verdict;  // "cauchy-like" | "non-cauchy-like" | "inconclusive"
  double decay_exponent = 0.0;  // fitted slope of log W_p vs log m
};

struct CauchyConfig {
  double decay_factor = 10.0;  // cauchy-like: first/last >= this
  double floor_ratio = 10.0;   // non-cauchy-like: min > first/this
};

/// W_p(D_{q,m}, D_{q,2m}) along a schedule of m values, with a measured
/// verdict: the convergence claims are qualitative, the thresholds here are
/// explicit configuration.
inline ConvergenceTrace cauchy_experiment(double q, double p,
                                          const std::vector<std::size_t>& schedule,
                                          const CauchyConfig& cfg = {}) {
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("schedule must be increasing");
  auto line = std::make_shared<LineSpace<double>>();
  ConvergenceTrace tr;
  tr.p = p;
  tr.q = q;
  for (std::size_t m : schedule) {
    auto a = dirichlet_truncation(line, q, m);
    auto b = dirichlet_truncation(line, q, 2 * m);
    tr.indices.emplace_back(m, 2 * m);
    tr.distances.push_back(optimal_coupling(a.measure, b.measure, p).wp);
  }
  double first = tr.distances.front(), last = tr.distances.back();
  double lo = *std::min_element(tr.distances.begin(), tr.distances.end());
  if (last > 0.0 && first / last >= cfg.decay_factor)
    tr.verdict = "cauchy-like";
  else if (lo > first / cfg.floor_ratio)
    tr.verdict = "non-cauchy-like";
  else
    tr.verdict = "inconclusive";
  // Least-squares slope of log d against log m.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (tr.distances[i] <= 0.0) continue;
    double x = std::log(static_cast<double>(schedule[i]));
    double y = std::log(tr.distances[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  if (n >= 2) {
    double dn = static_cast<double>(n);
    tr.decay_exponent = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  }
  return tr;
}

struct DensityRow {
  std::size_t level;  // dyadic grid 2^-level
  double distance;
};

/// W_p between a uniform 2^k-atom measure on [0,1] and its dyadic
/// coarsenings: atoms snap to the midpoint of their level-l cell, so
/// the finest level is the identity.
inline std::vector<DensityRow> density_experiment(double p, std::size_t k = 8) {
  auto line = std::make_shared<LineSpace<double>>();
  const std::size_t n = std::size_t{1} << k;
  std::vector<Point<double>> atoms;
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    atoms.emplace_back((static_cast<double>(i) + 0.5) / static_cast<double>(n));
  DiscreteMeasure<double> target(line, atoms, weights);
  std::vector<DensityRow> rows;
  for (std::size_t level = 0; level <= k; ++level) {
    double cells = static_cast<double>(std::size_t{1} << level);
    auto coarse = pushforward<double>(
        target, line, [cells](const Point<double>& x) {
          return Point<double>(
              (std::floor(x.scalar() * cells) + 0.5) / cells);
        });
    rows.push_back({level, optimal_coupling(target, coarse, p).wp});
  }
  return rows;
}

struct MomentConvergenceRow {
  double wp_distance;
  double moment_gap;
};

struct MomentConvergenceReport {
  std::vector<MomentConvergenceRow> rows;
  bool moments_follow;  // every |moment gap| <= C * W_p trace for reported C
  double bound_constant;
};

/// Along a W_p-convergent sequence, p-moments must converge too
/// (moment gap <= C * W_p with a measured C).
inline MomentConvergenceReport moment_convergence_check(
    const std::vector<DiscreteMeasure<double>>& sequence,
    const DiscreteMeasure<double>& limit, const Point<double>& x0, double p) {
  MomentConvergenceReport rep;
  rep.bound_constant = 0.0;
  double limit_moment = p_moment(limit, x0, p).value;
  for (const auto& mu : sequence) {
    double w = optimal_coupling(mu, limit, p).wp;
    double gap = std::fabs(p_moment(mu, x0, p).value - limit_moment);
    rep.rows.push_back({w, gap});
    if (w > 0.0) rep.bound_constant = std::max(rep.bound_constant, gap / w);
  }
  rep.moments_follow = true;
  for (const auto& r : rep.rows)
    if (r.moment_gap > rep.bound_constant * r.wp_distance + 1e-12)
      rep.moments_follow = false;
  return rep;
}

}  // namespace wasser

#endif
