#ifndef WASSER_HARNESS_HPP
#define WASSER_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "wasser/laws.hpp"
#include "wasser/measure.hpp"
#include "wasser/metric.hpp"
#include "wasser/report.hpp"
#include "wasser/transport.hpp"

namespace wasser {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;
template <class S>
using TrialFn = std::function<TrialOutcome(Rng&)>;

/// Runs one law over `trials` random instances. Each trial draws its
/// own generator from (seed, index), so the serial and OpenMP paths
/// produce identical reports; the parallel path is the production one
/// and the serial path is the reference kept for testing.
template <class S>
LawReport run_law(const std::string& name, long trials, std::uint64_t seed,
                  const TrialFn<S>& fn, bool parallel = true) {
  std::vector<TrialOutcome> outs(static_cast<std::size_t>(trials));
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < trials; ++i) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
      outs[static_cast<std::size_t>(i)] = fn(rng);
    }
  } else {
    for (long i = 0; i < trials; ++i) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
      outs[static_cast<std::size_t>(i)] = fn(rng);
    }
  }
  LawReport rep;
  rep.law = name;
  rep.trials = trials;
  for (const auto& o : outs) {
    if (o.violated) ++rep.failures;
    if (o.slack < rep.worst_slack) {
      rep.worst_slack = o.slack;
      rep.witness = o.witness;
    }
  }
  if (rep.witness.empty() && !outs.empty()) rep.witness = "-";
  return rep;
}

/// Deterministic family of sample spaces and random instances for the
/// law suites. Exact mode draws rational data on the line and a finite
/// matrix space; float mode adds the Euclidean plane.
template <class S>
class InstanceFactory {
 public:
  InstanceFactory() {
    line_ = std::make_shared<LineSpace<S>>();
    spaces_.push_back(line_);
    if constexpr (num_traits<S>::exact) {
      // Distances between integer sites on the line form a metric.
      std::vector<S> sites{S(0), S(1), S(3), S(7), S(12), S(20)};
      std::vector<std::vector<S>> d(sites.size(), std::vector<S>(sites.size()));
      for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = 0; j < sites.size(); ++j)
          d[i][j] = num_traits<S>::abs(sites[i] - sites[j]);
      spaces_.push_back(std::make_shared<MatrixSpace<S>>(std::move(d)));
    } else {
      plane_ = std::make_shared<EuclideanSpace<S>>(2);
      spaces_.push_back(plane_);
      Rng rng(0xC0FFEEULL);
      std::uniform_real_distribution<double> u(-5.0, 5.0);
      std::vector<std::pair<double, double>> pts(6);
      for (auto& p : pts) p = {u(rng), u(rng)};
      std::vector<std::vector<S>> d(pts.size(), std::vector<S>(pts.size()));
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
          d[i][j] = std::hypot(pts[i].first - pts[j].first,
                               pts[i].second - pts[j].second);
      spaces_.push_back(std::make_shared<MatrixSpace<S>>(std::move(d)));
    }
  }

  const std::vector<SpacePtr<S>>& spaces() const { return spaces_; }
  const SpacePtr<S>& line() const { return line_; }

  SpacePtr<S> pick_space(Rng& rng) const {
    return spaces_[rng() % spaces_.size()];
  }

  S random_scalar(Rng& rng) const {
    if constexpr (num_traits<S>::exact) {
      static const long dens[] = {1, 2, 3, 4, 8};
      long num = static_cast<long>(rng() % 33) - 16;
      return S(num, dens[rng() % 5]);
    } else {
      return std::uniform_real_distribution<double>(-8.0, 8.0)(rng);
    }
  }

  /// Scalar in [0,1] restricted to probabilities at most 1: endpoints
  /// and simple fractions appear with high probability since that is
  /// where skew laws degenerate.
  S random_r(Rng& rng) const {
    switch (rng() % 8) {
      case 0: return S(0);
      case 1: return S(1);
      case 2: return S(1) / S(2);
      case 3: return S(1) / S(4);
      case 4: return S(3) / S(4);
      default:
        if constexpr (num_traits<S>::exact) {
          unsigned long den = 1 + rng() % 16;
          return S(static_cast<long>(rng() % (den + 1)), static_cast<long>(den));
        } else {
          return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        }
    }
  }

  Point<S> random_point(const MetricSpace<S>& space, Rng& rng) const {
    if (auto* m = dynamic_cast<const MatrixSpace<S>*>(&space))
      return Point<S>(static_cast<std::size_t>(rng() % m->size()));
    if constexpr (!num_traits<S>::exact) {
      if (auto* e = dynamic_cast<const EuclideanSpace<S>*>(&space)) {
        std::vector<S> c(e->dim());
        for (auto& x : c) x = random_scalar(rng);
        return Point<S>(std::move(c));
      }
    }
    return Point<S>(random_scalar(rng));
  }

  DiscreteMeasure<S> random_measure(const SpacePtr<S>& space, Rng& rng,
                                    std::size_t max_atoms = 4) const {
    std::size_t n = 1 + rng() % max_atoms;
    std::vector<Point<S>> atoms;
    std::vector<S> weights;
    S total(0);
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back(random_point(*space, rng));
      S w;
      if constexpr (num_traits<S>::exact)
        w = S(1 + static_cast<long>(rng() % 9));
      else
        w = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
      weights.push_back(w);
      total += w;
    }
    for (S& w : weights) w /= total;
    return DiscreteMeasure<S>(space, std::move(atoms), std::move(weights));
  }

  /// A map certified nonexpansive by construction: composition of a
  /// contraction toward a centre (scale <= 1) and a translation, or a
  /// constant map. Only defined on the line / plane spaces.
  std::function<Point<S>(const Point<S>&)> random_nonexpansive_map(
      const MetricSpace<S>& space, Rng& rng) const {
    if (rng() % 5 == 0) {
      Point<S> c = random_point(space, rng);
      return [c](const Point<S>&) { return c; };
    }
    S lambda;  // contraction factor in [0,1]
    if constexpr (num_traits<S>::exact)
      lambda = S(static_cast<long>(rng() % 5), 4);
    else
      lambda = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (lambda > S(1)) lambda = S(1);
    Point<S> centre = random_point(space, rng);
    Point<S> shift = random_point(space, rng);
    return [lambda, centre, shift](const Point<S>& x) {
      if (x.is_scalar())
        return Point<S>(centre.scalar() +
                        lambda * (x.scalar() - centre.scalar()) + shift.scalar());
      std::vector<S> c(x.coords().size());
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = centre.coords()[i] +
               lambda * (x.coords()[i] - centre.coords()[i]) + shift.coords()[i];
      return Point<S>(std::move(c));
    };
  }

  /// A certified nonexpansive map into the measure carrier:
  /// x |-> delta(g1 x) +_r delta(g2 x). Nonexpansive because delta is
  /// isometric and +_r satisfies the Wasserstein condition.
  std::function<DiscreteMeasure<S>(const Point<S>&)> random_nonexpansive_f(
      const SpacePtr<S>& space, Rng& rng) const {
    auto g1 = random_nonexpansive_map(*space, rng);
    auto g2 = random_nonexpansive_map(*space, rng);
    S r = random_r(rng);
    return [space, g1, g2, r](const Point<S>& x) {
      return convex_sum(dirac(space, g1(x)), dirac(space, g2(x)), r);
    };
  }

 private:
  std::vector<SpacePtr<S>> spaces_;
  SpacePtr<S> line_;
  SpacePtr<S> plane_;
};

namespace detail {

template <class S>
TrialOutcome equality_outcome(const DiscreteMeasure<S>& a,
                              const DiscreteMeasure<S>& b, std::string witness) {
  TrialOutcome out;
  double gap = measure_gap(a, b);
  out.slack = -gap;
  out.violated = num_traits<S>::exact ? !(a == b) : gap > 1e-12;
  out.witness = std::move(witness);
  return out;
}

}  // namespace detail

/// Configuration of a law-suite run.
struct SuiteConfig {
  long trials = 1000;
  std::uint64_t seed = 7;
  bool parallel = true;
  std::vector<double> p_values{1.0, 2.0};
};

/// Named law batches over the measure carrier. Equality laws ignore p;
/// inequality laws run once per configured p.
template <class S>
class LawSuite {
 public:
  explicit LawSuite(SuiteConfig cfg) : cfg_(std::move(cfg)) {}

  const InstanceFactory<S>& factory() const { return factory_; }

  std::vector<LawReport> run(const std::string& set) const {
    std::vector<LawReport> out;
    bool all = set == "all";
    if (all || set == "barycentric") barycentric(out);
    if (all || set == "convex") convex(out);
    if (all || set == "midpoint") midpoint_laws(out);
    if (all || set == "wasserstein") wasserstein_laws(out);
    if (all || set == "metric") metric_laws(out);
    if (out.empty()) throw std::invalid_argument("unknown law set: " + set);
    return out;
  }

  void barycentric(std::vector<LawReport>& out) const {
    const auto& F = factory_;
    out.push_back(run_one("B1: x+_1y = x", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto mu = F.random_measure(sp, rng), nu = F.random_measure(sp, rng);
      return detail::equality_outcome(convex_sum(mu, nu, S(1)), mu, "B1");
    }));
    out.push_back(run_one("B2: x+_rx = x", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto mu = F.random_measure(sp, rng);
      return detail::equality_outcome(convex_sum(mu, mu, F.random_r(rng)), mu,
                                      "B2");
    }));
    out.push_back(run_one("SC: x+_ry = y+_{1-r}x", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto mu = F.random_measure(sp, rng), nu = F.random_measure(sp, rng);
      S r = F.random_r(rng);
      return detail::equality_outcome(convex_sum(mu, nu, r),
                                      convex_sum(nu, mu, S(1) - r), "SC");
    }));
    out.push_back(run_one("SA: skew associativity", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto x = F.random_measure(sp, rng);
      auto y = F.random_measure(sp, rng);
      auto z = F.random_measure(sp, rng);
      S ph = F.random_r(rng), r = F.random_r(rng);
      auto lhs = convex_sum(convex_sum(x, y, ph), z, r);
      DiscreteMeasure<S> rhs = lhs;
      // (x +_ph y) +_r z = x +_{ph r} (y +_{(r - ph r)/(1 - ph r)} z),
      // provided r < 1 and ph < 1; at ph r = 1 both sides are x.
      S phr = ph * r;
      bool singular;
      if constexpr (num_traits<S>::exact)
        singular = phr == S(1);
      else
        singular = 1.0 - phr < 1e-15;
      if (singular) {
        rhs = x;
      } else {
        S inner = (r - phr) / (S(1) - phr);
        rhs = convex_sum(x, convex_sum(y, z, inner), phr);
      }
      return detail::equality_outcome(lhs, rhs, "SA");
    }));
  }

  void convex(std::vector<LawReport>& out) const {
    const auto& F = factory_;
    out.push_back(run_one("projection: sum d_ik x_i = x_k", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      std::size_t n = 2 + rng() % 3, k = rng() % n;
      std::vector<std::pair<S, DiscreteMeasure<S>>> terms;
      for (std::size_t i = 0; i < n; ++i)
        terms.emplace_back(i == k ? S(1) : S(0), F.random_measure(sp, rng));
      return detail::equality_outcome(finite_convex_sum(terms), terms[k].second,
                                      "projection");
    }));
    out.push_back(run_one("barycentre: double mixture flattens", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      std::size_t n = 2 + rng() % 2, m = 2 + rng() % 2;
      std::vector<DiscreteMeasure<S>> xs;
      for (std::size_t k = 0; k < m; ++k) xs.push_back(F.random_measure(sp, rng));
      auto simplex_row = [&F](Rng& rg, std::size_t len) {
        std::vector<S> w(len);
        S total(0);
        for (auto& v : w) {
          if constexpr (num_traits<S>::exact)
            v = S(static_cast<long>(rg() % 9));
          else
            v = std::uniform_real_distribution<double>(0.0, 1.0)(rg);
          total += v;
        }
        if (total == S(0)) {
          w[0] = S(1);
          total = S(1);
        }
        for (auto& v : w) v /= total;
        return w;
      };
      std::vector<S> r = simplex_row(rng, n);
      std::vector<std::vector<S>> s;
      for (std::size_t i = 0; i < n; ++i) s.push_back(simplex_row(rng, m));
      std::vector<std::pair<S, DiscreteMeasure<S>>> outer;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<S, DiscreteMeasure<S>>> inner;
        for (std::size_t k = 0; k < m; ++k) inner.emplace_back(s[i][k], xs[k]);
        outer.emplace_back(r[i], finite_convex_sum(inner));
      }
      std::vector<std::pair<S, DiscreteMeasure<S>>> flat;
      for (std::size_t k = 0; k < m; ++k) {
        S w(0);
        for (std::size_t i = 0; i < n; ++i) w += r[i] * s[i][k];
        flat.emplace_back(w, xs[k]);
      }
      return detail::equality_outcome(finite_convex_sum(outer),
                                      finite_convex_sum(flat), "barycentre");
    }));
    out.push_back(run_one("finite sum = inductive fold", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      std::size_t n = 2 + rng() % 3;
      std::vector<std::pair<S, DiscreteMeasure<S>>> terms;
      std::vector<S> w(n);
      S total(0);
      for (auto& v : w) {
        if constexpr (num_traits<S>::exact)
          v = S(1 + static_cast<long>(rng() % 9));
        else
          v = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        total += v;
      }
      for (std::size_t i = 0; i < n; ++i)
        terms.emplace_back(w[i] / total, F.random_measure(sp, rng));
      // Right fold per the inductive definition:
      // sum_i r_i x_i = x_1 +_{r_1} sum_{i>=2} (r_i / (1 - r_1)) x_i.
      std::function<DiscreteMeasure<S>(std::size_t, const S&)> fold =
          [&](std::size_t i, const S& remaining) -> DiscreteMeasure<S> {
        if (i + 1 == terms.size()) return terms[i].second;
        S r1 = terms[i].first / remaining;
        return convex_sum(terms[i].second, fold(i + 1, remaining - terms[i].first),
                          r1);
      };
      return detail::equality_outcome(finite_convex_sum(terms), fold(0, S(1)),
                                      "fold");
    }));
  }

  void midpoint_laws(std::vector<LawReport>& out) const {
    const auto& F = factory_;
    out.push_back(run_one("C: x(+)y = y(+)x", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto x = F.random_measure(sp, rng), y = F.random_measure(sp, rng);
      return detail::equality_outcome(midpoint(x, y), midpoint(y, x), "C");
    }));
    out.push_back(run_one("I: x(+)x = x", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto x = F.random_measure(sp, rng);
      return detail::equality_outcome(midpoint(x, x), x, "I");
    }));
    out.push_back(run_one("M: mediality", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto x = F.random_measure(sp, rng), u = F.random_measure(sp, rng);
      auto v = F.random_measure(sp, rng), z = F.random_measure(sp, rng);
      return detail::equality_outcome(midpoint(midpoint(x, u), midpoint(v, z)),
                                      midpoint(midpoint(x, v), midpoint(u, z)),
                                      "M");
    }));
    out.push_back(run_one("dyadic = convex_sum", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto x = F.random_measure(sp, rng), y = F.random_measure(sp, rng);
      unsigned long k = rng() % 7, den = 1ul << k;
      unsigned long num = rng() % (den + 1);
      S r = S(static_cast<long>(num)) / S(static_cast<long>(den));
      return detail::equality_outcome(dyadic_combination(x, y, num, den),
                                      convex_sum(x, y, r), "dyadic");
    }));
  }

  void wasserstein_laws(std::vector<LawReport>& out) const {
    const auto& F = factory_;
    for (double pd : cfg_.p_values) {
      order_t<S> p = make_order(pd);
      std::string tag = " @ p=" + trim(pd);
      out.push_back(run_one("(*) Wasserstein condition" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        return check_wasserstein_condition(
            F.random_measure(sp, rng), F.random_measure(sp, rng),
            F.random_measure(sp, rng), F.random_measure(sp, rng),
            F.random_r(rng), p);
      }));
      out.push_back(run_one("Lipschitz in arguments" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        return check_lipschitz_in_args(F.random_measure(sp, rng),
                                       F.random_measure(sp, rng),
                                       F.random_measure(sp, rng),
                                       F.random_r(rng), p);
      }));
      out.push_back(run_one("Holder in r" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        return check_holder_in_r(F.random_measure(sp, rng),
                                 F.random_measure(sp, rng), F.random_r(rng),
                                 F.random_r(rng), p);
      }));
      out.push_back(run_one("generalized condition" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        std::size_t n = 2 + rng() % 3;
        std::vector<S> w(n);
        S total(0);
        for (auto& v : w) {
          if constexpr (num_traits<S>::exact)
            v = S(1 + static_cast<long>(rng() % 9));
          else
            v = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
          total += v;
        }
        std::vector<std::tuple<S, DiscreteMeasure<S>, DiscreteMeasure<S>>> terms;
        for (std::size_t i = 0; i < n; ++i)
          terms.emplace_back(w[i] / total, F.random_measure(sp, rng),
                             F.random_measure(sp, rng));
        return check_generalized_condition(terms, p);
      }));
      out.push_back(run_one("nonexpansiveness from (*)" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        auto x = F.random_measure(sp, rng), x2 = F.random_measure(sp, rng);
        auto y = F.random_measure(sp, rng), y2 = F.random_measure(sp, rng);
        S r = F.random_r(rng);
        S lhs = detail::wp_cost(convex_sum(x, y, r), convex_sum(x2, y2, r), p);
        S rhs = std::max(detail::wp_cost(x, x2, p), detail::wp_cost(y, y2, p));
        return detail::power_slack(lhs, rhs, "nonexpansive");
      }));
      out.push_back(run_one("free extension nonexpansive" + tag,
                            [&F, p](Rng& rng) {
        auto sp = F.line();
        auto f = F.random_nonexpansive_f(sp, rng);
        auto mu = F.random_measure(sp, rng), nu = F.random_measure(sp, rng);
        S lhs = detail::wp_cost(free_extension<S>(f, mu),
                                free_extension<S>(f, nu), p);
        S rhs = detail::wp_cost(mu, nu, p);
        return detail::power_slack(lhs, rhs, "free-extension");
      }));
    }
  }

  void metric_laws(std::vector<LawReport>& out) const {
    const auto& F = factory_;
    for (double pd : cfg_.p_values) {
      order_t<S> p = make_order(pd);
      std::string tag = " @ p=" + trim(pd);
      out.push_back(run_one("W_p symmetry" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        auto mu = F.random_measure(sp, rng), nu = F.random_measure(sp, rng);
        S a = detail::wp_cost(mu, nu, p), b = detail::wp_cost(nu, mu, p);
        TrialOutcome o;
        o.slack = -to_double(num_traits<S>::abs(a - b));
        o.violated = num_traits<S>::exact ? a != b
                                          : o.slack < -num_traits<S>::ineq_tol;
        o.witness = "symmetry";
        return o;
      }));
      out.push_back(run_one("W_p(mu,mu) = 0" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        auto mu = F.random_measure(sp, rng);
        S c = detail::wp_cost(mu, mu, p);
        TrialOutcome o;
        o.slack = -to_double(c);
        o.violated = c != S(0) && (num_traits<S>::exact ||
                                   to_double(c) > num_traits<S>::ineq_tol);
        o.witness = "identity";
        return o;
      }));
      out.push_back(run_one("W_p triangle inequality" + tag, [&F, p](Rng& rng) {
        auto sp = F.pick_space(rng);
        auto mu = F.random_measure(sp, rng);
        auto nu = F.random_measure(sp, rng);
        auto om = F.random_measure(sp, rng);
        double lhs = root(detail::wp_cost(mu, om, p), p);
        double rhs = root(detail::wp_cost(mu, nu, p), p) +
                     root(detail::wp_cost(nu, om, p), p);
        TrialOutcome o;
        o.slack = rhs - lhs;
        o.violated = o.slack < -num_traits<double>::ineq_tol;
        o.witness = "triangle";
        return o;
      }));
    }
    out.push_back(run_one("W_p monotone in p", [&F, this](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto mu = F.random_measure(sp, rng), nu = F.random_measure(sp, rng);
      TrialOutcome o;
      o.slack = std::numeric_limits<double>::infinity();
      o.witness = "monotone";
      double prev = -1.0;
      for (double pd : cfg_.p_values) {
        double w = root(detail::wp_cost(mu, nu, make_order(pd)), make_order(pd));
        if (prev >= 0.0) {
          double slack = w - prev;
          if (slack < o.slack) o.slack = slack;
          if (slack < -num_traits<double>::ineq_tol) o.violated = true;
        }
        prev = w;
      }
      return o;
    }));
    out.push_back(run_one("Dirac isometry", [&F](Rng& rng) {
      auto sp = F.pick_space(rng);
      auto x = F.random_point(*sp, rng), y = F.random_point(*sp, rng);
      order_t<S> p = make_order(1.0 + static_cast<double>(rng() % 3));
      S d = sp->distance(x, y);
      S c = detail::wp_cost(dirac(sp, x), dirac(sp, y), p);
      S dp = num_traits<S>::power(d, p);
      TrialOutcome o;
      o.slack = -to_double(num_traits<S>::abs(c - dp));
      o.violated =
          num_traits<S>::exact ? c != dp : o.slack < -num_traits<double>::eq_tol;
      o.witness = "dirac";
      return o;
    }));
  }

 private:
  static order_t<S> make_order(double p) {
    if constexpr (num_traits<S>::exact) {
      auto u = static_cast<unsigned>(p);
      if (static_cast<double>(u) != p)
        throw std::invalid_argument("exact mode requires integer p");
      return u;
    } else {
      return p;
    }
  }

  static std::string trim(double p) {
    std::ostringstream os;
    os << p;
    return os.str();
  }

  LawReport run_one(const std::string& name, TrialFn<S> fn) const {
    return run_law<S>(name, cfg_.trials, cfg_.seed, fn, cfg_.parallel);
  }

  SuiteConfig cfg_;
  InstanceFactory<S> factory_;
};

}  // namespace wasser

#endif
