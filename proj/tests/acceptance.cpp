// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit
// if anything fails. Each criterion pins its tolerance in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wasser/experiments.hpp"
#include "wasser/harness.hpp"
#include "wasser/laws.hpp"
#include "wasser/transport.hpp"

using namespace wasser;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// --- 1. Dirac isometry ------------------------------------------------

bool dirac_isometry(std::string& detail) {
  InstanceFactory<double> ff;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    auto sp = ff.spaces()[t % ff.spaces().size()];
    auto x = ff.random_point(*sp, rng), y = ff.random_point(*sp, rng);
    for (double p : {1.0, 2.0, 3.0}) {
      double w = wasserstein(dirac(sp, x), dirac(sp, y), p);
      worst = std::max(worst, std::fabs(w - sp->distance(x, y)));
    }
  }
  InstanceFactory<Rational> fq;
  std::mt19937_64 rq(102);
  bool exact_ok = true;
  for (int t = 0; t < 100; ++t) {
    auto sp = fq.spaces()[t % fq.spaces().size()];
    auto x = fq.random_point(*sp, rq), y = fq.random_point(*sp, rq);
    for (unsigned p : {1u, 2u, 3u}) {
      auto res = optimal_coupling(dirac(sp, x), dirac(sp, y), p);
      if (res.cost_p != num_traits<Rational>::power(sp->distance(x, y), p))
        exact_ok = false;
    }
  }
  detail = "float worst gap " + std::to_string(worst);
  return worst <= 1e-12 && exact_ok;
}

// --- 2. Oracle equivalence (exact mode) -------------------------------

bool oracle_equivalence(std::string& detail) {
  InstanceFactory<Rational> f;
  long mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    std::mt19937_64 rng(mix_seed(201, static_cast<std::uint64_t>(t)));
    auto sp = f.pick_space(rng);
    auto mu = f.random_measure(sp, rng, 4);
    auto nu = f.random_measure(sp, rng, 4);
    unsigned p = 1 + rng() % 3;
    if (optimal_coupling(mu, nu, p).cost_p != brute_force_oracle(mu, nu, p).cost_p)
      ++mismatches;
  }
  detail = std::to_string(mismatches) + " mismatches / 200";
  return mismatches == 0;
}

// --- 3. 1-D cross-check ------------------------------------------------

bool one_d_crosscheck(std::string& detail) {
  InstanceFactory<double> f;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    std::mt19937_64 rng(mix_seed(301, static_cast<std::uint64_t>(t)));
    auto mu = f.random_measure(f.line(), rng, 50);
    auto nu = f.random_measure(f.line(), rng, 50);
    double p = 1.0 + (t % 3);
    double a = optimal_coupling(mu, nu, p).wp;
    double b = wasserstein_1d(mu, nu, p);
    double rel = std::fabs(a - b) / std::max(1.0, std::max(a, b));
    worst = std::max(worst, rel);
  }
  detail = "worst relative gap " + std::to_string(worst);
  return worst <= 1e-9;
}

// --- 4. Metric properties of W_p ---------------------------------------

bool metric_properties(std::string& detail) {
  InstanceFactory<Rational> f;
  double worst_triangle = 0.0;
  for (unsigned p : {1u, 2u}) {
    for (int t = 0; t < 500; ++t) {
      std::mt19937_64 rng(mix_seed(400 + p, static_cast<std::uint64_t>(t)));
      auto sp = f.pick_space(rng);
      auto mu = f.random_measure(sp, rng, 3);
      auto nu = rng() % 4 == 0 ? mu : f.random_measure(sp, rng, 3);
      auto om = f.random_measure(sp, rng, 3);
      // Symmetry, exactly.
      if (optimal_coupling(mu, nu, p).cost_p != optimal_coupling(nu, mu, p).cost_p) {
        detail = "symmetry broken";
        return false;
      }
      // Identity.
      if (optimal_coupling(mu, mu, p).cost_p != Rational(0)) {
        detail = "W_p(mu,mu) != 0";
        return false;
      }
      // Identity of indiscernibles.
      if (optimal_coupling(mu, nu, p).cost_p == Rational(0) && !(mu == nu)) {
        detail = "W_p = 0 but measures differ";
        return false;
      }
      // Triangle inequality on the W_p values.
      double lhs = optimal_coupling(mu, om, p).wp;
      double rhs = optimal_coupling(mu, nu, p).wp + optimal_coupling(nu, om, p).wp;
      worst_triangle = std::min(worst_triangle, rhs - lhs);
    }
  }
  detail = "worst triangle slack " + std::to_string(worst_triangle);
  return worst_triangle >= -1e-9;
}

// --- 5. Monotonicity in p ----------------------------------------------

bool monotonicity(std::string& detail) {
  InstanceFactory<double> f;
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    std::mt19937_64 rng(mix_seed(501, static_cast<std::uint64_t>(t)));
    auto sp = f.pick_space(rng);
    auto mu = f.random_measure(sp, rng, 4);
    auto nu = f.random_measure(sp, rng, 4);
    double prev = -1.0;
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      double w = wasserstein(mu, nu, p);
      if (prev >= 0.0) worst = std::min(worst, w - prev);
      prev = w;
    }
  }
  detail = "worst monotonicity slack " + std::to_string(worst);
  return worst >= -1e-9;
}

// --- 6. Algebra laws (exact equalities) ---------------------------------

bool algebra_laws(std::string& detail) {
  SuiteConfig cfg;
  cfg.trials = 1000;
  cfg.seed = 601;
  LawSuite<Rational> suite(cfg);
  std::vector<LawReport> reports;
  suite.barycentric(reports);
  suite.convex(reports);
  suite.midpoint_laws(reports);
  long failures = 0;
  for (const auto& r : reports) failures += r.failures;
  detail = std::to_string(reports.size()) + " laws x 1000 trials, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

// --- 7. Wasserstein condition suite --------------------------------------

DiscreteMeasure<double> unit_box_measure(const SpacePtr<double>& line,
                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t n = 1 + rng() % 3;
  std::vector<Point<double>> atoms;
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    atoms.emplace_back(u(rng));
    w[i] = 0.05 + u(rng);
    total += w[i];
  }
  for (auto& x : w) x /= total;
  return DiscreteMeasure<double>(line, std::move(atoms), std::move(w));
}

bool wasserstein_suite(std::string& detail) {
  SuiteConfig cfg;
  cfg.trials = 1000;
  cfg.seed = 701;
  cfg.p_values = {1.0, 2.0, 3.0};
  LawSuite<double> suite(cfg);
  std::vector<LawReport> reports;
  suite.wasserstein_laws(reports);
  long failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    failures += r.failures;
    worst = std::min(worst, r.worst_slack);
  }
  // Quantitative inference scheme: sound instances by construction,
  // premises guaranteed, conclusion must hold. 1000 trials per p.
  auto line = std::make_shared<LineSpace<double>>();
  auto grid = [](double v) { return std::min(1.0, std::ceil(v * 64.0) / 64.0); };
  for (double p : {1.0, 2.0, 3.0}) {
    auto fn = [&line, &grid, p](Rng& rng) {
      auto x = unit_box_measure(line, rng), y = unit_box_measure(line, rng);
      auto x2 = unit_box_measure(line, rng), y2 = unit_box_measure(line, rng);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      double r = u(rng);
      double q1 = grid(wasserstein(x, y, p));
      double q2 = grid(wasserstein(x2, y2, p));
      double e = grid(std::pow(r * std::pow(q1, p) + (1 - r) * std::pow(q2, p),
                               1.0 / p));
      return check_quantitative_inference(x, y, x2, y2, r, q1, q2, e, p);
    };
    auto rep =
        run_law<double>("quantitative-inference", 1000, 702 + (unsigned)p, fn);
    failures += rep.failures;
    worst = std::min(worst, rep.worst_slack);
  }
  detail = "worst slack " + std::to_string(worst);
  return failures == 0 && worst >= -1e-9;
}

// --- 8. Free extension (exact mode) --------------------------------------

bool free_extension_criterion(std::string& detail) {
  InstanceFactory<Rational> f;
  for (int t = 0; t < 100; ++t) {
    std::mt19937_64 rng(mix_seed(801, static_cast<std::uint64_t>(t)));
    auto sp = f.line();
    auto fmap = f.random_nonexpansive_f(sp, rng);
    auto mu = f.random_measure(sp, rng, 4);
    auto nu = f.random_measure(sp, rng, 4);
    unsigned p = 1 + rng() % 2;
    // f-bar composed with delta is f, exactly.
    auto x = f.random_point(*sp, rng);
    if (!(free_extension<Rational>(fmap, dirac(sp, x)) == fmap(x))) {
      detail = "f-bar(delta(x)) != f(x)";
      return false;
    }
    // Affinity, exactly.
    Rational r = f.random_r(rng);
    if (!(free_extension<Rational>(fmap, convex_sum(mu, nu, r)) ==
          convex_sum(free_extension<Rational>(fmap, mu),
                     free_extension<Rational>(fmap, nu), r))) {
      detail = "affinity broken";
      return false;
    }
    // Nonexpansiveness, compared on p-th powers.
    auto lhs = optimal_coupling(free_extension<Rational>(fmap, mu),
                                free_extension<Rational>(fmap, nu), p)
                   .cost_p;
    auto rhs = optimal_coupling(mu, nu, p).cost_p;
    if (lhs > rhs) {
      detail = "free extension expanded distances";
      return false;
    }
  }
  detail = "100 certified maps";
  return true;
}

// --- 9. Dirichlet truncation Cauchy traces ---------------------------------

// Frozen regression goldens: W_p(D_{2,m}, D_{2,2m}) for the default
// schedule, produced by this project's solver (network simplex over the
// truncation supports) and pinned thereafter.
const std::vector<double> kGoldenW1{
    0.0535870906575, 0.0365261799968,  0.021668891273,   0.0118510532923,
    0.00620369405476, 0.00317462019234, 0.00160592213771, 0.000807667363936};
const std::vector<double> kGoldenW2{
    0.30688047937,  0.346373281243, 0.371241650856, 0.385372270933,
    0.392931120819, 0.396843944169, 0.398835045443, 0.399839441503};

bool cauchy_traces(std::string& detail) {
  std::vector<std::size_t> schedule{2, 4, 8, 16, 32, 64, 128, 256};
  auto t1 = cauchy_experiment(2.0, 1.0, schedule);
  auto t2 = cauchy_experiment(2.0, 2.0, schedule);
  std::printf("      p=1 trace:");
  for (double d : t1.distances) std::printf(" %.12g", d);
  std::printf("\n      p=2 trace:");
  for (double d : t2.distances) std::printf(" %.12g", d);
  std::printf("\n");

  bool decays = t1.distances.front() / t1.distances.back() >= 10.0;
  double floor2 = t2.distances.front() / 10.0;
  bool stays_up = *std::min_element(t2.distances.begin(), t2.distances.end()) >
                  floor2;
  bool golden_ok = !kGoldenW1.empty() && !kGoldenW2.empty();
  for (std::size_t i = 0; i < kGoldenW1.size() && golden_ok; ++i)
    if (std::fabs(t1.distances[i] - kGoldenW1[i]) >
        1e-9 * std::max(1.0, kGoldenW1[i]))
      golden_ok = false;
  for (std::size_t i = 0; i < kGoldenW2.size() && golden_ok; ++i)
    if (std::fabs(t2.distances[i] - kGoldenW2[i]) >
        1e-9 * std::max(1.0, kGoldenW2[i]))
      golden_ok = false;
  detail = "p=1 first/last " + std::to_string(t1.distances.front() /
                                              t1.distances.back()) +
           ", p=2 verdict " + t2.verdict + (golden_ok ? "" : ", goldens stale");
  return decays && stays_up && golden_ok && t1.verdict == "cauchy-like" &&
         t2.verdict == "non-cauchy-like";
}

// --- 10. Moment growth across the critical order ---------------------------

bool moment_growth_split(std::string& detail) {
  auto conv = moment_growth(2.0, 1.0, 256);
  double last_inc =
      conv[conv.size() - 1].moment - conv[conv.size() - 2].moment;
  // At p = q the moments grow like the harmonic series, so the factor-3
  // comparison against the m=4 entry needs the table to reach ln-scale
  // depth; 4096 suffices (H_4096 / H_4 > 3), 256 does not.
  auto div = moment_growth(2.0, 2.0, 4096);
  double at4 = 0.0;
  for (const auto& r : div)
    if (r.m == 4) at4 = r.moment;
  detail = "p=1 last increment " + std::to_string(last_inc) +
           ", p=2 growth factor " + std::to_string(div.back().moment / at4);
  return last_inc < 1e-3 && div.back().moment > 3.0 * at4;
}

// --- 11. Dyadic consistency ------------------------------------------------

bool dyadic_consistency(std::string& detail) {
  InstanceFactory<Rational> f;
  for (int t = 0; t < 50; ++t) {
    std::mt19937_64 rng(mix_seed(1101, static_cast<std::uint64_t>(t)));
    auto sp = f.pick_space(rng);
    auto x = f.random_measure(sp, rng, 3);
    auto y = f.random_measure(sp, rng, 3);
    for (unsigned k = 0; k <= 6; ++k) {
      unsigned long den = 1ul << k;
      for (unsigned long num = 0; num <= den; ++num) {
        Rational r(static_cast<long>(num), static_cast<long>(den));
        if (!(dyadic_combination(x, y, num, den) == convex_sum(x, y, r))) {
          detail = "mismatch at " + std::to_string(num) + "/" +
                   std::to_string(den);
          return false;
        }
      }
    }
  }
  detail = "all num/2^k, k <= 6, over 50 pairs";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"Dirac isometry", dirac_isometry},
      {"oracle equivalence (exact mode)", oracle_equivalence},
      {"1-D cross-check", one_d_crosscheck},
      {"metric properties of W_p", metric_properties},
      {"monotonicity in p", monotonicity},
      {"algebra laws", algebra_laws},
      {"Wasserstein condition suite", wasserstein_suite},
      {"free extension", free_extension_criterion},
      {"Dirichlet truncation traces", cauchy_traces},
      {"moment growth", moment_growth_split},
      {"dyadic consistency", dyadic_consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] criterion %zu: %s (%s, %.2f s)\n", ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name.c_str(), detail.c_str(), secs);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
