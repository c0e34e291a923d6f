#ifndef WASSER_TRANSPORT_HPP
#define WASSER_TRANSPORT_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wasser/coupling.hpp"
#include "wasser/measure.hpp"
#include "wasser/simplex.hpp"

namespace wasser {

/// An optimal coupling together with its p-th-power cost and
/// W_p = cost_p^{1/p}.
template <class S>
struct TransportResult {
  Coupling<S> coupling;
  S cost_p;
  double wp;
  order_t<S> p;
};

namespace detail {

template <class S>
TransportProblem<S> build_problem(const DiscreteMeasure<S>& mu,
                                  const DiscreteMeasure<S>& nu, order_t<S> p) {
  if (!same_space(mu.space(), nu.space()))
    throw std::invalid_argument("wasserstein over mismatched spaces");
  num_traits<S>::validate_order(p);
  TransportProblem<S> prob;
  prob.m = mu.size();
  prob.n = nu.size();
  prob.supply = mu.weights();
  prob.demand = nu.weights();
  prob.cost.resize(prob.m * prob.n);
  for (std::size_t i = 0; i < prob.m; ++i)
    for (std::size_t j = 0; j < prob.n; ++j)
      prob.cost[i * prob.n + j] = num_traits<S>::power(
          mu.space().distance(mu.atoms()[i], nu.atoms()[j]), p);
  return prob;
}

template <class S>
TransportResult<S> make_result(const DiscreteMeasure<S>& mu,
                               const DiscreteMeasure<S>& nu, order_t<S> p,
                               std::vector<S> flow, S cost) {
  Coupling<S> gamma(mu, nu, std::move(flow));
  // Clamp float round-off: the optimal cost is nonnegative by
  // construction.
  if (cost < S(0)) cost = S(0);
  double wp = root(cost, p);
  return TransportResult<S>{std::move(gamma), std::move(cost), wp, p};
}

}  // namespace detail

/// Instance-size guards per mode.
inline constexpr std::size_t kMaxAtomsFloat = 10000;
inline constexpr std::size_t kMaxAtomsExact = 1000;

/// Minimises Sum gamma_{st} d(s,t)^p over the transportation polytope
/// via network simplex on the complete bipartite support graph.
template <class S>
TransportResult<S> optimal_coupling(const DiscreteMeasure<S>& mu,
                                    const DiscreteMeasure<S>& nu, order_t<S> p) {
  constexpr std::size_t cap = num_traits<S>::exact ? kMaxAtomsExact : kMaxAtomsFloat;
  if (mu.size() > cap || nu.size() > cap)
    throw std::invalid_argument("instance exceeds support-size cap");
  auto prob = detail::build_problem(mu, nu, p);
  auto plan = solve_transport(prob);
  return detail::make_result(mu, nu, p, std::move(plan.flow),
                             std::move(plan.total_cost));
}

/// W_p(mu, nu) = (min cost)^{1/p}.
template <class S>
double wasserstein(const DiscreteMeasure<S>& mu, const DiscreteMeasure<S>& nu,
                   order_t<S> p) {
  return optimal_coupling(mu, nu, p).wp;
}

/// 1-D fast path via quantile-function matching: integrate
/// |F_mu^{-1} - F_nu^{-1}|^p over the common refinement of cumulative
/// weight breakpoints. Independent of the simplex solver; used as an
/// oracle against it.
template <class S>
S wasserstein_1d_cost(const DiscreteMeasure<S>& mu, const DiscreteMeasure<S>& nu,
                      order_t<S> p) {
  if (!same_space(mu.space(), nu.space()))
    throw std::invalid_argument("wasserstein over mismatched spaces");
  if (!dynamic_cast<const LineSpace<S>*>(&mu.space()))
    throw std::invalid_argument("wasserstein_1d requires the real line");
  num_traits<S>::validate_order(p);
  // Atoms are already sorted ascending (canonical measure order is the
  // scalar order on the line).
  std::size_t i = 0, j = 0;
  S cum_mu(0), cum_nu(0), cost(0), level(0);
  while (i < mu.size() && j < nu.size()) {
    S next_mu = cum_mu + mu.weights()[i];
    S next_nu = cum_nu + nu.weights()[j];
    S next = std::min(next_mu, next_nu);
    S seg = next - level;
    if (seg > S(0)) {
      S gap = num_traits<S>::abs(mu.atoms()[i].scalar() - nu.atoms()[j].scalar());
      cost += seg * num_traits<S>::power(gap, p);
    }
    level = next;
    if (next == next_mu) {
      cum_mu = next_mu;
      ++i;
    }
    if (next == next_nu) {
      cum_nu = next_nu;
      ++j;
    }
  }
  return cost;
}

template <class S>
double wasserstein_1d(const DiscreteMeasure<S>& mu, const DiscreteMeasure<S>& nu,
                      order_t<S> p) {
  return root(wasserstein_1d_cost(mu, nu, p), p);
}

/// Ground-truth solver for tiny instances: enumerates every basic
/// feasible solution of the transportation polytope (spanning-tree
/// supports of the complete bipartite graph) and returns the exact
/// minimiser. Requires |supp(mu)| * |supp(nu)| <= 16.
template <class S>
TransportResult<S> brute_force_oracle(const DiscreteMeasure<S>& mu,
                                      const DiscreteMeasure<S>& nu,
                                      order_t<S> p) {
  const std::size_t m = mu.size(), n = nu.size();
  if (m * n > 16) throw std::invalid_argument("oracle instance too large");
  auto prob = detail::build_problem(mu, nu, p);

  const std::size_t cells = m * n;
  const std::size_t basis_size = m + n - 1;
  std::vector<S> best_flow;
  S best_cost(0);
  bool found = false;

  std::vector<std::size_t> pick(basis_size);
  // Enumerate all cell subsets of size m + n - 1.
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  auto advance = [&]() {
    std::size_t k = basis_size;
    while (k > 0) {
      --k;
      if (pick[k] + (basis_size - k) < cells + 0) {
        ++pick[k];
        for (std::size_t t = k + 1; t < basis_size; ++t) pick[t] = pick[t - 1] + 1;
        return true;
      }
    }
    return false;
  };

  std::vector<int> degree(m + n);
  std::vector<S> rem_supply, rem_demand;
  std::vector<char> used(basis_size);
  do {
    // Acyclic + spanning check via leaf elimination, which also solves
    // the flows uniquely.
    std::fill(degree.begin(), degree.end(), 0);
    for (std::size_t c : pick) {
      ++degree[c / n];
      ++degree[m + c % n];
    }
    bool touches_all = true;
    for (int d : degree)
      if (d == 0) touches_all = false;
    if (!touches_all) continue;

    rem_supply = prob.supply;
    rem_demand = prob.demand;
    std::fill(used.begin(), used.end(), 0);
    std::vector<S> flow(cells, S(0));
    bool feasible = true;
    for (std::size_t step = 0; step < basis_size && feasible; ++step) {
      // Find an unused basis cell incident to a degree-1 node.
      std::size_t chosen = basis_size;
      for (std::size_t k = 0; k < basis_size; ++k) {
        if (used[k]) continue;
        std::size_t i = pick[k] / n, j = pick[k] % n;
        if (degree[i] == 1 || degree[m + j] == 1) {
          chosen = k;
          break;
        }
      }
      if (chosen == basis_size) {
        feasible = false;  // a cycle: not a tree basis
        break;
      }
      std::size_t i = pick[chosen] / n, j = pick[chosen] % n;
      S q = degree[i] == 1 ? rem_supply[i] : rem_demand[j];
      if (q < S(0)) {
        feasible = false;
        break;
      }
      flow[pick[chosen]] = q;
      rem_supply[i] -= q;
      rem_demand[j] -= q;
      used[chosen] = 1;
      --degree[i];
      --degree[m + j];
    }
    if (!feasible) continue;
    for (const S& f : flow)
      if (f < S(0)) feasible = false;
    if (!feasible) continue;
    S cost(0);
    for (std::size_t c = 0; c < cells; ++c)
      if (flow[c] != S(0)) cost += flow[c] * prob.cost[c];
    if (!found || cost < best_cost) {
      found = true;
      best_cost = cost;
      best_flow = std::move(flow);
    }
  } while (advance());

  if (!found) throw std::logic_error("no feasible basis found");
  return detail::make_result(mu, nu, p, std::move(best_flow),
                             std::move(best_cost));
}

}  // namespace wasser

#endif
