#ifndef WASSER_SIMPLEX_HPP
#define WASSER_SIMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wasser/numeric.hpp"

namespace wasser {

/// A balanced transportation problem: m supplies, n demands, m*n costs
/// (row-major). Supplies and demands are positive and sum to the same
/// total.
template <class S>
struct TransportProblem {
  std::size_t m = 0, n = 0;
  std::vector<S> supply;
  std::vector<S> demand;
  std::vector<S> cost;
};

template <class S>
struct TransportPlan {
  std::vector<S> flow;  // m*n, row-major
  S total_cost = S(0);
};

/// Transportation (network) simplex over the complete bipartite graph.
///
/// Pivot rule: Dantzig (most negative reduced cost, smallest cell index
/// on ties) with a Bland fallback after an iteration budget, so the
/// solver is deterministic and cannot cycle on degenerate bases. The
/// leaving arc is the smallest-index minimiser of the ratio test.
template <class S>
class TransportSimplex {
 public:
  explicit TransportSimplex(const TransportProblem<S>& prob) : p_(prob) {
    if (p_.m == 0 || p_.n == 0) throw std::invalid_argument("empty problem");
    if (p_.supply.size() != p_.m || p_.demand.size() != p_.n ||
        p_.cost.size() != p_.m * p_.n)
      throw std::invalid_argument("transport problem shape mismatch");
  }

  TransportPlan<S> solve() {
    init_northwest();
    const std::size_t bland_after = 64 * (p_.m + p_.n) + 256;
    const std::size_t max_iter =
        1000 * (p_.m + p_.n) * (p_.m + p_.n) + 100000;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      compute_potentials();
      std::size_t enter = find_entering(iter >= bland_after);
      if (enter == npos) {
        TransportPlan<S> plan;
        plan.flow = flow_;
        for (std::size_t c = 0; c < flow_.size(); ++c)
          if (flow_[c] != S(0)) plan.total_cost += flow_[c] * p_.cost[c];
        return plan;
      }
      pivot(enter);
    }
    throw std::logic_error("transport simplex failed to converge");
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t cell(std::size_t i, std::size_t j) const { return i * p_.n + j; }

  void init_northwest() {
    flow_.assign(p_.m * p_.n, S(0));
    basic_.assign(p_.m * p_.n, false);
    std::vector<S> a = p_.supply, b = p_.demand;
    std::size_t i = 0, j = 0;
    while (i < p_.m && j < p_.n) {
      S q = std::min(a[i], b[j]);
      flow_[cell(i, j)] = q;
      basic_[cell(i, j)] = true;
      a[i] -= q;
      b[j] -= q;
      if (a[i] == S(0) && i + 1 < p_.m)
        ++i;
      else
        ++j;
    }
  }

  // Dual potentials from the spanning-tree basis: u_0 = 0, then
  // u_i + v_j = c_ij along basic cells.
  void compute_potentials() {
    const std::size_t m = p_.m, n = p_.n;
    u_.assign(m, S(0));
    v_.assign(n, S(0));
    std::vector<char> row_done(m, 0), col_done(n, 0);
    std::vector<std::vector<std::size_t>> row_basics(m), col_basics(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (basic_[cell(i, j)]) {
          row_basics[i].push_back(j);
          col_basics[j].push_back(i);
        }
    std::vector<std::size_t> stack;
    row_done[0] = 1;
    stack.push_back(0);  // encoded: rows are k, cols are m + k
    while (!stack.empty()) {
      std::size_t node = stack.back();
      stack.pop_back();
      if (node < m) {
        for (std::size_t j : row_basics[node])
          if (!col_done[j]) {
            v_[j] = p_.cost[cell(node, j)] - u_[node];
            col_done[j] = 1;
            stack.push_back(m + j);
          }
      } else {
        std::size_t j = node - m;
        for (std::size_t i : col_basics[j])
          if (!row_done[i]) {
            u_[i] = p_.cost[cell(i, j)] - v_[j];
            row_done[i] = 1;
            stack.push_back(i);
          }
      }
    }
  }

  std::size_t find_entering(bool bland) const {
    S eps = entering_eps();
    std::size_t best = npos;
    S best_red(0);
    for (std::size_t i = 0; i < p_.m; ++i)
      for (std::size_t j = 0; j < p_.n; ++j) {
        std::size_t c = cell(i, j);
        if (basic_[c]) continue;
        S red = p_.cost[c] - u_[i] - v_[j];
        if (red < -eps) {
          if (bland) return c;
          if (best == npos || red < best_red) {
            best = c;
            best_red = red;
          }
        }
      }
    return best;
  }

  S entering_eps() const {
    if constexpr (num_traits<S>::exact) {
      return S(0);
    } else {
      S scale(0);
      for (const S& c : p_.cost) scale = std::max(scale, std::fabs(c));
      return 1e-13 * (scale + 1.0);
    }
  }

  // Unique cycle created by the entering cell: the tree path from its
  // row to its column, closed by the cell itself. Flow alternates
  // +theta / -theta around the cycle.
  void pivot(std::size_t enter) {
    const std::size_t m = p_.m, n = p_.n;
    const std::size_t ei = enter / n, ej = enter % n;
    // BFS over the basis tree from row node ei to column node m + ej.
    std::vector<std::size_t> parent(m + n, npos), via(m + n, npos);
    std::vector<char> seen(m + n, 0);
    std::vector<std::size_t> queue{ei};
    seen[ei] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t node = queue[head];
      if (node == m + ej) break;
      if (node < m) {
        for (std::size_t j = 0; j < n; ++j)
          if (basic_[cell(node, j)] && !seen[m + j]) {
            seen[m + j] = 1;
            parent[m + j] = node;
            via[m + j] = cell(node, j);
            queue.push_back(m + j);
          }
      } else {
        std::size_t jj = node - m;
        for (std::size_t i = 0; i < m; ++i)
          if (basic_[cell(i, jj)] && !seen[i]) {
            seen[i] = 1;
            parent[i] = node;
            via[i] = cell(i, jj);
            queue.push_back(i);
          }
      }
    }
    if (!seen[m + ej]) throw std::logic_error("basis is not a spanning tree");
    // Walk back from the column node, collecting the cycle's cells.
    // Position 0 is the entering cell (+), signs alternate from there.
    std::vector<std::size_t> cycle{enter};
    for (std::size_t node = m + ej; node != ei; node = parent[node])
      cycle.push_back(via[node]);
    // theta = min flow over the minus cells (odd positions).
    std::size_t leave = npos;
    S theta(0);
    for (std::size_t k = 1; k < cycle.size(); k += 2) {
      if (leave == npos || flow_[cycle[k]] < theta ||
          (flow_[cycle[k]] == theta && cycle[k] < leave)) {
        theta = flow_[cycle[k]];
        leave = cycle[k];
      }
    }
    if (leave == npos) throw std::logic_error("degenerate pivot cycle");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k % 2 == 0)
        flow_[cycle[k]] += theta;
      else
        flow_[cycle[k]] -= theta;
    }
    flow_[leave] = S(0);
    basic_[leave] = false;
    basic_[enter] = true;
  }

  const TransportProblem<S>& p_;
  std::vector<S> flow_;
  std::vector<char> basic_;
  std::vector<S> u_, v_;
};

template <class S>
TransportPlan<S> solve_transport(const TransportProblem<S>& prob) {
  return TransportSimplex<S>(prob).solve();
}

}  // namespace wasser

#endif
