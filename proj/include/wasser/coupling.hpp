#ifndef WASSER_COUPLING_HPP
#define WASSER_COUPLING_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wasser/measure.hpp"

namespace wasser {

/// A joint weight matrix over supp(mu) x supp(nu) whose row sums are
/// mu's weights and column sums are nu's weights. Marginal feasibility
/// is validated at construction (exact, or within 1e-10 in float mode).
template <class S>
class Coupling {
 public:
  Coupling(DiscreteMeasure<S> row_measure, DiscreteMeasure<S> col_measure,
           std::vector<S> matrix)
      : row_(std::move(row_measure)),
        col_(std::move(col_measure)),
        w_(std::move(matrix)) {
    if (!same_space(row_.space(), col_.space()))
      throw std::invalid_argument("coupling over mismatched spaces");
    const std::size_t m = row_.size(), n = col_.size();
    if (w_.size() != m * n)
      throw std::invalid_argument("coupling matrix has wrong shape");
    const double tol = num_traits<S>::exact ? 0.0 : 1e-10;
    for (const S& x : w_)
      if (x < S(0)) throw std::invalid_argument("negative coupling entry");
    for (std::size_t i = 0; i < m; ++i) {
      S rs(0);
      for (std::size_t j = 0; j < n; ++j) rs += at(i, j);
      if (to_double(num_traits<S>::abs(rs - row_.weights()[i])) > tol)
        throw std::invalid_argument("row marginal mismatch at row " +
                                    std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      S cs(0);
      for (std::size_t i = 0; i < m; ++i) cs += at(i, j);
      if (to_double(num_traits<S>::abs(cs - col_.weights()[j])) > tol)
        throw std::invalid_argument("column marginal mismatch at column " +
                                    std::to_string(j));
    }
  }

  const DiscreteMeasure<S>& row_measure() const { return row_; }
  const DiscreteMeasure<S>& col_measure() const { return col_; }
  std::size_t rows() const { return row_.size(); }
  std::size_t cols() const { return col_.size(); }
  const S& at(std::size_t i, std::size_t j) const { return w_[i * cols() + j]; }
  const std::vector<S>& matrix() const { return w_; }

  /// Sum_{s,t} gamma(s,t) d(s,t)^p.
  S cost_p(order_t<S> p) const {
    S acc(0);
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (at(i, j) != S(0))
          acc += at(i, j) * num_traits<S>::power(
                                row_.space().distance(row_.atoms()[i],
                                                      col_.atoms()[j]),
                                p);
    return acc;
  }

  /// The independent coupling mu (x) nu.
  static Coupling product(const DiscreteMeasure<S>& mu,
                          const DiscreteMeasure<S>& nu) {
    std::vector<S> w(mu.size() * nu.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (std::size_t j = 0; j < nu.size(); ++j)
        w[i * nu.size() + j] = mu.weights()[i] * nu.weights()[j];
    return Coupling(mu, nu, std::move(w));
  }

  /// Delta_* mu, the diagonal coupling between mu and itself.
  static Coupling diagonal(const DiscreteMeasure<S>& mu) {
    std::vector<S> w(mu.size() * mu.size(), S(0));
    for (std::size_t i = 0; i < mu.size(); ++i)
      w[i * mu.size() + i] = mu.weights()[i];
    return Coupling(mu, mu, std::move(w));
  }

 private:
  DiscreteMeasure<S> row_;
  DiscreteMeasure<S> col_;
  std::vector<S> w_;  // rows x cols, row-major
};

/// Row/column sums reconstituted as measures (the pushforwards along
/// the projections).
template <class S>
std::pair<DiscreteMeasure<S>, DiscreteMeasure<S>> marginals(
    const Coupling<S>& gamma) {
  std::vector<S> rs(gamma.rows(), S(0)), cs(gamma.cols(), S(0));
  for (std::size_t i = 0; i < gamma.rows(); ++i)
    for (std::size_t j = 0; j < gamma.cols(); ++j) {
      rs[i] += gamma.at(i, j);
      cs[j] += gamma.at(i, j);
    }
  return {DiscreteMeasure<S>(gamma.row_measure().space_ptr(),
                             gamma.row_measure().atoms(), std::move(rs)),
          DiscreteMeasure<S>(gamma.col_measure().space_ptr(),
                             gamma.col_measure().atoms(), std::move(cs))};
}

/// alpha +_r beta, a coupling between the +_r mixtures of the inputs'
/// marginals. Its cost satisfies
/// cost_p(alpha +_r beta) = r cost_p(alpha) + (1-r) cost_p(beta).
template <class S>
Coupling<S> coupling_convex_sum(const Coupling<S>& alpha, const Coupling<S>& beta,
                                const S& r) {
  if (!same_space(alpha.row_measure().space(), beta.row_measure().space()))
    throw std::invalid_argument("coupling_convex_sum over mismatched spaces");
  if (r < S(0) || r > S(1)) throw std::invalid_argument("r outside [0,1]");
  if (r == S(1)) return alpha;
  if (r == S(0)) return beta;
  DiscreteMeasure<S> row =
      convex_sum(alpha.row_measure(), beta.row_measure(), r);
  DiscreteMeasure<S> col =
      convex_sum(alpha.col_measure(), beta.col_measure(), r);
  // Accumulate entries on the coalesced joint support.
  std::map<std::pair<Point<S>, Point<S>>, S> cells;
  auto add = [&](const Coupling<S>& g, const S& scale) {
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j)
        if (g.at(i, j) != S(0))
          cells[{g.row_measure().atoms()[i], g.col_measure().atoms()[j]}] +=
              scale * g.at(i, j);
  };
  add(alpha, r);
  add(beta, S(1) - r);
  auto find_index = [](const std::vector<Point<S>>& atoms, const Point<S>& x) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), x);
    return static_cast<std::size_t>(it - atoms.begin());
  };
  std::vector<S> w(row.size() * col.size(), S(0));
  for (const auto& [st, v] : cells)
    w[find_index(row.atoms(), st.first) * col.size() +
      find_index(col.atoms(), st.second)] += v;
  return Coupling<S>(std::move(row), std::move(col), std::move(w));
}

}  // namespace wasser

#endif
