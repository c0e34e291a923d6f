#ifndef WASSER_MEASURE_HPP
#define WASSER_MEASURE_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wasser/metric.hpp"
#include "wasser/numeric.hpp"
#include "wasser/point.hpp"

namespace wasser {

/// A finitely supported probability measure: distinct atoms with strictly
/// positive weights summing to 1. Atoms are kept in canonical sorted
/// order; coinciding atoms are coalesced by summing weights and
/// zero-weight atoms are pruned. Immutable value type.
template <class S>
class DiscreteMeasure {
 public:
  DiscreteMeasure(SpacePtr<S> space, std::vector<Point<S>> atoms,
                  std::vector<S> weights)
      : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("measure needs a space");
    if (atoms.size() != weights.size())
      throw std::invalid_argument("atoms/weights length mismatch");
    if (atoms.empty()) throw std::invalid_argument("measure needs >= 1 atom");
    for (const auto& a : atoms)
      if (!space_->contains(a))
        throw std::invalid_argument("atom " + a.str() + " not in space " +
                                    space_->name());
    // Canonical order, then coalesce equal atoms.
    std::vector<std::size_t> idx(atoms.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return atoms[i] < atoms[j]; });
    for (std::size_t k : idx) {
      if (weights[k] < S(0))
        throw std::invalid_argument("negative weight");
      if (!atoms_.empty() && atoms_.back() == atoms[k]) {
        weights_.back() += weights[k];
      } else {
        atoms_.push_back(std::move(atoms[k]));
        weights_.push_back(weights[k]);
      }
    }
    // Prune zero weights.
    std::size_t w = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (weights_[i] == S(0)) continue;
      if (w != i) {
        atoms_[w] = std::move(atoms_[i]);
        weights_[w] = weights_[i];
      }
      ++w;
    }
    atoms_.resize(w);
    weights_.resize(w);
    if (atoms_.empty()) throw std::invalid_argument("measure has no mass");

    S total = std::accumulate(weights_.begin(), weights_.end(), S(0));
    if constexpr (num_traits<S>::exact) {
      if (total != S(1))
        throw std::invalid_argument("weights must sum to 1 exactly in exact mode");
    } else {
      if (std::fabs(total - 1.0) > 1e-12)
        throw std::invalid_argument("weights sum to " + std::to_string(total) +
                                    ", not 1");
      if (total != 1.0)
        for (S& x : weights_) x /= total;
    }
  }

  static DiscreteMeasure dirac(SpacePtr<S> space, Point<S> x) {
    return DiscreteMeasure(std::move(space), {std::move(x)}, {S(1)});
  }

  const MetricSpace<S>& space() const { return *space_; }
  const SpacePtr<S>& space_ptr() const { return space_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Point<S>>& atoms() const { return atoms_; }
  const std::vector<S>& weights() const { return weights_; }

  /// supp(mu): exactly the atom set.
  const std::vector<Point<S>>& support() const { return atoms_; }

  /// mu({x}); zero off the support.
  S mass_at(const Point<S>& x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x);
    if (it != atoms_.end() && *it == x)
      return weights_[static_cast<std::size_t>(it - atoms_.begin())];
    return S(0);
  }

  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    return same_space(*a.space_, *b.space_) && a.atoms_ == b.atoms_ &&
           a.weights_ == b.weights_;
  }
  friend bool operator!=(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    return !(a == b);
  }

 private:
  SpacePtr<S> space_;
  std::vector<Point<S>> atoms_;
  std::vector<S> weights_;
};

/// Same atoms and atom-wise weight gap <= tol (exact equality at tol 0).
template <class S>
bool approx_equal(const DiscreteMeasure<S>& a, const DiscreteMeasure<S>& b,
                  double tol) {
  if (!same_space(a.space(), b.space())) return false;
  if (a.atoms() != b.atoms()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (to_double(num_traits<S>::abs(a.weights()[i] - b.weights()[i])) > tol)
      return false;
  return true;
}

/// Largest atom-wise weight gap between two measures over the union of
/// their supports (atoms missing on one side count with weight 0).
template <class S>
double measure_gap(const DiscreteMeasure<S>& a, const DiscreteMeasure<S>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    gap = std::max(gap, to_double(num_traits<S>::abs(
                            a.weights()[i] - b.mass_at(a.atoms()[i]))));
  for (std::size_t i = 0; i < b.size(); ++i)
    gap = std::max(gap, to_double(num_traits<S>::abs(
                            b.weights()[i] - a.mass_at(b.atoms()[i]))));
  return gap;
}

template <class S>
DiscreteMeasure<S> dirac(SpacePtr<S> space, Point<S> x) {
  return DiscreteMeasure<S>::dirac(std::move(space), std::move(x));
}

/// mu +_r nu: (mu +_r nu)(B) = r mu(B) + (1-r) nu(B).
/// The endpoints short-circuit, so B1 (x +_1 y = x) holds exactly in
/// both modes.
template <class S>
DiscreteMeasure<S> convex_sum(const DiscreteMeasure<S>& mu,
                              const DiscreteMeasure<S>& nu, const S& r) {
  if (!same_space(mu.space(), nu.space()))
    throw std::invalid_argument("convex_sum over mismatched spaces");
  if (r < S(0) || r > S(1)) throw std::invalid_argument("r outside [0,1]");
  if (r == S(1)) return mu;
  if (r == S(0)) return nu;
  std::vector<Point<S>> atoms;
  std::vector<S> weights;
  atoms.reserve(mu.size() + nu.size());
  weights.reserve(mu.size() + nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    atoms.push_back(mu.atoms()[i]);
    weights.push_back(r * mu.weights()[i]);
  }
  S s = S(1) - r;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    atoms.push_back(nu.atoms()[i]);
    weights.push_back(s * nu.weights()[i]);
  }
  return DiscreteMeasure<S>(mu.space_ptr(), std::move(atoms), std::move(weights));
}

/// Sum_i r_i mu_i as the direct atom-wise mixture. Agrees with the
/// inductive right-fold x_1 +_{r_1} (Sum_{i>=2} r_i/(1-r_1) x_i), which
/// the tests check.
template <class S>
DiscreteMeasure<S> finite_convex_sum(
    const std::vector<std::pair<S, DiscreteMeasure<S>>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty convex sum");
  S total(0);
  for (const auto& [r, m] : terms) {
    if (r < S(0)) throw std::invalid_argument("negative weight in convex sum");
    if (!same_space(terms.front().second.space(), m.space()))
      throw std::invalid_argument("convex sum over mismatched spaces");
    total += r;
  }
  if constexpr (num_traits<S>::exact) {
    if (total != S(1)) throw std::invalid_argument("weights must sum to 1");
  } else {
    if (std::fabs(total - 1.0) > 1e-12)
      throw std::invalid_argument("weights must sum to 1");
  }
  std::vector<Point<S>> atoms;
  std::vector<S> weights;
  for (const auto& [r, m] : terms) {
    if (r == S(0)) continue;
    for (std::size_t i = 0; i < m.size(); ++i) {
      atoms.push_back(m.atoms()[i]);
      weights.push_back(r * m.weights()[i]);
    }
  }
  return DiscreteMeasure<S>(terms.front().second.space_ptr(), std::move(atoms),
                            std::move(weights));
}

/// Pushforward f_* mu into a target space; image atoms coalesce, total
/// mass is preserved.
template <class S>
DiscreteMeasure<S> pushforward(
    const DiscreteMeasure<S>& mu, SpacePtr<S> target,
    const std::function<Point<S>(const Point<S>&)>& f) {
  std::vector<Point<S>> atoms;
  atoms.reserve(mu.size());
  for (const auto& a : mu.atoms()) atoms.push_back(f(a));
  return DiscreteMeasure<S>(std::move(target), std::move(atoms), mu.weights());
}

template <class S>
struct MomentValue {
  order_t<S> p;
  Point<S> basepoint;
  S value;
};

/// Integral of d(x0, -)^p against mu; finite for finite support.
template <class S>
MomentValue<S> p_moment(const DiscreteMeasure<S>& mu, const Point<S>& x0,
                        order_t<S> p) {
  num_traits<S>::validate_order(p);
  S acc(0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    acc += mu.weights()[i] *
           num_traits<S>::power(mu.space().distance(x0, mu.atoms()[i]), p);
  return MomentValue<S>{p, x0, acc};
}

}  // namespace wasser

#endif
