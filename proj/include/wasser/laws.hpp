#ifndef WASSER_LAWS_HPP
#define WASSER_LAWS_HPP

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wasser/measure.hpp"
#include "wasser/report.hpp"
#include "wasser/transport.hpp"

namespace wasser {

// The checks below exercise the measure carrier: d is W_p, +_r is the
// pointwise convex sum. Inequalities stated on p-th powers are checked
// on p-th powers, so exact mode needs no roots.

namespace detail {

template <class S>
S wp_cost(const DiscreteMeasure<S>& a, const DiscreteMeasure<S>& b,
          order_t<S> p) {
  return optimal_coupling(a, b, p).cost_p;
}

template <class S>
TrialOutcome power_slack(const S& lhs_p, const S& rhs_p, std::string witness) {
  TrialOutcome out;
  S slack = rhs_p - lhs_p;
  out.slack = to_double(slack);
  out.violated = num_traits<S>::exact ? slack < S(0)
                                      : out.slack < -num_traits<S>::ineq_tol;
  out.witness = std::move(witness);
  return out;
}

}  // namespace detail

/// Condition (*): d(x +_r y, x' +_r y')^p <= r d(x,x')^p + (1-r) d(y,y')^p.
template <class S>
TrialOutcome check_wasserstein_condition(const DiscreteMeasure<S>& x,
                                         const DiscreteMeasure<S>& x2,
                                         const DiscreteMeasure<S>& y,
                                         const DiscreteMeasure<S>& y2, const S& r,
                                         order_t<S> p) {
  S lhs = detail::wp_cost(convex_sum(x, y, r), convex_sum(x2, y2, r), p);
  S rhs = r * detail::wp_cost(x, x2, p) + (S(1) - r) * detail::wp_cost(y, y2, p);
  std::ostringstream w;
  w << "(*) r=" << to_double(r) << " p=" << static_cast<double>(p);
  return detail::power_slack(lhs, rhs, w.str());
}

/// Modulus bounds: +_r is r^{1/p}-Lipschitz in its first argument and
/// (1-r)^{1/p}-Lipschitz in its second. Checked as
/// d(x +_r y, x' +_r y)^p <= r d(x,x')^p (and symmetrically).
template <class S>
TrialOutcome check_lipschitz_in_args(const DiscreteMeasure<S>& x,
                                     const DiscreteMeasure<S>& x2,
                                     const DiscreteMeasure<S>& y, const S& r,
                                     order_t<S> p) {
  S lhs1 = detail::wp_cost(convex_sum(x, y, r), convex_sum(x2, y, r), p);
  S rhs1 = r * detail::wp_cost(x, x2, p);
  S lhs2 = detail::wp_cost(convex_sum(y, x, r), convex_sum(y, x2, r), p);
  S rhs2 = (S(1) - r) * detail::wp_cost(x, x2, p);
  auto o1 = detail::power_slack(lhs1, rhs1, "lipschitz-first");
  auto o2 = detail::power_slack(lhs2, rhs2, "lipschitz-second");
  return o1.slack <= o2.slack ? o1 : o2;
}

/// d(x +_r y, x +_s y) <= d(x,y) |r - s|^{1/p}, checked as
/// d(x +_r y, x +_s y)^p <= d(x,y)^p |r - s|.
template <class S>
TrialOutcome check_holder_in_r(const DiscreteMeasure<S>& x,
                               const DiscreteMeasure<S>& y, const S& r,
                               const S& s, order_t<S> p) {
  S lhs = detail::wp_cost(convex_sum(x, y, r), convex_sum(x, y, s), p);
  S rhs = detail::wp_cost(x, y, p) * num_traits<S>::abs(r - s);
  std::ostringstream w;
  w << "holder r=" << to_double(r) << " s=" << to_double(s);
  return detail::power_slack(lhs, rhs, w.str());
}

/// d(Sum r_i x_i, Sum r_i x'_i)^p <= Sum r_i d(x_i, x'_i)^p.
template <class S>
TrialOutcome check_generalized_condition(
    const std::vector<std::tuple<S, DiscreteMeasure<S>, DiscreteMeasure<S>>>&
        terms,
    order_t<S> p) {
  std::vector<std::pair<S, DiscreteMeasure<S>>> lhs_terms, rhs_terms;
  S rhs(0);
  for (const auto& [r, xi, xi2] : terms) {
    lhs_terms.emplace_back(r, xi);
    rhs_terms.emplace_back(r, xi2);
    if (r != S(0)) rhs += r * detail::wp_cost(xi, xi2, p);
  }
  S lhs = detail::wp_cost(finite_convex_sum(lhs_terms),
                          finite_convex_sum(rhs_terms), p);
  return detail::power_slack(lhs, rhs,
                             "generalized n=" + std::to_string(terms.size()));
}

/// f-bar(mu) = Sum_{s in supp(mu)} mu(s) f(s): the unique affine
/// extension of f along the Dirac embedding.
template <class S>
DiscreteMeasure<S> free_extension(
    const std::function<DiscreteMeasure<S>(const Point<S>&)>& f,
    const DiscreteMeasure<S>& mu) {
  std::vector<std::pair<S, DiscreteMeasure<S>>> terms;
  terms.reserve(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    terms.emplace_back(mu.weights()[i], f(mu.atoms()[i]));
  return finite_convex_sum(terms);
}

/// x (+) y = x +_{1/2} y.
template <class S>
DiscreteMeasure<S> midpoint(const DiscreteMeasure<S>& x,
                            const DiscreteMeasure<S>& y) {
  return convex_sum(x, y, S(1) / S(2));
}

/// x +_{num/2^k} y built by recursive midpointing only. Equals
/// convex_sum(x, y, num/2^k) exactly in exact mode.
template <class S>
DiscreteMeasure<S> dyadic_combination(const DiscreteMeasure<S>& x,
                                      const DiscreteMeasure<S>& y,
                                      unsigned long num, unsigned long den) {
  if (den == 0 || (den & (den - 1)) != 0)
    throw std::invalid_argument("denominator must be a power of two");
  if (num > den) throw std::invalid_argument("num/den outside [0,1]");
  if (num == den) return x;
  if (num == 0) return y;
  // num/den = ((num+1)/2 + num/2) / den: midpoint of the two halves.
  unsigned long hi = (num + 1) / 2, lo = num / 2;
  return midpoint(dyadic_combination(x, y, hi, den / 2),
                  dyadic_combination(x, y, lo, den / 2));
}

/// Soundness of one instance of the inference scheme
///   x =_{q1} y, x' =_{q2} y' |- x +_r x' =_e y +_r y'
/// for rationals with r q1^p + (1-r) q2^p <= e^p: if the premises hold,
/// the conclusion must. Vacuous instances (failed premises) pass.
template <class S>
TrialOutcome check_quantitative_inference(
    const DiscreteMeasure<S>& x, const DiscreteMeasure<S>& y,
    const DiscreteMeasure<S>& x2, const DiscreteMeasure<S>& y2, const S& r,
    const S& q1, const S& q2, const S& e, order_t<S> p) {
  if (q1 < S(0) || q1 > S(1) || q2 < S(0) || q2 > S(1) || e < S(0) || e > S(1))
    throw std::invalid_argument("q1, q2, e must lie in [0,1]");
  S side = r * num_traits<S>::power(q1, p) +
           (S(1) - r) * num_traits<S>::power(q2, p);
  if (side > num_traits<S>::power(e, p))
    throw std::invalid_argument("ill-formed axiom instance: r q1^p + (1-r) q2^p > e^p");
  bool premise1 = !(detail::wp_cost(x, y, p) > num_traits<S>::power(q1, p));
  bool premise2 = !(detail::wp_cost(x2, y2, p) > num_traits<S>::power(q2, p));
  if (!premise1 || !premise2) {
    TrialOutcome out;
    out.witness = "vacuous (premise failed)";
    return out;
  }
  S lhs = detail::wp_cost(convex_sum(x, x2, r), convex_sum(y, y2, r), p);
  return detail::power_slack(lhs, num_traits<S>::power(e, p),
                             "quantitative-inference");
}

}  // namespace wasser

#endif
