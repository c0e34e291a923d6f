#ifndef WASSER_METRIC_HPP
#define WASSER_METRIC_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wasser/numeric.hpp"
#include "wasser/point.hpp"
#include "wasser/report.hpp"

namespace wasser {

/// A metric space: a point universe plus a distance oracle.
/// Immutable after construction; safe to share across threads.
template <class S>
class MetricSpace {
 public:
  virtual ~MetricSpace() = default;

  /// d(x, y). Throws std::out_of_range / std::invalid_argument when a
  /// point does not belong to the universe.
  virtual S distance(const Point<S>& x, const Point<S>& y) const = 0;

  virtual bool contains(const Point<S>& x) const = 0;
  virtual std::string name() const = 0;

  /// Structural equality, used to decide whether two measures live over
  /// "the same" space even when loaded from separate files.
  virtual bool equals(const MetricSpace<S>& other) const = 0;

 protected:
  void require(const Point<S>& x) const {
    if (!contains(x))
      throw std::invalid_argument("point " + x.str() + " not in space " + name());
  }
};

template <class S>
using SpacePtr = std::shared_ptr<const MetricSpace<S>>;

template <class S>
bool same_space(const MetricSpace<S>& a, const MetricSpace<S>& b) {
  return &a == &b || a.equals(b);
}

/// The real line with d(x, y) = |x - y|.
template <class S>
class LineSpace final : public MetricSpace<S> {
 public:
  S distance(const Point<S>& x, const Point<S>& y) const override {
    this->require(x);
    this->require(y);
    return num_traits<S>::abs(x.scalar() - y.scalar());
  }

  bool contains(const Point<S>& x) const override {
    if (!x.is_scalar()) return false;
    if constexpr (!num_traits<S>::exact) return std::isfinite(x.scalar());
    return true;
  }

  std::string name() const override { return "line"; }

  bool equals(const MetricSpace<S>& other) const override {
    return dynamic_cast<const LineSpace<S>*>(&other) != nullptr;
  }
};

/// R^n with the Euclidean metric. Float mode only: distances need roots.
template <class S>
class EuclideanSpace final : public MetricSpace<S> {
  static_assert(!num_traits<S>::exact,
                "Euclidean distances are irrational; use float mode");

 public:
  explicit EuclideanSpace(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("Euclidean dimension must be > 0");
  }

  std::size_t dim() const { return dim_; }

  S distance(const Point<S>& x, const Point<S>& y) const override {
    this->require(x);
    this->require(y);
    const auto& a = x.coords();
    const auto& b = y.coords();
    S acc(0);
    for (std::size_t i = 0; i < dim_; ++i) {
      S d = a[i] - b[i];
      acc += d * d;
    }
    return std::sqrt(acc);
  }

  bool contains(const Point<S>& x) const override {
    if (!x.is_vector() || x.coords().size() != dim_) return false;
    for (const S& c : x.coords())
      if (!std::isfinite(c)) return false;
    return true;
  }

  std::string name() const override { return "R^" + std::to_string(dim_); }

  bool equals(const MetricSpace<S>& other) const override {
    auto* e = dynamic_cast<const EuclideanSpace<S>*>(&other);
    return e && e->dim_ == dim_;
  }

 private:
  std::size_t dim_;
};

/// A finite space given by an explicit n x n distance matrix. The metric
/// axioms are checked exhaustively at construction; infinite entries are
/// rejected.
template <class S>
class MatrixSpace final : public MetricSpace<S> {
 public:
  explicit MatrixSpace(std::vector<std::vector<S>> entries)
      : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n == 0) throw std::invalid_argument("matrix space needs >= 1 point");
    for (const auto& row : entries_)
      if (row.size() != n) throw std::invalid_argument("distance matrix not square");
    const S tol = eq_tolerance();
    for (std::size_t i = 0; i < n; ++i) {
      if (num_traits<S>::abs(entries_[i][i]) > tol)
        throw std::invalid_argument("distance matrix has nonzero diagonal");
      entries_[i][i] = S(0);
      for (std::size_t j = 0; j < n; ++j) {
        if constexpr (!num_traits<S>::exact) {
          if (!std::isfinite(entries_[i][j]))
            throw std::invalid_argument("infinite distance rejected");
        }
        if (entries_[i][j] < S(0))
          throw std::invalid_argument("negative distance entry");
        if (num_traits<S>::abs(entries_[i][j] - entries_[j][i]) > tol)
          throw std::invalid_argument("distance matrix not symmetric");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (entries_[i][j] > entries_[i][k] + entries_[k][j] + tol)
            throw std::invalid_argument("triangle inequality violated at (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
  }

  std::size_t size() const { return entries_.size(); }

  S distance(const Point<S>& x, const Point<S>& y) const override {
    if (!contains(x) || !contains(y))
      throw std::out_of_range("index outside matrix space of size " +
                              std::to_string(size()));
    return entries_[x.index()][y.index()];
  }

  bool contains(const Point<S>& x) const override {
    return x.is_index() && x.index() < entries_.size();
  }

  std::string name() const override {
    return "matrix[" + std::to_string(size()) + "]";
  }

  bool equals(const MetricSpace<S>& other) const override {
    auto* m = dynamic_cast<const MatrixSpace<S>*>(&other);
    return m && m->entries_ == entries_;
  }

  const std::vector<std::vector<S>>& entries() const { return entries_; }

 private:
  static S eq_tolerance() {
    if constexpr (num_traits<S>::exact) return S(0);
    else return num_traits<S>::eq_tol;
  }

  std::vector<std::vector<S>> entries_;
};

/// Binary product with the max metric:
/// d((a,b), (a',b')) = max{d_A(a,a'), d_B(b,b')}.
template <class S>
class ProductSpace final : public MetricSpace<S> {
 public:
  ProductSpace(SpacePtr<S> a, SpacePtr<S> b) : a_(std::move(a)), b_(std::move(b)) {
    if (!a_ || !b_) throw std::invalid_argument("null component space");
  }

  S distance(const Point<S>& x, const Point<S>& y) const override {
    this->require(x);
    this->require(y);
    S da = a_->distance(x.tuple()[0], y.tuple()[0]);
    S db = b_->distance(x.tuple()[1], y.tuple()[1]);
    return std::max(da, db);
  }

  bool contains(const Point<S>& x) const override {
    return x.is_tuple() && x.tuple().size() == 2 && a_->contains(x.tuple()[0]) &&
           b_->contains(x.tuple()[1]);
  }

  std::string name() const override { return a_->name() + " x " + b_->name(); }

  bool equals(const MetricSpace<S>& other) const override {
    auto* p = dynamic_cast<const ProductSpace<S>*>(&other);
    return p && p->a_->equals(*a_) && p->b_->equals(*b_);
  }

  static Point<S> pair(Point<S> a, Point<S> b) {
    typename Point<S>::Tuple t;
    t.push_back(std::move(a));
    t.push_back(std::move(b));
    return Point<S>(std::move(t));
  }

 private:
  SpacePtr<S> a_, b_;
};

/// max{d_A(a,a'), d_B(b,b')} without materialising the product space.
template <class S>
S product_distance(const MetricSpace<S>& space_a, const MetricSpace<S>& space_b,
                   const Point<S>& a, const Point<S>& b, const Point<S>& a2,
                   const Point<S>& b2) {
  return std::max(space_a.distance(a, a2), space_b.distance(b, b2));
}

/// Checks the metric axioms over a point sample: zero self-distance,
/// symmetry over pairs, triangle inequality over triples. Reports the
/// worst slack seen (negative = violation).
template <class S>
LawReport check_metric_axioms(const MetricSpace<S>& space,
                              const std::vector<Point<S>>& sample,
                              double tol = num_traits<S>::exact ? 0.0 : 1e-9) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  LawReport rep;
  rep.law = "metric-axioms";
  auto record = [&](double slack, const std::string& what) {
    ++rep.trials;
    if (slack < rep.worst_slack) {
      rep.worst_slack = slack;
      rep.witness = what;
    }
    if (slack < -tol) ++rep.failures;
  };
  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i) {
    double dii = to_double(space.distance(sample[i], sample[i]));
    record(-std::fabs(dii), "d(x,x) at " + sample[i].str());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      S dij = space.distance(sample[i], sample[j]);
      S dji = space.distance(sample[j], sample[i]);
      record(-to_double(num_traits<S>::abs(dij - dji)),
             "symmetry at (" + sample[i].str() + "," + sample[j].str() + ")");
      if (dij == S(0) && !(sample[i] == sample[j]))
        record(-1.0, "d=0 for distinct points (" + sample[i].str() + "," +
                         sample[j].str() + ")");
      record(to_double(dij), "nonnegativity");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        S slack = space.distance(sample[i], sample[j]) +
                  space.distance(sample[j], sample[k]) -
                  space.distance(sample[i], sample[k]);
        record(to_double(slack), "triangle at (" + sample[i].str() + "," +
                                     sample[j].str() + "," + sample[k].str() + ")");
      }
  return rep;
}

}  // namespace wasser

#endif
