#ifndef WASSER_POINT_HPP
#define WASSER_POINT_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wasser/numeric.hpp"

namespace wasser {

/// A point of some metric space: a scalar (real line), a coordinate
/// vector, an index into a finite space, or a tuple (product spaces).
///
/// Equality is exact, componentwise. No epsilon coalescing: measure
/// supports must merge deterministically.
template <class S>
class Point {
 public:
  using Tuple = std::vector<Point<S>>;
  using Rep = std::variant<S, std::vector<S>, std::size_t, Tuple>;

  Point() : rep_(S(0)) {}
  explicit Point(S scalar) : rep_(std::move(scalar)) {}
  explicit Point(std::vector<S> coords) : rep_(std::move(coords)) {}
  explicit Point(std::size_t index) : rep_(index) {}
  explicit Point(Tuple parts) : rep_(std::move(parts)) {}

  bool is_scalar() const { return std::holds_alternative<S>(rep_); }
  bool is_vector() const { return std::holds_alternative<std::vector<S>>(rep_); }
  bool is_index() const { return std::holds_alternative<std::size_t>(rep_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(rep_); }

  const S& scalar() const { return std::get<S>(rep_); }
  const std::vector<S>& coords() const { return std::get<std::vector<S>>(rep_); }
  std::size_t index() const { return std::get<std::size_t>(rep_); }
  const Tuple& tuple() const { return std::get<Tuple>(rep_); }

  const Rep& rep() const { return rep_; }

  friend bool operator==(const Point& a, const Point& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Total order used only for canonical atom ordering.
  friend bool operator<(const Point& a, const Point& b) { return a.rep_ < b.rep_; }

  std::string str() const {
    std::ostringstream os;
    print(os, *this);
    return os.str();
  }

 private:
  static void print(std::ostringstream& os, const Point& pt) {
    if (pt.is_scalar()) {
      os << to_double(pt.scalar());
    } else if (pt.is_index()) {
      os << '#' << pt.index();
    } else if (pt.is_vector()) {
      os << '(';
      const auto& v = pt.coords();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << to_double(v[i]);
      }
      os << ')';
    } else {
      os << '<';
      const auto& t = pt.tuple();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ';';
        print(os, t[i]);
      }
      os << '>';
    }
  }

  Rep rep_;
};

}  // namespace wasser

#endif
