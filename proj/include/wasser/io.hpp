#ifndef WASSER_IO_HPP
#define WASSER_IO_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wasser/coupling.hpp"
#include "wasser/measure.hpp"
#include "wasser/metric.hpp"
#include "wasser/report.hpp"

namespace wasser {

using nlohmann::json;

namespace detail {

template <class S>
S scalar_from_json(const json& j) {
  if constexpr (num_traits<S>::exact) {
    if (j.is_number_integer()) return S(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_float()) return rational_from_string(j.dump());
    throw std::invalid_argument("expected number or \"num/den\" string");
  } else {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return std::stod(j.get<std::string>());
    throw std::invalid_argument("expected number");
  }
}

template <class S>
std::string scalar_to_string(const S& x) {
  if constexpr (num_traits<S>::exact) {
    std::ostringstream os;
    os << x;
    return os.str();
  } else {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
  }
}

}  // namespace detail

/// Space declaration: "line", {"dim": n}, or {"n": k, "d": [[...]]}.
template <class S>
SpacePtr<S> load_space(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "line") return std::make_shared<LineSpace<S>>();
    throw std::invalid_argument("unknown space name: " + j.get<std::string>());
  }
  if (j.is_object() && j.contains("dim")) {
    if constexpr (num_traits<S>::exact)
      throw std::invalid_argument("Euclidean spaces need float mode");
    else
      return std::make_shared<EuclideanSpace<S>>(j.at("dim").get<std::size_t>());
  }
  if (j.is_object() && j.contains("n") && j.contains("d")) {
    std::size_t n = j.at("n").get<std::size_t>();
    const json& d = j.at("d");
    if (!d.is_array() || d.size() != n)
      throw std::invalid_argument("distance matrix must have n rows");
    std::vector<std::vector<S>> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i].is_array() || d[i].size() != n)
        throw std::invalid_argument("distance matrix row " + std::to_string(i) +
                                    " must have n entries");
      for (const auto& e : d[i]) entries[i].push_back(detail::scalar_from_json<S>(e));
    }
    return std::make_shared<MatrixSpace<S>>(std::move(entries));
  }
  throw std::invalid_argument("unrecognised space declaration");
}

template <class S>
Point<S> load_point(const json& j, const MetricSpace<S>& space) {
  if (dynamic_cast<const MatrixSpace<S>*>(&space)) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
      throw std::invalid_argument("matrix-space atoms are indices");
    return Point<S>(j.get<std::size_t>());
  }
  if (j.is_array()) {
    std::vector<S> c;
    for (const auto& e : j) c.push_back(detail::scalar_from_json<S>(e));
    return Point<S>(std::move(c));
  }
  return Point<S>(detail::scalar_from_json<S>(j));
}

/// Measure document: {"space": ..., "atoms": [...], "weights": [...]}.
/// An existing structurally equal space is reused so measures loaded
/// from separate files compare as living over the same space.
template <class S>
DiscreteMeasure<S> load_measure(const json& j, SpacePtr<S> reuse = nullptr) {
  if (!j.is_object() || !j.contains("space") || !j.contains("atoms") ||
      !j.contains("weights"))
    throw std::invalid_argument(
        "measure document needs space, atoms, and weights");
  SpacePtr<S> space = load_space<S>(j.at("space"));
  if (reuse && reuse->equals(*space)) space = reuse;
  std::vector<Point<S>> atoms;
  for (const auto& a : j.at("atoms")) atoms.push_back(load_point<S>(a, *space));
  std::vector<S> weights;
  for (const auto& w : j.at("weights"))
    weights.push_back(detail::scalar_from_json<S>(w));
  return DiscreteMeasure<S>(std::move(space), std::move(atoms),
                            std::move(weights));
}

template <class S>
json space_to_json(const MetricSpace<S>& space) {
  if (dynamic_cast<const LineSpace<S>*>(&space)) return "line";
  if constexpr (!num_traits<S>::exact) {
    if (auto* e = dynamic_cast<const EuclideanSpace<S>*>(&space))
      return json{{"dim", e->dim()}};
  }
  if (auto* m = dynamic_cast<const MatrixSpace<S>*>(&space)) {
    json d = json::array();
    for (const auto& row : m->entries()) {
      json r = json::array();
      for (const auto& e : row) {
        if constexpr (num_traits<S>::exact)
          r.push_back(detail::scalar_to_string<S>(e));
        else
          r.push_back(e);
      }
      d.push_back(std::move(r));
    }
    return json{{"n", m->size()}, {"d", std::move(d)}};
  }
  throw std::invalid_argument("space has no JSON form");
}

template <class S>
json point_to_json(const Point<S>& pt) {
  if (pt.is_index()) return pt.index();
  if (pt.is_vector()) {
    json a = json::array();
    for (const auto& c : pt.coords()) {
      if constexpr (num_traits<S>::exact)
        a.push_back(detail::scalar_to_string<S>(c));
      else
        a.push_back(c);
    }
    return a;
  }
  if constexpr (num_traits<S>::exact)
    return detail::scalar_to_string<S>(pt.scalar());
  else
    return pt.scalar();
}

template <class S>
json measure_to_json(const DiscreteMeasure<S>& mu) {
  json atoms = json::array(), weights = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back(point_to_json<S>(a));
  for (const auto& w : mu.weights()) {
    if constexpr (num_traits<S>::exact)
      weights.push_back(detail::scalar_to_string<S>(w));
    else
      weights.push_back(w);
  }
  return json{{"space", space_to_json<S>(mu.space())},
              {"atoms", std::move(atoms)},
              {"weights", std::move(weights)}};
}

/// Coupling as CSV: header row/col of atoms, then weight rows;
/// 17-significant-digit decimals in float mode, num/den in exact mode.
template <class S>
void write_coupling_csv(std::ostream& os, const Coupling<S>& gamma) {
  os << "atom";
  for (const auto& a : gamma.col_measure().atoms()) os << ',' << a.str();
  os << '\n';
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    os << gamma.row_measure().atoms()[i].str();
    for (std::size_t j = 0; j < gamma.cols(); ++j)
      os << ',' << detail::scalar_to_string<S>(gamma.at(i, j));
    os << '\n';
  }
}

inline void write_reports_text(std::ostream& os,
                               const std::vector<LawReport>& reports) {
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.law.size());
  os << std::left << std::setw(static_cast<int>(width)) << "law"
     << "  trials  failures  worst_slack\n";
  for (const auto& r : reports) {
    std::ostringstream slack;
    slack << std::setprecision(6) << r.worst_slack;
    os << std::left << std::setw(static_cast<int>(width)) << r.law << "  "
       << std::right << std::setw(6) << r.trials << "  " << std::setw(8)
       << r.failures << "  " << slack.str() << (r.passed() ? "" : "  FAIL")
       << '\n';
  }
}

inline void write_reports_csv(std::ostream& os,
                              const std::vector<LawReport>& reports) {
  os << "law,trials,failures,worst_slack,witness\n";
  for (const auto& r : reports) {
    std::string law = r.law, wit = r.witness;
    for (auto* s : {&law, &wit})
      for (char& c : *s)
        if (c == ',') c = ';';
    os << law << ',' << r.trials << ',' << r.failures << ','
       << std::setprecision(17) << r.worst_slack << ',' << wit << '\n';
  }
}

}  // namespace wasser

#endif
