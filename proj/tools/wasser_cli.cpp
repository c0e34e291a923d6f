// Command-line surface over the library: Wasserstein distances, coupling
// export, law-check batches, named experiments, and measure validation.
//
// Exit codes: 0 success, 1 domain error (bad measure file, metric
// violation, solver failure), 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wasser/experiments.hpp"
#include "wasser/harness.hpp"
#include "wasser/io.hpp"
#include "wasser/laws.hpp"
#include "wasser/measure.hpp"
#include "wasser/transport.hpp"

namespace {

using wasser::json;

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

struct Options {
  std::string mode = "float";
  double p = 1.0;
  std::uint64_t seed = 7;
  long trials = 1000;
  std::string format = "text";
  std::string out;
  bool serial = false;
};

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out.empty() || opt.out == "-") return std::cout;
  file.open(opt.out);
  if (!file) throw std::invalid_argument("cannot open output " + opt.out);
  return file;
}

template <class S>
wasser::order_t<S> make_order(double p) {
  if constexpr (wasser::num_traits<S>::exact) {
    auto u = static_cast<unsigned>(p);
    if (static_cast<double>(u) != p || p < 1.0)
      throw std::invalid_argument("exact mode requires integer p >= 1");
    return u;
  } else {
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
    return p;
  }
}

template <class S>
int run_distance(const Options& opt, const std::string& a_path,
                 const std::string& b_path, bool show_cost) {
  auto a = wasser::load_measure<S>(read_json(a_path));
  auto b = wasser::load_measure<S>(read_json(b_path), a.space_ptr());
  auto res = wasser::optimal_coupling(a, b, make_order<S>(opt.p));
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  os << std::setprecision(17) << res.wp << '\n';
  if (show_cost)
    os << "cost_p " << wasser::detail::scalar_to_string<S>(res.cost_p) << '\n';
  return 0;
}

template <class S>
int run_coupling(const Options& opt, const std::string& a_path,
                 const std::string& b_path) {
  auto a = wasser::load_measure<S>(read_json(a_path));
  auto b = wasser::load_measure<S>(read_json(b_path), a.space_ptr());
  auto res = wasser::optimal_coupling(a, b, make_order<S>(opt.p));
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  wasser::write_coupling_csv(os, res.coupling);
  std::cerr << "wp " << std::setprecision(17) << res.wp << "\ncost_p "
            << wasser::detail::scalar_to_string<S>(res.cost_p) << '\n';
  return 0;
}

template <class S>
int run_laws(const Options& opt, const std::string& set,
             const std::vector<double>& ps) {
  wasser::SuiteConfig cfg;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.parallel = !opt.serial;
  if (!ps.empty()) cfg.p_values = ps;
  wasser::LawSuite<S> suite(cfg);
  auto reports = suite.run(set);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  if (opt.format == "csv")
    wasser::write_reports_csv(os, reports);
  else
    wasser::write_reports_text(os, reports);
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

// Re-ingest a coupling CSV and check its marginals against two measure
// files.
template <class S>
int run_validate_coupling(const std::string& csv_path, const std::string& a_path,
                          const std::string& b_path) {
  auto a = wasser::load_measure<S>(read_json(a_path));
  auto b = wasser::load_measure<S>(read_json(b_path), a.space_ptr());
  std::ifstream in(csv_path);
  if (!in) throw std::invalid_argument("cannot open " + csv_path);
  std::string header;
  std::getline(in, header);
  std::vector<S> w;
  std::string linebuf;
  std::size_t rows = 0;
  while (std::getline(in, linebuf)) {
    if (linebuf.empty()) continue;
    std::istringstream ls(linebuf);
    std::string cell;
    std::getline(ls, cell, ',');  // row atom label
    while (std::getline(ls, cell, ',')) {
      if constexpr (wasser::num_traits<S>::exact)
        w.push_back(wasser::rational_from_string(cell));
      else
        w.push_back(std::stod(cell));
    }
    ++rows;
  }
  if (rows != a.size() || w.size() != a.size() * b.size())
    throw std::invalid_argument("coupling CSV shape does not match measures");
  wasser::Coupling<S> gamma(a, b, std::move(w));  // validates marginals
  auto [left, right] = wasser::marginals(gamma);
  if (!wasser::approx_equal(left, a, wasser::num_traits<S>::exact ? 0.0 : 1e-9) ||
      !wasser::approx_equal(right, b, wasser::num_traits<S>::exact ? 0.0 : 1e-9))
    throw std::invalid_argument("coupling marginals do not match measures");
  std::cout << "ok\n";
  return 0;
}

template <class S>
int run_validate(const std::string& path) {
  auto mu = wasser::load_measure<S>(read_json(path));
  std::cout << "ok: " << mu.size() << " atoms over " << mu.space().name()
            << '\n';
  return 0;
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoul(tok));
  return out;
}

int run_experiment(const Options& opt, const std::string& name, double q,
                   const std::string& schedule_text, std::size_t m_max,
                   std::size_t levels, double x0) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  const bool csv = opt.format == "csv";
  if (name == "dirichlet-cauchy") {
    auto tr = wasser::cauchy_experiment(q, opt.p, parse_schedule(schedule_text));
    if (csv) {
      os << "m,m2,wp\n" << std::setprecision(17);
      for (std::size_t i = 0; i < tr.indices.size(); ++i)
        os << tr.indices[i].first << ',' << tr.indices[i].second << ','
           << tr.distances[i] << '\n';
    } else {
      os << "W_" << opt.p << "(D_{" << q << ",m}, D_{" << q << ",2m})\n";
      for (std::size_t i = 0; i < tr.indices.size(); ++i)
        os << std::setw(6) << tr.indices[i].first << "  "
           << std::setprecision(12) << tr.distances[i] << '\n';
      os << "verdict " << tr.verdict << ", fitted decay exponent "
         << std::setprecision(4) << tr.decay_exponent << '\n';
    }
    return 0;
  }
  if (name == "moment-growth") {
    auto rows = wasser::moment_growth(q, opt.p, m_max);
    os << (csv ? "m,moment\n" : "p-moments of D_{q,m} about 0\n");
    os << std::setprecision(csv ? 17 : 12);
    for (const auto& r : rows)
      if (csv)
        os << r.m << ',' << r.moment << '\n';
      else
        os << std::setw(6) << r.m << "  " << r.moment << '\n';
    return 0;
  }
  if (name == "density") {
    auto rows = wasser::density_experiment(opt.p, levels);
    os << (csv ? "level,wp\n" : "W_p(target, coarsening at level)\n");
    os << std::setprecision(csv ? 17 : 12);
    for (const auto& r : rows)
      if (csv)
        os << r.level << ',' << r.distance << '\n';
      else
        os << std::setw(6) << r.level << "  " << r.distance << '\n';
    return 0;
  }
  if (name == "moment-convergence") {
    auto line = std::make_shared<wasser::LineSpace<double>>();
    auto schedule = parse_schedule(schedule_text);
    std::vector<wasser::DiscreteMeasure<double>> seq;
    for (std::size_t m : schedule)
      seq.push_back(wasser::dirichlet_truncation(line, q, m).measure);
    auto limit =
        wasser::dirichlet_truncation(line, q, 2 * schedule.back()).measure;
    auto rep = wasser::moment_convergence_check(seq, limit,
                                                wasser::Point<double>(x0), opt.p);
    os << (csv ? "wp,moment_gap\n" : "W_p distance vs p-moment gap\n");
    os << std::setprecision(csv ? 17 : 12);
    for (const auto& r : rep.rows)
      if (csv)
        os << r.wp_distance << ',' << r.moment_gap << '\n';
      else
        os << r.wp_distance << "  " << r.moment_gap << '\n';
    if (!csv)
      os << "moments follow W_p (C = " << std::setprecision(4)
         << rep.bound_constant << "): " << (rep.moments_follow ? "yes" : "no")
         << '\n';
    return 0;
  }
  throw std::invalid_argument("unknown experiment: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wasserstein distances and barycentric-algebra law checking "
               "for finitely supported measures"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--mode", opt.mode, "numeric mode: float or exact")
      ->envname("WASSER_MODE")
      ->check(CLI::IsMember({"float", "exact"}));

  std::string a_path, b_path, set = "all", exp_name, csv_path;
  std::vector<double> p_list;
  bool show_cost = false;
  double q = 2.0, x0 = 0.0;
  std::string schedule = "2,4,8,16,32,64,128,256";
  std::size_t m_max = 256, levels = 8;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", opt.p, "Wasserstein order p >= 1")
        ->envname("WASSER_P");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    cmd->add_option("--format", opt.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
  };

  auto* dist = app.add_subcommand("distance", "W_p between two measure files");
  dist->add_option("a", a_path, "measure JSON (or - for stdin)")->required();
  dist->add_option("b", b_path, "measure JSON")->required();
  dist->add_flag("--cost", show_cost, "also print cost_p");
  add_common(dist);

  auto* coup = app.add_subcommand("coupling", "optimal coupling as CSV");
  coup->add_option("a", a_path, "measure JSON")->required();
  coup->add_option("b", b_path, "measure JSON")->required();
  add_common(coup);

  auto* laws = app.add_subcommand("laws", "randomized law-check batches");
  laws->add_option("--set", set,
                   "law set: barycentric, convex, midpoint, wasserstein, "
                   "metric, or all");
  laws->add_option("--trials", opt.trials, "trials per law")
      ->envname("WASSER_TRIALS");
  laws->add_option("--seed", opt.seed, "random seed")->envname("WASSER_SEED");
  laws->add_option("--p-values", p_list, "orders p to sweep")->delimiter(',');
  laws->add_flag("--serial", opt.serial, "use the serial reference runner");
  add_common(laws);

  auto* exp = app.add_subcommand("experiment", "named quantitative experiments");
  exp->add_option("name", exp_name,
                  "dirichlet-cauchy, moment-growth, density, or "
                  "moment-convergence")
      ->required();
  exp->add_option("--q", q, "Dirichlet order parameter");
  exp->add_option("--schedule", schedule, "comma-separated m schedule");
  exp->add_option("--m-max", m_max, "largest truncation index");
  exp->add_option("--levels", levels, "dyadic coarsening levels");
  exp->add_option("--x0", x0, "moment basepoint");
  add_common(exp);

  auto* val = app.add_subcommand("validate", "validate a measure document");
  val->add_option("file", a_path, "measure JSON (or - for stdin)");
  val->add_option("--coupling", csv_path, "coupling CSV to check");
  val->add_option("--against", b_path, "second measure for coupling check");
  add_common(val);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const bool exact = opt.mode == "exact";
  try {
    if (dist->parsed())
      return exact ? run_distance<wasser::Rational>(opt, a_path, b_path, show_cost)
                   : run_distance<double>(opt, a_path, b_path, show_cost);
    if (coup->parsed())
      return exact ? run_coupling<wasser::Rational>(opt, a_path, b_path)
                   : run_coupling<double>(opt, a_path, b_path);
    if (laws->parsed())
      return exact ? run_laws<wasser::Rational>(opt, set, p_list)
                   : run_laws<double>(opt, set, p_list);
    if (exp->parsed()) {
      if (exact)
        throw std::invalid_argument("experiments run in float mode");
      return run_experiment(opt, exp_name, q, schedule, m_max, levels, x0);
    }
    if (val->parsed()) {
      if (!csv_path.empty()) {
        if (a_path.empty() || b_path.empty())
          throw std::invalid_argument(
              "--coupling needs the two measure files (file and --against)");
        return exact ? run_validate_coupling<wasser::Rational>(csv_path, a_path,
                                                               b_path)
                     : run_validate_coupling<double>(csv_path, a_path, b_path);
      }
      if (a_path.empty()) throw std::invalid_argument("validate needs a file");
      return exact ? run_validate<wasser::Rational>(a_path)
                   : run_validate<double>(a_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
