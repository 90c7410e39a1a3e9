#include "renyi/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "renyi/bounds.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/extrapolate.hpp"
#include "renyi/figures.hpp"
#include "renyi/io.hpp"
#include "renyi/sampling.hpp"

namespace renyi {
namespace {

using io::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

unsigned threads_from_env() {
  const char* v = std::getenv("ENTROPY_NUM_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0) {
    throw EntropyError(ErrorCode::ParseError,
                       "ENTROPY_NUM_THREADS must be a non-negative integer");
  }
  return static_cast<unsigned>(n);
}

double parse_order(const std::string& s) {
  if (s == "inf" || s == "infinity") return INFINITY;
  std::size_t used = 0;
  double q = 0.0;
  try {
    q = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) {
    throw EntropyError(ErrorCode::ParseError, "bad order '" + s + "'");
  }
  return q;
}

std::string gnuplot_script(int id, const std::string& prefix) {
  const std::string csv = prefix + ".csv";
  std::ostringstream gp;
  gp << "set datafile separator ','\nset key autotitle columnhead\n";
  switch (id) {
    case 1:
      gp << "set size ratio -1\nplot '" << csv << "' using 5:6 with dots\n";
      break;
    case 2:
      gp << "set xlabel 'H_s'\nset ylabel 'H_q'\nplot '" << csv
         << "' using 4:5 with points pt 7 ps 0.3\n";
      break;
    case 3:
      gp << "set xlabel 'q'\nset ylabel 'H_q'\nplot for [c=2:8] '" << csv
         << "' using 1:c with lines\n";
      break;
    default:
      gp << "set xlabel 'deviation'\nset ylabel 'density'\nplot '" << csv
         << "' using (($1+$2)/2):3 with steps, '' using (($1+$2)/2):4 with "
            "steps\n";
  }
  return gp.str();
}

struct Options {
  // entropy
  std::string values;
  std::string file;
  bool renormalize = false;
  std::vector<std::string> orders;
  // bounds / extrapolate
  std::optional<double> h0, h2, h3;
  int n = 0;
  double q = 1.0;
  // sample / figure
  std::uint64_t count = figure_defaults::kDeviationCount;
  std::uint64_t seed = figure_defaults::kDeviationSeed;
  int bins = 60;
  bool include_hd = false;
  std::string out_prefix;
  int figure_id = 0;
  double s = 2.0;
  std::vector<double> levels;
  int grid = figure_defaults::kContourGrid;
  int samples = 201;
  bool gnuplot = false;
};

ProbVec vector_from(const Options& o) {
  const auto mode = o.renormalize ? NormalizeMode::Renormalize : NormalizeMode::Strict;
  if (!o.file.empty()) return io::read_prob_vec_file(o.file, mode);
  return io::parse_prob_vec(o.values, mode);
}

int run_entropy(const Options& o, std::ostream& out) {
  const ProbVec p = vector_from(o);
  json report = io::entropy_report(p);
  if (!o.orders.empty()) {
    json profile = json::array();
    for (const auto& s : o.orders) {
      const double q = parse_order(s);
      profile.push_back({{"q", s}, {"nats", renyi(p, RenyiOrder::of(q)).nats}});
    }
    report["profile"] = std::move(profile);
  }
  report["vector"] = json::parse(io::prob_vec_to_json(p));
  out << dump(report);
  return kExitOk;
}

int run_bounds(const Options& o, std::ostream& out) {
  if (!o.h2 && !o.h3) {
    throw EntropyError(ErrorCode::ParseError, "bounds needs --h2 and/or --h3");
  }
  json report = {{"N", o.n}, {"q", o.q}};
  if (o.h2) {
    json b = io::to_json(renyi_bounds_from_H2(*o.h2, o.n, o.q));
    if (RenyiOrder::of(o.q).kind() == RenyiOrder::Kind::One) {
      b["simple_upper"] = io::to_json(ht_simple_upper(*o.h2, o.n));
    }
    report["from_H2"] = std::move(b);
  }
  if (o.h3) report["from_H3"] = io::to_json(renyi_bounds_from_H3(*o.h3, o.n, o.q));
  out << dump(report);
  return kExitOk;
}

int run_extrapolate(const Options& o, std::ostream& out) {
  const auto estimates = all_estimates(*o.h2, *o.h3, o.n, o.h0);
  json list = json::array();
  double star = 0.0;
  for (const auto& e : estimates) {
    list.push_back(io::to_json(e));
    if (e.name == "H_star") star = e.estimate.value();
  }
  const auto dom = check_order_dominance(*o.h2, *o.h3, o.n);
  json inputs = {{"H2", *o.h2}, {"H3", *o.h3}, {"N", o.n}};
  if (o.h0) inputs["H0"] = *o.h0;
  out << dump({{"inputs", std::move(inputs)},
               {"estimates", std::move(list)},
               {"H_star", star},
               {"rigor", to_string(Rigor::Heuristic)},
               {"dominance",
                {{"upper_ok", dom.upper_ok},
                 {"lower_ok", dom.lower_ok},
                 {"upper_excess", dom.upper_excess},
                 {"lower_excess", dom.lower_excess}}}});
  return kExitOk;
}

int run_sample(const Options& o, std::ostream& out) {
  DeviationOptions opts;
  opts.bins = o.bins;
  opts.include_hd = o.include_hd;
  opts.threads = threads_from_env();
  const auto stats = deviation_study(o.n, o.count, o.seed, opts);
  const std::string prefix = o.out_prefix.empty() ? "deviation" : o.out_prefix;
  write_file(prefix + ".csv", io::deviation_csv(stats));
  write_file(prefix + ".json", dump(io::to_json(stats)));
  out << dump({{"csv", prefix + ".csv"}, {"json", prefix + ".json"}});
  return kExitOk;
}

int run_figure(const Options& o, std::ostream& out) {
  const std::string prefix =
      o.out_prefix.empty() ? "figure" + std::to_string(o.figure_id) : o.out_prefix;
  std::string csv;
  json doc;
  switch (o.figure_id) {
    case 1: {
      std::vector<std::string> orders = o.orders;
      if (orders.empty()) orders = {"0.25", "1", "2", "8"};
      std::vector<double> levels = o.levels;
      if (levels.empty()) {
        for (int i = 1; i <= 9; ++i) levels.push_back(std::log(3.0) * i / 10.0);
      }
      json panels = json::array();
      for (const auto& s : orders) {
        const double q = parse_order(s);
        const auto lines = iso_entropy_contours(RenyiOrder::of(q), levels, o.grid);
        std::string part = io::contours_csv(q, lines);
        csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
        panels.push_back(io::contours_to_json(q, lines));
      }
      doc = {{"figure", 1}, {"N", 3}, {"grid", o.grid}, {"levels", levels},
             {"panels", std::move(panels)}};
      break;
    }
    case 2: {
      const int n = o.n ? o.n : 3;
      const auto b = entropy_plane_boundary(o.q, o.s, n, o.samples);
      csv = io::plane_csv(b);
      doc = io::to_json(b);
      doc["figure"] = 2;
      break;
    }
    case 3: {
      const ProbVec p = (o.values.empty() && o.file.empty())
                            ? figure_defaults::profile_vector()
                            : vector_from(o);
      const auto grid = figure_defaults::profile_grid();
      const auto ds = profile_with_bounds(p, grid);
      csv = io::profile_csv(ds);
      doc = io::to_json(ds);
      doc["figure"] = 3;
      doc["vector"] = json::parse(io::prob_vec_to_json(p));
      break;
    }
    case 4: {
      DeviationOptions opts;
      opts.bins = o.bins;
      opts.include_hd = o.include_hd;
      opts.threads = threads_from_env();
      const int n = o.n ? o.n : figure_defaults::kDeviationN;
      const auto stats = deviation_study(n, o.count, o.seed, opts);
      csv = io::deviation_csv(stats);
      doc = io::to_json(stats);
      doc["figure"] = 4;
      break;
    }
    default:
      throw EntropyError(ErrorCode::ParseError, "figure id must be 1, 2, 3 or 4");
  }
  write_file(prefix + ".csv", csv);
  write_file(prefix + ".json", dump(doc));
  json written = {{"csv", prefix + ".csv"}, {"json", prefix + ".json"}};
  if (o.gnuplot) {
    write_file(prefix + ".gp", gnuplot_script(o.figure_id, prefix));
    written["gnuplot"] = prefix + ".gp";
  }
  out << dump(written);
  return kExitOk;
}

void print_error(std::ostream& err, std::string_view code, const std::string& msg) {
  err << json{{"error", code}, {"message", msg}}.dump() << '\n';
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Renyi entropies, Shannon-entropy bounds and extrapolations", "renyi"};
  app.require_subcommand(1);

  auto* entropy = app.add_subcommand("entropy", "Entropies and purity of a vector");
  auto* values_opt = entropy->add_option("--values", o.values,
                                         "JSON array or comma/space separated values");
  auto* file_opt = entropy->add_option("--file", o.file, "File holding the vector");
  values_opt->excludes(file_opt);
  entropy->add_flag("--renormalize", o.renormalize, "Divide by the sum");
  entropy->add_option("--q", o.orders, "Extra orders to evaluate (inf allowed)");

  auto* bounds = app.add_subcommand("bounds", "Rigorous bounds from H2 and/or H3");
  bounds->add_option("--h2", o.h2, "Renyi entropy of order 2 (nats)");
  bounds->add_option("--h3", o.h3, "Renyi entropy of order 3 (nats)");
  bounds->add_option("--n", o.n, "Vector length")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--q", o.q, "Order to bound (default: Shannon)");

  auto* extrap = app.add_subcommand("extrapolate", "Heuristic Shannon estimates");
  extrap->add_option("--h2", o.h2, "Renyi entropy of order 2 (nats)")->required();
  extrap->add_option("--h3", o.h3, "Renyi entropy of order 3 (nats)")->required();
  extrap->add_option("--n", o.n, "Vector length")->required()->check(CLI::PositiveNumber);
  extrap->add_option("--h0", o.h0, "Renyi entropy of order 0 (nats)");

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimator deviations");
  sample->add_option("--n", o.n, "Vector length")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", o.count, "Number of random vectors");
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--bins", o.bins, "Histogram bins");
  sample->add_option("--out", o.out_prefix, "Output prefix for .csv/.json");
  sample->add_flag("--include-hd", o.include_hd, "Add the 2*H12d - H13d channel");

  auto* figure = app.add_subcommand("figure", "Figure datasets as CSV + JSON");
  figure->add_option("--id", o.figure_id, "Figure 1, 2, 3 or 4")->required();
  figure->add_option("--out", o.out_prefix, "Output prefix for .csv/.json");
  figure->add_option("--q", o.orders, "Fig. 1: orders; Fig. 2: first entry is q");
  figure->add_option("--s", o.s, "Fig. 2: abscissa order");
  figure->add_option("--n", o.n, "Vector length (Fig. 2, 4)");
  figure->add_option("--levels", o.levels, "Fig. 1: contour levels (nats)");
  figure->add_option("--grid", o.grid, "Fig. 1: lattice subdivisions");
  figure->add_option("--samples", o.samples, "Fig. 2: points per arc");
  figure->add_option("--values", o.values, "Fig. 3: vector");
  figure->add_option("--file", o.file, "Fig. 3: vector file");
  figure->add_option("--count", o.count, "Fig. 4: number of random vectors");
  figure->add_option("--seed", o.seed, "Fig. 4: RNG seed");
  figure->add_option("--bins", o.bins, "Fig. 4: histogram bins");
  figure->add_flag("--include-hd", o.include_hd, "Fig. 4: extra channel");
  figure->add_flag("--gnuplot", o.gnuplot, "Also write a gnuplot script");

  std::vector<std::string> argv_store{"renyi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return kExitInput;
  }

  try {
    if (*entropy) {
      if (o.values.empty() && o.file.empty()) {
        throw EntropyError(ErrorCode::ParseError, "entropy needs --values or --file");
      }
      return run_entropy(o, out);
    }
    if (*bounds) return run_bounds(o, out);
    if (*extrap) return run_extrapolate(o, out);
    if (*sample) return run_sample(o, out);
    if (*figure) {
      if (o.figure_id == 2 && !o.orders.empty()) o.q = parse_order(o.orders.front());
      return run_figure(o, out);
    }
  } catch (const EntropyError& e) {
    print_error(err, to_string(e.code()), e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    print_error(err, "InternalError", e.what());
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace renyi
