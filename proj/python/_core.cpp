#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "renyi/bounds.hpp"
#include "renyi/cli.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/extrapolate.hpp"
#include "renyi/figures.hpp"
#include "renyi/interp_family.hpp"
#include "renyi/io.hpp"
#include "renyi/sampling.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

renyi::ProbVec vec(std::vector<double> v, bool renormalize) {
  return renyi::ProbVec::make(std::move(v), renormalize
                                                ? renyi::NormalizeMode::Renormalize
                                                : renyi::NormalizeMode::Strict);
}

// Structured results cross the boundary as JSON and come back as dicts.
py::object to_python(const renyi::io::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list polylines(const std::vector<renyi::Polyline>& lines) {
  py::list out;
  for (const auto& l : lines) {
    py::list pts;
    for (const auto& p : l.points) pts.append(py::make_tuple(p.x, p.y));
    out.append(py::dict("label"_a = l.label, "points"_a = pts));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Renyi entropies, Shannon-entropy bounds and extrapolations";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] {
    return py::object(
        py::exception<renyi::EntropyError>(m, "EntropyError", PyExc_ValueError));
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const renyi::EntropyError& e) {
      const py::object& type = error_type.get_stored();
      py::object err = type(e.what());
      err.attr("code") = renyi::to_string(e.code());
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::enum_<renyi::Side>(m, "Side")
      .value("LOWER", renyi::Side::Lower)
      .value("UPPER", renyi::Side::Upper);
  py::enum_<renyi::Rigor>(m, "Rigor")
      .value("RIGOROUS", renyi::Rigor::Rigorous)
      .value("HEURISTIC", renyi::Rigor::Heuristic);

  py::class_<renyi::BoundResult>(m, "BoundResult")
      .def_readonly("value", &renyi::BoundResult::value)
      .def_readonly("side", &renyi::BoundResult::side)
      .def_readonly("rigor", &renyi::BoundResult::rigor)
      .def_readonly("source", &renyi::BoundResult::source)
      .def("__repr__", [](const renyi::BoundResult& b) {
        std::ostringstream os;
        os.precision(17);
        os << "BoundResult(" << b.value << ", " << renyi::to_string(b.side) << ", "
           << renyi::to_string(b.rigor) << ", '" << b.source << "')";
        return os.str();
      });
  py::class_<renyi::BoundPair>(m, "BoundPair")
      .def_readonly("lower", &renyi::BoundPair::lower)
      .def_readonly("upper", &renyi::BoundPair::upper);

  py::class_<renyi::Estimate>(m, "Estimate")
      .def_property_readonly("value", &renyi::Estimate::value)
      .def_property_readonly("rigor", &renyi::Estimate::rigor)
      .def_property_readonly("source", &renyi::Estimate::source)
      .def("__float__", &renyi::Estimate::value);

  // Entropies
  m.def("shannon", [](std::vector<double> p, bool renormalize) {
    return renyi::shannon(vec(std::move(p), renormalize)).nats;
  }, "p"_a, "renormalize"_a = false);
  m.def("renyi", [](std::vector<double> p, double q, bool renormalize) {
    return renyi::renyi(vec(std::move(p), renormalize), renyi::RenyiOrder::of(q)).nats;
  }, "p"_a, "q"_a, "renormalize"_a = false, "H_q in nats; q may be 0, 1 or inf.");
  m.def("renyi_profile", [](std::vector<double> p, const std::vector<double>& qs) {
    std::vector<renyi::RenyiOrder> orders;
    for (double q : qs) orders.push_back(renyi::RenyiOrder::of(q));
    std::vector<double> out;
    for (const auto& pt : renyi::renyi_profile(vec(std::move(p), false), orders)) {
      out.push_back(pt.nats);
    }
    return out;
  }, "p"_a, "qs"_a);
  m.def("purity_stats", [](std::vector<double> p) {
    const auto s = renyi::purity_stats(vec(std::move(p), false));
    return py::dict("coincidence_index"_a = s.coincidence_index,
                    "participation_ratio"_a = s.participation_ratio,
                    "linear_entropy"_a = s.linear_entropy);
  }, "p"_a);
  m.def("structural_entropy", [](std::vector<double> p) {
    return renyi::structural_entropy(vec(std::move(p), false));
  }, "p"_a);
  m.def("tsallis", [](std::vector<double> p, double q) {
    return renyi::tsallis(vec(std::move(p), false), q);
  }, "p"_a, "q"_a);
  m.def("entropy_report", [](std::vector<double> p, bool renormalize) {
    return to_python(renyi::io::entropy_report(vec(std::move(p), renormalize)));
  }, "p"_a, "renormalize"_a = false);

  // Boundary families
  m.def("interp_vector", [](int k, int l, double a) {
    const auto v = renyi::interp_vector(renyi::InterpDist(k, l, a));
    return std::vector<double>(v.begin(), v.end());
  }, "k"_a, "l"_a, "a"_a);
  m.def("interp_renyi", [](int k, int l, double a, double q) {
    return renyi::interp_renyi(renyi::InterpDist(k, l, a), renyi::RenyiOrder::of(q)).nats;
  }, "k"_a, "l"_a, "a"_a, "q"_a);
  m.def("select_arc", [](double h, int n) { return renyi::select_arc(h, n).k; },
        "h"_a, "n"_a);
  m.def("invert_a_from_H2_top", &renyi::invert_a_from_H2_top, "h2"_a, "n"_a);
  m.def("invert_a_from_H3_top", &renyi::invert_a_from_H3_top, "h3"_a, "n"_a);
  m.def("invert_a_from_H2_bottom", [](double h2, int k) {
    return renyi::invert_a_from_H2_bottom(h2, renyi::ArcIndex(k));
  }, "h2"_a, "k"_a);
  m.def("invert_a_from_H3_bottom", [](double h3, int k) {
    return renyi::invert_a_from_H3_bottom(h3, renyi::ArcIndex(k));
  }, "h3"_a, "k"_a);

  // Bounds
  m.def("shannon_bounds_from_H2", &renyi::shannon_bounds_from_H2, "h2"_a, "n"_a);
  m.def("shannon_bounds_from_H3", &renyi::shannon_bounds_from_H3, "h3"_a, "n"_a);
  m.def("renyi_bounds_from_H2", &renyi::renyi_bounds_from_H2, "h2"_a, "n"_a, "q"_a);
  m.def("renyi_bounds_from_H3", &renyi::renyi_bounds_from_H3, "h3"_a, "n"_a, "q"_a);
  m.def("ht_general_bounds", &renyi::ht_general_bounds, "h_s"_a, "s"_a, "q"_a, "n"_a);
  m.def("ht_simple_upper", &renyi::ht_simple_upper, "h2"_a, "n"_a);
  m.def("monotonicity_bound", &renyi::monotonicity_bound, "h_s"_a, "q"_a, "s"_a);

  // Estimates
  m.def("lower_extrap_H2_H3", &renyi::lower_extrap_H2_H3, "h2"_a, "h3"_a);
  m.def("upper_interp_H0_H2", &renyi::upper_interp_H0_H2, "h0"_a, "h2"_a);
  m.def("structural_interp_H0_H2", &renyi::structural_interp_H0_H2, "h0"_a, "h2"_a);
  m.def("estimate_023", &renyi::estimate_023, "h0"_a, "h2"_a, "h3"_a);
  m.def("upper_extrap_Hup", &renyi::upper_extrap_Hup, "h2"_a, "h3"_a, "n"_a);
  m.def("lower_extrap_Hd", &renyi::lower_extrap_Hd, "h2"_a, "h3"_a, "n"_a);
  m.def("estimate_star_prime", &renyi::estimate_star_prime, "h2"_a, "h3"_a, "n"_a);
  m.def("estimate_star", &renyi::estimate_star, "h2"_a, "h3"_a, "n"_a,
        "h0"_a = py::none());
  m.def("all_estimates", [](double h2, double h3, int n, std::optional<double> h0) {
    py::dict out;
    for (const auto& e : renyi::all_estimates(h2, h3, n, h0)) {
      out[py::str(e.name)] = e.estimate;
    }
    return out;
  }, "h2"_a, "h3"_a, "n"_a, "h0"_a = py::none());

  // Sampling
  m.def("sample_fisher_rao", [](int n, std::uint64_t seed, int count) {
    renyi::RngHandle rng(seed);
    std::vector<std::vector<double>> out;
    for (int i = 0; i < count; ++i) {
      const auto v = renyi::sample_fisher_rao(n, rng);
      out.emplace_back(v.begin(), v.end());
    }
    return out;
  }, "n"_a, "seed"_a, "count"_a = 1);
  m.def("deviation_study", [](int n, std::uint64_t count, std::uint64_t seed, int bins,
                              unsigned threads, bool include_hd) {
    renyi::DeviationOptions opt;
    opt.bins = bins;
    opt.threads = threads;
    opt.include_hd = include_hd;
    renyi::DeviationStats stats;
    {
      py::gil_scoped_release release;
      stats = renyi::deviation_study(n, count, seed, opt);
    }
    return to_python(renyi::io::to_json(stats));
  }, "n"_a, "count"_a, "seed"_a, "bins"_a = 60, "threads"_a = 0, "include_hd"_a = false);

  // Figures
  m.def("iso_entropy_contours", [](double q, const std::vector<double>& levels, int grid) {
    return polylines(renyi::iso_entropy_contours(renyi::RenyiOrder::of(q), levels, grid));
  }, "q"_a, "levels"_a, "grid"_a = 512);
  m.def("entropy_plane_boundary", [](double q, double s, int n, int samples) {
    return to_python(renyi::io::to_json(renyi::entropy_plane_boundary(q, s, n, samples)));
  }, "q"_a, "s"_a, "n"_a, "samples"_a = 201);
  m.def("profile_with_bounds", [](std::vector<double> p, const std::vector<double>& qs) {
    return to_python(renyi::io::to_json(renyi::profile_with_bounds(vec(std::move(p), false), qs)));
  }, "p"_a, "qs"_a);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = renyi::cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "args"_a, "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
