#include "renyi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"

namespace renyi::io {

namespace {

std::string ingredient_list(unsigned mask) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (!(mask & bit)) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(kUsesH0, "H0");
  add(kUsesH2, "H2");
  add(kUsesH3, "H3");
  add(kUsesN, "N");
  return out;
}

json polyline_json(const Polyline& line) {
  json pts = json::array();
  for (const auto& p : line.points) pts.push_back({p.x, p.y});
  return {{"label", line.label}, {"points", std::move(pts)}};
}

json channel_json(const DeviationChannel& ch) {
  return {{"name", ch.name},         {"counts", ch.counts},
          {"density", ch.density},   {"mean", ch.mean},
          {"stddev", ch.stddev},     {"mean_abs", ch.mean_abs},
          {"min", ch.min},           {"max", ch.max}};
}

void append_curve(std::ostringstream& os, const char* curve,
                  const Polyline& line) {
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    os << curve << ",\"" << line.label << "\"," << i << ','
       << format_number(line.points[i].x) << ','
       << format_number(line.points[i].y) << '\n';
  }
}

}  // namespace

ProbVec parse_prob_vec(std::string_view text, NormalizeMode mode) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw EntropyError(ErrorCode::EmptyVector, "no probability values given");
  }
  std::vector<double> values;
  if (text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw EntropyError(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_array()) {
      throw EntropyError(ErrorCode::ParseError, "expected a JSON array");
    }
    for (const auto& v : doc) {
      if (!v.is_number()) {
        throw EntropyError(ErrorCode::ParseError, "non-numeric array element");
      }
      values.push_back(v.get<double>());
    }
  } else {
    std::string buf(text);
    for (auto& c : buf) {
      if (c == ',') c = ' ';
    }
    std::istringstream is(buf);
    std::string token;
    while (is >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw EntropyError(ErrorCode::ParseError, "bad number '" + token + "'");
      }
      values.push_back(v);
    }
  }
  return ProbVec::make(std::move(values), mode);
}

ProbVec read_prob_vec_file(const std::string& path, NormalizeMode mode) {
  std::ifstream in(path);
  if (!in) throw EntropyError(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_prob_vec(ss.str(), mode);
}

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string prob_vec_to_json(const ProbVec& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += format_number(p[i], 17);
  }
  return out + "]";
}

json to_json(const BoundResult& b) {
  return {{"value", b.value},
          {"side", to_string(b.side)},
          {"rigor", to_string(b.rigor)},
          {"source", b.source}};
}

json to_json(const BoundPair& b) {
  return {{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}};
}

json to_json(const NamedEstimate& e) {
  return {{"name", e.name},
          {"value", e.estimate.value()},
          {"rigor", to_string(e.estimate.rigor())},
          {"source", e.estimate.source()},
          {"ingredients", ingredient_list(e.estimate.ingredients())}};
}

json entropy_report(const ProbVec& p) {
  const auto purity = purity_stats(p);
  return {
      {"N", p.size()},
      {"shannon", shannon(p).nats},
      {"renyi",
       {{"0", renyi(p, RenyiOrder::zero()).nats},
        {"1", shannon(p).nats},
        {"2", renyi(p, 2.0).nats},
        {"3", renyi(p, 3.0).nats},
        {"inf", renyi(p, RenyiOrder::infinity()).nats}}},
      {"purity",
       {{"coincidence_index", purity.coincidence_index},
        {"participation_ratio", purity.participation_ratio},
        {"linear_entropy", purity.linear_entropy}}},
      {"structural_entropy", structural_entropy(p)},
      {"tsallis_2", tsallis(p, 2.0)},
  };
}

json to_json(const DeviationStats& s) {
  json out = {{"N", s.n},
              {"sample_count", s.sample_count},
              {"seed", s.seed},
              {"algorithm", s.algorithm},
              {"bin_edges", s.bin_edges},
              {"delta1", channel_json(s.delta1)},
              {"delta2", channel_json(s.delta2)},
              {"sandwich_violations", s.sandwich_violations},
              {"star_outside_sandwich", s.star_outside_sandwich},
              {"dominance_violations", s.dominance_violations}};
  if (s.delta_hd) out["delta_hd"] = channel_json(*s.delta_hd);
  return out;
}

json to_json(const PlaneBoundary& b) {
  json cascade = json::array();
  for (const auto& arc : b.lower_cascade) cascade.push_back(polyline_json(arc));
  json lattice = json::array();
  for (const auto& p : b.lattice_points) lattice.push_back({p.x, p.y});
  json out = {{"q", b.q},
              {"s", b.s},
              {"N", b.n},
              {"upper_arc", polyline_json(b.upper_arc)},
              {"lower_cascade", std::move(cascade)},
              {"lattice_points", std::move(lattice)},
              {"monotonicity_line", polyline_json(b.monotonicity_line)}};
  if (b.simple_upper_curve) {
    out["simple_upper_curve"] = polyline_json(*b.simple_upper_curve);
  }
  return out;
}

json to_json(const ProfileDataset& ds) {
  json rows = json::array();
  for (const auto& r : ds.rows) {
    rows.push_back({{"q", std::isinf(r.q) ? json("inf") : json(r.q)},
                    {"entropy", r.entropy},
                    {"h2_lower", r.h2_lower},
                    {"h2_upper", r.h2_upper},
                    {"h3_lower", r.h3_lower},
                    {"h3_upper", r.h3_upper},
                    {"line_lower", r.line_lower},
                    {"line_upper", r.line_upper}});
  }
  return {{"N", ds.n},
          {"markers",
           {{"H1", ds.h1}, {"H_star", ds.h_star}, {"q", 1.0}}},
          {"H2", ds.h2},
          {"H3", ds.h3},
          {"H_up", ds.h_up},
          {"H_d23", ds.h_d23},
          {"rows", std::move(rows)}};
}

json contours_to_json(double q, std::span<const Polyline> lines) {
  json arr = json::array();
  for (const auto& l : lines) arr.push_back(polyline_json(l));
  return {{"q", std::isinf(q) ? json("inf") : json(q)},
          {"frame", "simplex-isometric"},
          {"polylines", std::move(arr)}};
}

std::string deviation_csv(const DeviationStats& s) {
  std::ostringstream os;
  os << "bin_left,bin_right,density_delta1,density_delta2";
  if (s.delta_hd) os << ",density_delta_hd";
  os << '\n';
  for (std::size_t b = 0; b + 1 < s.bin_edges.size(); ++b) {
    os << format_number(s.bin_edges[b]) << ',' << format_number(s.bin_edges[b + 1])
       << ',' << format_number(s.delta1.density[b]) << ','
       << format_number(s.delta2.density[b]);
    if (s.delta_hd) os << ',' << format_number(s.delta_hd->density[b]);
    os << '\n';
  }
  return os.str();
}

std::string plane_csv(const PlaneBoundary& b) {
  std::ostringstream os;
  os << "curve,label,index,x,y\n";
  append_curve(os, "upper", b.upper_arc);
  for (const auto& arc : b.lower_cascade) append_curve(os, "cascade", arc);
  append_curve(os, "monotonicity", b.monotonicity_line);
  if (b.simple_upper_curve) append_curve(os, "simple_upper", *b.simple_upper_curve);
  for (std::size_t k = 0; k < b.lattice_points.size(); ++k) {
    os << "lattice,\"Q_" << (k + 1) << "\",0," << format_number(b.lattice_points[k].x)
       << ',' << format_number(b.lattice_points[k].y) << '\n';
  }
  return os.str();
}

std::string profile_csv(const ProfileDataset& ds) {
  std::ostringstream os;
  os << "q,entropy,h2_lower,h2_upper,h3_lower,h3_upper,line_lower,line_upper\n";
  for (const auto& r : ds.rows) {
    os << format_number(r.q) << ',' << format_number(r.entropy) << ','
       << format_number(r.h2_lower) << ',' << format_number(r.h2_upper) << ','
       << format_number(r.h3_lower) << ',' << format_number(r.h3_upper) << ','
       << format_number(r.line_lower) << ',' << format_number(r.line_upper)
       << '\n';
  }
  return os.str();
}

std::string contours_csv(double q, std::span<const Polyline> lines) {
  std::ostringstream os;
  os << "q,polyline,label,index,u,v,x1,x2,x3\n";
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& line = lines[l];
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      double x1, x2, x3;
      SimplexChart::to_simplex(line.points[i], x1, x2, x3);
      os << format_number(q) << ',' << l << ',' << line.label << ',' << i << ','
         << format_number(line.points[i].x) << ','
         << format_number(line.points[i].y) << ',' << format_number(x1) << ','
         << format_number(x2) << ',' << format_number(x3) << '\n';
    }
  }
  return os.str();
}

}  // namespace renyi::io
