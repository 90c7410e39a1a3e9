#pragma once

#include <json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/bounds.hpp"
#include "renyi/extrapolate.hpp"
#include "renyi/figures.hpp"
#include "renyi/prob_vec.hpp"
#include "renyi/sampling.hpp"

namespace renyi::io {

using nlohmann::json;

/// Parses a JSON array of numbers, or whitespace/comma separated tokens.
ProbVec parse_prob_vec(std::string_view text,
                       NormalizeMode mode = NormalizeMode::Strict);
ProbVec read_prob_vec_file(const std::string& path,
                           NormalizeMode mode = NormalizeMode::Strict);

/// JSON array with 17 significant digits per component; parses back to the
/// identical doubles.
std::string prob_vec_to_json(const ProbVec& p);

/// printf-style %.{digits}g; NaN is written as "nan".
std::string format_number(double value, int digits = 12);

json to_json(const BoundResult& b);
json to_json(const BoundPair& b);
json to_json(const NamedEstimate& e);
json entropy_report(const ProbVec& p);
json to_json(const DeviationStats& stats);
json to_json(const PlaneBoundary& boundary);
json to_json(const ProfileDataset& ds);
json contours_to_json(double q, std::span<const Polyline> lines);

/// bin_left,bin_right,density_delta1,density_delta2[,density_delta_hd]
std::string deviation_csv(const DeviationStats& stats);
/// curve,label,index,x,y
std::string plane_csv(const PlaneBoundary& boundary);
/// q,entropy,h2_lower,h2_upper,h3_lower,h3_upper,line_lower,line_upper
std::string profile_csv(const ProfileDataset& ds);
/// q,polyline,label,index,u,v,x1,x2,x3
std::string contours_csv(double q, std::span<const Polyline> lines);

}  // namespace renyi::io
