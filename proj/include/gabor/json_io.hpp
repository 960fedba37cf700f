#pragma once

#include <string>

#include <json.hpp>

#include "gabor/duality.hpp"
#include "gabor/euclid_r2.hpp"
#include "gabor/gabor_ops.hpp"
#include "gabor/s0.hpp"

namespace gabor {

using nlohmann::json;

// Doubles are rounded to 12 decimal places on output so equal computations
// serialize identically.
json json_real(double x);
json json_complex(cd z);

json to_json(const GroupSpec& spec);
json to_json(const Window& w);
json to_json(const PhasePoint& p);
json to_json(const PhaseSubgroup& delta);
json to_json(const TFCoefficientMap& c);
json to_json(const SpectralReport& rep);
json to_json(const DualityReport& rep);
json to_json(const r2::TightFrameCertificateR2& cert);
json to_json(const r2::R2ValidationReport& rep);

GroupSpec group_spec_from_json(const json& j);
Window window_from_json(const json& j);
PhasePoint phase_point_from_json(const GroupSpec& spec, const json& j);

// Accepts {"orders", "generators", "weight"} or {"orders", "elements", "weight"}.
PhaseSubgroup subgroup_from_json(const json& j);

r2::Mat2 mat2_from_json(const json& j);
r2::TightFrameCertificateR2 certificate_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace gabor
