#include "gabor/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace gabor {

json json_real(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;  // normalize -0
}

json json_complex(cd z) { return json::array({json_real(z.real()), json_real(z.imag())}); }

json to_json(const GroupSpec& spec) { return {{"orders", spec.orders()}}; }

json to_json(const Window& w) {
  json values = json::array();
  for (long i = 0; i < w.size(); ++i) values.push_back(json_complex(w.values[i]));
  return {{"orders", w.spec.orders()}, {"values", values}};
}

json to_json(const PhasePoint& p) {
  return json::array({p.lambda.residues, p.gamma.residues});
}

json to_json(const PhaseSubgroup& delta) {
  json elements = json::array();
  for (const auto& p : delta.elements()) elements.push_back(to_json(p));
  json j = {{"orders", delta.spec().orders()},
            {"elements", elements},
            {"weight", rat_to_string(delta.weight())}};
  if (!delta.generators().empty()) {
    json gens = json::array();
    for (const auto& p : delta.generators()) gens.push_back(to_json(p));
    j["generators"] = gens;
  }
  return j;
}

json to_json(const TFCoefficientMap& c) {
  json points = json::array();
  json values = json::array();
  for (std::size_t i = 0; i < c.domain.size(); ++i) {
    points.push_back(to_json(c.domain[i]));
    values.push_back(json_complex(c.values[static_cast<long>(i)]));
  }
  return {{"points", points}, {"weight", rat_to_string(c.weight)}, {"values", values}};
}

json to_json(const SpectralReport& rep) {
  json eigs = json::array();
  for (double ev : rep.eigenvalues) eigs.push_back(json_real(ev));
  return {{"eigenvalues", eigs},
          {"A_opt", json_real(rep.a_opt)},
          {"B_opt", json_real(rep.b_opt)},
          {"is_frame", rep.is_frame},
          {"is_tight", rep.is_tight},
          {"is_parseval", rep.is_parseval},
          {"tolerance", rep.tolerance}};
}

json to_json(const DualityReport& rep) {
  return {{"theorem_id", rep.theorem_id},
          {"residual", json_real(rep.residual)},
          {"verdict", rep.verdict},
          {"tolerance", rep.tolerance},
          {"witnesses", rep.witnesses}};
}

namespace {

json to_json(const r2::Vec2& v) {
  return json::array({rat_to_string(v.x), rat_to_string(v.y)});
}

json to_json(const r2::Polygon& poly) {
  json j = json::array();
  for (const auto& v : poly) j.push_back(to_json(v));
  return j;
}

json to_json(const r2::Mat2& m) {
  return json::array({json::array({rat_to_string(m.a), rat_to_string(m.b)}),
                      json::array({rat_to_string(m.c), rat_to_string(m.d)})});
}

r2::Vec2 vec2_from_json(const json& j) {
  return {rat_from_string(j.at(0).get<std::string>()),
          rat_from_string(j.at(1).get<std::string>())};
}

r2::Polygon polygon_from_json(const json& j) {
  r2::Polygon poly;
  for (const auto& v : j) poly.push_back(vec2_from_json(v));
  return poly;
}

}  // namespace

json to_json(const r2::TightFrameCertificateR2& cert) {
  json pieces = json::array();
  for (std::size_t i = 0; i < cert.strips.size(); ++i) {
    pieces.push_back({{"z", cert.strips[i].z},
                      {"K", to_json(cert.strips[i].piece)},
                      {"y", {cert.translates[i].x, cert.translates[i].y}}});
  }
  json support = json::array();
  for (const auto& poly : cert.window_support) support.push_back(to_json(poly));
  return {{"P", to_json(cert.P)},
          {"Q", to_json(cert.Q)},
          {"r", cert.r},
          {"s", cert.s},
          {"a1", to_json(cert.a1)},
          {"pieces", pieces},
          {"window_support", support},
          {"volume", rat_to_string(cert.volume)},
          {"amplitude_sq", rat_to_string(cert.amplitude_sq)},
          {"checks",
           {{"partition_ok", cert.partition_ok},
            {"integral_translates_ok", cert.integral_translates_ok},
            {"translates_disjoint_ok", cert.translates_disjoint_ok},
            {"adjoint_orthonormal", cert.valid()}}},
          {"shift_bound", cert.shift_bound}};
}

json to_json(const r2::R2ValidationReport& rep) {
  return {{"identity_value", json_real(rep.identity_value)},
          {"max_off_identity", json_real(rep.max_off_identity)},
          {"tolerance", rep.tolerance},
          {"ok", rep.ok}};
}

GroupSpec group_spec_from_json(const json& j) {
  return GroupSpec(j.at("orders").get<std::vector<long>>());
}

Window window_from_json(const json& j) {
  const GroupSpec spec = group_spec_from_json(j);
  const auto& values = j.at("values");
  if (static_cast<long>(values.size()) != spec.order())
    throw std::invalid_argument("window length does not match group order");
  Window w = zero_window(spec);
  for (long i = 0; i < spec.order(); ++i) {
    w.values[i] = cd{values.at(i).at(0).get<double>(), values.at(i).at(1).get<double>()};
  }
  return w;
}

PhasePoint phase_point_from_json(const GroupSpec& spec, const json& j) {
  GroupElement lambda{j.at(0).get<std::vector<long>>()};
  DualElement gamma{j.at(1).get<std::vector<long>>()};
  if (lambda.residues.size() != spec.rank() || gamma.residues.size() != spec.rank())
    throw std::invalid_argument("phase point rank mismatch");
  // reduce into canonical residues
  return {add(spec, lambda, identity_element(spec)), add(spec, gamma, identity_dual(spec))};
}

PhaseSubgroup subgroup_from_json(const json& j) {
  const GroupSpec spec = group_spec_from_json(j);
  Rat weight(1);
  if (j.contains("weight")) weight = rat_from_string(j.at("weight").get<std::string>());
  if (j.contains("elements")) {
    std::vector<PhasePoint> elems;
    for (const auto& p : j.at("elements")) elems.push_back(phase_point_from_json(spec, p));
    std::vector<PhasePoint> gens;
    if (j.contains("generators"))
      for (const auto& p : j.at("generators")) gens.push_back(phase_point_from_json(spec, p));
    return PhaseSubgroup(spec, std::move(elems), std::move(gens), weight);
  }
  std::vector<PhasePoint> gens;
  for (const auto& p : j.at("generators")) gens.push_back(phase_point_from_json(spec, p));
  return span(spec, gens, weight);
}

r2::Mat2 mat2_from_json(const json& j) {
  return {rat_from_string(j.at(0).at(0).get<std::string>()),
          rat_from_string(j.at(0).at(1).get<std::string>()),
          rat_from_string(j.at(1).at(0).get<std::string>()),
          rat_from_string(j.at(1).at(1).get<std::string>())};
}

r2::TightFrameCertificateR2 certificate_from_json(const json& j) {
  r2::TightFrameCertificateR2 cert;
  cert.P = mat2_from_json(j.at("P"));
  cert.Q = mat2_from_json(j.at("Q"));
  cert.r = j.at("r").get<int>();
  cert.s = j.at("s").get<int>();
  cert.a1 = vec2_from_json(j.at("a1"));
  for (const auto& piece : j.at("pieces")) {
    cert.strips.push_back({piece.at("z").get<long>(), polygon_from_json(piece.at("K"))});
    cert.translates.push_back(
        {piece.at("y").at(0).get<long>(), piece.at("y").at(1).get<long>()});
  }
  for (const auto& poly : j.at("window_support"))
    cert.window_support.push_back(polygon_from_json(poly));
  cert.volume = rat_from_string(j.at("volume").get<std::string>());
  cert.amplitude_sq = rat_from_string(j.at("amplitude_sq").get<std::string>());
  const auto& checks = j.at("checks");
  cert.partition_ok = checks.at("partition_ok").get<bool>();
  cert.integral_translates_ok = checks.at("integral_translates_ok").get<bool>();
  cert.translates_disjoint_ok = checks.at("translates_disjoint_ok").get<bool>();
  cert.shift_bound = j.at("shift_bound").get<long>();
  return cert;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace gabor
