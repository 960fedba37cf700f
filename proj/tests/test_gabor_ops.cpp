#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "gabor/gabor_ops.hpp"
#include "test_helpers.hpp"

using namespace gabor;

namespace {

PhaseSubgroup full_phase_space(const GroupSpec& spec, Rat weight = Rat(1)) {
  std::vector<PhasePoint> gens;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::vector<long> unit(spec.rank(), 0);
    unit[i] = 1;
    gens.push_back({GroupElement{unit}, identity_dual(spec)});
    gens.push_back({identity_element(spec), DualElement{unit}});
  }
  return span(spec, gens, weight);
}

}  // namespace

TEST_CASE("frame operator of a delta over the full phase space") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);

  const Mat s1 = frame_operator(d0, d0, full_phase_space(z2));
  CHECK(testutil::max_abs(s1 - 2.0 * Mat::Identity(2, 2)) < 1e-14);

  const Mat s2 = frame_operator(d0, d0, full_phase_space(z2, Rat(1, 2)));
  CHECK(testutil::max_abs(s2 - Mat::Identity(2, 2)) < 1e-14);

  const Mat s3 = frame_operator(zero_window(z2), zero_window(z2), full_phase_space(z2));
  CHECK(testutil::max_abs(s3) == 0.0);
}

TEST_CASE("spectral report classifies orthonormal, deficient and generic systems") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);

  const SpectralReport on = spectral_report(d0, span(z2, {{{{1}}, {{0}}}}));
  CHECK(on.is_frame);
  CHECK(on.is_parseval);
  CHECK(on.a_opt == doctest::Approx(1.0));
  CHECK(on.b_opt == doctest::Approx(1.0));

  const SpectralReport single = spectral_report(d0, span(z2, {}));
  CHECK_FALSE(single.is_frame);
  CHECK(single.a_opt == doctest::Approx(1.0));  // smallest nonzero
  CHECK(single.b_opt == doctest::Approx(1.0));
  CHECK(single.eigenvalues.front() == doctest::Approx(0.0));

  // generic window on the critical diagonal, against the Gram spectrum
  const GroupSpec z4({4});
  Window c = zero_window(z4);
  c.values.setConstant(0.5);
  const PhaseSubgroup diag = span(z4, {{{{1}}, {{1}}}});
  const SpectralReport rep = spectral_report(c, diag);

  Mat gram(4, 4);
  std::vector<Window> family;
  for (const auto& nu : diag.elements()) family.push_back(apply_tf_shift(nu, c));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram(i, j) = inner(family[j], family[i]);
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  CHECK(rep.b_opt == doctest::Approx(es.eigenvalues().maxCoeff()).epsilon(1e-10));
}

TEST_CASE("canonical dual windows") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);

  // Parseval system: dual equals the window
  const PhaseSubgroup on = span(z2, {{{{1}}, {{0}}}});
  CHECK((canonical_dual(d0, on).values - d0.values).cwiseAbs().maxCoeff() < 1e-12);

  // S = 2I over the full phase space at counting weight
  const Window dual = canonical_dual(d0, full_phase_space(z2));
  CHECK(std::abs(dual.values[0] - 0.5) < 1e-12);
  CHECK(std::abs(dual.values[1]) < 1e-12);

  // tight frame with bound A: dual is g/A
  WindowSampler sampler(2);
  const Window g = sampler.window(z2);
  const PhaseSubgroup full = full_phase_space(z2);  // tight, A = 2 ||g||^2 / 2
  const SpectralReport rep = spectral_report(g, full);
  REQUIRE(rep.is_tight);
  const Window tight_dual = canonical_dual(g, full);
  CHECK((tight_dual.values - g.values / rep.b_opt).cwiseAbs().maxCoeff() < 1e-10);

  CHECK_THROWS_AS(canonical_dual(d0, span(z2, {})), std::domain_error);
}

TEST_CASE("canonical tight windows normalize the frame") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);

  const PhaseSubgroup on = span(z2, {{{{1}}, {{0}}}});
  CHECK((canonical_tight(d0, on).values - d0.values).cwiseAbs().maxCoeff() < 1e-12);

  const PhaseSubgroup full = full_phase_space(z2);
  const Window t = canonical_tight(d0, full);
  CHECK(std::abs(t.values[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(norm_sq(t) - rat_to_double(volume(full))) < 1e-12);

  WindowSampler sampler(19);
  const GroupSpec z6({6});
  const PhaseSubgroup d = span(z6, {{{{1}}, {{1}}}, {{{3}}, {{0}}}});
  for (int k = 0; k < 5; ++k) {
    const Window g = sampler.window(z6);
    if (!spectral_report(g, d).is_frame) continue;
    const SpectralReport rep = spectral_report(canonical_tight(g, d), d);
    CHECK(rep.a_opt == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.b_opt == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("synthesis is adjoint to analysis and reconstructs") {
  const GroupSpec z4({4});
  WindowSampler sampler(5);
  const PhaseSubgroup diag = span(z4, {{{{1}}, {{1}}}});
  const Window g = sampler.window(z4);

  // delta coefficient at the identity returns the window
  TFCoefficientMap c{diag.elements(), Vec::Zero(diag.size()), diag.weight()};
  c.values[0] = 1.0;
  CHECK((synthesis(c, g, diag).values - g.values).cwiseAbs().maxCoeff() < 1e-13);

  // adjointness <D c, f> = sum w c conj(<f, pi g>)
  for (int k = 0; k < 10; ++k) {
    const Window f = sampler.window(z4);
    TFCoefficientMap rnd{diag.elements(), Vec(diag.size()), diag.weight()};
    for (long i = 0; i < diag.size(); ++i) rnd.values[i] = sampler.complex_normal();
    const cd lhs = inner(synthesis(rnd, g, diag), f);
    const TFCoefficientMap cf = analysis(f, g, diag);
    cd rhs = 0.0;
    for (long i = 0; i < diag.size(); ++i)
      rhs += rat_to_double(diag.weight()) * rnd.values[i] * std::conj(cf.values[i]);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }

  // Parseval reconstruction
  const Window tight = canonical_tight(sampler.window(z4), diag);
  for (int k = 0; k < 5; ++k) {
    const Window f = sampler.window(z4);
    const Window back = synthesis(analysis(f, tight, diag), tight, diag);
    CHECK((back.values - f.values).cwiseAbs().maxCoeff() < 1e-10);
  }

  TFCoefficientMap misaligned{diag.elements(), Vec::Zero(diag.size()), Rat(2)};
  CHECK_THROWS_AS(synthesis(misaligned, g, diag), std::invalid_argument);
}

TEST_CASE("riesz bounds of orthonormal and singleton families") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);

  const SpectralReport on = riesz_bounds(d0, span(z2, {{{{1}}, {{0}}}}));
  CHECK(on.is_frame);  // read as is_riesz
  CHECK(on.a_opt == doctest::Approx(1.0));
  CHECK(on.b_opt == doctest::Approx(1.0));

  WindowSampler sampler(8);
  const Window g = sampler.window(z2);
  const SpectralReport single = riesz_bounds(g, span(z2, {}));
  CHECK(single.a_opt == doctest::Approx(norm_sq(g)));
  CHECK(single.b_opt == doctest::Approx(norm_sq(g)));
}

TEST_CASE("frame operator and Gram share their nonzero spectrum") {
  const GroupSpec z4({4});
  WindowSampler sampler(13);
  const PhaseSubgroup diag = span(z4, {{{{1}}, {{1}}}});
  for (int k = 0; k < 10; ++k) {
    const Window g = sampler.window(z4);
    const SpectralReport s = spectral_report(g, diag);
    const SpectralReport q = riesz_bounds(g, diag);
    CHECK(std::abs(s.b_opt - q.b_opt) < 1e-10 * std::max(1.0, s.b_opt));
    CHECK(std::abs(s.a_opt - q.a_opt) < 1e-10 * std::max(1.0, s.b_opt));
  }
}

TEST_CASE("frame operator commutes with subgroup shifts") {
  WindowSampler sampler(29);
  for (auto orders : std::vector<std::vector<long>>{{6}, {2, 4}}) {
    const GroupSpec spec{orders};
    const PhaseSubgroup d = span(spec, {phase_at(spec, spec.order() + 1)});
    for (int k = 0; k < 5; ++k) {
      const Window g = sampler.window(spec);
      const Mat s = frame_operator(g, g, d);
      for (const auto& nu : d.elements()) {
        const Mat p = testutil::tf_matrix_oracle(spec, nu);
        CHECK((s * p - p * s).norm() <= 1e-10 * std::max(1.0, s.norm()));
      }
    }
  }
}

TEST_CASE("norm of the window sits between the scaled frame bounds") {
  WindowSampler sampler(37);
  const GroupSpec z4({4});
  for (const auto& d : all_subgroups(z4)) {
    const double vol = rat_to_double(volume(d));
    for (int k = 0; k < 5; ++k) {
      const Window g = sampler.window(z4);
      const SpectralReport rep = spectral_report(g, d);
      if (!rep.is_frame) continue;
      const double n2 = norm_sq(g);
      CHECK(rep.a_opt * vol <= n2 * (1 + 1e-9));
      CHECK(n2 <= rep.b_opt * vol * (1 + 1e-9));
      CHECK(std::abs(norm_sq(canonical_tight(g, d)) - vol) <= 1e-9 * std::max(1.0, vol));
    }
  }
}
