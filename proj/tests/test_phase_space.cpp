#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace gabor;
using testutil::tf_matrix_oracle;

TEST_CASE("time-frequency shifts move and phase delta windows") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);

  const Window shifted = apply_tf_shift({{{1}}, {{0}}}, d0);
  CHECK(std::abs(shifted.values[0]) < 1e-15);
  CHECK(std::abs(shifted.values[1] - 1.0) < 1e-15);

  Window ones = zero_window(z2);
  ones.values.setOnes();
  const Window modulated = apply_tf_shift({{{0}}, {{1}}}, ones);
  CHECK(std::abs(modulated.values[0] - 1.0) < 1e-15);
  CHECK(std::abs(modulated.values[1] + 1.0) < 1e-15);

  const GroupSpec z4({4});
  const Window moved = apply_tf_shift({{{1}}, {{1}}}, delta_window(z4));
  CHECK(std::abs(moved.values[1] - cd{0.0, 1.0}) < 1e-15);  // gamma(1) = i
  CHECK(std::abs(moved.values[0]) + std::abs(moved.values[2]) + std::abs(moved.values[3]) <
        1e-15);
}

TEST_CASE("shifts are unitary") {
  WindowSampler sampler(23);
  const GroupSpec spec({3, 4});
  for (long idx = 0; idx < 144; idx += 7) {
    const PhasePoint nu = phase_at(spec, idx);
    const Window f = sampler.window(spec);
    CHECK(std::abs(norm_sq(apply_tf_shift(nu, f)) - norm_sq(f)) < 1e-12 * norm_sq(f));
  }
}

TEST_CASE("commutation phase examples") {
  const GroupSpec z2({2});
  const PhasePoint t{{{1}}, {{0}}};
  const PhasePoint e_mod{{{0}}, {{1}}};
  CHECK(commutation_phase(z2, t, t).is_zero());
  CHECK(commutation_phase(z2, t, e_mod).q() == Rat(1, 2));

  const GroupSpec z4({4});
  const PhasePoint diag{{{1}}, {{1}}};
  CHECK(commutation_phase(z4, diag, diag).is_zero());
}

TEST_CASE("commutation phase matches matrix composition on random pairs") {
  std::mt19937_64 rng(41);
  for (auto orders : std::vector<std::vector<long>>{{8}, {3, 4}}) {
    const GroupSpec spec{orders};
    const long n2 = spec.order() * spec.order();
    for (int k = 0; k < 100; ++k) {
      const PhasePoint a = phase_at(spec, static_cast<long>(rng() % n2));
      const PhasePoint b = phase_at(spec, static_cast<long>(rng() % n2));
      const Mat ma = tf_matrix_oracle(spec, a);
      const Mat mb = tf_matrix_oracle(spec, b);
      const cd phase = commutation_phase(spec, a, b).unit();
      CHECK(testutil::max_abs(ma * mb - phase * (mb * ma)) < 1e-12);

      // composition collapses to a single shift up to an exact phase
      const cd comp_phase = char_value(spec, b.gamma, a.lambda).conj().unit();
      const Mat mab = tf_matrix_oracle(spec, phase_mul(spec, a, b));
      CHECK(testutil::max_abs(ma * mb - comp_phase * mab) < 1e-12);
    }
  }
}

TEST_CASE("adjoint decomposition gives the exact phase and inverse point") {
  const GroupSpec z4({4});
  const auto [q4, inv4] = adjoint_decomposition(z4, {{{1}}, {{1}}});
  CHECK(q4.q() == Rat(3, 4));
  CHECK(inv4.lambda.residues == std::vector<long>{3});
  CHECK(inv4.gamma.residues == std::vector<long>{3});

  const GroupSpec z2({2});
  const auto [q2, inv2] = adjoint_decomposition(z2, {{{1}}, {{1}}});
  CHECK(q2.q() == Rat(1, 2));
  CHECK(inv2.lambda.residues == std::vector<long>{1});

  const auto [qe, inve] = adjoint_decomposition(z2, phase_identity(z2));
  CHECK(qe.is_zero());
  CHECK(phase_index(z2, inve) == 0);

  std::mt19937_64 rng(4);
  const GroupSpec spec({3, 4});
  for (int k = 0; k < 30; ++k) {
    const PhasePoint nu = phase_at(spec, static_cast<long>(rng() % 144));
    const auto [q, inv] = adjoint_decomposition(spec, nu);
    const Mat lhs = tf_matrix_oracle(spec, nu).adjoint();
    const Mat rhs = q.unit() * tf_matrix_oracle(spec, inv);
    CHECK(testutil::max_abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("full STFT of matched deltas") {
  const GroupSpec z2({2});
  const Window d0 = delta_window(z2);
  const TFCoefficientMap v = stft(d0, d0);
  REQUIRE(v.domain.size() == 4);
  CHECK(v.weight == Rat(1, 2));
  // nonzero only at lambda = 0
  CHECK(std::abs(v.values[0] - 1.0) < 1e-15);
  CHECK(std::abs(v.values[1] - 1.0) < 1e-15);
  CHECK(std::abs(v.values[2]) < 1e-15);
  CHECK(std::abs(v.values[3]) < 1e-15);
}

TEST_CASE("STFT energy identity on random windows") {
  WindowSampler sampler(31);
  const GroupSpec z6({6});
  for (int k = 0; k < 20; ++k) {
    const Window f = sampler.window(z6);
    const Window g = sampler.window(z6);
    const TFCoefficientMap v = stft(f, g);

    // independent double-loop accumulation
    double energy = 0.0;
    for (std::size_t i = 0; i < v.domain.size(); ++i)
      energy += std::norm(inner(f, apply_tf_shift(v.domain[i], g)));
    energy *= rat_to_double(v.weight);

    const double expected = norm_sq(f) * norm_sq(g);
    CHECK(std::abs(energy - expected) <= 1e-10 * expected);
    CHECK(std::abs(rat_to_double(v.weight) * v.values.squaredNorm() - expected) <=
          1e-10 * expected);
    CHECK(v.values.cwiseAbs().maxCoeff() > 0.0);  // f cannot avoid every shift of g
  }
}
