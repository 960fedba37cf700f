#include "gabor/s0.hpp"

#include <cmath>
#include <stdexcept>

namespace gabor {

GroupSpec doubled_spec(const GroupSpec& spec) {
  std::vector<long> orders = spec.orders();
  orders.insert(orders.end(), spec.orders().begin(), spec.orders().end());
  return GroupSpec(orders);
}

MeasureConvention phase_convention(const GroupSpec& spec) {
  return MeasureConvention{Rat(1, spec.order())};
}

Window stft_as_window(const Window& f, const Window& g, const MeasureConvention& conv) {
  if (f.spec != g.spec) throw std::invalid_argument("stft_as_window: spec mismatch");
  const TFCoefficientMap coeffs = stft(f, g, conv);
  return {doubled_spec(f.spec), coeffs.values};
}

S0Norm s0_norm(const Window& f, const Window& g, const MeasureConvention& conv) {
  if (g.values.norm() == 0.0) throw std::domain_error("s0_norm: zero window");
  const TFCoefficientMap coeffs = stft(f, g, conv);
  return {rat_to_double(coeffs.weight) * coeffs.values.cwiseAbs().sum()};
}

CovarianceResiduals stft_covariance_residuals(const Window& f, const Window& g,
                                              const PhasePoint& nu,
                                              const MeasureConvention& conv) {
  const GroupSpec& spec = f.spec;
  const long n = spec.order();
  const GroupElement& alpha = nu.lambda;
  const DualElement& beta = nu.gamma;

  const Window vgf = stft_as_window(f, g, conv);
  const Window shifted_f = apply_tf_shift(nu, f);
  const Window shifted_g = apply_tf_shift(nu, g);

  CovarianceResiduals res{0.0, 0.0, 0.0};

  // (a): V_g(pi(nu) f)(x, w) = beta(alpha) conj(w(alpha)) V_g f(x-alpha, w-beta)
  const Window lhs_a = stft_as_window(shifted_f, g, conv);
  const cd beta_alpha = char_value(spec, beta, alpha).unit();
  for (long xi = 0; xi < n; ++xi) {
    const GroupElement x = element_at(spec, xi);
    const long xs = index_of(spec, add(spec, x, neg(spec, alpha)));
    for (long wi = 0; wi < n; ++wi) {
      const DualElement w = dual_at(spec, wi);
      const long ws = index_of(spec, add(spec, w, neg(spec, beta)));
      const cd expected =
          beta_alpha * char_value(spec, w, alpha).conj().unit() * vgf.values[xs * n + ws];
      res.shift_of_argument =
          std::max(res.shift_of_argument, std::abs(lhs_a.values[xi * n + wi] - expected));
    }
  }

  // (b): V_{pi(nu) g}(pi(nu) f)(x, w) = beta(x) conj(w(alpha)) V_g f(x, w)
  const Window lhs_b = stft_as_window(shifted_f, shifted_g, conv);
  for (long xi = 0; xi < n; ++xi) {
    const GroupElement x = element_at(spec, xi);
    const cd beta_x = char_value(spec, beta, x).unit();
    for (long wi = 0; wi < n; ++wi) {
      const cd expected = beta_x * char_value(spec, dual_at(spec, wi), alpha).conj().unit() *
                          vgf.values[xi * n + wi];
      res.shift_of_both =
          std::max(res.shift_of_both, std::abs(lhs_b.values[xi * n + wi] - expected));
    }
  }

  res.product_fourier = stft_product_fourier_residual(f, g, f, g, conv);
  return res;
}

double stft_product_fourier_residual(const Window& f1, const Window& g1, const Window& f2,
                                     const Window& g2, const MeasureConvention& conv) {
  const GroupSpec& spec = f1.spec;
  const long n = spec.order();
  const MeasureConvention pconv = phase_convention(spec);

  const Window v1 = stft_as_window(f1, g1, conv);
  const Window v2 = stft_as_window(f2, g2, conv);
  Window product{doubled_spec(spec), v1.values.cwiseProduct(v2.values.conjugate())};
  const Window transform = fourier(product, pconv);

  // The dual index of the doubled spec splits as (beta, alpha).
  double residual = 0.0;
  for (long bi = 0; bi < n; ++bi) {
    const DualElement beta = dual_at(spec, bi);
    for (long ai = 0; ai < n; ++ai) {
      const GroupElement alpha = element_at(spec, ai);
      const PhasePoint shift{neg(spec, alpha), beta};  // E_beta T_{-alpha}
      const cd expected = inner(f1, apply_tf_shift(shift, f2), conv) *
                          inner(apply_tf_shift(shift, g2), g1, conv);
      residual = std::max(residual, std::abs(transform.values[bi * n + ai] - expected));
    }
  }
  return residual;
}

DualityReport lemma_a1_check(const Window& f, const Window& g, const PhasePoint& nu,
                             double tolerance, const MeasureConvention& conv) {
  const CovarianceResiduals res = stft_covariance_residuals(f, g, nu, conv);
  DualityReport rep;
  rep.theorem_id = "lemma_a1";
  rep.residual = std::max({res.shift_of_argument, res.shift_of_both, res.product_fourier});
  rep.tolerance = tolerance;
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"shift_of_argument", res.shift_of_argument},
                   {"shift_of_both", res.shift_of_both},
                   {"product_fourier", res.product_fourier}};
  return rep;
}

DualityReport prop_a2_check(const Window& f, const Window& g, double tolerance,
                            const MeasureConvention& conv) {
  if (f.spec.order() > 8) throw std::length_error("prop_a2_check: |G| > 8");
  if (f.values.norm() == 0.0 || g.values.norm() == 0.0)
    throw std::domain_error("prop_a2_check: zero window");

  const Window vgf = stft_as_window(f, g, conv);
  const double lhs = s0_norm(vgf, vgf, phase_convention(f.spec)).value;
  const double rhs = s0_norm(f, f, conv).value * s0_norm(g, g, conv).value;

  DualityReport rep;
  rep.theorem_id = "prop_a2";
  rep.residual = std::abs(lhs - rhs);
  rep.tolerance = tolerance * std::max(1.0, rhs);
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"lhs", lhs}, {"rhs", rhs}};
  return rep;
}

DualityReport thm_a3_bound_check(const Window& f1, const Window& f2, const Window& g0,
                                 const Window& g1, const Window& g2, double tolerance,
                                 const MeasureConvention& conv) {
  if (f1.spec.order() > 6) throw std::length_error("thm_a3_bound_check: |G| > 6");
  if (g0.values.norm() == 0.0 || g1.values.norm() == 0.0 || g2.values.norm() == 0.0)
    throw std::domain_error("thm_a3_bound_check: zero window");

  const GroupSpec dspec = doubled_spec(f1.spec);
  const MeasureConvention pconv = phase_convention(f1.spec);

  const Window v1 = stft_as_window(f1, g1, conv);
  const Window v2 = stft_as_window(f2, g2, conv);
  const Window phi{dspec, v1.values.cwiseProduct(v2.values.conjugate())};
  const Window phi0 = stft_as_window(g0, g0, conv);
  const Window phi0_sq{dspec, phi0.values.cwiseProduct(phi0.values)};

  const double lhs = s0_norm(phi, phi0_sq, pconv).value;
  const double rhs = norm_sq(g0, conv) * s0_norm(g1, g0, conv).value *
                     s0_norm(g2, g0, conv).value * std::sqrt(norm_sq(f1, conv)) *
                     std::sqrt(norm_sq(f2, conv));

  DualityReport rep;
  rep.theorem_id = "thm_a3";
  rep.residual = std::max(0.0, lhs - rhs);
  rep.tolerance = tolerance * std::max(1.0, rhs);
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"lhs", lhs}, {"rhs", rhs}, {"slack", rhs - lhs}};
  return rep;
}

DualityReport s0_norm_chain_check(const Window& f, const Window& g1, const Window& g2,
                                  double tolerance, const MeasureConvention& conv) {
  const double f_g1 = s0_norm(f, g1, conv).value;
  const double f_g2 = s0_norm(f, g2, conv).value;
  const double g2_g1 = s0_norm(g2, g1, conv).value;

  const double lower = norm_sq(g1, conv) / g2_g1 * f_g2;
  const double upper = g2_g1 / norm_sq(g2, conv) * f_g2;
  const double scale = std::max({1.0, lower, upper});

  DualityReport rep;
  rep.theorem_id = "s0_chain";
  rep.residual = std::max({0.0, lower - f_g1, f_g1 - upper});
  rep.tolerance = tolerance * scale;
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"lower", lower}, {"value", f_g1}, {"upper", upper}};
  return rep;
}

DualityReport restriction_bound_check(const Window& f, const Window& g,
                                      const PhaseSubgroup& delta, double tolerance,
                                      const MeasureConvention& conv) {
  const TFCoefficientMap restricted = analysis(f, g, delta, conv);
  const double lhs =
      rat_to_double(restricted.weight) * restricted.values.cwiseAbs().sum();
  const double rhs = rat_to_double(delta.weight() * delta.spec().order()) *
                     s0_norm(f, g, conv).value;

  DualityReport rep;
  rep.theorem_id = "s0_restriction";
  rep.residual = std::max(0.0, lhs - rhs);
  rep.tolerance = tolerance * std::max(1.0, rhs);
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"restricted_l1", lhs}, {"bound", rhs}};
  return rep;
}

double cor_a4_ratio(const Window& g, const PhaseSubgroup& delta,
                    const MeasureConvention& conv) {
  const double bessel = spectral_report(g, delta, kDefaultTolerance, conv).b_opt;
  const double s0 = s0_norm(g, g, conv).value;
  return bessel / (s0 * s0 * norm_sq(g, conv));
}

}  // namespace gabor
