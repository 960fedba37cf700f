#pragma once

#include "gabor/duality.hpp"
#include "gabor/subgroup.hpp"

namespace gabor {

// ||f||_{S0,g} = L^1 norm of V_g f over the phase space.
struct S0Norm {
  double value = 0.0;
};

// The phase space G x G^ viewed as a group in its own right: same cyclic
// factors twice, carrying weight 1/|G| per point.  Under this convention the
// dual of the phase space again has weight 1/|G|, so the S0 machinery applies
// to functions of (x, omega) unchanged.
GroupSpec doubled_spec(const GroupSpec& spec);
MeasureConvention phase_convention(const GroupSpec& spec);

// V_g f laid out as a window over the doubled spec, index = phase index.
Window stft_as_window(const Window& f, const Window& g, const MeasureConvention& conv = {});

// Throws std::domain_error when g = 0.
S0Norm s0_norm(const Window& f, const Window& g, const MeasureConvention& conv = {});

struct CovarianceResiduals {
  double shift_of_argument;   // V_g(pi(nu) f) against the shifted-and-phased V_g f
  double shift_of_both;       // V_{pi(nu) g}(pi(nu) f) against the phased V_g f
  double product_fourier;     // Fourier transform of V_g f * conj(V_g f)
};

CovarianceResiduals stft_covariance_residuals(const Window& f, const Window& g,
                                              const PhasePoint& nu,
                                              const MeasureConvention& conv = {});

// Max residual of F(V_{g1} f1 * conj(V_{g2} f2))(beta, alpha) =
// <f1, E_beta T_{-alpha} f2> <E_beta T_{-alpha} g2, g1> over all (beta, alpha).
double stft_product_fourier_residual(const Window& f1, const Window& g1, const Window& f2,
                                     const Window& g2, const MeasureConvention& conv = {});

DualityReport lemma_a1_check(const Window& f, const Window& g, const PhasePoint& nu,
                             double tolerance = 1e-11, const MeasureConvention& conv = {});

// ||V_g f||_{S0, V_g f} = ||f||_{S0,f} ||g||_{S0,g}.  Capped at |G| <= 8.
DualityReport prop_a2_check(const Window& f, const Window& g, double tolerance = 1e-9,
                            const MeasureConvention& conv = {});

// ||V_{g1} f1 * conj(V_{g2} f2)||_{S0, (V_{g0} g0)^2} <=
// ||g0||^2 ||g1||_{S0,g0} ||g2||_{S0,g0} ||f1|| ||f2||.  Capped at |G| <= 6.
DualityReport thm_a3_bound_check(const Window& f1, const Window& f2, const Window& g0,
                                 const Window& g1, const Window& g2,
                                 double tolerance = 1e-9,
                                 const MeasureConvention& conv = {});

// Window-change equivalence:
//   ||g1||^2 ||g2||_{S0,g1}^{-1} ||f||_{S0,g2} <= ||f||_{S0,g1}
//                    <= ||g2||^{-2} ||g2||_{S0,g1} ||f||_{S0,g2}.
// Residual is the larger violation of the two inequalities (0 when both hold).
DualityReport s0_norm_chain_check(const Window& f, const Window& g1, const Window& g2,
                                  double tolerance = 1e-10,
                                  const MeasureConvention& conv = {});

// Finite form of the restriction bound: the weighted L^1 mass of V_g f over a
// subgroup never exceeds weight * |G| times its phase-space L^1 norm.
DualityReport restriction_bound_check(const Window& f, const Window& g,
                                      const PhaseSubgroup& delta,
                                      double tolerance = 1e-12,
                                      const MeasureConvention& conv = {});

// Observed ratio  (optimal Bessel bound) / (||g||_{S0,g}^2 ||g||^2)  for one
// subgroup; the abstract bound only promises some finite constant.
double cor_a4_ratio(const Window& g, const PhaseSubgroup& delta,
                    const MeasureConvention& conv = {});

}  // namespace gabor
