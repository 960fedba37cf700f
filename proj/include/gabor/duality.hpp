#pragma once

#include <string>

#include <json.hpp>

#include "gabor/gabor_ops.hpp"

namespace gabor {

// Outcome of one theorem check.  `residual` measures how far the instance is
// from satisfying the theorem's claim (0 when it holds), so the invariant
// verdict == (residual <= tolerance) is maintained by every check.  The raw
// quantities behind the verdict live in `witnesses`.
struct DualityReport {
  std::string theorem_id;
  double residual = 0.0;
  bool verdict = false;
  double tolerance = 0.0;
  nlohmann::json witnesses;
};

// Biorthogonality over the adjoint subgroup versus the dual-frame property.
// The verdict asserts the equivalence of the two; a disagreement whose
// offending residual lies within [tol, 10 tol] is flagged as marginal rather
// than failed, since eigenvalue rounding can land instances on the boundary.
DualityReport wexler_raz_check(const Window& g, const Window& h, const PhaseSubgroup& delta,
                               double tolerance = kDefaultTolerance,
                               const MeasureConvention& conv = {});

// vol(Delta)^{-1} sum_{mu in adjoint} <h, pi(mu) g> pi(mu).  Coincides with
// the mixed frame operator; absolute summability is automatic here.
Mat janssen_operator(const Window& g, const Window& h, const PhaseSubgroup& delta,
                     const MeasureConvention& conv = {});

// Frobenius distance between the frame operator and its shift expansion.
DualityReport janssen_check(const Window& g, const Window& h, const PhaseSubgroup& delta,
                            double tolerance = 1e-10, const MeasureConvention& conv = {});

// phi(chi) = sum_{nu in Delta} weight <pi(chi)* f1, pi(nu) g><pi(nu) h, pi(chi)* f2>,
// the Delta-periodic function whose Fourier coefficients drive the duality
// theorems.
cd fundamental_function(const Window& f1, const Window& f2, const Window& g,
                        const Window& h, const PhaseSubgroup& delta, const PhasePoint& chi,
                        const MeasureConvention& conv = {});

// Coefficient identity: the Delta-sum of analysis products equals the
// adjoint-side sum, and the pointwise shift expansion of phi holds at every
// coset representative.
DualityReport figa_check(const Window& f1, const Window& f2, const Window& g,
                         const Window& h, const PhaseSubgroup& delta,
                         double tolerance = 1e-10, const MeasureConvention& conv = {});

// Optimal Bessel bounds of the system and of its adjoint system (at weight
// vol(Delta)^{-1}) coincide.
DualityReport bessel_duality_check(const Window& g, const PhaseSubgroup& delta,
                                   double tolerance = kDefaultTolerance,
                                   const MeasureConvention& conv = {});

// Frame bounds (A, B) of the system match the Riesz bounds
// (vol A, vol B) of the adjoint system under counting weight, and the frame
// and Riesz verdicts agree.
DualityReport duality_principle_check(const Window& g, const PhaseSubgroup& delta,
                                      double tolerance = kDefaultTolerance,
                                      const MeasureConvention& conv = {});

// Density theorems: the quotient is always compact here; a frame over a
// counting-weight subgroup forces vol <= 1; total Riesz families occur
// exactly at vol = 1; and A vol <= ||g||^2 <= B vol with
// ||S^{-1/2} g||^2 = vol for frames.  A genuine violation would falsify the
// implementation, so it raises std::logic_error instead of returning false.
DualityReport density_verdict(const Window& g, const PhaseSubgroup& delta,
                              double tolerance = kDefaultTolerance,
                              const MeasureConvention& conv = {});

}  // namespace gabor
