#pragma once

#include <vector>

#include "gabor/subgroup.hpp"

namespace gabor {

// The system {pi(nu) g : nu in Delta}.
struct GaborSystem {
  Window g;
  PhaseSubgroup delta;
};

// Spectrum of a frame operator or Gram matrix with the derived verdicts.
// a_opt is the smallest eigenvalue when the operator has full rank, otherwise
// the smallest nonzero one (reported with is_frame = false).
struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  double a_opt = 0.0;
  double b_opt = 0.0;
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  double tolerance = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-9;

// Mixed frame operator S = sum_{nu in Delta} weight * <., pi(nu) g> pi(nu) h.
// Hermitian positive semidefinite when g = h.
Mat frame_operator(const Window& g, const Window& h, const PhaseSubgroup& delta,
                   const MeasureConvention& conv = {});

SpectralReport spectral_report(const Window& g, const PhaseSubgroup& delta,
                               double tolerance = kDefaultTolerance,
                               const MeasureConvention& conv = {});

// Classifies an explicit Hermitian PSD spectrum; shared by frame and Gram
// reports.
SpectralReport classify_spectrum(std::vector<double> eigenvalues, double tolerance);

// Canonical dual window S^{-1} g.  Requires the frame property.
Window canonical_dual(const Window& g, const PhaseSubgroup& delta,
                      double tolerance = kDefaultTolerance,
                      const MeasureConvention& conv = {});

// Canonical tight window S^{-1/2} g, via Hermitian eigendecomposition.
Window canonical_tight(const Window& g, const PhaseSubgroup& delta,
                       double tolerance = kDefaultTolerance,
                       const MeasureConvention& conv = {});

// D c = sum_nu weight * c(nu) pi(nu) g; adjoint of analysis.
Window synthesis(const TFCoefficientMap& c, const Window& g, const PhaseSubgroup& delta);

// Weighted Gram matrix [weight * <pi(mu') g, pi(mu) g>] of the system over
// `delta` (typically an adjoint subgroup), and its spectrum.  is_frame is to
// be read as is_riesz: the Gram has full rank.
Mat gram_matrix(const Window& g, const PhaseSubgroup& delta,
                const MeasureConvention& conv = {});
SpectralReport riesz_bounds(const Window& g, const PhaseSubgroup& delta,
                            double tolerance = kDefaultTolerance,
                            const MeasureConvention& conv = {});

}  // namespace gabor
