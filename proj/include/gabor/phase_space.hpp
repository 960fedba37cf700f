#pragma once

#include <utility>
#include <vector>

#include "gabor/group.hpp"

namespace gabor {

// A point nu = (lambda, gamma) of the phase space G x G^.  The associated
// time-frequency shift is pi(nu) = E_gamma T_lambda.
struct PhasePoint {
  GroupElement lambda;
  DualElement gamma;

  auto operator<=>(const PhasePoint&) const = default;
};

PhasePoint phase_identity(const GroupSpec& spec);
PhasePoint phase_mul(const GroupSpec& spec, const PhasePoint& a, const PhasePoint& b);
PhasePoint phase_inv(const GroupSpec& spec, const PhasePoint& a);

// Lexicographic flat index in (lambda, gamma): the canonical ordering used for
// coefficient alignment and subgroup element lists.
long phase_index(const GroupSpec& spec, const PhasePoint& p);
PhasePoint phase_at(const GroupSpec& spec, long index);
std::vector<PhasePoint> enumerate_phase_space(const GroupSpec& spec);

// (pi(nu)f)(x) = gamma(x) f(x - lambda).  O(|G|): index permutation plus a
// phase per entry; the |G| x |G| matrix is never formed here.
Window apply_tf_shift(const PhasePoint& nu, const Window& f);

// pi(nu1) pi(nu2) = exp(2 pi i q) pi(nu2) pi(nu1) with
// q = <gamma1, lambda2> - <gamma2, lambda1> mod 1, exact.
RationalPhase commutation_phase(const GroupSpec& spec, const PhasePoint& nu1,
                                const PhasePoint& nu2);

// pi(nu)^* = exp(2 pi i q) pi(nu^{-1}) with q = -<gamma, lambda> mod 1.
std::pair<RationalPhase, PhasePoint> adjoint_decomposition(const GroupSpec& spec,
                                                           const PhasePoint& nu);

// Accumulates M += c * pi(nu) without materializing pi(nu).
void add_tf_shift_scaled(Mat& m, const GroupSpec& spec, const PhasePoint& nu, cd c);

// Time-frequency coefficients over an explicit list of phase points, each
// carrying the same Haar weight.
struct TFCoefficientMap {
  std::vector<PhasePoint> domain;
  Vec values;
  Rat weight;
};

// Full short-time Fourier transform: V_g f(nu) = <f, pi(nu) g> over all of
// G x G^, with the phase-space weight.  Naive O(|G|^3).
TFCoefficientMap stft(const Window& f, const Window& g, const MeasureConvention& conv = {});

}  // namespace gabor
