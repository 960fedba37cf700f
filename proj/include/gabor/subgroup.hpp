#pragma once

#include <vector>

#include "gabor/phase_space.hpp"

namespace gabor {

// A subgroup of the phase space G x G^ with an explicit Haar weight per
// point.  Elements are kept sorted by phase index, so equality of subgroups
// is equality of element lists.
class PhaseSubgroup {
 public:
  PhaseSubgroup() = default;

  // Validates that `elements` contains the identity and is closed under the
  // group operation and inverses.
  PhaseSubgroup(GroupSpec spec, std::vector<PhasePoint> elements,
                std::vector<PhasePoint> generators = {}, Rat weight = Rat(1));

  const GroupSpec& spec() const { return spec_; }
  const std::vector<PhasePoint>& elements() const { return elements_; }
  const std::vector<PhasePoint>& generators() const { return generators_; }
  const Rat& weight() const { return weight_; }
  long size() const { return static_cast<long>(elements_.size()); }

  bool contains(const PhasePoint& p) const;

  PhaseSubgroup with_weight(Rat w) const;

  bool operator==(const PhaseSubgroup& o) const {
    return spec_ == o.spec_ && flat_ == o.flat_;
  }

 private:
  GroupSpec spec_;
  std::vector<PhasePoint> elements_;
  std::vector<PhasePoint> generators_;
  Rat weight_ = Rat(1);
  std::vector<long> flat_;  // sorted phase indices, for membership tests
};

// Coset representatives of (G x G^)/Delta together with the quotient weight
// forced by Weil's formula: quotient_weight * weight * |G| = 1.
struct QuotientInfo {
  std::vector<PhasePoint> coset_reps;
  Rat quotient_weight;
};

// Smallest subgroup containing the generators, by closure iteration.
PhaseSubgroup span(const GroupSpec& spec, const std::vector<PhasePoint>& generators,
                   Rat weight = Rat(1));

// Every subgroup of G x G^ exactly once, weight 1, sorted canonically.
// Throws if |G|^2 exceeds the cap.
std::vector<PhaseSubgroup> all_subgroups(const GroupSpec& spec, long cap = 256);

// The measure-preserving isomorphism (lambda, gamma) |-> (gamma, -lambda)
// from G x G^ to G^ x G.  It maps the adjoint subgroup onto the annihilator.
PhasePoint phi_swap(const GroupSpec& spec, const PhasePoint& p);

// Annihilator of Delta in G^ x G: all (beta, alpha) with
// <gamma, alpha> + <beta, lambda> = 0 mod 1 for every (lambda, gamma) in
// Delta.  The result is returned as a PhaseSubgroup whose first slot holds
// beta and second slot holds alpha.  Carries weight 1/vol(Delta).
PhaseSubgroup annihilator(const PhaseSubgroup& delta);

// Adjoint of Delta: all phase points whose time-frequency shifts commute
// with every shift from Delta.  Carries weight 1/vol(Delta).
PhaseSubgroup adjoint(const PhaseSubgroup& delta);

// vol(Delta) = |G| / (weight * |Delta|), the total mass of the quotient
// under the Weil-normalized measure.
Rat volume(const PhaseSubgroup& delta);

QuotientInfo quotient(const PhaseSubgroup& delta);

// Restriction of the STFT to Delta, with Delta's weight.
TFCoefficientMap analysis(const Window& f, const Window& g, const PhaseSubgroup& delta,
                          const MeasureConvention& conv = {});

}  // namespace gabor
