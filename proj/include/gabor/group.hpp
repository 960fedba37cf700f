#pragma once

#include <Eigen/Dense>

#include <compare>
#include <complex>
#include <cstddef>
#include <vector>

#include "gabor/rational.hpp"

namespace gabor {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// A finite abelian group Z_{n1} x ... x Z_{nk}.  Elements are enumerated in
// mixed-radix order, last coordinate fastest, so index 0 is the identity and
// the enumeration is stable across runs.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<long> orders);

  const std::vector<long>& orders() const { return orders_; }
  long order() const { return order_; }  // |G|
  std::size_t rank() const { return orders_.size(); }

  bool operator==(const GroupSpec&) const = default;

 private:
  std::vector<long> orders_;
  long order_ = 1;
};

struct GroupElement {
  std::vector<long> residues;
  auto operator<=>(const GroupElement&) const = default;
};

// A character of G, written additively: the element (w1,...,wk) is the
// character x |-> exp(2*pi*i * sum_i w_i x_i / n_i).
struct DualElement {
  std::vector<long> residues;
  auto operator<=>(const DualElement&) const = default;
};

// A unit complex number exp(2*pi*i*q) carried as the exact rational q mod 1.
// Products of characters become additions of q, so structural identities
// (commutation phases, annihilator membership) are tested exactly.
class RationalPhase {
 public:
  RationalPhase() : q_(0) {}
  explicit RationalPhase(Rat q);

  const Rat& q() const { return q_; }
  bool is_zero() const { return q_ == 0; }

  RationalPhase operator+(const RationalPhase& o) const;
  RationalPhase operator-(const RationalPhase& o) const;
  RationalPhase conj() const;  // negation mod 1

  cd unit() const;  // exp(2*pi*i*q), the only place doubles appear

  bool operator==(const RationalPhase&) const = default;

 private:
  Rat q_;  // invariant: 0 <= q < 1
};

// Haar weight per point of G.  The dual group weight is forced by the
// Plancherel theorem, and the phase-space weight is their product, which is
// always 1/|G| independent of the choice on G.
struct MeasureConvention {
  Rat weight_G = Rat(1);

  Rat weight_dual(const GroupSpec& spec) const {
    return Rat(1) / (weight_G * spec.order());
  }
  Rat weight_phase(const GroupSpec& spec) const {
    return Rat(1, spec.order());
  }
};

// A complex vector indexed by G in enumeration order.
struct Window {
  GroupSpec spec;
  Vec values;

  long size() const { return static_cast<long>(values.size()); }
};

// --- element arithmetic -----------------------------------------------------

std::vector<GroupElement> enumerate_group(const GroupSpec& spec);

GroupElement element_at(const GroupSpec& spec, long index);
long index_of(const GroupSpec& spec, const GroupElement& x);
DualElement dual_at(const GroupSpec& spec, long index);
long index_of(const GroupSpec& spec, const DualElement& w);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& a);
DualElement add(const GroupSpec& spec, const DualElement& a, const DualElement& b);
DualElement neg(const GroupSpec& spec, const DualElement& a);

GroupElement identity_element(const GroupSpec& spec);
DualElement identity_dual(const GroupSpec& spec);

// Exact character pairing: q = sum_i w_i x_i / n_i mod 1.
RationalPhase char_value(const GroupSpec& spec, const DualElement& w, const GroupElement& x);

// --- L^2(G) -----------------------------------------------------------------

Window zero_window(const GroupSpec& spec);
Window delta_window(const GroupSpec& spec, long index = 0);

cd inner(const Window& f, const Window& g, const MeasureConvention& conv = {});
double norm_sq(const Window& f, const MeasureConvention& conv = {});

// f_hat(w) = sum_x f(x) conj(w(x)) * weight_G.  The result is indexed by the
// dual group, which shares the spec of G.
Window fourier(const Window& f, const MeasureConvention& conv = {});
Window inverse_fourier(const Window& fhat, const MeasureConvention& conv = {});

}  // namespace gabor
