#include "gabor/phase_space.hpp"

#include <stdexcept>

namespace gabor {

PhasePoint phase_identity(const GroupSpec& spec) {
  return {identity_element(spec), identity_dual(spec)};
}

PhasePoint phase_mul(const GroupSpec& spec, const PhasePoint& a, const PhasePoint& b) {
  return {add(spec, a.lambda, b.lambda), add(spec, a.gamma, b.gamma)};
}

PhasePoint phase_inv(const GroupSpec& spec, const PhasePoint& a) {
  return {neg(spec, a.lambda), neg(spec, a.gamma)};
}

long phase_index(const GroupSpec& spec, const PhasePoint& p) {
  return index_of(spec, p.lambda) * spec.order() + index_of(spec, p.gamma);
}

PhasePoint phase_at(const GroupSpec& spec, long index) {
  const long n = spec.order();
  return {element_at(spec, index / n), dual_at(spec, index % n)};
}

std::vector<PhasePoint> enumerate_phase_space(const GroupSpec& spec) {
  const long n2 = spec.order() * spec.order();
  std::vector<PhasePoint> out;
  out.reserve(n2);
  for (long i = 0; i < n2; ++i) out.push_back(phase_at(spec, i));
  return out;
}

Window apply_tf_shift(const PhasePoint& nu, const Window& f) {
  const GroupSpec& spec = f.spec;
  if (nu.lambda.residues.size() != spec.rank())
    throw std::invalid_argument("apply_tf_shift: spec mismatch");
  const long n = spec.order();
  Window out = zero_window(spec);
  for (long xi = 0; xi < n; ++xi) {
    const GroupElement x = element_at(spec, xi);
    const long src = index_of(spec, add(spec, x, neg(spec, nu.lambda)));
    out.values[xi] = char_value(spec, nu.gamma, x).unit() * f.values[src];
  }
  return out;
}

RationalPhase commutation_phase(const GroupSpec& spec, const PhasePoint& nu1,
                                const PhasePoint& nu2) {
  return char_value(spec, nu1.gamma, nu2.lambda) - char_value(spec, nu2.gamma, nu1.lambda);
}

std::pair<RationalPhase, PhasePoint> adjoint_decomposition(const GroupSpec& spec,
                                                           const PhasePoint& nu) {
  return {char_value(spec, nu.gamma, nu.lambda).conj(), phase_inv(spec, nu)};
}

void add_tf_shift_scaled(Mat& m, const GroupSpec& spec, const PhasePoint& nu, cd c) {
  const long n = spec.order();
  for (long xi = 0; xi < n; ++xi) {
    const GroupElement x = element_at(spec, xi);
    const long src = index_of(spec, add(spec, x, neg(spec, nu.lambda)));
    m(xi, src) += c * char_value(spec, nu.gamma, x).unit();
  }
}

TFCoefficientMap stft(const Window& f, const Window& g, const MeasureConvention& conv) {
  if (f.spec != g.spec) throw std::invalid_argument("stft: spec mismatch");
  const GroupSpec& spec = f.spec;
  TFCoefficientMap out;
  out.domain = enumerate_phase_space(spec);
  out.weight = conv.weight_phase(spec);
  out.values = Vec(out.domain.size());
  for (std::size_t i = 0; i < out.domain.size(); ++i) {
    out.values[static_cast<long>(i)] = inner(f, apply_tf_shift(out.domain[i], g), conv);
  }
  return out;
}

}  // namespace gabor
