#include "gabor/gabor_ops.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gabor {

Mat frame_operator(const Window& g, const Window& h, const PhaseSubgroup& delta,
                   const MeasureConvention& conv) {
  if (g.spec != h.spec || g.spec != delta.spec())
    throw std::invalid_argument("frame_operator: spec mismatch");
  const long n = g.spec.order();
  const double c = rat_to_double(delta.weight() * conv.weight_G);
  Mat s = Mat::Zero(n, n);
  for (const auto& nu : delta.elements()) {
    const Window hg = apply_tf_shift(nu, h);
    const Window gg = apply_tf_shift(nu, g);
    s.noalias() += c * (hg.values * gg.values.adjoint());
  }
  return s;
}

namespace {

std::vector<double> hermitian_eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen-solver failed to converge");
  std::vector<double> eigs(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace

SpectralReport classify_spectrum(std::vector<double> eigenvalues, double tolerance) {
  std::sort(eigenvalues.begin(), eigenvalues.end());
  SpectralReport rep;
  rep.tolerance = tolerance;
  rep.eigenvalues = std::move(eigenvalues);
  if (rep.eigenvalues.empty()) return rep;

  rep.b_opt = rep.eigenvalues.back();
  const double floor = tolerance * std::max(rep.b_opt, 0.0);
  rep.is_frame = rep.b_opt > 0.0 && rep.eigenvalues.front() > floor;
  if (rep.is_frame) {
    rep.a_opt = rep.eigenvalues.front();
  } else {
    rep.a_opt = 0.0;
    for (double ev : rep.eigenvalues) {
      if (ev > floor) {
        rep.a_opt = ev;
        break;
      }
    }
  }
  if (rep.b_opt > 0.0) {
    rep.is_tight = rep.is_frame && (rep.b_opt - rep.a_opt) / rep.b_opt <= tolerance;
    rep.is_parseval = rep.is_tight && std::abs(rep.b_opt - 1.0) <= tolerance;
  }
  return rep;
}

SpectralReport spectral_report(const Window& g, const PhaseSubgroup& delta,
                               double tolerance, const MeasureConvention& conv) {
  return classify_spectrum(hermitian_eigenvalues(frame_operator(g, g, delta, conv)),
                           tolerance);
}

Window canonical_dual(const Window& g, const PhaseSubgroup& delta, double tolerance,
                      const MeasureConvention& conv) {
  const Mat s = frame_operator(g, g, delta, conv);
  if (!classify_spectrum(hermitian_eigenvalues(s), tolerance).is_frame)
    throw std::domain_error("canonical_dual: system is not a frame");
  Window out{g.spec, s.ldlt().solve(g.values)};
  return out;
}

Window canonical_tight(const Window& g, const PhaseSubgroup& delta, double tolerance,
                       const MeasureConvention& conv) {
  const Mat s = frame_operator(g, g, delta, conv);
  Eigen::SelfAdjointEigenSolver<Mat> solver((s + s.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen-solver failed to converge");
  const auto& eigs = solver.eigenvalues();
  const double floor = tolerance * std::max(eigs.maxCoeff(), 0.0);
  if (eigs.minCoeff() <= floor)
    throw std::domain_error("canonical_tight: system is not a frame");
  Eigen::VectorXd inv_sqrt = eigs.array().sqrt().inverse();
  const Mat root = solver.eigenvectors() * inv_sqrt.asDiagonal() *
                   solver.eigenvectors().adjoint();
  return {g.spec, root * g.values};
}

Window synthesis(const TFCoefficientMap& c, const Window& g, const PhaseSubgroup& delta) {
  if (g.spec != delta.spec()) throw std::invalid_argument("synthesis: spec mismatch");
  if (c.domain != delta.elements() || c.weight != delta.weight())
    throw std::invalid_argument("synthesis: coefficients not aligned with subgroup");
  const double w = rat_to_double(delta.weight());
  Window out = zero_window(g.spec);
  for (std::size_t i = 0; i < c.domain.size(); ++i) {
    out.values += w * c.values[static_cast<long>(i)] *
                  apply_tf_shift(c.domain[i], g).values;
  }
  return out;
}

Mat gram_matrix(const Window& g, const PhaseSubgroup& delta, const MeasureConvention& conv) {
  if (g.spec != delta.spec()) throw std::invalid_argument("gram_matrix: spec mismatch");
  const long m = delta.size();
  const double w = rat_to_double(delta.weight());
  std::vector<Window> shifted;
  shifted.reserve(m);
  for (const auto& mu : delta.elements()) shifted.push_back(apply_tf_shift(mu, g));
  Mat gram(m, m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      gram(i, j) = w * inner(shifted[j], shifted[i], conv);
  return gram;
}

SpectralReport riesz_bounds(const Window& g, const PhaseSubgroup& delta, double tolerance,
                            const MeasureConvention& conv) {
  return classify_spectrum(hermitian_eigenvalues(gram_matrix(g, delta, conv)), tolerance);
}

}  // namespace gabor
