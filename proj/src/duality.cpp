#include "gabor/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace gabor {

namespace {

cd tf_inner(const Window& a, const PhasePoint& mu, const Window& b,
            const MeasureConvention& conv) {
  return inner(a, apply_tf_shift(mu, b), conv);
}

// pi(chi)^* f, via the exact phase of the adjoint decomposition.
Window apply_tf_adjoint(const PhasePoint& chi, const Window& f) {
  const auto [phase, inv] = adjoint_decomposition(f.spec, chi);
  Window out = apply_tf_shift(inv, f);
  out.values *= phase.unit();
  return out;
}

nlohmann::json point_json(const PhasePoint& p) {
  return nlohmann::json::array({p.lambda.residues, p.gamma.residues});
}

}  // namespace

DualityReport wexler_raz_check(const Window& g, const Window& h, const PhaseSubgroup& delta,
                               double tolerance, const MeasureConvention& conv) {
  if (g.spec != h.spec || g.spec != delta.spec())
    throw std::invalid_argument("wexler_raz_check: spec mismatch");
  const long n = g.spec.order();
  const double vol = rat_to_double(volume(delta));

  const Mat s = frame_operator(g, h, delta, conv);
  const double residual_dual = (s - Mat::Identity(n, n)).norm();

  const PhaseSubgroup adj = adjoint(delta);
  double residual_bio = 0.0;
  PhasePoint worst = phase_identity(g.spec);
  for (const auto& mu : adj.elements()) {
    const bool is_id = phase_index(g.spec, mu) == 0;
    const double dev = std::abs(tf_inner(h, mu, g, conv) - (is_id ? vol : 0.0));
    if (dev > residual_bio) {
      residual_bio = dev;
      worst = mu;
    }
  }

  const bool bio_ok = residual_bio <= tolerance;
  const bool dual_ok = residual_dual <= tolerance;
  const bool agree = bio_ok == dual_ok;
  const double offending = std::max(residual_bio, residual_dual);
  const bool marginal = !agree && offending <= 10.0 * tolerance;

  DualityReport rep;
  rep.theorem_id = "wexler_raz";
  rep.tolerance = tolerance;
  rep.verdict = agree || marginal;
  rep.residual = rep.verdict ? 0.0 : offending;
  rep.witnesses = {{"residual_bio", residual_bio},
                   {"residual_dual", residual_dual},
                   {"is_dual_pair", bio_ok && dual_ok},
                   {"marginal", marginal},
                   {"volume", rat_to_string(volume(delta))},
                   {"worst_mu", point_json(worst)}};
  return rep;
}

Mat janssen_operator(const Window& g, const Window& h, const PhaseSubgroup& delta,
                     const MeasureConvention& conv) {
  if (g.spec != h.spec || g.spec != delta.spec())
    throw std::invalid_argument("janssen_operator: spec mismatch");
  const long n = g.spec.order();
  const double inv_vol = rat_to_double(Rat(1) / volume(delta));
  const PhaseSubgroup adj = adjoint(delta);
  Mat j = Mat::Zero(n, n);
  for (const auto& mu : adj.elements()) {
    add_tf_shift_scaled(j, g.spec, mu, inv_vol * tf_inner(h, mu, g, conv));
  }
  return j;
}

DualityReport janssen_check(const Window& g, const Window& h, const PhaseSubgroup& delta,
                            double tolerance, const MeasureConvention& conv) {
  const Mat s = frame_operator(g, h, delta, conv);
  const Mat j = janssen_operator(g, h, delta, conv);
  DualityReport rep;
  rep.theorem_id = "janssen";
  rep.residual = (s - j).norm();
  rep.tolerance = tolerance * std::max(1.0, s.norm());
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"frame_operator_norm", s.norm()},
                   {"adjoint_size", adjoint(delta).size()}};
  return rep;
}

cd fundamental_function(const Window& f1, const Window& f2, const Window& g,
                        const Window& h, const PhaseSubgroup& delta, const PhasePoint& chi,
                        const MeasureConvention& conv) {
  const Window a = apply_tf_adjoint(chi, f1);
  const Window b = apply_tf_adjoint(chi, f2);
  const double w = rat_to_double(delta.weight());
  cd acc = 0.0;
  for (const auto& nu : delta.elements()) {
    acc += w * inner(a, apply_tf_shift(nu, g), conv) *
           inner(apply_tf_shift(nu, h), b, conv);
  }
  return acc;
}

DualityReport figa_check(const Window& f1, const Window& f2, const Window& g,
                         const Window& h, const PhaseSubgroup& delta, double tolerance,
                         const MeasureConvention& conv) {
  if (f1.spec != delta.spec() || f2.spec != delta.spec() || g.spec != delta.spec() ||
      h.spec != delta.spec())
    throw std::invalid_argument("figa_check: spec mismatch");
  const GroupSpec& spec = delta.spec();
  const double w = rat_to_double(delta.weight());
  const double inv_vol = rat_to_double(Rat(1) / volume(delta));

  cd lhs = 0.0;
  for (const auto& nu : delta.elements()) {
    lhs += w * inner(f1, apply_tf_shift(nu, g), conv) *
           inner(apply_tf_shift(nu, h), f2, conv);
  }

  const PhaseSubgroup adj = adjoint(delta);
  struct Term {
    PhasePoint mu;
    cd value;  // <h, pi(mu) g> <pi(mu) f1, f2>
  };
  std::vector<Term> terms;
  terms.reserve(adj.elements().size());
  cd rhs = 0.0;
  for (const auto& mu : adj.elements()) {
    const cd t = tf_inner(h, mu, g, conv) * inner(apply_tf_shift(mu, f1), f2, conv);
    terms.push_back({mu, t});
    rhs += inv_vol * t;
  }
  const double residual_sum = std::abs(lhs - rhs);

  // Pointwise expansion of phi at every coset representative: the character
  // attached to mu = (alpha, beta) evaluates at chi = (x, omega) as
  // omega(alpha) conj(beta(x)).
  double residual_pointwise = 0.0;
  for (const auto& chi : quotient(delta).coset_reps) {
    const cd phi = fundamental_function(f1, f2, g, h, delta, chi, conv);
    cd expansion = 0.0;
    for (const auto& term : terms) {
      const RationalPhase q = char_value(spec, chi.gamma, term.mu.lambda) -
                              char_value(spec, term.mu.gamma, chi.lambda);
      expansion += inv_vol * q.unit() * term.value;
    }
    residual_pointwise = std::max(residual_pointwise, std::abs(phi - expansion));
  }

  DualityReport rep;
  rep.theorem_id = "figa";
  rep.residual = std::max(residual_sum, residual_pointwise);
  rep.tolerance = tolerance;
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"lhs", {lhs.real(), lhs.imag()}},
                   {"rhs", {rhs.real(), rhs.imag()}},
                   {"residual_sum", residual_sum},
                   {"residual_pointwise", residual_pointwise}};
  return rep;
}

DualityReport bessel_duality_check(const Window& g, const PhaseSubgroup& delta,
                                   double tolerance, const MeasureConvention& conv) {
  const SpectralReport direct = spectral_report(g, delta, tolerance, conv);
  const SpectralReport dual = spectral_report(g, adjoint(delta), tolerance, conv);
  DualityReport rep;
  rep.theorem_id = "bessel_duality";
  rep.residual = std::abs(direct.b_opt - dual.b_opt);
  rep.tolerance = tolerance * std::max(direct.b_opt, 0.0);
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"bessel_bound", direct.b_opt},
                   {"adjoint_bessel_bound", dual.b_opt},
                   {"adjoint_weight", rat_to_string(Rat(1) / volume(delta))}};
  return rep;
}

DualityReport duality_principle_check(const Window& g, const PhaseSubgroup& delta,
                                      double tolerance, const MeasureConvention& conv) {
  const SpectralReport frame = spectral_report(g, delta, tolerance, conv);
  const double vol = rat_to_double(volume(delta));
  const SpectralReport riesz = riesz_bounds(g, adjoint(delta).with_weight(Rat(1)),
                                            tolerance, conv);

  const double resid_a = std::abs(riesz.a_opt - vol * frame.a_opt);
  const double resid_b = std::abs(riesz.b_opt - vol * frame.b_opt);
  const bool agree = frame.is_frame == riesz.is_frame;

  DualityReport rep;
  rep.theorem_id = "duality_principle";
  rep.tolerance = tolerance * frame.b_opt;
  rep.residual = std::max(resid_a, resid_b);
  if (!agree) rep.residual = std::max(rep.residual, 1.0);
  rep.verdict = rep.residual <= rep.tolerance;
  rep.witnesses = {{"frame_bounds", {frame.a_opt, frame.b_opt}},
                   {"riesz_bounds", {riesz.a_opt, riesz.b_opt}},
                   {"volume", rat_to_string(volume(delta))},
                   {"is_frame", frame.is_frame},
                   {"is_riesz", riesz.is_frame}};
  return rep;
}

DualityReport density_verdict(const Window& g, const PhaseSubgroup& delta, double tolerance,
                              const MeasureConvention& conv) {
  const GroupSpec& spec = delta.spec();
  const Rat vol = volume(delta);
  const SpectralReport frame = spectral_report(g, delta, tolerance, conv);
  const bool counting = delta.weight() == 1;
  const double gnorm2 = norm_sq(g, conv);

  double worst = 0.0;
  nlohmann::json witnesses = {{"volume", rat_to_string(vol)},
                              {"window_norm_sq", gnorm2},
                              {"frame_bounds", {frame.a_opt, frame.b_opt}},
                              {"is_frame", frame.is_frame},
                              {"cocompact", true},
                              {"counting_weight", counting}};

  if (frame.is_frame && counting && vol > 1)
    throw std::logic_error("density violation: frame over a counting-weight subgroup with vol > 1");

  if (counting) {
    // Total Riesz family <=> critically sampled frame.
    const bool square = delta.size() == spec.order();
    const bool total_riesz =
        square && riesz_bounds(g, delta, tolerance, conv).is_frame;
    const bool critical_frame = (vol == 1) && frame.is_frame;
    if (total_riesz != critical_frame)
      throw std::logic_error("density violation: total Riesz and critical sampling disagree");
    witnesses["total_riesz"] = total_riesz;
  }

  if (frame.is_frame) {
    const double v = rat_to_double(vol);
    const double scale = std::max(1.0, frame.b_opt * v);
    const double low = frame.a_opt * v - gnorm2;
    const double high = gnorm2 - frame.b_opt * v;
    const double tight_dev =
        std::abs(norm_sq(canonical_tight(g, delta, tolerance, conv), conv) - v);
    worst = std::max({low, high, tight_dev, 0.0});
    if (worst > tolerance * scale)
      throw std::logic_error("density violation: norm bounds against volume failed");
    witnesses["norm_bound_slack"] = {gnorm2 - frame.a_opt * v, frame.b_opt * v - gnorm2};
    witnesses["tight_norm_deviation"] = tight_dev;
  }

  DualityReport rep;
  rep.theorem_id = "density";
  rep.residual = worst;
  rep.tolerance = tolerance * std::max(1.0, frame.b_opt * rat_to_double(vol));
  rep.verdict = true;
  rep.witnesses = std::move(witnesses);
  return rep;
}

}  // namespace gabor
