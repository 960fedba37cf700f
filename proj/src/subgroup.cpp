#include "gabor/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gabor {

namespace {

std::vector<long> sorted_flat(const GroupSpec& spec, const std::vector<PhasePoint>& pts) {
  std::vector<long> flat;
  flat.reserve(pts.size());
  for (const auto& p : pts) flat.push_back(phase_index(spec, p));
  std::sort(flat.begin(), flat.end());
  return flat;
}

std::vector<long> closure_flat(const GroupSpec& spec, const std::vector<PhasePoint>& gens) {
  std::set<long> seen{phase_index(spec, phase_identity(spec))};
  std::vector<PhasePoint> frontier{phase_identity(spec)};
  for (const auto& g : gens) {
    if (seen.insert(phase_index(spec, g)).second) frontier.push_back(g);
  }
  // close under products; inverses follow since every element has finite order
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PhasePoint> current;
    current.reserve(seen.size());
    for (long idx : seen) current.push_back(phase_at(spec, idx));
    for (const auto& a : current) {
      for (const auto& b : current) {
        const long idx = phase_index(spec, phase_mul(spec, a, b));
        if (seen.insert(idx).second) grew = true;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PhaseSubgroup::PhaseSubgroup(GroupSpec spec, std::vector<PhasePoint> elements,
                             std::vector<PhasePoint> generators, Rat weight)
    : spec_(std::move(spec)),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      weight_(std::move(weight)) {
  if (weight_ <= 0) throw std::invalid_argument("subgroup weight must be positive");
  flat_ = sorted_flat(spec_, elements_);
  if (std::adjacent_find(flat_.begin(), flat_.end()) != flat_.end())
    throw std::invalid_argument("subgroup element list has duplicates");
  std::vector<PhasePoint> sorted;
  sorted.reserve(flat_.size());
  for (long idx : flat_) sorted.push_back(phase_at(spec_, idx));
  elements_ = std::move(sorted);

  if (elements_.empty() || phase_index(spec_, elements_.front()) != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  for (const auto& a : elements_) {
    if (!contains(phase_inv(spec_, a)))
      throw std::invalid_argument("subgroup not closed under inverses");
    for (const auto& b : elements_) {
      if (!contains(phase_mul(spec_, a, b)))
        throw std::invalid_argument("subgroup not closed under products");
    }
  }
}

bool PhaseSubgroup::contains(const PhasePoint& p) const {
  return std::binary_search(flat_.begin(), flat_.end(), phase_index(spec_, p));
}

PhaseSubgroup PhaseSubgroup::with_weight(Rat w) const {
  return PhaseSubgroup(spec_, elements_, generators_, std::move(w));
}

PhaseSubgroup span(const GroupSpec& spec, const std::vector<PhasePoint>& generators,
                   Rat weight) {
  std::vector<PhasePoint> elems;
  for (long idx : closure_flat(spec, generators)) elems.push_back(phase_at(spec, idx));
  return PhaseSubgroup(spec, std::move(elems), generators, std::move(weight));
}

std::vector<PhaseSubgroup> all_subgroups(const GroupSpec& spec, long cap) {
  const long n2 = spec.order() * spec.order();
  if (n2 > cap) throw std::length_error("all_subgroups: |G|^2 exceeds cap");

  // Grow subgroups one generator at a time; every subgroup is reached since
  // it is the closure of finitely many of its own elements.
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier;
  const std::vector<long> trivial{0};
  seen.insert(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& h : frontier) {
      std::set<long> members(h.begin(), h.end());
      for (long idx = 1; idx < n2; ++idx) {
        if (members.count(idx)) continue;
        std::vector<PhasePoint> gens;
        gens.reserve(h.size());
        for (long e : h) gens.push_back(phase_at(spec, e));
        gens.push_back(phase_at(spec, idx));
        auto closed = closure_flat(spec, gens);
        if (seen.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }

  std::vector<PhaseSubgroup> out;
  out.reserve(seen.size());
  for (const auto& flat : seen) {
    std::vector<PhasePoint> elems;
    elems.reserve(flat.size());
    for (long idx : flat) elems.push_back(phase_at(spec, idx));
    out.emplace_back(spec, std::move(elems));
  }
  std::sort(out.begin(), out.end(), [&](const PhaseSubgroup& a, const PhaseSubgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return sorted_flat(spec, a.elements()) < sorted_flat(spec, b.elements());
  });
  return out;
}

PhasePoint phi_swap(const GroupSpec& spec, const PhasePoint& p) {
  return {GroupElement{p.gamma.residues}, DualElement{neg(spec, p.lambda).residues}};
}

PhaseSubgroup annihilator(const PhaseSubgroup& delta) {
  const GroupSpec& spec = delta.spec();
  // Membership is linear in (beta, alpha), so testing the generators (or the
  // full element list when none were recorded) suffices.
  const auto& probes = delta.generators().empty() ? delta.elements() : delta.generators();
  std::vector<PhasePoint> members;
  const long n2 = spec.order() * spec.order();
  for (long idx = 0; idx < n2; ++idx) {
    const PhasePoint cand = phase_at(spec, idx);  // first slot beta, second alpha
    const DualElement beta{cand.lambda.residues};
    const GroupElement alpha{cand.gamma.residues};
    bool ok = true;
    for (const auto& nu : probes) {
      const RationalPhase total =
          char_value(spec, nu.gamma, alpha) + char_value(spec, beta, nu.lambda);
      if (!total.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(cand);
  }
  return PhaseSubgroup(spec, std::move(members), {}, Rat(1) / volume(delta));
}

PhaseSubgroup adjoint(const PhaseSubgroup& delta) {
  const GroupSpec& spec = delta.spec();
  const auto& probes = delta.generators().empty() ? delta.elements() : delta.generators();
  std::vector<PhasePoint> members;
  const long n2 = spec.order() * spec.order();
  for (long idx = 0; idx < n2; ++idx) {
    const PhasePoint mu = phase_at(spec, idx);
    bool ok = true;
    for (const auto& nu : probes) {
      if (!commutation_phase(spec, mu, nu).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(mu);
  }
  return PhaseSubgroup(spec, std::move(members), {}, Rat(1) / volume(delta));
}

Rat volume(const PhaseSubgroup& delta) {
  return Rat(delta.spec().order()) / (delta.weight() * delta.size());
}

QuotientInfo quotient(const PhaseSubgroup& delta) {
  const GroupSpec& spec = delta.spec();
  const long n2 = spec.order() * spec.order();
  std::vector<bool> covered(n2, false);
  QuotientInfo info;
  info.quotient_weight = Rat(1) / (delta.weight() * spec.order());
  for (long idx = 0; idx < n2; ++idx) {
    if (covered[idx]) continue;
    const PhasePoint rep = phase_at(spec, idx);
    info.coset_reps.push_back(rep);
    for (const auto& nu : delta.elements())
      covered[phase_index(spec, phase_mul(spec, rep, nu))] = true;
  }
  return info;
}

TFCoefficientMap analysis(const Window& f, const Window& g, const PhaseSubgroup& delta,
                          const MeasureConvention& conv) {
  if (f.spec != g.spec || f.spec != delta.spec())
    throw std::invalid_argument("analysis: spec mismatch");
  TFCoefficientMap out;
  out.domain = delta.elements();
  out.weight = delta.weight();
  out.values = Vec(out.domain.size());
  for (std::size_t i = 0; i < out.domain.size(); ++i) {
    out.values[static_cast<long>(i)] = inner(f, apply_tf_shift(out.domain[i], g), conv);
  }
  return out;
}

}  // namespace gabor
