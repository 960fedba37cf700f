#include "gabor/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gabor {

GroupSpec::GroupSpec(std::vector<long> orders) : orders_(std::move(orders)) {
  order_ = 1;
  for (long n : orders_) {
    if (n < 1) throw std::invalid_argument("group factor order must be >= 1");
    order_ *= n;
  }
}

RationalPhase::RationalPhase(Rat q) : q_(std::move(q)) {
  // reduce mod 1 into [0,1)
  mpz_class num = q_.get_num(), den = q_.get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  q_ = Rat(r, den);
  q_.canonicalize();
}

RationalPhase RationalPhase::operator+(const RationalPhase& o) const {
  return RationalPhase(q_ + o.q_);
}

RationalPhase RationalPhase::operator-(const RationalPhase& o) const {
  return RationalPhase(q_ - o.q_);
}

RationalPhase RationalPhase::conj() const { return RationalPhase(-q_); }

cd RationalPhase::unit() const {
  const double t = 2.0 * std::numbers::pi * rat_to_double(q_);
  return {std::cos(t), std::sin(t)};
}

// --- element arithmetic -----------------------------------------------------

namespace {

std::vector<long> residues_at(const GroupSpec& spec, long index) {
  std::vector<long> r(spec.rank());
  for (std::size_t i = spec.rank(); i-- > 0;) {
    const long n = spec.orders()[i];
    r[i] = index % n;
    index /= n;
  }
  return r;
}

long flat_index(const GroupSpec& spec, const std::vector<long>& r) {
  if (r.size() != spec.rank()) throw std::invalid_argument("element rank mismatch");
  long idx = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const long n = spec.orders()[i];
    long v = r[i] % n;
    if (v < 0) v += n;
    idx = idx * n + v;
  }
  return idx;
}

std::vector<long> add_residues(const GroupSpec& spec, const std::vector<long>& a,
                               const std::vector<long>& b) {
  if (a.size() != spec.rank() || b.size() != spec.rank())
    throw std::invalid_argument("element rank mismatch");
  std::vector<long> r(spec.rank());
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const long n = spec.orders()[i];
    r[i] = ((a[i] + b[i]) % n + n) % n;  // inputs may arrive unreduced
  }
  return r;
}

std::vector<long> neg_residues(const GroupSpec& spec, const std::vector<long>& a) {
  if (a.size() != spec.rank()) throw std::invalid_argument("element rank mismatch");
  std::vector<long> r(spec.rank());
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const long n = spec.orders()[i];
    r[i] = ((n - a[i]) % n + n) % n;
  }
  return r;
}

}  // namespace

std::vector<GroupElement> enumerate_group(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (long i = 0; i < spec.order(); ++i) out.push_back({residues_at(spec, i)});
  return out;
}

GroupElement element_at(const GroupSpec& spec, long index) { return {residues_at(spec, index)}; }
long index_of(const GroupSpec& spec, const GroupElement& x) { return flat_index(spec, x.residues); }
DualElement dual_at(const GroupSpec& spec, long index) { return {residues_at(spec, index)}; }
long index_of(const GroupSpec& spec, const DualElement& w) { return flat_index(spec, w.residues); }

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return {add_residues(spec, a.residues, b.residues)};
}
GroupElement neg(const GroupSpec& spec, const GroupElement& a) {
  return {neg_residues(spec, a.residues)};
}
DualElement add(const GroupSpec& spec, const DualElement& a, const DualElement& b) {
  return {add_residues(spec, a.residues, b.residues)};
}
DualElement neg(const GroupSpec& spec, const DualElement& a) {
  return {neg_residues(spec, a.residues)};
}

GroupElement identity_element(const GroupSpec& spec) {
  return {std::vector<long>(spec.rank(), 0)};
}
DualElement identity_dual(const GroupSpec& spec) {
  return {std::vector<long>(spec.rank(), 0)};
}

RationalPhase char_value(const GroupSpec& spec, const DualElement& w, const GroupElement& x) {
  if (w.residues.size() != spec.rank() || x.residues.size() != spec.rank())
    throw std::invalid_argument("char_value: spec mismatch");
  Rat q(0);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    q += Rat(w.residues[i] * x.residues[i], spec.orders()[i]);
  }
  return RationalPhase(q);
}

// --- L^2(G) -----------------------------------------------------------------

Window zero_window(const GroupSpec& spec) { return {spec, Vec::Zero(spec.order())}; }

Window delta_window(const GroupSpec& spec, long index) {
  Window w = zero_window(spec);
  w.values[index] = 1.0;
  return w;
}

cd inner(const Window& f, const Window& g, const MeasureConvention& conv) {
  if (f.spec != g.spec) throw std::invalid_argument("inner: spec mismatch");
  return rat_to_double(conv.weight_G) * (g.values.adjoint() * f.values)(0);
}

double norm_sq(const Window& f, const MeasureConvention& conv) {
  return rat_to_double(conv.weight_G) * f.values.squaredNorm();
}

Window fourier(const Window& f, const MeasureConvention& conv) {
  const GroupSpec& spec = f.spec;
  const long n = spec.order();
  const double w = rat_to_double(conv.weight_G);
  Window out = zero_window(spec);
  for (long wi = 0; wi < n; ++wi) {
    const DualElement dual = dual_at(spec, wi);
    cd acc = 0.0;
    for (long xi = 0; xi < n; ++xi) {
      acc += f.values[xi] * char_value(spec, dual, element_at(spec, xi)).conj().unit();
    }
    out.values[wi] = w * acc;
  }
  return out;
}

Window inverse_fourier(const Window& fhat, const MeasureConvention& conv) {
  const GroupSpec& spec = fhat.spec;
  const long n = spec.order();
  const double wd = rat_to_double(conv.weight_dual(spec));
  Window out = zero_window(spec);
  for (long xi = 0; xi < n; ++xi) {
    const GroupElement x = element_at(spec, xi);
    cd acc = 0.0;
    for (long wi = 0; wi < n; ++wi) {
      acc += fhat.values[wi] * char_value(spec, dual_at(spec, wi), x).unit();
    }
    out.values[xi] = wd * acc;
  }
  return out;
}

}  // namespace gabor
