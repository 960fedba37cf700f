#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gabor/rational.hpp"

namespace gabor::r2 {

using cd = std::complex<double>;

struct Vec2 {
  Rat x, y;
  bool operator==(const Vec2&) const = default;
};

struct IVec2 {
  long x = 0, y = 0;
  bool operator==(const IVec2&) const = default;
};

// Row-major 2x2 rational matrix [[a, b], [c, d]].
struct Mat2 {
  Rat a, b, c, d;

  Rat det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const;
  Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Vec2 col(int i) const { return i == 0 ? Vec2{a, c} : Vec2{b, d}; }
};

// Convex polygon, counterclockwise, no repeated or collinear vertices.
using Polygon = std::vector<Vec2>;

Rat polygon_area(const Polygon& poly);  // exact shoelace, >= 0 for CCW input
Polygon translate(const Polygon& poly, const Vec2& t);
Polygon apply_matrix(const Mat2& m, const Polygon& poly);

// Keep the side normal . v <= c.  Exact; the result is canonicalized.
Polygon clip_halfplane(const Polygon& poly, const Vec2& normal, const Rat& c);

// Area of the intersection of two convex polygons, exact.  Zero means the
// interiors are disjoint; boundary contact does not count.
Rat intersection_area(const Polygon& p, const Polygon& q);

// One piece of the partition of the unit square by the slabs
// z <= <v, a1> / |a1|^2 <= z + 1.
struct Strip {
  long z;
  Polygon piece;
};

// Exact clipping of [0,1]^2 by the slab family of a1.  Only strips of
// positive area are kept.  Throws std::domain_error when a1 = 0.
std::vector<Strip> compute_strips(const Vec2& a1);

// True when the translated pieces K_z + y_z together with all their nonzero
// shifts along Z * a1 are pairwise interior-disjoint (and the pieces
// themselves are disjoint).  The shift range is derived exactly from
// bounding boxes; max_shift receives the largest |m| examined.
bool verify_translates(const std::vector<Strip>& strips, const Vec2& a1,
                       const std::vector<IVec2>& ys, long* max_shift = nullptr);

// Deterministic lexicographic search over integer vectors in an expanding
// max-norm ball; the first valid assignment wins.  The ball is enlarged and
// the search retried once before giving up.
std::vector<IVec2> choose_translates(const std::vector<Strip>& strips, const Vec2& a1);

// Machine-checkable data for one compactly supported tight-frame generator
// over a separable subgroup of arbitrary volume.
struct TightFrameCertificateR2 {
  Mat2 P, Q;
  int r = 1;
  int s = 0;
  Vec2 a1;  // first column of ((QP)^T)^{-1}

  std::vector<Strip> strips;          // the partition of [0,1]^2
  std::vector<IVec2> translates;      // y_z, aligned with strips
  std::vector<Polygon> window_support;  // Q (K_z + y_z)
  Rat volume;        // |det(PQ)|
  Rat amplitude_sq;  // squared amplitude of the final window, 1/|det Q|

  bool partition_ok = false;
  bool integral_translates_ok = false;
  bool translates_disjoint_ok = false;
  long shift_bound = 0;  // every |m| <= shift_bound was checked exactly

  bool valid() const {
    return partition_ok && integral_translates_ok && translates_disjoint_ok;
  }
};

// Builds and verifies the full certificate.  Throws std::domain_error for
// singular P or Q, std::runtime_error when no translate assignment is found.
TightFrameCertificateR2 assemble_certificate(const Mat2& P, const Mat2& Q, int s);

struct R2ValidationReport {
  double identity_value = 0.0;    // <g~, g~>, expected 1
  double max_off_identity = 0.0;  // largest |<E_b T_{m a1} g~, g~>| elsewhere
  double tolerance = 0.0;
  bool ok = false;
};

// Evaluates the inner products of the modulated/translated window against
// itself over the grid b in Z^s x {0}^{2-s}, |b_i| <= beta_range,
// |m| <= m_range, through closed-form polygon integrals of exponentials.
R2ValidationReport validate_numeric(const TightFrameCertificateR2& cert, long beta_range,
                                    long m_range, double tolerance = 1e-10);

// Exact-boundary quadrature of the integral of exp(2 pi i <b, v>) over a
// polygon with rational vertices and integer frequency b.
cd polygon_exponential_integral(const Polygon& poly, long b1, long b2);

// Piece diagram in the style of a lattice-tiling figure.
std::string render_svg(const TightFrameCertificateR2& cert);

}  // namespace gabor::r2
