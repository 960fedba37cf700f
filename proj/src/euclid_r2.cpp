#include "gabor/euclid_r2.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gabor::r2 {

namespace {

Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

Vec2 scale(const Vec2& a, const Rat& t) { return {a.x * t, a.y * t}; }

// Drops duplicate and collinear vertices, rotates to the lexicographically
// smallest starting vertex; returns empty for degenerate input.
Polygon canonicalize(Polygon poly) {
  Polygon dedup;
  for (const auto& v : poly) {
    if (dedup.empty() || !(dedup.back() == v)) dedup.push_back(v);
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  if (dedup.size() < 3) return {};

  Polygon slim;
  const std::size_t n = dedup.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = dedup[(i + n - 1) % n];
    const Vec2& cur = dedup[i];
    const Vec2& next = dedup[(i + 1) % n];
    if (cross(sub(cur, prev), sub(next, cur)) != 0) slim.push_back(cur);
  }
  if (slim.size() < 3) return {};

  auto lex_less = [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  };
  std::rotate(slim.begin(), std::min_element(slim.begin(), slim.end(), lex_less),
              slim.end());
  return slim;
}

struct BBox {
  Rat xmin, xmax, ymin, ymax;
};

BBox bbox(const Polygon& poly) {
  BBox b{poly[0].x, poly[0].x, poly[0].y, poly[0].y};
  for (const auto& v : poly) {
    b.xmin = std::min(b.xmin, v.x);
    b.xmax = std::max(b.xmax, v.x);
    b.ymin = std::min(b.ymin, v.y);
    b.ymax = std::max(b.ymax, v.y);
  }
  return b;
}

// Integers m for which bbox(p) and bbox(q) + m*a1 can overlap with positive
// area.  Empty optional = no constraint from this axis is satisfiable.
std::optional<std::pair<long, long>> axis_range(const Rat& lo_p, const Rat& hi_p,
                                                const Rat& lo_q, const Rat& hi_q,
                                                const Rat& step) {
  // need lo_p < hi_q + m*step and hi_p > lo_q + m*step
  if (step == 0) {
    if (lo_p < hi_q && hi_p > lo_q) return std::pair<long, long>{LONG_MIN, LONG_MAX};
    return std::nullopt;
  }
  Rat lo = (lo_p - hi_q) / step;
  Rat hi = (hi_p - lo_q) / step;
  if (step < 0) std::swap(lo, hi);
  const long m_lo = rat_floor(lo) + 1;  // open interval
  const long m_hi = rat_ceil(hi) - 1;
  if (m_lo > m_hi) return std::nullopt;
  return std::pair<long, long>{m_lo, m_hi};
}

std::optional<std::pair<long, long>> shift_range(const Polygon& p, const Polygon& q,
                                                 const Vec2& a1) {
  const BBox bp = bbox(p), bq = bbox(q);
  const auto rx = axis_range(bp.xmin, bp.xmax, bq.xmin, bq.xmax, a1.x);
  const auto ry = axis_range(bp.ymin, bp.ymax, bq.ymin, bq.ymax, a1.y);
  if (!rx || !ry) return std::nullopt;
  const long lo = std::max(rx->first, ry->first);
  const long hi = std::min(rx->second, ry->second);
  if (lo > hi) return std::nullopt;
  return std::pair<long, long>{lo, hi};
}

// Interior-disjointness of p from every shift q + m*a1 over the exact
// bbox-derived range, optionally skipping m = 0.
bool disjoint_from_shifts(const Polygon& p, const Polygon& q, const Vec2& a1,
                          bool skip_zero, long* max_shift) {
  const auto range = shift_range(p, q, a1);
  if (!range) return true;
  for (long m = range->first; m <= range->second; ++m) {
    if (skip_zero && m == 0) continue;
    if (max_shift) *max_shift = std::max(*max_shift, std::abs(m));
    if (intersection_area(p, translate(q, scale(a1, Rat(m)))) != 0) return false;
  }
  return true;
}

}  // namespace

Mat2 Mat2::inverse() const {
  const Rat d = det();
  if (d == 0) throw std::domain_error("singular 2x2 matrix");
  return {this->d / d, -b / d, -c / d, a / d};
}

Rat polygon_area(const Polygon& poly) {
  if (poly.size() < 3) return Rat(0);
  Rat twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    twice += cross(a, b);
  }
  return twice / 2;
}

Polygon translate(const Polygon& poly, const Vec2& t) {
  Polygon out;
  out.reserve(poly.size());
  for (const auto& v : poly) out.push_back({v.x + t.x, v.y + t.y});
  return out;
}

Polygon apply_matrix(const Mat2& m, const Polygon& poly) {
  Polygon out;
  out.reserve(poly.size());
  for (const auto& v : poly) out.push_back(m.apply(v));
  if (m.det() < 0) std::reverse(out.begin(), out.end());  // keep CCW
  return canonicalize(out);
}

Polygon clip_halfplane(const Polygon& poly, const Vec2& normal, const Rat& c) {
  if (poly.empty()) return {};
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    const Rat dp = dot(normal, p), dq = dot(normal, q);
    const bool p_in = dp <= c, q_in = dq <= c;
    if (p_in) out.push_back(p);
    if (p_in != q_in) {
      const Rat t = (c - dp) / (dq - dp);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return canonicalize(out);
}

// Intersection of two convex CCW polygons by successive half-plane clips.
static Polygon convex_intersection(const Polygon& p, const Polygon& q) {
  if (p.empty() || q.empty()) return {};
  Polygon clipped = p;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n && !clipped.empty(); ++i) {
    const Vec2& a = q[i];
    const Vec2& b = q[(i + 1) % n];
    // inside of CCW edge a->b: cross(b-a, v-a) >= 0, i.e. normal . v <= c
    const Vec2 normal{b.y - a.y, a.x - b.x};
    clipped = clip_halfplane(clipped, normal, dot(normal, a));
  }
  return clipped;
}

Rat intersection_area(const Polygon& p, const Polygon& q) {
  return polygon_area(convex_intersection(p, q));
}

std::vector<Strip> compute_strips(const Vec2& a1) {
  if (a1.x == 0 && a1.y == 0) throw std::domain_error("compute_strips: a1 = 0");
  const Rat len2 = dot(a1, a1);
  const Polygon square{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};

  Rat tmin, tmax;
  bool first = true;
  for (const auto& v : square) {
    const Rat t = dot(v, a1) / len2;
    if (first || t < tmin) tmin = t;
    if (first || t > tmax) tmax = t;
    first = false;
  }

  std::vector<Strip> strips;
  for (long z = rat_floor(tmin); z <= rat_ceil(tmax) - 1; ++z) {
    // slab z <= <v, a1>/|a1|^2 <= z+1
    Polygon piece = clip_halfplane(square, a1, Rat(z + 1) * len2);
    piece = clip_halfplane(piece, {-a1.x, -a1.y}, Rat(-z) * len2);
    if (!piece.empty() && polygon_area(piece) > 0) strips.push_back({z, piece});
  }
  return strips;
}

bool verify_translates(const std::vector<Strip>& strips, const Vec2& a1,
                       const std::vector<IVec2>& ys, long* max_shift) {
  if (ys.size() != strips.size())
    throw std::invalid_argument("verify_translates: assignment size mismatch");
  if (max_shift) *max_shift = 0;

  std::vector<Polygon> pieces;
  pieces.reserve(strips.size());
  for (std::size_t i = 0; i < strips.size(); ++i)
    pieces.push_back(translate(strips[i].piece, {Rat(ys[i].x), Rat(ys[i].y)}));

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i; j < pieces.size(); ++j) {
      if (!disjoint_from_shifts(pieces[i], pieces[j], a1, /*skip_zero=*/i == j,
                                max_shift))
        return false;
    }
  }
  return true;
}

std::vector<IVec2> choose_translates(const std::vector<Strip>& strips, const Vec2& a1) {
  const long n = static_cast<long>(strips.size());
  if (n == 0) throw std::invalid_argument("choose_translates: no strips");

  auto attempt = [&](long radius) -> std::optional<std::vector<IVec2>> {
    // max-norm shells outward, lexicographic inside each shell
    std::vector<IVec2> candidates;
    for (long r = 0; r <= radius; ++r)
      for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
          if (std::max(std::abs(x), std::abs(y)) == r) candidates.push_back({x, y});

    std::vector<IVec2> chosen;
    std::vector<Polygon> placed;
    // Disjointness is pairwise, so depth-first assignment in candidate order
    // yields the first valid tuple in shell-then-lexicographic order.  Shifts
    // of a piece against itself do not depend on the translate, so that check
    // runs once per strip.
    auto place = [&](auto&& self, long k) -> bool {
      if (k == n) return true;
      if (!disjoint_from_shifts(strips[k].piece, strips[k].piece, a1, true, nullptr))
        return false;
      for (const auto& y : candidates) {
        Polygon piece = translate(strips[k].piece, {Rat(y.x), Rat(y.y)});
        bool ok = true;
        for (std::size_t j = 0; ok && j < placed.size(); ++j)
          ok = disjoint_from_shifts(placed[j], piece, a1, false, nullptr);
        if (!ok) continue;
        chosen.push_back(y);
        placed.push_back(std::move(piece));
        if (self(self, k + 1)) return true;
        chosen.pop_back();
        placed.pop_back();
      }
      return false;
    };
    if (place(place, 0)) return chosen;
    return std::nullopt;
  };

  const long base = std::max<long>(2, n);
  if (auto found = attempt(base)) return *found;
  if (auto found = attempt(2 * base)) return *found;
  throw std::runtime_error("choose_translates: search exhausted");
}

TightFrameCertificateR2 assemble_certificate(const Mat2& P, const Mat2& Q, int s) {
  if (P.det() == 0 || Q.det() == 0)
    throw std::domain_error("assemble_certificate: singular matrix");
  if (s < 0 || s > 2) throw std::invalid_argument("assemble_certificate: s must be 0, 1, or 2");

  TightFrameCertificateR2 cert;
  cert.P = P;
  cert.Q = Q;
  cert.s = s;

  const Mat2 qp{Q.a * P.a + Q.b * P.c, Q.a * P.b + Q.b * P.d,
                Q.c * P.a + Q.d * P.c, Q.c * P.b + Q.d * P.d};
  cert.a1 = qp.transpose().inverse().col(0);
  cert.strips = compute_strips(cert.a1);
  cert.translates = choose_translates(cert.strips, cert.a1);

  Rat total(0);
  bool pairwise = true;
  for (std::size_t i = 0; i < cert.strips.size(); ++i) {
    total += polygon_area(cert.strips[i].piece);
    for (std::size_t j = i + 1; j < cert.strips.size(); ++j)
      pairwise = pairwise &&
                 intersection_area(cert.strips[i].piece, cert.strips[j].piece) == 0;
  }
  cert.partition_ok = pairwise && total == 1;
  cert.integral_translates_ok = cert.translates.size() == cert.strips.size();
  cert.translates_disjoint_ok =
      verify_translates(cert.strips, cert.a1, cert.translates, &cert.shift_bound);

  cert.volume = abs(P.det() * Q.det());
  cert.amplitude_sq = Rat(1) / abs(Q.det());
  for (std::size_t i = 0; i < cert.strips.size(); ++i) {
    const Vec2 y{Rat(cert.translates[i].x), Rat(cert.translates[i].y)};
    cert.window_support.push_back(apply_matrix(Q, translate(cert.strips[i].piece, y)));
  }
  return cert;
}

cd polygon_exponential_integral(const Polygon& poly, long b1, long b2) {
  if (poly.size() < 3) return 0.0;
  if (b1 == 0 && b2 == 0) return rat_to_double(polygon_area(poly));

  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double len2 = static_cast<double>(b1) * b1 + static_cast<double>(b2) * b2;
  auto unit = [&](const Rat& q) {
    // exp(2 pi i q), with the phase reduced mod 1 in exact arithmetic first
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    const double frac = rat_to_double(Rat(r, q.get_den()));
    return cd{std::cos(two_pi * frac), std::sin(two_pi * frac)};
  };

  cd total = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    const Vec2 d = sub(q, p);
    const Rat beta_w = Rat(b1) * d.y - Rat(b2) * d.x;  // <b, outward normal> * |edge|
    if (beta_w == 0) continue;
    const Rat beta_p = Rat(b1) * p.x + Rat(b2) * p.y;
    const Rat beta_d = Rat(b1) * d.x + Rat(b2) * d.y;

    cd edge_mean;  // average of the exponential along the edge
    if (beta_d == 0) {
      edge_mean = 1.0;
    } else if (rat_is_integer(beta_d)) {
      edge_mean = 0.0;
    } else {
      const double t = rat_to_double(beta_d);
      edge_mean = (unit(beta_d) - 1.0) / (cd{0.0, two_pi * t});
    }
    total += rat_to_double(beta_w) * unit(beta_p) * edge_mean;
  }
  return total / cd{0.0, two_pi * len2};
}

R2ValidationReport validate_numeric(const TightFrameCertificateR2& cert, long beta_range,
                                    long m_range, double tolerance) {
  std::vector<Polygon> pieces;
  pieces.reserve(cert.strips.size());
  for (std::size_t i = 0; i < cert.strips.size(); ++i) {
    const Vec2 y{Rat(cert.translates[i].x), Rat(cert.translates[i].y)};
    pieces.push_back(translate(cert.strips[i].piece, y));
  }

  const long b1_range = cert.s >= 1 ? beta_range : 0;
  const long b2_range = cert.s >= 2 ? beta_range : 0;

  R2ValidationReport rep;
  rep.tolerance = tolerance;
  for (long b1 = -b1_range; b1 <= b1_range; ++b1) {
    for (long b2 = -b2_range; b2 <= b2_range; ++b2) {
      for (long m = -m_range; m <= m_range; ++m) {
        const Vec2 shift = scale(cert.a1, Rat(m));
        cd acc = 0.0;
        for (const auto& moved : pieces) {
          const Polygon shifted = translate(moved, shift);
          for (const auto& target : pieces) {
            const Polygon overlap = convex_intersection(shifted, target);
            if (!overlap.empty()) acc += polygon_exponential_integral(overlap, b1, b2);
          }
        }
        if (b1 == 0 && b2 == 0 && m == 0) {
          rep.identity_value = acc.real();
        } else {
          rep.max_off_identity = std::max(rep.max_off_identity, std::abs(acc));
        }
      }
    }
  }
  rep.ok = std::abs(rep.identity_value - 1.0) <= tolerance &&
           rep.max_off_identity <= tolerance;
  return rep;
}

std::string render_svg(const TightFrameCertificateR2& cert) {
  const double scale = 120.0;
  double xmin = -0.2, xmax = 1.2, ymin = -0.2, ymax = 1.2;
  std::vector<Polygon> pieces;
  for (std::size_t i = 0; i < cert.strips.size(); ++i) {
    const Vec2 y{Rat(cert.translates[i].x), Rat(cert.translates[i].y)};
    pieces.push_back(translate(cert.strips[i].piece, y));
  }
  auto widen = [&](const Polygon& poly) {
    for (const auto& v : poly) {
      xmin = std::min(xmin, rat_to_double(v.x) - 0.2);
      xmax = std::max(xmax, rat_to_double(v.x) + 0.2);
      ymin = std::min(ymin, rat_to_double(v.y) - 0.2);
      ymax = std::max(ymax, rat_to_double(v.y) + 0.2);
    }
  };
  for (const auto& s : cert.strips) widen(s.piece);
  for (const auto& p : pieces) widen(p);

  std::ostringstream svg;
  auto px = [&](double x) { return (x - xmin) * scale; };
  auto py = [&](double y) { return (ymax - y) * scale; };
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << px(xmax) << "' height='"
      << py(ymin) << "'>\n";
  for (long gx = static_cast<long>(std::floor(xmin)); gx <= std::ceil(xmax); ++gx)
    svg << "<line x1='" << px(gx) << "' y1='" << py(ymin) << "' x2='" << px(gx)
        << "' y2='" << py(ymax) << "' stroke='#ddd'/>\n";
  for (long gy = static_cast<long>(std::floor(ymin)); gy <= std::ceil(ymax); ++gy)
    svg << "<line x1='" << px(xmin) << "' y1='" << py(gy) << "' x2='" << px(xmax)
        << "' y2='" << py(gy) << "' stroke='#ddd'/>\n";

  auto draw = [&](const Polygon& poly, const std::string& fill, double opacity) {
    svg << "<polygon points='";
    for (const auto& v : poly) svg << px(rat_to_double(v.x)) << "," << py(rat_to_double(v.y)) << " ";
    svg << "' fill='" << fill << "' fill-opacity='" << opacity
        << "' stroke='black' stroke-width='1'/>\n";
  };
  for (const auto& s : cert.strips) draw(s.piece, "gray", 0.25);
  for (const auto& p : pieces) draw(p, "steelblue", 0.45);

  const double ax = rat_to_double(cert.a1.x), ay = rat_to_double(cert.a1.y);
  for (long m = -6; m <= 6; ++m) {
    const double cx = m * ax, cy = m * ay;
    if (cx < xmin || cx > xmax || cy < ymin || cy > ymax) continue;
    svg << "<circle cx='" << px(cx) << "' cy='" << py(cy) << "' r='3' fill='black'/>\n";
  }
  svg << "<line x1='" << px(0) << "' y1='" << py(0) << "' x2='" << px(ax) << "' y2='"
      << py(ay) << "' stroke='crimson' stroke-width='2'/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gabor::r2
