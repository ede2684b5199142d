#include "lipext/plane_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lipext {

namespace {

double cross(PlanePoint u, PlanePoint v) {
  return u.real() * v.imag() - u.imag() * v.real();
}

}  // namespace

bool is_degenerate(const Triangle& t) {
  const double twice_area = std::abs(cross(t.b - t.a, t.c - t.a));
  const double longest =
      std::max({std::abs(t.b - t.a), std::abs(t.c - t.b), std::abs(t.a - t.c)});
  return twice_area < 1e-12 * longest * longest;
}

NormalTriangle normalize(const Triangle& t) {
  if (is_degenerate(t)) {
    throw Error(ErrorKind::DegenerateTriangle,
                "triangle is collinear within tolerance");
  }
  const std::array<PlanePoint, 3> v{t.a, t.b, t.c};
  // Side k is opposite vertex k.
  const std::array<double, 3> side{std::abs(v[2] - v[1]), std::abs(v[0] - v[2]),
                                   std::abs(v[1] - v[0])};
  int apex = 0;
  for (int k = 1; k < 3; ++k) {
    if (side[k] > side[apex]) apex = k;
  }
  int p = (apex + 1) % 3;
  int q = (apex + 2) % 3;

  const double r = side[apex];
  // Send p to 0 and q to r on the positive x-axis.
  RigidMotion m;
  m.rot = std::conj(v[q] - v[p]) / r;
  m.trans = -v[p] * m.rot;
  PlanePoint s = m.apply(v[apex]);
  if (s.imag() < 0.0) {
    // Reflect across the x-axis: z -> conj(rot * z + trans).
    m.rot = std::conj(m.rot);
    m.trans = std::conj(m.trans);
    m.reflected = true;
    s = m.apply(v[apex]);
  }
  if (s.real() > r / 2.0) {
    // Reflect across the vertical x = r/2, swapping the base endpoints:
    // z -> r - conj(z).
    m.rot = -std::conj(m.rot);
    m.trans = r - std::conj(m.trans);
    m.reflected = !m.reflected;
    std::swap(p, q);
    s = m.apply(v[apex]);
  }

  NormalTriangle nt;
  nt.base_length = r;
  nt.apex = s;
  nt.motion = m;
  nt.permutation = {p, q, apex};
  return nt;
}

PlanePoint circumcenter(const NormalTriangle& nt) {
  const double r = nt.base_length;
  const double x = nt.apex.real();
  const double y = nt.apex.imag();
  return 0.5 * PlanePoint(r, x * (x - r) / y + y);
}

double largest_angle(const NormalTriangle& nt) {
  const double u = std::abs(nt.apex);
  const double v = std::abs(nt.apex - PlanePoint(nt.base_length, 0.0));
  const double r = nt.base_length;
  const double cos_theta =
      std::clamp((u * u + v * v - r * r) / (2.0 * u * v), -1.0, 1.0);
  return std::acos(cos_theta);
}

double circumradius(const NormalTriangle& nt) {
  return nt.base_length / (2.0 * std::sin(largest_angle(nt)));
}

ApexClass classify_apex(const NormalTriangle& nt) {
  const double half = nt.base_length / 2.0;
  return std::abs(nt.apex - PlanePoint(half, 0.0)) <= half ? ApexClass::InD1
                                                           : ApexClass::InD2;
}

Region apollonius_locus(PlanePoint p1, PlanePoint p2, double k) {
  if (!(k > 0.0)) {
    throw Error(ErrorKind::NonpositiveRatio, "Apollonius ratio must be > 0");
  }
  if (p1 == p2) {
    throw Error(ErrorKind::CoincidentPoints,
                "Apollonius locus needs two distinct points");
  }
  if (k == 1.0) {
    const PlanePoint n = (p2 - p1) / std::abs(p2 - p1);
    const double offset =
        (std::norm(p2) - std::norm(p1)) / (2.0 * std::abs(p2 - p1));
    return HalfPlane{n, offset};
  }
  const double k2 = k * k;
  const PlanePoint center = (k2 * p2 - p1) / (k2 - 1.0);
  const double radius = k * std::abs(p1 - p2) / std::abs(k2 - 1.0);
  return Disc{center, radius};
}

bool region_membership(const Region& region, PlanePoint z) {
  if (const auto* d = std::get_if<Disc>(&region)) {
    return std::abs(z - d->center) <= d->radius + 1e-12;
  }
  if (const auto* h = std::get_if<HalfPlane>(&region)) {
    const double s = z.real() * h->normal.real() + z.imag() * h->normal.imag();
    return s <= h->offset + 1e-12 * (1.0 + std::abs(h->offset));
  }
  const auto& a = std::get<ApolloniusSet>(region);
  return std::abs(z - a.p1) <=
         a.ratio * std::abs(z - a.p2) + 1e-12 * (1.0 + std::abs(a.p1 - a.p2));
}

std::vector<PlanePoint> convex_hull_vertices(std::vector<PlanePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](PlanePoint a, PlanePoint b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, std::abs(p));
  const double eps = 1e-12 * std::max(1.0, scale * scale);
  std::vector<PlanePoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= eps) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<PlanePoint> regular_polygon(int n, double a) {
  if (n < 3) throw Error(ErrorKind::BadCount, "polygon needs n >= 3 vertices");
  if (!(a > 0.0)) throw Error(ErrorKind::BadSide, "side length must be > 0");
  const double radius = regular_polygon_circumradius(n, a);
  std::vector<PlanePoint> vertices;
  vertices.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    vertices.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
  }
  return vertices;
}

double regular_polygon_circumradius(int n, double a) {
  return a / (2.0 * std::sin(std::numbers::pi / n));
}

double regular_polygon_diameter(int n, double a) {
  if (n % 2 == 0) return 2.0 * regular_polygon_circumradius(n, a);
  return a / (2.0 * std::sin(std::numbers::pi / (2.0 * n)));
}

}  // namespace lipext
