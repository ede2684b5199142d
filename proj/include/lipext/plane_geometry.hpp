#ifndef LIPEXT_PLANE_GEOMETRY_HPP
#define LIPEXT_PLANE_GEOMETRY_HPP

#include <array>
#include <complex>
#include <variant>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

/// Values of all functions live in the plane; complex arithmetic is the
/// natural representation.
using PlanePoint = std::complex<double>;

struct Triangle {
  PlanePoint a, b, c;
};

/// z -> rot * z + trans, or z -> rot * conj(z) + trans when reflected.
/// |rot| == 1, so side lengths are preserved.
struct RigidMotion {
  PlanePoint rot{1.0, 0.0};
  PlanePoint trans{0.0, 0.0};
  bool reflected = false;

  PlanePoint apply(PlanePoint z) const {
    return rot * (reflected ? std::conj(z) : z) + trans;
  }
  PlanePoint invert(PlanePoint w) const {
    PlanePoint z = (w - trans) / rot;
    return reflected ? std::conj(z) : z;
  }
  double rotation_angle() const { return std::arg(rot); }
};

/// A triangle moved so one base vertex is 0, the largest side [0, r] lies on
/// the x-axis, and the remaining vertex (the index point) sits strictly above
/// it with real part at most r/2.
struct NormalTriangle {
  double base_length = 0.0;  // r, the largest side
  PlanePoint apex;           // index point, apex.imag() > 0, apex.real() <= r/2
  RigidMotion motion;        // maps the original triangle onto (0, r, apex)
  std::array<int, 3> permutation{0, 1, 2};  // original index of (0, r, apex)
};

struct Disc {
  PlanePoint center;
  double radius = 0.0;
};

/// {z : <normal, z> <= offset}; normal is unit length.
struct HalfPlane {
  PlanePoint normal;
  double offset = 0.0;
};

/// Sublevel set {z : |z - p1| <= ratio * |z - p2|}, kept parametric.
struct ApolloniusSet {
  PlanePoint p1, p2;
  double ratio = 1.0;
};

using Region = std::variant<Disc, HalfPlane, ApolloniusSet>;

/// Degenerate when twice the area falls below 1e-12 times the squared
/// longest side.
bool is_degenerate(const Triangle& t);

/// Brings a triangle to normal position by rotation, translation and
/// reflection only; the motion and the vertex permutation are recorded so
/// points can be pulled back to the original frame.
NormalTriangle normalize(const Triangle& t);

/// Closed form (r + i (x(x-r)/y + y)) / 2 for apex x+iy; equidistant from
/// all three vertices.
PlanePoint circumcenter(const NormalTriangle& nt);

/// r / (2 sin theta) with theta the largest angle.
double circumradius(const NormalTriangle& nt);

/// Angle at the apex, opposite the largest side; always in [pi/3, pi).
double largest_angle(const NormalTriangle& nt);

enum class ApexClass { InD1, InD2 };

/// InD1 iff |apex - r/2| <= r/2 (boundary included), i.e. the largest angle
/// is at least a right angle.
ApexClass classify_apex(const NormalTriangle& nt);

/// Locus {z : |z - p1| / |z - p2| = k}: the perpendicular bisector as a
/// HalfPlane for k = 1, otherwise the circle with center
/// (k^2 p2 - p1)/(k^2 - 1) and radius k |p1 - p2| / |k^2 - 1| as a Disc.
Region apollonius_locus(PlanePoint p1, PlanePoint p2, double k);

/// Inside-or-on test. Discs and half-planes use their defining inequality;
/// Apollonius sets use the division-free form |z - p1| <= k |z - p2|.
bool region_membership(const Region& region, PlanePoint z);

/// Counterclockwise convex hull keeping strict vertices only; points interior
/// to the hull or lying on one of its edges are dropped. Used by the
/// convex-position checks on function ranges.
std::vector<PlanePoint> convex_hull_vertices(std::vector<PlanePoint> points);

/// Vertices of the regular n-gon with side a, centered at the origin, on the
/// circle of radius a / (2 sin(pi/n)).
std::vector<PlanePoint> regular_polygon(int n, double a);

/// Circumradius E = a / (2 sin(pi/n)) of the regular n-gon with side a.
double regular_polygon_circumradius(int n, double a);

/// Largest vertex-to-vertex distance: a / (2 sin(pi/2n)) for odd n, 2E for
/// even n.
double regular_polygon_diameter(int n, double a);

}  // namespace lipext

#endif
