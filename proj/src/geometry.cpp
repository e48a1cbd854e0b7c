#include "planedec/geometry.hpp"

#include <cmath>
#include <utility>

namespace planedec {
namespace {

void require_nonzero(const PlanePoint& p, const char* who) {
  if (p.is_origin())
    throw ZeroPoint(std::string(who) + ": point at the origin");
}

// Quadrant of the angle range [0, 2pi) a nonzero point falls in:
//   0: [0, pi/2)    x > 0, y >= 0
//   1: [pi/2, pi)   x <= 0, y > 0
//   2: [pi, 3pi/2)  x < 0, y <= 0
//   3: [3pi/2, 2pi) x >= 0, y < 0
// Coordinate signs are taken literally even in float mode; the dead zone
// only applies to the within-quadrant determinant test.
int quadrant(const PlanePoint& p) {
  int sx = p.x.sign(), sy = p.y.sign();
  if (sx > 0 && sy >= 0) return 0;
  if (sx <= 0 && sy > 0) return 1;
  if (sx < 0 && sy <= 0) return 2;
  return 3;
}

}  // namespace

Mode PlanePoint::mode() const {
  if (x.mode() != y.mode())
    throw ModeMismatch("point with mixed-mode coordinates");
  return x.mode();
}

PlanePoint scale(const Scalar& s, const PlanePoint& p) {
  return {s * p.x, s * p.y};
}

bool lex_less(const PlanePoint& a, const PlanePoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string str(const PlanePoint& p) {
  return "(" + p.x.str() + ", " + p.y.str() + ")";
}

Scalar det2(const PlanePoint& a, const PlanePoint& b) {
  return a.x * b.y - a.y * b.x;
}

Scalar dot(const PlanePoint& a, const PlanePoint& b) {
  return a.x * b.x + a.y * b.y;
}

int sign_det2(const PlanePoint& a, const PlanePoint& b, double geo_eps) {
  Scalar d = det2(a, b);
  if (d.is_exact()) return d.sign();
  double dv = d.to_double();
  double na = std::hypot(a.x.to_double(), a.y.to_double());
  double nb = std::hypot(b.x.to_double(), b.y.to_double());
  if (std::fabs(dv) <= geo_eps * na * nb) return 0;
  return dv > 0 ? 1 : -1;
}

RayRelation ray_relation(const PlanePoint& a, const PlanePoint& b,
                         double geo_eps) {
  require_nonzero(a, "ray_relation");
  require_nonzero(b, "ray_relation");
  if (sign_det2(a, b, geo_eps) != 0) return RayRelation::Independent;
  // Collinear through the origin; the dot product cannot straddle zero
  // once the cross part is (tolerated as) zero.
  return dot(a, b).sign() > 0 ? RayRelation::SameRay : RayRelation::Antipodal;
}

Scalar collinear_ratio(const PlanePoint& p, const PlanePoint& d,
                       double geo_eps) {
  require_nonzero(d, "collinear_ratio");
  if (sign_det2(p, d, geo_eps) != 0)
    throw NotOnLine("collinear_ratio: " + str(p) + " is not on the line of " +
                    str(d));
  if (d.mode() == Mode::Exact) {
    if (!d.x.is_zero()) return p.x / d.x;
    return p.y / d.y;
  }
  // Dominant axis keeps the quotient well conditioned.
  if (d.x.abs() >= d.y.abs()) return p.x / d.x;
  return p.y / d.y;
}

int angular_compare(const PlanePoint& a, const PlanePoint& b,
                    double geo_eps) {
  require_nonzero(a, "angular_compare");
  require_nonzero(b, "angular_compare");
  int qa = quadrant(a), qb = quadrant(b);
  if (qa != qb) return qa < qb ? -1 : 1;
  // Same quadrant: both angles inside one arc shorter than pi, where the
  // determinant sign decides. Zero means same ray.
  return -sign_det2(a, b, geo_eps);
}

TripleClass classify_triple(const PlanePoint& z1, const PlanePoint& z2,
                            const PlanePoint& z3, double geo_eps) {
  require_nonzero(z1, "classify_triple");
  require_nonzero(z2, "classify_triple");
  require_nonzero(z3, "classify_triple");
  const PlanePoint* pts[3] = {&z1, &z2, &z3};

  TripleClass out;
  // Signed doubled triangle area equals the cyclic determinant sum.
  Scalar area = det2(z1, z2) + det2(z2, z3) + det2(z3, z1);
  int area_sign;
  if (area.is_exact()) {
    area_sign = area.sign();
  } else {
    double na[3];
    for (int i = 0; i < 3; ++i)
      na[i] = std::hypot(pts[i]->x.to_double(), pts[i]->y.to_double());
    double scale = na[0] * na[1] + na[1] * na[2] + na[2] * na[0];
    double av = area.to_double();
    area_sign = (std::fabs(av) <= geo_eps * scale) ? 0 : (av > 0 ? 1 : -1);
  }
  if (area_sign == 0) return out;  // collinear: hull has no interior
  if (area_sign < 0) out.ccw = {0, 2, 1};

  int s[3];
  for (int i = 0; i < 3; ++i)
    s[i] = sign_det2(*pts[out.ccw[i]], *pts[out.ccw[(i + 1) % 3]], geo_eps);

  if (s[0] > 0 && s[1] > 0 && s[2] > 0) {
    out.tag = TripleTag::InteriorContaining;
    return out;
  }
  int zeros = (s[0] == 0) + (s[1] == 0) + (s[2] == 0);
  if (zeros == 1 && s[0] >= 0 && s[1] >= 0 && s[2] >= 0) {
    // Origin on one open edge; its endpoints straddle the origin, so they
    // are antipodal by construction.
    out.tag = TripleTag::BoundaryContaining;
    out.edge = s[0] == 0 ? 0 : (s[1] == 0 ? 1 : 2);
    return out;
  }
  out.ccw = {0, 1, 2};
  return out;
}

}  // namespace planedec
