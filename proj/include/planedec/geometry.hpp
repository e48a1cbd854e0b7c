#pragma once

#include <array>
#include <string>

#include "planedec/scalar.hpp"

namespace planedec {

/// Relative tolerance for the toleranced sign predicates in float mode.
/// A determinant is treated as zero when |det| <= kGeoEps * |a| * |b|.
/// Exact mode ignores it: signs there are true rational signs.
inline constexpr double kGeoEps = 1e-9;

struct PlanePoint {
  Scalar x;
  Scalar y;

  /// Mode of both coordinates; mixed coordinates throw ModeMismatch.
  Mode mode() const;
  bool is_origin() const { return x.is_zero() && y.is_zero(); }

  PlanePoint operator-() const { return {-x, -y}; }
  friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const PlanePoint& a, const PlanePoint& b) {
    return !(a == b);
  }
};

PlanePoint scale(const Scalar& s, const PlanePoint& p);

/// Strict weak order by x, then y. Canonical orders everywhere in the
/// library (atom lists, component point lists) are built on this.
bool lex_less(const PlanePoint& a, const PlanePoint& b);

std::string str(const PlanePoint& p);

/// Signed parallelogram area: a.x*b.y - a.y*b.x. Positive when b lies
/// counterclockwise of a.
Scalar det2(const PlanePoint& a, const PlanePoint& b);

Scalar dot(const PlanePoint& a, const PlanePoint& b);

/// Sign of det2(a, b) with the float-mode dead zone described at kGeoEps.
/// -1, 0 or +1.
int sign_det2(const PlanePoint& a, const PlanePoint& b,
              double geo_eps = kGeoEps);

/// How two nonzero points relate as rays from the origin.
enum class RayRelation { SameRay, Antipodal, Independent };

/// pre: neither point is the origin (throws ZeroPoint).
/// Collinearity uses sign_det2, so in float mode nearly collinear pairs
/// collapse onto one line; the side is then decided by the dot product.
RayRelation ray_relation(const PlanePoint& a, const PlanePoint& b,
                         double geo_eps = kGeoEps);

/// pre: p lies on the line spanned by d (sign_det2(p, d) == 0), d != 0.
/// Returns the signed lambda with p = lambda * d, negative when p sits on
/// the opposite ray. Float mode reads the ratio off d's dominant axis.
Scalar collinear_ratio(const PlanePoint& p, const PlanePoint& d,
                       double geo_eps = kGeoEps);

/// Orders nonzero points by their angle in [0, 2*pi) measured from the
/// positive x axis, without evaluating any angle: quadrant index first,
/// determinant sign inside a quadrant. Returns -1, 0, +1; 0 means the two
/// points span the same ray. pre: neither point is the origin.
int angular_compare(const PlanePoint& a, const PlanePoint& b,
                    double geo_eps = kGeoEps);

enum class TripleTag { InteriorContaining, BoundaryContaining, NotContaining };

/// Result of testing whether the convex hull of three nonzero points
/// covers the origin. For the containing tags, ccw lists the input indices
/// in counterclockwise order. For BoundaryContaining, the origin lies on
/// the open segment between ccw[edge] and ccw[(edge+1)%3]; those two
/// points are then automatically antipodal. Degenerate (collinear) triples
/// report NotContaining with ccw left as the identity.
struct TripleClass {
  TripleTag tag = TripleTag::NotContaining;
  std::array<int, 3> ccw{0, 1, 2};
  int edge = -1;
};

/// pre: no input point is the origin (throws ZeroPoint).
TripleClass classify_triple(const PlanePoint& z1, const PlanePoint& z2,
                            const PlanePoint& z3, double geo_eps = kGeoEps);

}  // namespace planedec
