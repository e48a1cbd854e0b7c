#pragma once

#include <vector>

#include "planedec/distribution.hpp"
#include "planedec/geometry.hpp"

namespace planedec {

enum class ComponentTag { OriginDirac, TwoPoint, ThreePoint };

std::string to_string(ComponentTag t);

/// One extreme distribution of the zero-mean simplex: a point mass at the
/// origin, a two-point distribution on antipodal rays, or a three-point
/// distribution whose triangle strictly surrounds the origin. Masses are
/// forced by the points, so construction is point-only.
///
/// Atom order is canonical: TwoPoint stores the lexicographically larger
/// endpoint first; ThreePoint stores its points counterclockwise starting
/// at the lexicographically smallest. The origin case keeps one explicit
/// atom at (0,0) with mass 1 so that every component, uniformly, is a
/// small distribution in its own right.
class ExtremeComponent {
 public:
  static ExtremeComponent dirac_origin(Mode m);

  /// pre: z1, z2 antipodal (throws NotAntipodal / ZeroPoint). Masses are
  /// inversely proportional to the ray scales: with z2 = -kappa*z1 the
  /// larger arm carries the smaller mass, making the mean exactly zero.
  static ExtremeComponent two_point(const PlanePoint& z1, const PlanePoint& z2,
                                    double geo_eps = kGeoEps);

  /// pre: the triangle covers the origin (throws NotContaining otherwise;
  /// ZeroPoint for an origin vertex). Interior triples get the cyclic
  /// determinant masses: mass(z_i) proportional to det2 of the other two
  /// in ccw order. A triple with the origin on an edge degenerates to the
  /// TwoPoint on that edge, the off-edge vertex receiving mass zero.
  static ExtremeComponent three_point(const PlanePoint& z1,
                                      const PlanePoint& z2,
                                      const PlanePoint& z3,
                                      double geo_eps = kGeoEps);

  ComponentTag tag() const { return tag_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  Mode mode() const { return mode_; }

  PlanePoint mean() const;
  Scalar mass_at(const PlanePoint& p) const;

  friend bool operator==(const ExtremeComponent& a, const ExtremeComponent& b) {
    return a.tag_ == b.tag_ && a.atoms_ == b.atoms_;
  }
  friend bool operator!=(const ExtremeComponent& a, const ExtremeComponent& b) {
    return !(a == b);
  }

 private:
  ExtremeComponent(ComponentTag tag, std::vector<Atom> atoms, Mode mode)
      : tag_(tag), atoms_(std::move(atoms)), mode_(mode) {}

  ComponentTag tag_;
  std::vector<Atom> atoms_;
  Mode mode_;
};

/// Closed-form invariant of a ThreePoint component:
/// product of the three ccw determinants over the square of their sum.
/// Strict about its input: any other tag throws Error, because a
/// degenerate triple has already become a TwoPoint by construction.
Scalar phi_of_three_point(const ExtremeComponent& c);

/// The invariant of the extreme distribution spanned by a raw triple:
/// the closed form above for interior triples, zero for boundary ones
/// (their distribution is collinear). Throws NotContaining otherwise.
Scalar phi_of_triple(const PlanePoint& z1, const PlanePoint& z2,
                     const PlanePoint& z3, double geo_eps = kGeoEps);

/// Canonical order for component lists: origin dirac first, then two-point
/// components by angular position of their direction and then by the two
/// ray scales, then three-point components by lexicographic point order.
bool component_less(const ExtremeComponent& a, const ExtremeComponent& b);

}  // namespace planedec
