#include "planedec/extremes.hpp"

#include <array>

namespace planedec {

std::string to_string(ComponentTag t) {
  switch (t) {
    case ComponentTag::OriginDirac: return "origin";
    case ComponentTag::TwoPoint: return "two_point";
    case ComponentTag::ThreePoint: return "three_point";
  }
  return "?";
}

ExtremeComponent ExtremeComponent::dirac_origin(Mode m) {
  PlanePoint origin{Scalar::zero(m), Scalar::zero(m)};
  return ExtremeComponent(ComponentTag::OriginDirac,
                          {Atom{origin, Scalar::one(m)}}, m);
}

ExtremeComponent ExtremeComponent::two_point(const PlanePoint& z1,
                                             const PlanePoint& z2,
                                             double geo_eps) {
  if (ray_relation(z1, z2, geo_eps) != RayRelation::Antipodal)
    throw NotAntipodal("two_point: " + str(z1) + " and " + str(z2) +
                       " do not span opposite rays");
  Mode m = z1.mode();
  const PlanePoint& a = lex_less(z1, z2) ? z2 : z1;  // larger endpoint first
  const PlanePoint& b = lex_less(z1, z2) ? z1 : z2;
  // b = -kappa*a; masses balance the arms so the mean vanishes.
  Scalar kappa = -collinear_ratio(b, a, geo_eps);
  Scalar denom = Scalar::one(m) + kappa;
  return ExtremeComponent(
      ComponentTag::TwoPoint,
      {Atom{a, kappa / denom}, Atom{b, Scalar::one(m) / denom}}, m);
}

ExtremeComponent ExtremeComponent::three_point(const PlanePoint& z1,
                                               const PlanePoint& z2,
                                               const PlanePoint& z3,
                                               double geo_eps) {
  TripleClass cls = classify_triple(z1, z2, z3, geo_eps);
  const PlanePoint* in[3] = {&z1, &z2, &z3};
  if (cls.tag == TripleTag::NotContaining)
    throw NotContaining("three_point: hull of " + str(z1) + ", " + str(z2) +
                        ", " + str(z3) + " does not cover the origin");
  if (cls.tag == TripleTag::BoundaryContaining)
    return two_point(*in[cls.ccw[cls.edge]], *in[cls.ccw[(cls.edge + 1) % 3]],
                     geo_eps);

  std::array<const PlanePoint*, 3> w = {in[cls.ccw[0]], in[cls.ccw[1]],
                                        in[cls.ccw[2]]};
  // Rotate the ccw cycle to start at the lex-smallest vertex.
  int start = 0;
  for (int i = 1; i < 3; ++i)
    if (lex_less(*w[i], *w[start])) start = i;

  Mode m = z1.mode();
  std::array<Scalar, 3> d;
  for (int i = 0; i < 3; ++i) d[i] = det2(*w[i], *w[(i + 1) % 3]);
  Scalar total = d[0] + d[1] + d[2];
  std::vector<Atom> atoms;
  atoms.reserve(3);
  for (int k = 0; k < 3; ++k) {
    int i = (start + k) % 3;
    // Vertex mass is the determinant of the opposite edge.
    atoms.push_back(Atom{*w[i], d[(i + 1) % 3] / total});
  }
  return ExtremeComponent(ComponentTag::ThreePoint, std::move(atoms), m);
}

PlanePoint ExtremeComponent::mean() const {
  PlanePoint sum{Scalar::zero(mode_), Scalar::zero(mode_)};
  for (const Atom& a : atoms_) sum = sum + scale(a.mass, a.point);
  return sum;
}

Scalar ExtremeComponent::mass_at(const PlanePoint& p) const {
  for (const Atom& a : atoms_)
    if (a.point == p) return a.mass;
  return Scalar::zero(mode_);
}

Scalar phi_of_three_point(const ExtremeComponent& c) {
  if (c.tag() != ComponentTag::ThreePoint)
    throw Error("phi_of_three_point: component is " + to_string(c.tag()) +
                ", not three_point");
  const std::vector<Atom>& a = c.atoms();
  Scalar d0 = det2(a[0].point, a[1].point);
  Scalar d1 = det2(a[1].point, a[2].point);
  Scalar d2 = det2(a[2].point, a[0].point);
  Scalar total = d0 + d1 + d2;
  return d0 * d1 * d2 / (total * total);
}

Scalar phi_of_triple(const PlanePoint& z1, const PlanePoint& z2,
                     const PlanePoint& z3, double geo_eps) {
  TripleClass cls = classify_triple(z1, z2, z3, geo_eps);
  if (cls.tag == TripleTag::NotContaining)
    throw NotContaining("phi_of_triple: hull of " + str(z1) + ", " + str(z2) +
                        ", " + str(z3) + " does not cover the origin");
  if (cls.tag == TripleTag::BoundaryContaining)
    return Scalar::zero(z1.mode());  // collinear support carries no invariant
  return phi_of_three_point(
      ExtremeComponent::three_point(z1, z2, z3, geo_eps));
}

namespace {

// Angular position of a pair's reference ray: the lex-smaller endpoint.
const PlanePoint& pair_direction(const ExtremeComponent& c) {
  return c.atoms()[1].point;
}

}  // namespace

bool component_less(const ExtremeComponent& a, const ExtremeComponent& b) {
  auto rank = [](ComponentTag t) {
    switch (t) {
      case ComponentTag::OriginDirac: return 0;
      case ComponentTag::TwoPoint: return 1;
      case ComponentTag::ThreePoint: return 2;
    }
    return 3;
  };
  if (a.tag() != b.tag()) return rank(a.tag()) < rank(b.tag());

  if (a.tag() == ComponentTag::OriginDirac) return false;

  if (a.tag() == ComponentTag::TwoPoint) {
    const PlanePoint& da = pair_direction(a);
    const PlanePoint& db = pair_direction(b);
    int ord = angular_compare(da, db);
    if (ord != 0) return ord < 0;
    // Same ray: order by the two ray scales measured against a shared
    // representative, far endpoint first.
    PlanePoint ref = -da;
    Scalar pa = collinear_ratio(a.atoms()[0].point, ref);
    Scalar pb = collinear_ratio(b.atoms()[0].point, ref);
    if (pa != pb) return pa < pb;
    Scalar na = collinear_ratio(a.atoms()[1].point, da);
    Scalar nb = collinear_ratio(b.atoms()[1].point, da);
    return na < nb;
  }

  const std::vector<Atom>& xa = a.atoms();
  const std::vector<Atom>& xb = b.atoms();
  for (int i = 0; i < 3; ++i) {
    if (xa[i].point != xb[i].point) return lex_less(xa[i].point, xb[i].point);
  }
  return false;
}

}  // namespace planedec
