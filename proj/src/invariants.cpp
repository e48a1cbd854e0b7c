#include "planedec/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace planedec {
namespace {

// Where one atom sits relative to the probe direction d.
struct AtomSide {
  int side = 0;          // sign of det2(d, z), with the float dead zone
  bool neg_ray = false;  // z on the open ray opposite d
  Scalar lambda;         // z = -lambda * d when neg_ray
};

std::vector<AtomSide> side_table(const FiniteDistribution& p,
                                 const PlanePoint& d, double geo_eps) {
  std::vector<AtomSide> out;
  out.reserve(p.size());
  for (const Atom& a : p.atoms()) {
    AtomSide s;
    s.side = sign_det2(d, a.point, geo_eps);
    if (s.side == 0 && !a.point.is_origin() && dot(d, a.point).sign() < 0) {
      s.neg_ray = true;
      s.lambda = -collinear_ratio(a.point, d, geo_eps);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void check_probe_input(const FiniteDistribution& p, const PlanePoint& d,
                       const char* who) {
  require_zero_mean(p, who);
  if (d.is_origin())
    throw ZeroPoint(std::string(who) + ": probe direction is the origin");
  if (d.mode() != p.mode())
    throw ModeMismatch(std::string(who) +
                       ": probe direction mode differs from the distribution");
}

bool near(const Scalar& a, const Scalar& b, double eps) {
  if (a.mode() == Mode::Exact) return a == b;
  double x = a.to_double(), y = b.to_double();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= eps * scale;
}

}  // namespace

ProbeEvaluation phi_at(const FiniteDistribution& p, const PlanePoint& d,
                       double geo_eps) {
  check_probe_input(p, d, "phi_at");
  Mode m = p.mode();
  std::vector<AtomSide> at = side_table(p, d, geo_eps);
  const std::vector<Atom>& atoms = p.atoms();

  Scalar interior = Scalar::zero(m);
  Scalar anchored_first = Scalar::zero(m);
  Scalar anchored_second = Scalar::zero(m);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (i == j) continue;
      Scalar mm = atoms[i].mass * atoms[j].mass;
      if (at[i].side > 0 && at[j].side < 0 &&
          sign_det2(atoms[i].point, atoms[j].point, geo_eps) > 0)
        interior += det2(atoms[i].point, atoms[j].point) * mm;
      if (at[i].side > 0 && at[j].neg_ray)
        anchored_first += det2(atoms[i].point, atoms[j].point) * mm;
      if (at[i].neg_ray && at[j].side < 0)
        anchored_second += det2(atoms[i].point, atoms[j].point) * mm;
    }
  }
  Scalar boundary =
      (anchored_first + anchored_second) / Scalar::from_int(2, m);
  return ProbeEvaluation{d, interior, boundary, interior + boundary};
}

Scalar boundary_phi(const FiniteDistribution& p, const PlanePoint& d,
                    double geo_eps) {
  check_probe_input(p, d, "boundary_phi");
  Mode m = p.mode();
  std::vector<AtomSide> at = side_table(p, d, geo_eps);
  const std::vector<Atom>& atoms = p.atoms();

  Scalar ray_moment = Scalar::zero(m);   // sum of lambda*mass on ray(-d)
  Scalar upper = Scalar::zero(m);        // sum of det2(d,z)*mass over Hp_d
  Scalar lower = Scalar::zero(m);        // mirror sum over Hp_{-d}
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (at[i].neg_ray) ray_moment += at[i].lambda * atoms[i].mass;
    if (at[i].side > 0) upper += det2(d, atoms[i].point) * atoms[i].mass;
    if (at[i].side < 0) lower += det2(atoms[i].point, d) * atoms[i].mass;
  }
  // Zero mean balances the two half-plane moments; a mismatch would make
  // the two factorizations differ.
  if (!near(upper, lower, kPhiEps))
    throw FactorizationMismatch(
        "boundary_phi: half-plane moments disagree at d = " + str(d) + ": " +
        upper.str() + " vs " + lower.str());
  return ray_moment * upper;
}

InvariantReport phi_invariant(const FiniteDistribution& p, double geo_eps) {
  require_zero_mean(p, "phi_invariant");
  Mode m = p.mode();
  SupportProfile prof = profile(p, geo_eps);

  InvariantReport rep;
  rep.shape = prof.shape;
  rep.phi = Scalar::zero(m);
  if (prof.shape == SupportShape::OriginOnly) return rep;

  std::vector<PlanePoint> dirs;
  for (const SupportRay& r : prof.rays) {
    for (const PlanePoint& c : {r.direction, -r.direction}) {
      bool known = false;
      for (const PlanePoint& d : dirs)
        if (ray_relation(d, c, geo_eps) == RayRelation::SameRay) {
          known = true;
          break;
        }
      if (!known) dirs.push_back(c);
    }
  }
  std::sort(dirs.begin(), dirs.end(),
            [&](const PlanePoint& a, const PlanePoint& b) {
              return angular_compare(a, b, geo_eps) < 0;
            });

  std::vector<PlanePoint> probes;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    probes.push_back(dirs[i]);
    if (prof.shape == SupportShape::Planar) {
      // Adjacent gap is under pi, so the vector sum probes strictly
      // inside it.
      probes.push_back(dirs[i] + dirs[(i + 1) % dirs.size()]);
    }
  }

  for (const PlanePoint& d : probes) rep.probes.push_back(phi_at(p, d, geo_eps));
  rep.phi = rep.probes.front().total;
  for (const ProbeEvaluation& pr : rep.probes)
    if (!near(pr.total, rep.phi, kPhiEps)) {
      rep.consistent = false;
      break;
    }
  return rep;
}

}  // namespace planedec
