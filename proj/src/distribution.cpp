#include "planedec/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace planedec {

FiniteDistribution FiniteDistribution::build(std::vector<Atom> atoms) {
  if (atoms.empty())
    throw TotalMassNotOne("empty distribution: total mass 0, off by 1");

  Mode mode = atoms.front().point.mode();
  for (const Atom& a : atoms) {
    if (a.point.mode() != mode || a.mass.mode() != mode)
      throw ModeMismatch("distribution with mixed-mode atoms");
    if (a.mass.sign() < 0)
      throw NegativeMass("negative mass " + a.mass.str() + " at " +
                         str(a.point));
  }

  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return lex_less(a.point, b.point);
  });

  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (Atom& a : atoms) {
    if (!merged.empty() && merged.back().point == a.point)
      merged.back().mass += a.mass;
    else
      merged.push_back(std::move(a));
  }
  std::erase_if(merged, [](const Atom& a) { return a.mass.is_zero(); });

  Scalar total = Scalar::zero(mode);
  for (const Atom& a : merged) total += a.mass;
  Scalar off = total - Scalar::one(mode);
  bool ok = mode == Mode::Exact ? off.is_zero()
                                : std::fabs(off.to_double()) <= kMassEps;
  if (!ok)
    throw TotalMassNotOne("total mass " + total.str() + ", off by " +
                          off.str());

  PlanePoint mean{Scalar::zero(mode), Scalar::zero(mode)};
  for (const Atom& a : merged) mean = mean + scale(a.mass, a.point);
  return FiniteDistribution(std::move(merged), std::move(mean), mode);
}

bool FiniteDistribution::has_zero_mean() const {
  if (mode_ == Mode::Exact) return mean_.is_origin();
  double scale = 0.0;
  for (const Atom& a : atoms_)
    scale = std::max(scale, std::fabs(a.point.x.to_double()) +
                                std::fabs(a.point.y.to_double()));
  double tol = kMeanEps * scale;
  return std::fabs(mean_.x.to_double()) <= tol &&
         std::fabs(mean_.y.to_double()) <= tol;
}

Scalar FiniteDistribution::mass_at(const PlanePoint& p) const {
  for (const Atom& a : atoms_)
    if (a.point == p) return a.mass;
  return Scalar::zero(mode_);
}

std::pair<FiniteDistribution, PlanePoint> FiniteDistribution::recentered()
    const {
  // Already centered (within tolerance in float mode): no shift, so the
  // support points survive bit for bit.
  if (has_zero_mean())
    return {*this, PlanePoint{Scalar::zero(mode_), Scalar::zero(mode_)}};
  std::vector<Atom> shifted = atoms_;
  for (Atom& a : shifted) a.point = a.point - mean_;
  return {build(std::move(shifted)), mean_};
}

FiniteDistribution translate(const FiniteDistribution& p,
                             const PlanePoint& c) {
  std::vector<Atom> shifted = p.atoms();
  for (Atom& a : shifted) a.point = a.point + c;
  return FiniteDistribution::build(std::move(shifted));
}

void require_zero_mean(const FiniteDistribution& p, const char* who) {
  if (!p.has_zero_mean())
    throw NonZeroMean(std::string(who) + ": barycenter is " + str(p.mean()) +
                      ", not the origin");
}

std::string to_string(SupportShape s) {
  switch (s) {
    case SupportShape::OriginOnly: return "origin_only";
    case SupportShape::OnLine: return "on_line";
    case SupportShape::Planar: return "planar";
  }
  return "?";
}

SupportProfile profile(const FiniteDistribution& p, double geo_eps) {
  SupportProfile out;
  out.origin_mass = Scalar::zero(p.mode());

  // Atoms arrive in lex order, so the first point seen in each group is
  // its lex-smallest member and becomes the ray representative.
  for (const Atom& a : p.atoms()) {
    if (a.point.is_origin()) {
      out.origin_mass += a.mass;
      continue;
    }
    SupportRay* home = nullptr;
    for (SupportRay& r : out.rays)
      if (ray_relation(r.direction, a.point, geo_eps) == RayRelation::SameRay) {
        home = &r;
        break;
      }
    if (!home) {
      out.rays.push_back(SupportRay{a.point, {}});
      home = &out.rays.back();
    }
    home->atoms.push_back(
        RayAtom{a.point, collinear_ratio(a.point, home->direction, geo_eps),
                a.mass});
  }

  for (SupportRay& r : out.rays)
    std::sort(r.atoms.begin(), r.atoms.end(),
              [](const RayAtom& a, const RayAtom& b) {
                return a.lambda < b.lambda;
              });
  std::sort(out.rays.begin(), out.rays.end(),
            [&](const SupportRay& a, const SupportRay& b) {
              return angular_compare(a.direction, b.direction, geo_eps) < 0;
            });

  for (std::size_t i = 0; i < out.rays.size(); ++i)
    for (std::size_t j = i + 1; j < out.rays.size(); ++j)
      if (ray_relation(out.rays[i].direction, out.rays[j].direction,
                       geo_eps) == RayRelation::Antipodal) {
        if (lex_less(out.rays[i].direction, out.rays[j].direction))
          out.antipodal_pairs.emplace_back(int(i), int(j));
        else
          out.antipodal_pairs.emplace_back(int(j), int(i));
      }

  if (out.rays.empty()) {
    out.shape = SupportShape::OriginOnly;
  } else if (out.rays.size() <= 2 &&
             out.antipodal_pairs.size() + 1 == out.rays.size()) {
    out.shape = SupportShape::OnLine;
  } else {
    out.shape = SupportShape::Planar;
  }
  return out;
}

}  // namespace planedec
