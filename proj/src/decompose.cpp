#include "planedec/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

namespace planedec {
namespace {

Scalar weight_total(const std::vector<WeightedComponent>& comps, Mode m) {
  Scalar sum = Scalar::zero(m);
  for (const WeightedComponent& wc : comps) sum += wc.weight;
  return sum;
}

void check_weights(const std::vector<WeightedComponent>& comps, Mode m) {
  Scalar sum = weight_total(comps, m);
  Scalar off = sum - Scalar::one(m);
  bool ok = m == Mode::Exact ? off.is_zero()
                             : std::fabs(off.to_double()) <= kRecEps;
  if (!ok)
    throw InternalInconsistency("component weights sum to " + sum.str() +
                                ", not 1");
  for (const WeightedComponent& wc : comps)
    if (wc.weight.sign() <= 0)
      throw InternalInconsistency("nonpositive component weight " +
                                  wc.weight.str());
}

void sort_components(std::vector<WeightedComponent>& comps) {
  std::sort(comps.begin(), comps.end(),
            [](const WeightedComponent& a, const WeightedComponent& b) {
              return component_less(a.component, b.component);
            });
}

PlanePoint origin_point(Mode m) {
  return PlanePoint{Scalar::zero(m), Scalar::zero(m)};
}

Decomposition assemble(Mode m, SupportShape shape, Scalar phi,
                       std::vector<WeightedComponent> comps) {
  sort_components(comps);
  check_weights(comps, m);
  return Decomposition{m, shape, std::move(phi), std::move(comps),
                       origin_point(m)};
}

// Two-point terms for one antipodal ray pair. Both scales are measured
// against the shared direction d; the opposite ray's own lambdas are
// rescaled through kappa. The caller supplies the normalizer (the
// half-plane factor over phi for planar support, the one-sided moment
// for collinear support).
void emit_pairs(const SupportRay& pos, const SupportRay& neg,
                const Scalar& factor, double geo_eps,
                std::vector<WeightedComponent>& out) {
  Scalar kappa = -collinear_ratio(neg.direction, pos.direction, geo_eps);
  for (const RayAtom& a : pos.atoms)
    for (const RayAtom& b : neg.atoms) {
      Scalar w = (a.lambda + kappa * b.lambda) * a.mass * b.mass * factor;
      out.push_back(WeightedComponent{
          ExtremeComponent::two_point(a.point, b.point, geo_eps), w});
    }
}

}  // namespace

Decomposition decompose(const FiniteDistribution& p, double geo_eps) {
  require_zero_mean(p, "decompose");
  Mode m = p.mode();
  SupportProfile prof = profile(p, geo_eps);

  if (prof.shape != SupportShape::Planar) return decompose_collinear(p, geo_eps);

  InvariantReport rep = phi_invariant(p, geo_eps);
  if (m == Mode::Exact && !rep.consistent)
    throw InternalInconsistency("probe evaluations disagree on exact input");
  Scalar phi = rep.phi;
  bool positive = m == Mode::Exact ? phi.sign() > 0 : phi.to_double() > 0.0;
  if (!positive)
    throw InternalInconsistency("planar support with nonpositive invariant " +
                                phi.str());

  std::vector<WeightedComponent> comps;
  if (prof.origin_mass.sign() > 0)
    comps.push_back(WeightedComponent{ExtremeComponent::dirac_origin(m),
                                      prof.origin_mass});

  for (auto [ia, ib] : prof.antipodal_pairs) {
    const SupportRay& pos = prof.rays[ia];
    const SupportRay& neg = prof.rays[ib];
    Scalar half_plane = Scalar::zero(m);
    for (const Atom& a : p.atoms())
      if (sign_det2(pos.direction, a.point, geo_eps) > 0)
        half_plane += det2(pos.direction, a.point) * a.mass;
    emit_pairs(pos, neg, half_plane / phi, geo_eps, comps);
  }

  std::vector<Atom> pts;
  for (const Atom& a : p.atoms())
    if (!a.point.is_origin()) pts.push_back(a);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      // A pair already on one line through the origin can never be two
      // vertices of a strictly containing triangle.
      if (ray_relation(pts[i].point, pts[j].point, geo_eps) !=
          RayRelation::Independent)
        continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        TripleClass cls =
            classify_triple(pts[i].point, pts[j].point, pts[k].point, geo_eps);
        if (cls.tag != TripleTag::InteriorContaining) continue;
        Scalar det_sum = (det2(pts[i].point, pts[j].point) +
                          det2(pts[j].point, pts[k].point) +
                          det2(pts[k].point, pts[i].point))
                             .abs();
        Scalar w =
            det_sum * pts[i].mass * pts[j].mass * pts[k].mass / phi;
        comps.push_back(WeightedComponent{
            ExtremeComponent::three_point(pts[i].point, pts[j].point,
                                          pts[k].point, geo_eps),
            w});
      }
    }

  return assemble(m, SupportShape::Planar, std::move(phi), std::move(comps));
}

Decomposition decompose_collinear(const FiniteDistribution& p,
                                  double geo_eps) {
  require_zero_mean(p, "decompose_collinear");
  Mode m = p.mode();
  SupportProfile prof = profile(p, geo_eps);
  if (prof.shape == SupportShape::Planar)
    throw NotOnLine(
        "decompose_collinear: support is not on one line through the origin");

  std::vector<WeightedComponent> comps;
  if (prof.origin_mass.sign() > 0)
    comps.push_back(WeightedComponent{ExtremeComponent::dirac_origin(m),
                                      prof.origin_mass});

  if (!prof.antipodal_pairs.empty()) {
    auto [ia, ib] = prof.antipodal_pairs.front();
    const SupportRay& pos = prof.rays[ia];
    Scalar moment = Scalar::zero(m);
    for (const RayAtom& a : pos.atoms) moment += a.lambda * a.mass;
    emit_pairs(pos, prof.rays[ib], Scalar::one(m) / moment, geo_eps, comps);
  }

  return assemble(m, prof.shape, Scalar::zero(m), std::move(comps));
}

Decomposition decompose_general(const FiniteDistribution& p, double geo_eps) {
  auto [centered, offset] = p.recentered();
  Decomposition dec = decompose(centered, geo_eps);
  dec.offset = offset;
  return dec;
}

FiniteDistribution reconstruct(const Decomposition& d) {
  std::vector<Atom> raw;
  for (const WeightedComponent& wc : d.components)
    for (const Atom& a : wc.component.atoms())
      raw.push_back(Atom{a.point, wc.weight * a.mass});
  return FiniteDistribution::build(std::move(raw));
}

VerificationReport verify(const FiniteDistribution& p, const Decomposition& d,
                          double eps_rec) {
  Mode m = p.mode();

  VerificationReport rep;
  rep.weight_sum = weight_total(d.components, d.mode);

  rep.per_component_mean_ok = true;
  for (const WeightedComponent& wc : d.components) {
    PlanePoint mean = wc.component.mean();
    if (m == Mode::Exact) {
      if (!mean.is_origin()) rep.per_component_mean_ok = false;
    } else {
      double scale = 1.0;
      for (const Atom& a : wc.component.atoms())
        scale = std::max(scale, std::fabs(a.point.x.to_double()) +
                                    std::fabs(a.point.y.to_double()));
      if (std::fabs(mean.x.to_double()) > eps_rec * scale ||
          std::fabs(mean.y.to_double()) > eps_rec * scale)
        rep.per_component_mean_ok = false;
    }
  }

  std::optional<FiniteDistribution> recon;
  try {
    FiniteDistribution r = reconstruct(d);
    if (!d.offset.is_origin()) r = translate(r, d.offset);
    recon = std::move(r);
  } catch (const Error&) {
    // Weighted atoms fail the distribution checks, so nothing matches;
    // every atom of p stands as discrepancy and the report fails.
    Scalar max_disc = Scalar::zero(m);
    for (const Atom& a : p.atoms())
      if (max_disc < a.mass) max_disc = a.mass;
    rep.max_atom_discrepancy = max_disc;
    rep.exact_match = false;
    rep.passed = false;
    return rep;
  }

  auto points_match = [&](const PlanePoint& a, const PlanePoint& b) {
    if (m == Mode::Exact) return a == b;
    double scale = std::max({1.0, std::fabs(a.x.to_double()),
                             std::fabs(a.y.to_double())});
    return std::fabs(a.x.to_double() - b.x.to_double()) <= eps_rec * scale &&
           std::fabs(a.y.to_double() - b.y.to_double()) <= eps_rec * scale;
  };

  const std::vector<Atom>& pa = p.atoms();
  const std::vector<Atom>& ra = recon->atoms();
  std::vector<bool> used(ra.size(), false);
  Scalar max_disc = Scalar::zero(m);
  auto bump = [&max_disc](Scalar v) {
    if (max_disc < v) max_disc = std::move(v);
  };
  for (const Atom& a : pa) {
    bool matched = false;
    for (std::size_t j = 0; j < ra.size(); ++j) {
      if (used[j] || !points_match(a.point, ra[j].point)) continue;
      used[j] = true;
      bump((a.mass - ra[j].mass).abs());
      matched = true;
      break;
    }
    if (!matched) bump(a.mass);
  }
  for (std::size_t j = 0; j < ra.size(); ++j)
    if (!used[j]) bump(ra[j].mass);
  rep.max_atom_discrepancy = max_disc;

  if (m == Mode::Exact) {
    rep.exact_match = max_disc.is_zero() &&
                      rep.weight_sum == Scalar::one(m) &&
                      rep.per_component_mean_ok;
    rep.passed = rep.exact_match;
  } else {
    rep.exact_match = false;
    rep.passed = max_disc.to_double() <= eps_rec &&
                 std::fabs(rep.weight_sum.to_double() - 1.0) <= eps_rec &&
                 rep.per_component_mean_ok;
  }
  return rep;
}

}  // namespace planedec
