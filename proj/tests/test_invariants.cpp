#include <doctest.h>

#include <vector>

#include "planedec/invariants.hpp"
#include "planedec/extremes.hpp"
#include "random_support.hpp"

using namespace planedec;

namespace {

PlanePoint ep(long long x, long long y) {
  return {Scalar::exact(x), Scalar::exact(y)};
}

Atom atom(long long x, long long y, long long num, long long den) {
  return {ep(x, y), Scalar::exact(num, den)};
}

FiniteDistribution triangle() {
  return FiniteDistribution::build({atom(1, 0, 1, 3), atom(0, 1, 1, 3),
                                    atom(-1, -1, 1, 3)});
}

FiniteDistribution example_mixed() {
  // Three symmetric direction pairs with masses 1/4, 1/8, 1/8 per side.
  return FiniteDistribution::build(
      {atom(1, 0, 1, 4), atom(-1, 0, 1, 4), atom(0, 1, 1, 8),
       atom(0, -1, 1, 8), atom(1, 1, 1, 8), atom(-1, -1, 1, 8)});
}

FiniteDistribution cross() {
  return FiniteDistribution::build({atom(1, 0, 1, 4), atom(-1, 0, 1, 4),
                                    atom(0, 1, 1, 4), atom(0, -1, 1, 4)});
}

FiniteDistribution skewed_pair(long long num, long long den) {
  // beta at z_i, (1-beta) at -z_i, each direction weighted 1/3.
  Scalar beta = Scalar::exact(num, den);
  Scalar third = Scalar::exact(1, 3);
  Scalar rest = Scalar::one(Mode::Exact) - beta;
  std::vector<Atom> atoms;
  for (PlanePoint z : {ep(1, 0), ep(0, 1), ep(-1, -1)}) {
    atoms.push_back(Atom{z, third * beta});
    atoms.push_back(Atom{-z, third * rest});
  }
  return FiniteDistribution::build(std::move(atoms));
}

// Independent route to the invariant: the total weight mass that the
// decomposition formulas assign, left unnormalized. Triangle terms are
// det-sum times the mass product over every origin-covering triple;
// antipodal pair terms are (sum of both scales against a shared
// direction) times the mass product times the half-plane moment on that
// direction's side. An origin atom contributes no term here: it keeps
// its own mass as its weight, so the terms below must total the
// invariant times the mass sitting off the origin.
Scalar phi_from_weights(const FiniteDistribution& p) {
  Scalar acc = Scalar::zero(p.mode());
  const std::vector<Atom>& as = p.atoms();
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i].point.is_origin()) continue;
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      if (as[j].point.is_origin()) continue;
      RayRelation rel = ray_relation(as[i].point, as[j].point);
      if (rel == RayRelation::Antipodal) {
        const PlanePoint& d = as[i].point;
        Scalar li = Scalar::one(p.mode());
        Scalar lj = -collinear_ratio(as[j].point, d);
        Scalar side = Scalar::zero(p.mode());
        for (const Atom& z : as)
          if (!z.point.is_origin() && sign_det2(d, z.point) > 0)
            side += det2(d, z.point) * z.mass;
        acc += (li + lj) * as[i].mass * as[j].mass * side;
      }
      if (rel != RayRelation::Independent) continue;
      for (std::size_t k = j + 1; k < as.size(); ++k) {
        if (as[k].point.is_origin()) continue;
        if (classify_triple(as[i].point, as[j].point, as[k].point).tag !=
            TripleTag::InteriorContaining)
          continue;
        Scalar s = (det2(as[i].point, as[j].point) +
                    det2(as[j].point, as[k].point) +
                    det2(as[k].point, as[i].point))
                       .abs();
        acc += s * as[i].mass * as[j].mass * as[k].mass;
      }
    }
  }
  return acc;
}

Scalar off_origin_mass(const FiniteDistribution& p) {
  Scalar s = Scalar::zero(p.mode());
  for (const Atom& a : p.atoms())
    if (!a.point.is_origin()) s += a.mass;
  return s;
}

}  // namespace

TEST_CASE("phi_at splits the triangle probe by probe") {
  FiniteDistribution p = triangle();
  ProbeEvaluation e = phi_at(p, ep(1, 0));
  CHECK(e.interior_sum == Scalar::exact(1, 9));
  CHECK(e.boundary_sum.is_zero());
  CHECK(e.total == Scalar::exact(1, 9));

  // Probing straight at a support atom's antipode moves the whole value
  // into the anchored-pair half sum.
  e = phi_at(p, ep(1, 1));
  CHECK(e.interior_sum.is_zero());
  CHECK(e.boundary_sum == Scalar::exact(1, 9));
  CHECK(e.total == Scalar::exact(1, 9));

  // Scaling the probe direction changes nothing.
  CHECK(phi_at(p, ep(7, 7)).total == Scalar::exact(1, 9));
  CHECK(phi_at(p, ep(2, 0)).total == Scalar::exact(1, 9));
}

TEST_CASE("phi_at on the cross") {
  FiniteDistribution p = cross();
  ProbeEvaluation e = phi_at(p, ep(1, 0));
  CHECK(e.interior_sum.is_zero());
  CHECK(e.boundary_sum == Scalar::exact(1, 16));
  e = phi_at(p, ep(1, 1));
  CHECK(e.interior_sum == Scalar::exact(1, 16));
  CHECK(e.boundary_sum.is_zero());
}

TEST_CASE("phi_at rejects bad input") {
  CHECK_THROWS_AS(phi_at(triangle(), ep(0, 0)), ZeroPoint);
  FiniteDistribution off =
      FiniteDistribution::build({atom(3, 0, 1, 2), atom(1, 0, 1, 2)});
  CHECK_THROWS_AS(phi_at(off, ep(1, 0)), NonZeroMean);
}

TEST_CASE("boundary term factorizations") {
  // Mass sits opposite the probe: both factorized products equal the
  // anchored pair sum.
  FiniteDistribution p = example_mixed();
  CHECK(boundary_phi(p, ep(1, 0)) == Scalar::exact(1, 16));
  CHECK(boundary_phi(p, ep(1, 0)) == phi_at(p, ep(1, 0)).boundary_sum);
  CHECK(boundary_phi(p, ep(-1, -1)) == phi_at(p, ep(-1, -1)).boundary_sum);

  // No mass on the opposite ray: the term vanishes even though the
  // distribution is planar.
  CHECK(boundary_phi(triangle(), ep(2, 1)).is_zero());
  CHECK(boundary_phi(triangle(), ep(-1, 0)) ==
        phi_at(triangle(), ep(-1, 0)).boundary_sum);
  // The triangle does have mass opposite the probe (1,1): the boundary
  // term then carries the entire invariant.
  CHECK(boundary_phi(triangle(), ep(1, 1)) == Scalar::exact(1, 9));
}

TEST_CASE("phi_invariant certifies the sweep") {
  InvariantReport rep = phi_invariant(triangle());
  CHECK(rep.phi == Scalar::exact(1, 9));
  CHECK(rep.shape == SupportShape::Planar);
  CHECK(rep.consistent);
  // 3 support rays, their 3 antipodes, 6 mid-cone directions.
  CHECK(rep.probes.size() == 12);
  for (const ProbeEvaluation& e : rep.probes)
    CHECK(e.total == Scalar::exact(1, 9));
}

TEST_CASE("invariant values of the closed-form fixtures") {
  CHECK(phi_invariant(example_mixed()).phi == Scalar::exact(5, 64));
  CHECK(phi_invariant(cross()).phi == Scalar::exact(1, 16));
  CHECK(phi_invariant(skewed_pair(1, 2)).phi == Scalar::exact(1, 12));
  CHECK(phi_invariant(skewed_pair(1, 3)).phi == Scalar::exact(7, 81));
  // beta and 1 - beta give the same distribution family values.
  CHECK(phi_invariant(skewed_pair(2, 3)).phi == Scalar::exact(7, 81));
}

TEST_CASE("degenerate shapes have zero invariant") {
  FiniteDistribution dirac = FiniteDistribution::build({atom(0, 0, 1, 1)});
  InvariantReport rep = phi_invariant(dirac);
  CHECK(rep.phi.is_zero());
  CHECK(rep.shape == SupportShape::OriginOnly);
  CHECK(rep.probes.empty());
  CHECK(rep.consistent);

  FiniteDistribution line = FiniteDistribution::build(
      {atom(-1, 0, 1, 2), atom(0, 0, 1, 8), atom(1, 0, 1, 4),
       atom(2, 0, 1, 8)});
  rep = phi_invariant(line);
  CHECK(rep.phi.is_zero());
  CHECK(rep.shape == SupportShape::OnLine);
  CHECK(!rep.probes.empty());
  for (const ProbeEvaluation& e : rep.probes) CHECK(e.total.is_zero());
  CHECK(rep.consistent);
}

TEST_CASE("weight terms total the invariant times the off-origin mass") {
  // No origin atom in these four, so the factor is 1.
  CHECK(phi_invariant(triangle()).phi == phi_from_weights(triangle()));
  CHECK(phi_invariant(example_mixed()).phi == phi_from_weights(example_mixed()));
  CHECK(phi_invariant(cross()).phi == phi_from_weights(cross()));
  CHECK(phi_invariant(skewed_pair(1, 3)).phi ==
        phi_from_weights(skewed_pair(1, 3)));

  // Cross arms at mass 1/5 plus a 1/5 origin atom: the invariant ignores
  // the origin atom entirely, the weight terms shrink by its mass.
  FiniteDistribution spiked = FiniteDistribution::build(
      {atom(1, 0, 1, 5), atom(-1, 0, 1, 5), atom(0, 1, 1, 5),
       atom(0, -1, 1, 5), atom(0, 0, 1, 5)});
  CHECK(phi_invariant(spiked).phi == Scalar::exact(1, 25));
  CHECK(phi_from_weights(spiked) == Scalar::exact(4, 125));
  CHECK(phi_invariant(spiked).phi * off_origin_mass(spiked) ==
        phi_from_weights(spiked));

  SplitMix64 rng(811);
  for (int t = 0; t < 25; ++t) {
    FiniteDistribution p = testgen::random_extreme_mixture(rng);
    CHECK(phi_invariant(p).phi * off_origin_mass(p) == phi_from_weights(p));
  }
  for (int t = 0; t < 25; ++t) {
    FiniteDistribution p = testgen::random_solved_cloud(rng);
    InvariantReport rep = phi_invariant(p);
    CHECK(rep.consistent);
    CHECK(rep.phi * off_origin_mass(p) == phi_from_weights(p));
  }
}

TEST_CASE("invariant transforms like an area") {
  auto apply = [](const FiniteDistribution& p, long long a, long long b,
                  long long c, long long d, long long den) {
    std::vector<Atom> atoms;
    for (const Atom& at : p.atoms()) {
      Scalar x = (Scalar::exact(a) * at.point.x + Scalar::exact(b) * at.point.y) /
                 Scalar::exact(den);
      Scalar y = (Scalar::exact(c) * at.point.x + Scalar::exact(d) * at.point.y) /
                 Scalar::exact(den);
      atoms.push_back(Atom{{x, y}, at.mass});
    }
    return FiniteDistribution::build(std::move(atoms));
  };
  FiniteDistribution p = example_mixed();
  Scalar phi = phi_invariant(p).phi;
  // Rotation by the 3-4-5 angle preserves it.
  CHECK(phi_invariant(apply(p, 3, -4, 4, 3, 5)).phi == phi);
  // Scaling by s multiplies it by s^2.
  CHECK(phi_invariant(apply(p, 2, 0, 0, 2, 1)).phi == Scalar::exact(4) * phi);
  CHECK(phi_invariant(apply(p, 1, 0, 0, 1, 3)).phi ==
        phi / Scalar::exact(9));
}

TEST_CASE("float mode invariant agrees with the exact value") {
  std::vector<Atom> atoms;
  for (const Atom& a : example_mixed().atoms())
    atoms.push_back(Atom{{Scalar::floating(a.point.x.to_double()),
                          Scalar::floating(a.point.y.to_double())},
                         Scalar::floating(a.mass.to_double())});
  InvariantReport rep = phi_invariant(FiniteDistribution::build(atoms));
  CHECK(rep.consistent);
  CHECK(rep.phi.to_double() == doctest::Approx(5.0 / 64).epsilon(1e-12));
}
