#pragma once

// Deterministic random zero-mean fixtures for the property suites. Two
// generation routes so the samples are not all of one shape: mixtures of
// known extreme components (exercises sparse antipodal layouts), and
// free atom clouds whose last atom is solved to cancel the mean
// (exercises generic positions, occasional collinear or origin atoms).
// Every coordinate stays a rational in [-5, 5]; atom counts stay <= 8.

#include <vector>

#include "planedec/distribution.hpp"
#include "planedec/extremes.hpp"
#include "planedec/geometry.hpp"
#include "planedec/sampling.hpp"

namespace planedec::testgen {

inline long long pick_int(SplitMix64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng.next() % (hi - lo + 1));
}

inline PlanePoint random_point(SplitMix64& rng, long long lo, long long hi) {
  return {Scalar::exact(pick_int(rng, lo, hi)),
          Scalar::exact(pick_int(rng, lo, hi))};
}

inline PlanePoint random_nonzero_point(SplitMix64& rng, long long lo,
                                       long long hi) {
  for (;;) {
    PlanePoint p = random_point(rng, lo, hi);
    if (!p.is_origin()) return p;
  }
}

// Random convex mixture of one to three extreme components, at most 8
// support atoms total (2 pairs and 1 triangle plus an origin atom).
inline FiniteDistribution random_extreme_mixture(SplitMix64& rng) {
  for (;;) {
    int pairs = static_cast<int>(pick_int(rng, 0, 2));
    int triples = static_cast<int>(pick_int(rng, 0, 1));
    bool dirac = pick_int(rng, 0, 1) == 1;
    if (pairs + triples == 0) continue;

    std::vector<ExtremeComponent> comps;
    for (int i = 0; i < pairs; ++i) {
      PlanePoint a = random_nonzero_point(rng, -5, 5);
      long long num = pick_int(rng, 1, 4), den = pick_int(rng, 1, 4);
      PlanePoint b = scale(Scalar::exact(-num, den), a);
      if (b.x.abs() > Scalar::exact(5) || b.y.abs() > Scalar::exact(5)) {
        --i;
        continue;
      }
      comps.push_back(ExtremeComponent::two_point(a, b));
    }
    for (int i = 0; i < triples; ++i) {
      PlanePoint a = random_nonzero_point(rng, -5, 5);
      PlanePoint b = random_nonzero_point(rng, -5, 5);
      PlanePoint c = random_nonzero_point(rng, -5, 5);
      TripleClass cls = classify_triple(a, b, c);
      if (cls.tag != TripleTag::InteriorContaining) {
        --i;
        continue;
      }
      comps.push_back(ExtremeComponent::three_point(a, b, c));
    }
    if (dirac) comps.push_back(ExtremeComponent::dirac_origin(Mode::Exact));

    std::vector<Scalar> w;
    Scalar total = Scalar::zero(Mode::Exact);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      w.push_back(Scalar::exact(pick_int(rng, 1, 9)));
      total += w.back();
    }
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (const Atom& a : comps[i].atoms())
        atoms.push_back(Atom{a.point, w[i] / total * a.mass});
    FiniteDistribution p = FiniteDistribution::build(std::move(atoms));
    if (p.size() <= 8) return p;
  }
}

// Random atom cloud: n-1 free atoms, the last solved so the mean is zero.
// Rejected and redrawn whenever the solved atom leaves the coordinate box
// or lands on a point already used.
inline FiniteDistribution random_solved_cloud(SplitMix64& rng) {
  for (;;) {
    int n = static_cast<int>(pick_int(rng, 3, 8));
    std::vector<PlanePoint> pts;
    std::vector<Scalar> masses;
    Scalar total = Scalar::zero(Mode::Exact);
    for (int i = 0; i < n; ++i) {
      masses.push_back(Scalar::exact(pick_int(rng, 1, 9)));
      total += masses.back();
    }
    for (Scalar& m : masses) m /= total;
    bool bad = false;
    PlanePoint acc{Scalar::zero(Mode::Exact), Scalar::zero(Mode::Exact)};
    for (int i = 0; i + 1 < n; ++i) {
      long long den = pick_int(rng, 1, 2);
      PlanePoint p{Scalar::exact(pick_int(rng, -5 * den, 5 * den), den),
                   Scalar::exact(pick_int(rng, -5 * den, 5 * den), den)};
      for (const PlanePoint& q : pts)
        if (q == p) {
          bad = true;
          break;
        }
      if (bad) break;
      pts.push_back(p);
      acc = acc + scale(masses[i], p);
    }
    if (bad) continue;
    PlanePoint last = scale(-Scalar::one(Mode::Exact) / masses[n - 1], acc);
    if (last.x.abs() > Scalar::exact(5) || last.y.abs() > Scalar::exact(5))
      continue;
    for (const PlanePoint& q : pts)
      if (q == last) bad = true;
    if (bad) continue;
    pts.push_back(last);

    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(Atom{pts[i], masses[i]});
    return FiniteDistribution::build(std::move(atoms));
  }
}

// Random zero-mean distribution on one line through the origin, with an
// optional origin atom. The negative side is one or two atoms whose
// masses are solved to balance both the total and the moment.
inline FiniteDistribution random_collinear(SplitMix64& rng) {
  for (;;) {
    PlanePoint d = random_nonzero_point(rng, -3, 3);
    int npos = static_cast<int>(pick_int(rng, 1, 2));
    bool dirac = pick_int(rng, 0, 1) == 1;

    std::vector<Scalar> lam;
    for (int i = 0; i < npos; ++i) {
      Scalar l = Scalar::exact(pick_int(rng, 1, 4), pick_int(rng, 1, 2));
      bool dup = false;
      for (const Scalar& o : lam)
        if (o == l) dup = true;
      if (dup) {
        --i;
        continue;
      }
      lam.push_back(l);
    }

    Scalar origin_mass =
        dirac ? Scalar::exact(pick_int(rng, 1, 3), 10) : Scalar::zero(Mode::Exact);
    std::vector<Scalar> pos_mass;
    Scalar pos_total = Scalar::zero(Mode::Exact);
    for (int i = 0; i < npos; ++i) {
      pos_mass.push_back(Scalar::exact(pick_int(rng, 1, 5), 20));
      pos_total += pos_mass.back();
    }
    Scalar neg_total = Scalar::one(Mode::Exact) - origin_mass - pos_total;
    if (neg_total.sign() <= 0) continue;
    Scalar moment = Scalar::zero(Mode::Exact);
    for (int i = 0; i < npos; ++i) moment += lam[i] * pos_mass[i];
    // One negative atom: its multiplier is forced by the moment balance.
    Scalar mu = moment / neg_total;

    std::vector<Atom> atoms;
    if (origin_mass.sign() > 0)
      atoms.push_back(
          Atom{{Scalar::zero(Mode::Exact), Scalar::zero(Mode::Exact)},
               origin_mass});
    for (int i = 0; i < npos; ++i)
      atoms.push_back(Atom{scale(lam[i], d), pos_mass[i]});
    PlanePoint neg = scale(-mu, d);
    if (neg.x.abs() > Scalar::exact(5) || neg.y.abs() > Scalar::exact(5))
      continue;
    atoms.push_back(Atom{neg, neg_total});
    return FiniteDistribution::build(std::move(atoms));
  }
}

}  // namespace planedec::testgen
