#pragma once

#include <vector>

#include "planedec/distribution.hpp"

namespace planedec {

/// Float-mode tolerance for probe agreement and weight-sum checks:
/// values within kPhiEps * max(1, |reference|) count as equal.
inline constexpr double kPhiEps = 1e-9;

/// One probe direction's evaluation of the pair functional: the sum over
/// strictly straddling pairs, the halved sum over pairs anchored on the
/// opposite ray, and their total.
struct ProbeEvaluation {
  PlanePoint direction;
  Scalar interior_sum;
  Scalar boundary_sum;
  Scalar total;
};

struct InvariantReport {
  Scalar phi;
  SupportShape shape = SupportShape::OriginOnly;
  std::vector<ProbeEvaluation> probes;
  /// All probe totals equal (exactly in exact mode, within kPhiEps in
  /// float mode). For valid zero-mean input this is a theorem; false
  /// means arithmetic trouble, and exact-mode callers treat it as such.
  bool consistent = true;
};

/// Evaluates the pair functional at one probe direction d.
///
/// interior_sum runs over ordered atom pairs (a, b) with a strictly in
/// the open half-plane counterclockwise of d, b strictly in the opposite
/// open half-plane, and b counterclockwise past a's antipode, i.e.
/// det2(d,a) > 0, det2(d,b) < 0, det2(a,b) > 0; each contributes
/// det2(a,b) * mass(a) * mass(b).
///
/// boundary_sum is half of [pairs (a on Hp_d, b on ray(-d)) plus pairs
/// (a on ray(-d), b on Hp_{-d})], same integrand.
///
/// pre: barycenter zero; d nonzero. Throws NonZeroMean / ZeroPoint.
ProbeEvaluation phi_at(const FiniteDistribution& p, const PlanePoint& d,
                       double geo_eps = kGeoEps);

/// The boundary term factorized both ways:
///   (sum of lambda*mass over ray(-d)) * (sum of det2(d,z)*mass over Hp_d)
/// and the mirror product over Hp_{-d}. Computes both, checks they agree
/// (they must, by the zero-mean moment balance), returns the common value.
/// All factors are in the scale-cancelled form, so no square roots.
/// Throws FactorizationMismatch on disagreement.
Scalar boundary_phi(const FiniteDistribution& p, const PlanePoint& d,
                    double geo_eps = kGeoEps);

/// Sweeps phi_at over a covering probe set and certifies independence of
/// the probe: every support ray direction, every antipode of one, and the
/// exact mid-cone vector sum of each adjacent pair in the circularly
/// sorted merged direction set (gaps are below pi once the support spans
/// more than one line, so the sums are valid interior probes).
///
/// Origin-only support: phi = 0, no probes, consistent. On-line support:
/// probes at the ray directions, phi = 0, consistent.
InvariantReport phi_invariant(const FiniteDistribution& p,
                              double geo_eps = kGeoEps);

}  // namespace planedec
