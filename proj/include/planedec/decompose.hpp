#pragma once

#include <vector>

#include "planedec/extremes.hpp"
#include "planedec/invariants.hpp"

namespace planedec {

/// Float-mode reconstruction tolerance: atom masses and matched points may
/// differ by at most kRecEps * max(1, scale).
inline constexpr double kRecEps = 1e-9;

struct WeightedComponent {
  ExtremeComponent component;
  Scalar weight;
};

/// A zero-mean distribution written as a convex mixture of extreme
/// components. offset records the barycenter removed from the source when
/// the decomposition was produced through the recentering entry point;
/// it is the origin otherwise.
struct Decomposition {
  Mode mode = Mode::Exact;
  SupportShape shape = SupportShape::OriginOnly;
  Scalar phi;
  std::vector<WeightedComponent> components;  // canonical component order
  PlanePoint offset;
};

struct VerificationReport {
  Scalar weight_sum;
  Scalar max_atom_discrepancy;
  bool per_component_mean_ok = false;
  /// Strict equality: every atom matched exactly and the weights sum to
  /// exactly one. Attainable only in exact mode.
  bool exact_match = false;
  /// The mode-appropriate verdict: exact_match in exact mode, all
  /// discrepancies within tolerance in float mode.
  bool passed = false;
};

/// The full planar decomposition of a zero-mean distribution.
///
/// Origin-only support yields the single dirac term. On-line support
/// delegates to decompose_collinear. Planar support normalizes by the
/// invariant (which must be positive): the origin atom becomes the dirac
/// term with its own mass as weight; each unordered triple of non-origin
/// support points whose triangle strictly surrounds the origin becomes a
/// three-point component with weight det-sum * m1*m2*m3 / phi; each atom
/// pair on antipodal rays becomes a two-point component with weight
/// (lambda1+lambda2) * m1*m2 * S(d) / phi, where both lambdas are scales
/// against the shared reference direction d and S(d) sums det2(d,z)*mass
/// over the open half-plane ccw of d. Triples with the origin on an edge
/// are never enumerated; the pair terms carry exactly their share.
///
/// Throws NonZeroMean for off-center input and InternalInconsistency if
/// the invariant fails to be positive on planar support or the weights
/// fail to sum to one.
Decomposition decompose(const FiniteDistribution& p, double geo_eps = kGeoEps);

/// The one-dimensional special case: support on a single line through the
/// origin. Pairs one positive-side atom with one negative-side atom each,
/// weight (lambda1+lambda2)*m1*m2 / N with N the common one-sided moment
/// sum of lambda*mass. phi is zero. Throws NotOnLine on planar support.
Decomposition decompose_collinear(const FiniteDistribution& p,
                                  double geo_eps = kGeoEps);

/// Accepts any mean: recenters, decomposes, records the offset.
Decomposition decompose_general(const FiniteDistribution& p,
                                double geo_eps = kGeoEps);

/// The mixture the decomposition denotes, as a plain distribution with
/// barycenter zero. The offset is not applied here; see verify.
FiniteDistribution reconstruct(const Decomposition& d);

/// Compares reconstruct(d), shifted by d.offset when one was recorded,
/// against p atom by atom. Float mode matches points within eps_rec of
/// each other before comparing masses; unmatched atoms count with their
/// whole mass as discrepancy. A decomposition whose weighted atoms do
/// not form a probability distribution (weights tampered after the
/// fact) is reported as failed, never thrown.
VerificationReport verify(const FiniteDistribution& p, const Decomposition& d,
                          double eps_rec = kRecEps);

}  // namespace planedec
