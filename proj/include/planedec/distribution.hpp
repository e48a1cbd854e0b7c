#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "planedec/geometry.hpp"

namespace planedec {

/// Float-mode tolerance on the total mass: |sum - 1| <= kMassEps.
inline constexpr double kMassEps = 1e-12;

/// Float-mode zero-mean test: each barycenter coordinate must be within
/// kMeanEps times the largest atom coordinate magnitude.
inline constexpr double kMeanEps = 1e-9;

struct Atom {
  PlanePoint point;
  Scalar mass;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.point == b.point && a.mass == b.mass;
  }
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
};

/// A finitely supported probability distribution on the plane. Always in
/// canonical form: atoms sorted lexicographically by point, points
/// distinct, every mass strictly positive, total mass one (exactly in
/// exact mode, within kMassEps in float mode).
class FiniteDistribution {
 public:
  /// Canonicalizes and validates: merges equal points (bit-equal in float
  /// mode), drops zero masses, sorts. Throws NegativeMass, TotalMassNotOne
  /// (message names the deficit) or ModeMismatch.
  static FiniteDistribution build(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  Mode mode() const { return mode_; }

  const PlanePoint& mean() const { return mean_; }
  bool has_zero_mean() const;

  /// Mass at an exactly matching point, zero scalar otherwise.
  Scalar mass_at(const PlanePoint& p) const;

  /// The same distribution translated so its barycenter is the origin,
  /// together with the offset that restores the original: for a returned
  /// pair (q, c), this distribution is q shifted by +c.
  std::pair<FiniteDistribution, PlanePoint> recentered() const;

  friend bool operator==(const FiniteDistribution& a,
                         const FiniteDistribution& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  FiniteDistribution(std::vector<Atom> atoms, PlanePoint mean, Mode mode)
      : atoms_(std::move(atoms)), mean_(std::move(mean)), mode_(mode) {}

  std::vector<Atom> atoms_;
  PlanePoint mean_;
  Mode mode_;
};

/// Every point shifted by c, masses unchanged.
FiniteDistribution translate(const FiniteDistribution& p, const PlanePoint& c);

/// Throws NonZeroMean (message carries the barycenter) unless
/// p.has_zero_mean().
void require_zero_mean(const FiniteDistribution& p, const char* who);

struct RayAtom {
  PlanePoint point;  // the original atom position
  Scalar lambda;     // point == lambda * direction of its ray, lambda > 0
  Scalar mass;
};

struct SupportRay {
  /// Lexicographically smallest support point on the ray; every lambda in
  /// atoms is measured against this representative.
  PlanePoint direction;
  std::vector<RayAtom> atoms;  // sorted by increasing lambda
};

enum class SupportShape { OriginOnly, OnLine, Planar };

std::string to_string(SupportShape s);

/// The support of a distribution organized by rays from the origin.
struct SupportProfile {
  Scalar origin_mass;
  std::vector<SupportRay> rays;  // sorted by angular_compare of direction
  /// Ray index pairs spanning opposite rays; within a pair the ray whose
  /// direction is lex-smaller comes first. Sorted by first index.
  std::vector<std::pair<int, int>> antipodal_pairs;
  SupportShape shape = SupportShape::OriginOnly;
};

/// Groups the support by rays. Float mode folds nearly collinear points
/// onto one ray using the usual determinant dead zone.
SupportProfile profile(const FiniteDistribution& p, double geo_eps = kGeoEps);

}  // namespace planedec
