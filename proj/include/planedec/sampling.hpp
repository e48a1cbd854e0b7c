#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "planedec/decompose.hpp"

namespace planedec {

/// The fixed pseudorandom generator behind every sampling operation,
/// chosen for a specification small enough to restate in full so that
/// summaries are reproducible in any language. State is one 64-bit word;
/// each draw advances it by the odd constant 0x9E3779B97F4A7C15 and
/// returns the mixed value
///   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB;
///   z ^= z >> 31;
/// Unit doubles take the top 53 bits: (value >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// First lottery stage: one component, drawn by weight. Consumes exactly
/// one generator output.
const ExtremeComponent& sample_component(const Decomposition& d,
                                         SplitMix64& rng);

/// Second stage: one support point of the component, drawn by mass.
/// Consumes exactly one generator output.
const PlanePoint& sample_point(const ExtremeComponent& c, SplitMix64& rng);

struct FrequencyEntry {
  PlanePoint point;
  double expected;   // mass under the decomposition's own law
  double observed;   // empirical frequency
  double band;       // three binomial standard deviations of expected
};

struct EmpiricalSummary {
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  std::vector<FrequencyEntry> frequencies;  // lexicographic point order
};

/// n two-stage draws from a fresh generator seeded as given; every draw
/// consumes exactly two generator outputs (component, then point), so the
/// whole summary is a pure function of (decomposition, n, seed). When the
/// decomposition carries a recentering offset the reported points and
/// means are in the source's frame (offset added back).
EmpiricalSummary run_sampler(const Decomposition& d, std::uint64_t n,
                             std::uint64_t seed);

}  // namespace planedec
