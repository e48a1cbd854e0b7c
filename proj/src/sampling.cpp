#include "planedec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace planedec {
namespace {

// First index whose cumulative weight exceeds u; the last index catches
// u landing in the roundoff dust past the final cumulative sum.
std::size_t pick(const std::vector<double>& weights, double u) {
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    cum += weights[i];
    if (u < cum) return i;
  }
  return weights.empty() ? 0 : weights.size() - 1;
}

std::vector<double> weight_table(const Decomposition& d) {
  std::vector<double> w;
  w.reserve(d.components.size());
  for (const WeightedComponent& wc : d.components)
    w.push_back(wc.weight.to_double());
  return w;
}

std::vector<double> mass_table(const ExtremeComponent& c) {
  std::vector<double> w;
  w.reserve(c.atoms().size());
  for (const Atom& a : c.atoms()) w.push_back(a.mass.to_double());
  return w;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

const ExtremeComponent& sample_component(const Decomposition& d,
                                         SplitMix64& rng) {
  return d.components[pick(weight_table(d), rng.next_unit())].component;
}

const PlanePoint& sample_point(const ExtremeComponent& c, SplitMix64& rng) {
  return c.atoms()[pick(mass_table(c), rng.next_unit())].point;
}

EmpiricalSummary run_sampler(const Decomposition& d, std::uint64_t n,
                             std::uint64_t seed) {
  // The law the sampler realizes, for expected masses and the report's
  // point set; reconstruct also revalidates the decomposition.
  FiniteDistribution law = reconstruct(d);
  bool shifted = !d.offset.is_origin();
  std::vector<PlanePoint> points;
  std::vector<double> expected;
  std::vector<double> px, py;
  for (const Atom& a : law.atoms()) {
    PlanePoint pt = shifted ? a.point + d.offset : a.point;
    px.push_back(pt.x.to_double());
    py.push_back(pt.y.to_double());
    points.push_back(std::move(pt));
    expected.push_back(a.mass.to_double());
  }

  // Per-component tables mapping each drawn atom to its law index.
  std::vector<double> comp_weights = weight_table(d);
  std::vector<std::vector<double>> atom_masses;
  std::vector<std::vector<std::size_t>> atom_index;
  for (const WeightedComponent& wc : d.components) {
    atom_masses.push_back(mass_table(wc.component));
    std::vector<std::size_t> idx;
    for (const Atom& a : wc.component.atoms()) {
      std::size_t at = 0;
      while (at < points.size() && !(law.atoms()[at].point == a.point)) ++at;
      idx.push_back(at);
    }
    atom_index.push_back(std::move(idx));
  }

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> counts(points.size(), 0);
  double sum_x = 0.0, sum_y = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::size_t ci = pick(comp_weights, rng.next_unit());
    std::size_t ai = pick(atom_masses[ci], rng.next_unit());
    std::size_t li = atom_index[ci][ai];
    counts[li] += 1;
    sum_x += px[li];
    sum_y += py[li];
  }

  EmpiricalSummary out;
  out.draws = n;
  out.seed = seed;
  out.mean_x = sum_x / static_cast<double>(n);
  out.mean_y = sum_y / static_cast<double>(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    double q = expected[i];
    FrequencyEntry e;
    e.point = points[i];
    e.expected = q;
    e.observed = static_cast<double>(counts[i]) / static_cast<double>(n);
    e.band = 3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(n));
    out.frequencies.push_back(std::move(e));
  }
  return out;
}

}  // namespace planedec
