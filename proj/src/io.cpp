#include "planedec/io.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

namespace planedec {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

Mode parse_mode(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected \"exact\" or \"float\"");
  std::string s = j.get<std::string>();
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  bad(path, "unknown mode \"" + s + "\"");
}

Scalar scalar_from_json(const json& j, Mode m, const std::string& path) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>(), m);
    } catch (const ParseError& e) {
      bad(path, e.what());
    }
  }
  if (m == Mode::Exact) {
    if (j.is_number_integer())
      return Scalar::from_int(j.get<long long>(), Mode::Exact);
    if (j.is_number()) bad(path, "decimal number in exact mode; use \"p/q\"");
    bad(path, "expected an exact number string");
  }
  if (j.is_number()) return Scalar::floating(j.get<double>());
  bad(path, "expected a number");
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return json(s.str());
  return json(s.to_double());
}

PlanePoint point_from_json(const json& j, Mode m, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected a pair [x, y]");
  return PlanePoint{scalar_from_json(j[0], m, path + "[0]"),
                    scalar_from_json(j[1], m, path + "[1]")};
}

json point_to_json(const PlanePoint& p) {
  return json::array({scalar_to_json(p.x), scalar_to_json(p.y)});
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) bad(path, std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

FiniteDistribution parse_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  Mode m = parse_mode(field(j, "mode", "document"), "mode");
  const json& atoms = field(j, "atoms", "document");
  if (!atoms.is_array()) bad("atoms", "expected an array");
  std::vector<Atom> raw;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::string path = "atoms[" + std::to_string(i) + "]";
    const json& a = atoms[i];
    if (!a.is_object()) bad(path, "expected an object {x, y, mass}");
    raw.push_back(
        Atom{PlanePoint{scalar_from_json(field(a, "x", path), m, path + ".x"),
                        scalar_from_json(field(a, "y", path), m, path + ".y")},
             scalar_from_json(field(a, "mass", path), m, path + ".mass")});
  }
  return FiniteDistribution::build(std::move(raw));
}

FiniteDistribution convert_mode(const FiniteDistribution& p, Mode target) {
  if (p.mode() == target) return p;
  std::vector<Atom> raw;
  if (target == Mode::Float) {
    for (const Atom& a : p.atoms())
      raw.push_back(Atom{PlanePoint{Scalar::floating(a.point.x.to_double()),
                                    Scalar::floating(a.point.y.to_double())},
                         Scalar::floating(a.mass.to_double())});
    return FiniteDistribution::build(std::move(raw));
  }
  // Doubles convert to rationals exactly; only the mass total needs care.
  Scalar total = Scalar::zero(Mode::Exact);
  for (const Atom& a : p.atoms())
    total += Scalar::exact(Rational(a.mass.to_double()));
  if (std::fabs(total.to_double() - 1.0) > kMassEps)
    throw TotalMassNotOne("total mass " + total.str() +
                          " too far from 1 to promote to exact mode");
  for (const Atom& a : p.atoms())
    raw.push_back(
        Atom{PlanePoint{Scalar::exact(Rational(a.point.x.to_double())),
                        Scalar::exact(Rational(a.point.y.to_double()))},
             Scalar::exact(Rational(a.mass.to_double())) / total});
  return FiniteDistribution::build(std::move(raw));
}

json distribution_to_json(const FiniteDistribution& p) {
  json atoms = json::array();
  for (const Atom& a : p.atoms())
    atoms.push_back(json{{"x", scalar_to_json(a.point.x)},
                         {"y", scalar_to_json(a.point.y)},
                         {"mass", scalar_to_json(a.mass)}});
  return json{{"mode", to_string(p.mode())}, {"atoms", std::move(atoms)}};
}

json decomposition_to_json(const Decomposition& d,
                           const InvariantReport* diagnostics) {
  json comps = json::array();
  for (const WeightedComponent& wc : d.components) {
    json points = json::array();
    json masses = json::array();
    for (const Atom& a : wc.component.atoms()) {
      points.push_back(point_to_json(a.point));
      masses.push_back(scalar_to_json(a.mass));
    }
    comps.push_back(json{{"type", to_string(wc.component.tag())},
                         {"points", std::move(points)},
                         {"masses", std::move(masses)},
                         {"weight", scalar_to_json(wc.weight)}});
  }
  json out{{"mode", to_string(d.mode)},
           {"shape", to_string(d.shape)},
           {"phi", scalar_to_json(d.phi)},
           {"offset", point_to_json(d.offset)},
           {"components", std::move(comps)}};
  if (diagnostics) out["diagnostics"] = invariant_report_to_json(*diagnostics);
  return out;
}

Decomposition decomposition_from_json(const json& j) {
  Mode m = parse_mode(field(j, "mode", "document"), "mode");
  Decomposition d;
  d.mode = m;
  d.phi = scalar_from_json(field(j, "phi", "document"), m, "phi");
  d.offset = point_from_json(field(j, "offset", "document"), m, "offset");
  std::string shape = field(j, "shape", "document").get<std::string>();
  if (shape == "origin_only") d.shape = SupportShape::OriginOnly;
  else if (shape == "on_line") d.shape = SupportShape::OnLine;
  else if (shape == "planar") d.shape = SupportShape::Planar;
  else bad("shape", "unknown shape \"" + shape + "\"");

  const json& comps = field(j, "components", "document");
  if (!comps.is_array()) bad("components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::string path = "components[" + std::to_string(i) + "]";
    const json& c = comps[i];
    std::string type = field(c, "type", path).get<std::string>();
    const json& points = field(c, "points", path);
    if (!points.is_array()) bad(path + ".points", "expected an array");
    std::vector<PlanePoint> pts;
    for (std::size_t k = 0; k < points.size(); ++k)
      pts.push_back(point_from_json(points[k], m,
                                    path + ".points[" + std::to_string(k) + "]"));

    ExtremeComponent comp = ExtremeComponent::dirac_origin(m);
    if (type == "origin") {
      if (pts.size() != 1 || !pts[0].is_origin())
        bad(path, "origin component must list the single point [0, 0]");
    } else if (type == "two_point") {
      if (pts.size() != 2) bad(path, "two_point component needs 2 points");
      comp = ExtremeComponent::two_point(pts[0], pts[1]);
    } else if (type == "three_point") {
      if (pts.size() != 3) bad(path, "three_point component needs 3 points");
      comp = ExtremeComponent::three_point(pts[0], pts[1], pts[2]);
    } else {
      bad(path + ".type", "unknown component type \"" + type + "\"");
    }

    // The listed masses must be the ones the points force; anything else
    // is a corrupt document.
    const json& masses = field(c, "masses", path);
    if (!masses.is_array() || masses.size() != comp.atoms().size())
      bad(path + ".masses", "wrong number of masses");
    for (std::size_t k = 0; k < masses.size(); ++k) {
      Scalar listed = scalar_from_json(
          masses[k], m, path + ".masses[" + std::to_string(k) + "]");
      const Scalar& built = comp.atoms()[k].mass;
      bool same = m == Mode::Exact
                      ? listed == built
                      : std::fabs(listed.to_double() - built.to_double()) <=
                            kRecEps;
      if (!same)
        bad(path + ".masses[" + std::to_string(k) + "]",
            "inconsistent with the component's points");
    }

    d.components.push_back(WeightedComponent{
        std::move(comp),
        scalar_from_json(field(c, "weight", path), m, path + ".weight")});
  }
  return d;
}

json invariant_report_to_json(const InvariantReport& rep) {
  json probes = json::array();
  for (const ProbeEvaluation& pr : rep.probes)
    probes.push_back(json{{"direction", point_to_json(pr.direction)},
                          {"interior", scalar_to_json(pr.interior_sum)},
                          {"boundary", scalar_to_json(pr.boundary_sum)},
                          {"total", scalar_to_json(pr.total)}});
  return json{{"phi", scalar_to_json(rep.phi)},
              {"shape", to_string(rep.shape)},
              {"consistent", rep.consistent},
              {"probes", std::move(probes)}};
}

json verification_to_json(const VerificationReport& rep) {
  return json{{"weight_sum", scalar_to_json(rep.weight_sum)},
              {"max_atom_discrepancy", scalar_to_json(rep.max_atom_discrepancy)},
              {"per_component_mean_ok", rep.per_component_mean_ok},
              {"exact_match", rep.exact_match},
              {"passed", rep.passed}};
}

json summary_to_json(const EmpiricalSummary& s) {
  json rows = json::array();
  for (const FrequencyEntry& e : s.frequencies)
    rows.push_back(json{{"point", point_to_json(e.point)},
                        {"expected", e.expected},
                        {"observed", e.observed},
                        {"band", e.band}});
  return json{{"draws", s.draws},
              {"seed", s.seed},
              {"empirical_mean", json::array({s.mean_x, s.mean_y})},
              {"frequencies", std::move(rows)}};
}

std::string render_invariant_report(const InvariantReport& rep) {
  std::ostringstream os;
  os << "shape: " << to_string(rep.shape) << "\n";
  os << "phi = " << rep.phi.str() << "\n";
  if (!rep.probes.empty()) {
    os << "probes:\n";
    for (const ProbeEvaluation& pr : rep.probes)
      os << "  " << str(pr.direction) << ": interior " << pr.interior_sum.str()
         << "  boundary " << pr.boundary_sum.str() << "  total "
         << pr.total.str() << "\n";
  }
  os << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_decomposition(const Decomposition& d) {
  std::ostringstream os;
  os << "mode: " << to_string(d.mode) << "\n";
  os << "shape: " << to_string(d.shape) << "\n";
  os << "phi = " << d.phi.str() << "\n";
  os << "offset = " << str(d.offset) << "\n";
  os << "components: " << d.components.size() << "\n";
  for (const WeightedComponent& wc : d.components) {
    os << "  weight " << wc.weight.str() << "  "
       << to_string(wc.component.tag()) << " ";
    for (const Atom& a : wc.component.atoms())
      os << "  " << str(a.point) << ":" << a.mass.str();
    os << "\n";
  }
  return os.str();
}

std::string render_verification(const VerificationReport& rep) {
  std::ostringstream os;
  os << "weight sum: " << rep.weight_sum.str() << "\n";
  os << "max atom discrepancy: " << rep.max_atom_discrepancy.str() << "\n";
  os << "component means at origin: " << (rep.per_component_mean_ok ? "yes" : "no")
     << "\n";
  os << "exact match: " << (rep.exact_match ? "yes" : "no") << "\n";
  os << "result: " << (rep.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_summary(const EmpiricalSummary& s) {
  std::ostringstream os;
  os << "draws: " << s.draws << "\n";
  os << "seed: " << s.seed << "\n";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "empirical mean: (%.6g, %.6g)\n", s.mean_x,
                s.mean_y);
  os << buf;
  os << "frequencies (observed / expected, 3-sigma band):\n";
  for (const FrequencyEntry& e : s.frequencies) {
    std::snprintf(buf, sizeof(buf), "  %s: %.6g / %.6g  band %.2g  %s\n",
                  str(e.point).c_str(), e.observed, e.expected, e.band,
                  std::fabs(e.observed - e.expected) <= e.band ? "in"
                                                               : "OUT");
    os << buf;
  }
  return os.str();
}

}  // namespace planedec
