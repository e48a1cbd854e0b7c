#pragma once

#include <json.hpp>

#include <string>

#include "planedec/decompose.hpp"
#include "planedec/sampling.hpp"

namespace planedec {

/// Input document: {"mode": "exact"|"float", "atoms": [{x, y, mass}...]}.
/// Exact-mode numbers are integer or "p/q" strings (JSON integers also
/// accepted); float-mode numbers are JSON numbers or decimal strings.
/// Malformed documents throw ParseError naming the offending element.
FiniteDistribution parse_input(const std::string& text);

/// Rewrites a distribution in the other arithmetic mode. Exact to float
/// narrows each value. Float to exact promotes each double to the exact
/// rational it denotes and then renormalizes the masses by their exact
/// total, because doubles that pass the float-mode mass check rarely sum
/// to exactly one; the pre-normalization total must still pass the float
/// tolerance. Same-mode conversion returns the input unchanged.
FiniteDistribution convert_mode(const FiniteDistribution& p, Mode target);

nlohmann::json distribution_to_json(const FiniteDistribution& p);

/// Decomposition as a machine-readable document; diagnostics (the probe
/// table) are attached when a report is supplied.
nlohmann::json decomposition_to_json(const Decomposition& d,
                                     const InvariantReport* diagnostics);

/// Inverse of decomposition_to_json for replay. Components are rebuilt
/// from their points, and the masses listed in the document are checked
/// against the rebuilt ones: a document whose masses disagree with its
/// own points is rejected as corrupt (ParseError). Weights and phi are
/// taken as listed, so tampering with them surfaces in verify, not here.
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json invariant_report_to_json(const InvariantReport& rep);
nlohmann::json verification_to_json(const VerificationReport& rep);
nlohmann::json summary_to_json(const EmpiricalSummary& s);

std::string render_invariant_report(const InvariantReport& rep);
std::string render_decomposition(const Decomposition& d);
std::string render_verification(const VerificationReport& rep);
std::string render_summary(const EmpiricalSummary& s);

}  // namespace planedec
