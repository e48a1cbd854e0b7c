#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "planedec/io.hpp"

namespace {

using namespace planedec;

// Exit codes: 0 success, 2 invalid input or flags, 3 nonzero barycenter
// without --recenter, 4 invariant or verification failure.
constexpr int kExitBadInput = 2;
constexpr int kExitNonZeroMean = 3;
constexpr int kExitInvariant = 4;

struct Options {
  std::string file;
  std::string mode;  // empty: keep the document's mode
  std::string output = "table";
  bool recenter = false;
  std::string probe;  // "x,y", empty for the full sweep
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
};

FiniteDistribution load(const Options& opt) {
  std::ifstream in(opt.file);
  if (!in) throw ParseError("cannot open " + opt.file);
  std::ostringstream buf;
  buf << in.rdbuf();
  FiniteDistribution p = parse_input(buf.str());
  if (opt.mode == "exact") return convert_mode(p, Mode::Exact);
  if (opt.mode == "float") return convert_mode(p, Mode::Float);
  return p;
}

// The distribution the math runs on: recentered on request, otherwise
// required to be centered already.
FiniteDistribution working_copy(const FiniteDistribution& p,
                                const Options& opt) {
  if (opt.recenter) return p.recentered().first;
  require_zero_mean(p, "input");
  return p;
}

PlanePoint parse_probe(const std::string& text, Mode m) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("probe \"" + text + "\": expected \"x,y\"");
  return PlanePoint{Scalar::parse(text.substr(0, comma), m),
                    Scalar::parse(text.substr(comma + 1), m)};
}

void emit(const Options& opt, const nlohmann::json& as_json,
          const std::string& as_table) {
  if (opt.output == "json")
    std::cout << as_json.dump(2) << "\n";
  else
    std::cout << as_table;
}

int cmd_phi(const Options& opt) {
  FiniteDistribution p = load(opt);
  FiniteDistribution q = working_copy(p, opt);
  InvariantReport rep;
  if (!opt.probe.empty()) {
    ProbeEvaluation ev = phi_at(q, parse_probe(opt.probe, q.mode()));
    rep.phi = ev.total;
    rep.shape = profile(q).shape;
    rep.probes = {ev};
    rep.consistent = true;
    emit(opt, invariant_report_to_json(rep), render_invariant_report(rep));
    return 0;
  }
  rep = phi_invariant(q);
  emit(opt, invariant_report_to_json(rep), render_invariant_report(rep));
  if (q.mode() == Mode::Exact && !rep.consistent) return kExitInvariant;
  return 0;
}

int cmd_decompose(const Options& opt) {
  FiniteDistribution p = load(opt);
  FiniteDistribution q = working_copy(p, opt);
  Decomposition dec = opt.recenter ? decompose_general(p) : decompose(p);
  InvariantReport diag = phi_invariant(q);
  emit(opt, decomposition_to_json(dec, &diag), render_decomposition(dec));
  return 0;
}

int cmd_verify(const Options& opt) {
  FiniteDistribution p = load(opt);
  working_copy(p, opt);  // enforces the centering contract
  Decomposition dec = opt.recenter ? decompose_general(p) : decompose(p);
  VerificationReport rep = verify(p, dec);
  emit(opt, verification_to_json(rep), render_verification(rep));
  return rep.passed ? 0 : kExitInvariant;
}

int cmd_sample(const Options& opt) {
  FiniteDistribution p = load(opt);
  working_copy(p, opt);
  Decomposition dec = opt.recenter ? decompose_general(p) : decompose(p);
  EmpiricalSummary s = run_sampler(dec, opt.draws, opt.seed);
  emit(opt, summary_to_json(s), render_summary(s));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decomposes a finitely supported planar probability distribution "
      "with barycenter zero into a convex mixture of one-, two-, and "
      "three-point mean-zero components, normalized by the pair invariant."};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "input distribution (JSON)")
        ->required();
    sub->add_option("--mode", opt.mode,
                    "convert the document to this arithmetic mode; "
                    "float->exact renormalizes the mass total exactly")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--recenter", opt.recenter,
                  "translate the barycenter to the origin first "
                  "(default: nonzero barycenter is an error)");
  };

  CLI::App* phi = app.add_subcommand(
      "phi", "invariant of the pair functional, swept over probe directions");
  add_common(phi);
  phi->add_option("--probe", opt.probe,
                  "evaluate one probe direction \"x,y\" instead of the sweep");

  CLI::App* dec = app.add_subcommand(
      "decompose", "full decomposition into weighted extreme components");
  add_common(dec);

  CLI::App* ver = app.add_subcommand(
      "verify", "decompose, reconstruct, and compare against the input");
  add_common(ver);

  CLI::App* smp = app.add_subcommand(
      "sample", "two-stage draws from the decomposition, with a summary");
  add_common(smp);
  smp->add_option("--n", opt.draws, "number of draws")
      ->required()
      ->check(CLI::PositiveNumber);
  smp->add_option("--seed", opt.seed, "generator seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (app.got_subcommand(phi)) return cmd_phi(opt);
    if (app.got_subcommand(dec)) return cmd_decompose(opt);
    if (app.got_subcommand(ver)) return cmd_verify(opt);
    return cmd_sample(opt);
  } catch (const NonZeroMean& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonZeroMean;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NegativeMass& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const TotalMassNotOne& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ModeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
