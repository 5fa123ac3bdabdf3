#include "app.hpp"

#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "file_cache.hpp"
#include "orbithodge/errors.hpp"
#include "orbithodge/hodge.hpp"
#include "orbithodge/orbit.hpp"
#include "orbithodge/timing.hpp"
#include "run_report.hpp"

namespace orbithodge::cli {

namespace {

struct Options {
  std::vector<int> h0;
  std::vector<int> h;
  std::int64_t lambda = 0;
  bool diamond = false;
  bool full_verify = false;
  bool json = false;
  std::vector<std::uint32_t> primes{kDefaultPrime};
  std::string saturate_by = "max-ideal";
  std::string cache_dir;
  int threads = 1;
};

void add_common(CLI::App* cmd, Options& o, bool with_diamond) {
  cmd->add_option("--h0", o.h0, "diagonal of H0, comma separated")->required()->delimiter(',');
  cmd->add_flag("--json", o.json, "print a JSON report");
  if (!with_diamond) return;
  cmd->add_flag("--diamond", o.diamond, "compute the Hodge diamond");
  cmd->add_flag("--full-verify", o.full_verify, "compute every cell and check the symmetries");
  cmd->add_option("--prime", o.primes, "field characteristic; extra primes are cross-checks")->delimiter(',');
  cmd->add_option("--saturate-by", o.saturate_by, "saturation ideal")
      ->check(CLI::IsMember({"max-ideal", "t"}));
  cmd->add_option("--cache-dir", o.cache_dir, "directory for cached Groebner bases");
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 1024));
}

struct Outcome {
  InvariantReport invariants;
  std::optional<HodgeDiamond> diamond;
  std::string mode;
};

Outcome compute(const std::string& command, const Options& o, std::uint32_t prime, std::ostream& err) {
  CompactifyOptions copt;
  copt.field = PrimeField(prime);
  copt.saturate_by = o.saturate_by == "t" ? SaturateBy::T : SaturateBy::MaxIdeal;
  OrbitSpec orbit{o.h0};
  IdealHandle ideal = command == "orbit" ? orbit_compactification(orbit, copt)
                                         : fibre_compactification(FibreSpec{orbit, o.h, o.lambda}, copt);
  HodgeCalculator calc(ideal);
  Outcome r{calc.report(), std::nullopt, ""};
  if (!o.diamond || r.invariants.proj_dim < 0) return r;
  DiamondMode mode = DiamondMode::SymmetryFill;
  if (!r.invariants.smooth) {
    if (!o.full_verify)
      throw UsageError("the variety is singular (singular locus codimension " + std::to_string(r.invariants.sing_codim) +
                       "); Hodge symmetry cannot be assumed, rerun with --full-verify to compute every cell");
    err << "warning: the variety is singular; computing every cell of Lambda^p of the Kaehler differentials\n";
    mode = DiamondMode::Direct;
  } else if (o.full_verify) {
    mode = DiamondMode::FullVerify;
  }
  r.diamond = calc.diamond(mode);
  r.mode = mode == DiamondMode::SymmetryFill ? "symmetry-fill" : mode == DiamondMode::FullVerify ? "full-verify" : "direct";
  return r;
}

int run_variety(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  set_thread_limit(o.threads);
  std::string cache = o.cache_dir;
  if (const char* env = std::getenv("ORBIT_HODGE_CACHE"); env && *env) cache = env;
  if (!cache.empty()) set_groebner_memo(std::make_shared<FileGroebnerMemo>(cache));
  else set_groebner_memo(nullptr);

  RunReport report;
  report.command = command;
  report.h0 = o.h0;
  if (command == "fibre") {
    report.h = o.h;
    report.lambda = o.lambda;
  }
  report.saturate_by = o.saturate_by;
  report.diamond_requested = o.diamond;
  report.full_verify = o.full_verify;
  report.prime = o.primes.front();

  reset_phase_totals();
  Outcome main = compute(command, o, report.prime, err);
  const auto totals = phase_totals();
  for (std::size_t i = 0; i < kPhaseCount; ++i) report.timings_ms[phase_name(static_cast<Phase>(i))] = totals[i];
  report.invariants = main.invariants;
  report.diamond = main.diamond;
  report.diamond_mode = main.mode;
  if (main.diamond) report.diamond_symmetric = main.diamond->symmetric();

  bool agree = true;
  for (std::size_t i = 1; i < o.primes.size(); ++i) {
    Outcome other = compute(command, o, o.primes[i], err);
    bool same = other.invariants == main.invariants && other.diamond.has_value() == main.diamond.has_value() &&
                (!main.diamond || *other.diamond == *main.diamond);
    report.prime_checks.push_back({o.primes[i], same});
    agree = agree && same;
  }

  out << (o.json ? report.to_json() + "\n" : report.to_text());
  if (!agree) {
    err << "error: results differ between primes; the default prime may be unlucky for this input\n";
    return kExitComputation;
  }
  return kExitOk;
}

int run_critical(const Options& o, std::ostream& out) {
  FibreSpec spec{OrbitSpec{o.h0}, o.h, 0};
  spec.validate();
  const auto values = critical_values(spec.orbit, o.h);
  if (o.json) {
    nlohmann::ordered_json j;
    j["command"] = "critical";
    j["input"] = {{"h0", o.h0}, {"h", o.h}};
    j["critical_values"] = values;
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and Hodge numbers of adjoint orbit compactifications and their fibres", "orbit-hodge"};
  // -h is taken by --h, the regular element.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Options o;
  auto* orbit = app.add_subcommand("orbit", "closure of the adjoint orbit of diag(h0) in P^{dim sl + 1}");
  add_common(orbit, o, true);
  auto* fibre = app.add_subcommand("fibre", "closure of the fibre of the potential trace(H A) over lambda");
  add_common(fibre, o, true);
  fibre->add_option("--h", o.h, "diagonal of the regular element H")->required()->delimiter(',');
  fibre->add_option("--lambda", o.lambda, "fibre value")->required();
  auto* critical = app.add_subcommand("critical", "critical values of the potential on the orbit");
  add_common(critical, o, false);
  critical->add_option("--h", o.h, "diagonal of the regular element H")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*critical) return run_critical(o, out);
    return run_variety(*orbit ? "orbit" : "fibre", o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace orbithodge::cli
