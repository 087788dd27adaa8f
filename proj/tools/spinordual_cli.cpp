#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "spinordual/suites.hpp"

using namespace spinordual;

namespace {

enum Exit : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBadInput = 3,
  kBadKinematics = 4,
  kBadOperator = 5,
  kSingular = 6,
  kOutputFailed = 7,
};

struct Flags {
  double mass = 1.0, momentum = 1.0, theta = 0.7, phi = 0.3;
  std::optional<double> energy;
  std::uint64_t seed = 42;
  int trials = 100;
  std::optional<double> tolerance;
  std::string format = "json";
  std::string output;
  std::string group = "GF";
  std::string duals, omega, psi;
  std::string convention = "right";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_kinematics(CLI::App* c, Flags& f) {
  c->add_option("--mass", f.mass, "rest mass m > 0");
  c->add_option("--momentum", f.momentum, "momentum magnitude p >= 0");
  c->add_option("--theta", f.theta, "polar angle");
  c->add_option("--phi", f.phi, "azimuthal angle");
  c->add_option("--energy", f.energy, "energy; must equal sqrt(p^2 + m^2)");
}

void add_common(CLI::App* c, Flags& f, bool random) {
  if (random) {
    c->add_option("--seed", f.seed, "RNG seed");
    c->add_option("--trials", f.trials, "trials per property")->check(CLI::PositiveNumber);
  }
  c->add_option("--tolerance", f.tolerance, "override the default check tolerance")->check(CLI::PositiveNumber);
  c->add_option("--format", f.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  c->add_option("--output", f.output, "write the report here instead of stdout");
}

RunOptions options(const Flags& f) {
  RunOptions o;
  o.kinematics = f.energy ? KinematicPoint::with_energy(f.mass, f.momentum, f.theta, f.phi, *f.energy)
                          : KinematicPoint::make(f.mass, f.momentum, f.theta, f.phi);
  o.seed = f.seed;
  o.trials = f.trials;
  o.tolerance = f.tolerance;
  return o;
}

NamedGroup group_of(const Flags& f) {
  auto g = parse_named_group(f.group);
  if (!g) throw UsageError("unknown group '" + f.group + "' (expected GF, GXi or GH)");
  return *g;
}

std::vector<DualSpinor> read_duals(const std::string& path) {
  const Json j = read_json_file(path);
  const Json& list = j.is_object() && j.contains("duals") ? j.at("duals") : j;
  if (!list.is_array()) throw FormatError(path + ": expected an array of dual spinors");
  std::vector<DualSpinor> out;
  for (const auto& d : list) out.push_back(dual_from_json(d));
  return out;
}

void emit(const Flags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(f.output);
  if (!os || !(os << text)) throw OutputError("cannot write " + f.output);
}

int finish(const Flags& f, const SuiteReport& r, const std::optional<std::string>& csv = std::nullopt) {
  if (f.format == "csv") {
    if (!csv) throw UsageError("--format csv is only available for cayley");
    emit(f, *csv);
  } else if (f.format == "text") {
    emit(f, report_to_text(r) + (csv ? *csv : ""));
  } else {
    emit(f, report_to_json(r).dump(2) + "\n");
  }
  return r.passed() ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized spinor duals in the complexified Dirac algebra"};
  app.require_subcommand(1);
  Flags f;

  auto* verify = app.add_subcommand("verify-theorems", "block structure, real fixed points, closure, inverses");
  add_kinematics(verify, f);
  add_common(verify, f, true);

  auto* table1 = app.add_subcommand("table1", "defining expressions against the reference matrices");
  add_kinematics(table1, f);
  add_common(table1, f, false);

  auto* cayley = app.add_subcommand("cayley", "Cayley table of a dual-mapping group");
  add_kinematics(cayley, f);
  add_common(cayley, f, false);
  cayley->add_option("--group", f.group, "GF | GXi | GXiDagger | GH");

  auto* classify = app.add_subcommand("classify", "partition duals into orbits of a dual-mapping group");
  add_kinematics(classify, f);
  add_common(classify, f, false);
  classify->add_option("--group", f.group, "GF | GXi | GXiDagger (GH has no finite group)");
  classify->add_option("--duals", f.duals, "JSON array of dual spinors")->required();
  classify->add_option("--convention", f.convention, "right | transpose")
      ->check(CLI::IsMember({"right", "transpose"}));

  auto* embed = app.add_subcommand("embed", "quaternionic and complex embeddings");
  add_common(embed, f, true);

  auto* spinor = app.add_subcommand("spinor-spaces", "idempotents, ideals, division rings, inner products");
  add_common(spinor, f, true);

  auto* dual = app.add_subcommand("dual", "dual of a spinor for a given Omega");
  add_kinematics(dual, f);
  add_common(dual, f, false);
  dual->add_option("--omega", f.omega, "Omega as matrix JSON")->required();
  dual->add_option("--psi", f.psi, "spinor JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return finish(f, run_verify_theorems(options(f)));
    if (*table1) return finish(f, run_table1(options(f)));
    if (*cayley) {
      const auto r = run_cayley(group_of(f), options(f));
      std::optional<std::string> csv;
      if (r.payload.contains("csv")) csv = r.payload.at("csv").get<std::string>();
      return finish(f, r, csv);
    }
    if (*classify) {
      const auto g = group_of(f);
      if (g == NamedGroup::GH) throw UsageError("GH is not of finite order; orbits need GF or GXi");
      const auto conv = f.convention == "transpose" ? ActionConvention::transpose : ActionConvention::right_composition;
      return finish(f, run_classify(g, read_duals(f.duals), options(f), conv));
    }
    if (*embed) return finish(f, run_embed(options(f)));
    if (*spinor) return finish(f, run_spinor_spaces(options(f)));
    if (*dual) {
      const auto o = options(f);
      const auto omega = matrix_from_json(read_json_file(f.omega));
      const auto psi = spinor_from_json(read_json_file(f.psi));
      return finish(f, run_dual(psi, omega, o));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidKinematics& e) {
    std::cerr << "invalid kinematics: " << e.what() << '\n';
    return kBadKinematics;
  } catch (const InvalidOperator& e) {
    std::cerr << "invalid operator: " << e.what() << '\n';
    return kBadOperator;
  } catch (const SingularParameter& e) {
    std::cerr << "singular parameter: " << e.what() << '\n';
    return kSingular;
  } catch (const OutputError& e) {
    std::cerr << e.what() << '\n';
    return kOutputFailed;
  }
  return kUsage;
}
