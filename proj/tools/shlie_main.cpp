// Command-line entry point: generate instances, check the seed-bracket
// hypotheses, build and verify the higher structure, truncate to the
// three-term complex, and run the geometric example suites.  Reports are
// JSON on stdout (or --out); human summaries go to stderr.  Exit codes:
// 0 = all checks passed, 1 = a mathematical check failed (stderr names the
// first witness), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shlie/errors.hpp"
#include "shlie/instances.hpp"
#include "shlie/json_io.hpp"

namespace {

using namespace shlie;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw SchemaError("$", "cannot read input file \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw SchemaError("$", "cannot open output file \"" + out_path + "\"");
  f << bytes;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string dims_str(const std::vector<int>& dims) {
  std::string s = "[";
  for (size_t i = 0; i < dims.size(); ++i)
    s += (i ? ", " : "") + std::to_string(dims[i]);
  return s + "]";
}

std::string first_condition_witness(const ConditionsReport& rep) {
  if (!rep.fails_i.empty())
    return "condition (i) fails: bracketing basis vector " +
           std::to_string(rep.fails_i[0].cycle_index) +
           " with boundary-basis row " +
           std::to_string(rep.fails_i[0].boundary_index) +
           " leaves the boundary space";
  if (!rep.fails_ii.empty()) {
    const auto& w = rep.fails_ii[0];
    return "condition (ii) fails: the double-bracket sum of basis triple (" +
           std::to_string(w.args[0]) + ", " + std::to_string(w.args[1]) +
           ", " + std::to_string(w.args[2]) + ") is not a boundary";
  }
  return "";
}

std::string first_defect_witness(const VerifyReport& rep) {
  if (!rep.defects.witnesses.empty()) {
    const auto& w = rep.defects.witnesses[0];
    std::string s = "arity-" + std::to_string(w.arity) +
                    " relation defect at basis arguments [";
    for (size_t i = 0; i < w.args.size(); ++i)
      s += (i ? ", " : "") + std::string("(") +
           std::to_string(w.args[i].degree) + "," +
           std::to_string(w.args[i].index) + ")";
    return s + "]";
  }
  // A vanishing claim can fail without a relation defect.
  const auto& t = rep.vanishing;
  if (!t.l2_high) return "arity-2 map is nonzero on input degree >= 2";
  if (!t.l3_pos) return "arity-3 map is nonzero outside degree (0,0,0)";
  if (!t.l4) return "arity-4 map is nonzero";
  if (!t.l5) return "arity-5 map is nonzero";
  return "";
}

int run_gen_lie_ideal(const std::string& preset, const std::string& out) {
  LieIdealSpec spec;
  try {
    spec = preset_spec(preset);
  } catch (const SpecInvalid& e) {
    std::cerr << "error: --preset: " << e.what() << "\n";
    return 2;
  }
  Instance inst = gen_lie_ideal(spec);
  emit(save_instance(inst), out);
  std::cerr << "generated preset \"" << preset << "\": dims "
            << dims_str(inst.cx.dims) << "\n";
  return 0;
}

int run_gen_random(uint64_t seed, const std::vector<int>& dims, int height,
                   const std::string& out) {
  GenSeed gs;
  gs.seed = seed;
  gs.dims = dims;
  gs.height = height;
  Instance inst = gen_random_acyclic(gs);
  emit(save_instance(inst), out);
  std::cerr << "generated random instance (seed " << seed << "): dims "
            << dims_str(inst.cx.dims) << "\n";
  return 0;
}

int run_check(const std::string& instance_path, const std::string& out) {
  Instance inst = load_instance(read_file(instance_path));
  HomologyData h = homology(inst.cx);
  ConditionsReport rep = check_conditions(inst, h);
  bool acyclic = h.acyclic_positive();
  bool pass = acyclic && rep.pass();
  Json j{{"acyclic_positive", acyclic},
         {"conditions", conditions_to_json(rep)},
         {"pass", pass}};
  emit(dump_json(j), out);
  if (!acyclic) {
    std::cerr << "check: FAIL — homology is nonzero in a positive degree\n";
    return 1;
  }
  if (!rep.pass()) {
    std::cerr << "check: FAIL — " << first_condition_witness(rep) << "\n";
    return 1;
  }
  std::cerr << "check: PASS (" << rep.checked_pairs << " pair checks, "
            << rep.checked_triples << " triple checks)\n";
  return 0;
}

int run_build(const std::string& instance_path, const std::string& out,
              int max_arity, const std::string& report_out) {
  Instance inst = load_instance(read_file(instance_path));
  HomologyData h = homology(inst.cx);
  ContractionData k = build_contraction(inst.cx, h);
  ExtendResult er = extend(inst, k, max_arity);
  VerifyReport vr = verify_structure(er.structure);
  emit(save_structure(er.structure), out);
  emit(dump_json(build_report_to_json(er, vr)), report_out);
  if (max_arity < 5)
    std::cerr << "warning: built only up to arity " << max_arity
              << "; relations involving arity " << max_arity + 1
              << " and above were not constructed or checked\n";
  bool boundaries_ok = true;
  for (const auto& c : er.boundary_checks) boundaries_ok = boundaries_ok && c.pass;
  if (!er.conditions.pass()) {
    std::cerr << "build: FAIL — " << first_condition_witness(er.conditions)
              << "\n";
    return 1;
  }
  if (!boundaries_ok || !vr.pass) {
    std::cerr << "build: FAIL — " << first_defect_witness(vr) << "\n";
    return 1;
  }
  std::cerr << "build: PASS (arities 2.." << max_arity << ", "
            << er.boundary_checks.size() << " boundary checks)\n";
  return 0;
}

int run_verify(const std::string& structure_path, const std::string& out) {
  ShLieStructure S = load_structure(read_file(structure_path));
  VerifyReport vr = verify_structure(S);
  emit(dump_json(verify_report_to_json(vr)), out);
  if (!vr.pass) {
    std::cerr << "verify: FAIL — " << first_defect_witness(vr) << "\n";
    return 1;
  }
  std::cerr << "verify: PASS (arities 1.." << S.max_arity << ")\n";
  return 0;
}

int run_truncate(const std::string& instance_path, const std::string& out) {
  Instance inst = load_instance(read_file(instance_path));
  Instance t = truncate(inst);
  emit(save_instance(t), out);
  std::cerr << "truncated: dims " << dims_str(inst.cx.dims) << " -> "
            << dims_str(t.cx.dims) << "\n";
  return 0;
}

int run_example(const std::string& which, int samples, uint64_t seed,
                int max_freq, const std::string& out) {
  GeoReport rep;
  try {
    rep = verify_example_structures(which, samples, seed, max_freq);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  emit(dump_json(geo_report_to_json(rep)), out);
  if (!rep.pass()) {
    for (const auto& c : rep.checks)
      if (!c.pass()) {
        std::cerr << "example " << which << ": FAIL — check \"" << c.name
                  << "\" failed first at sample index " << c.failed[0]
                  << "\n";
        return 1;
      }
  }
  std::cerr << "example " << which << ": PASS (" << rep.checks.size()
            << " checks x " << samples << " samples)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for homotopy Lie brackets generated from a "
      "degree-0 bracket on an acyclic complex"};
  app.require_subcommand(1);

  std::string out_path;
  std::string preset;
  uint64_t seed = 0;
  std::vector<int> dims;
  int height = 9;
  std::string instance_path;
  std::string structure_path;
  int max_arity = 5;
  std::string which;
  int samples = 100;
  int max_freq = 2;
  std::string report_out;

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  CLI::App* gen_li =
      gen->add_subcommand("lie-ideal", "A pinned preset instance");
  gen_li->add_option("--preset", preset, "Preset name (lie2, perturbed4)")
      ->required();
  gen_li->add_option("--out", out_path, "Write the instance here");
  CLI::App* gen_rnd =
      gen->add_subcommand("random", "A seeded random valid instance");
  gen_rnd->add_option("--seed", seed, "Generator seed")->default_val(0);
  gen_rnd->add_option("--dims", dims,
                      "Requested dimensions per degree (comma separated); "
                      "adjusted upward if no exact complex fits")
      ->delimiter(',');
  gen_rnd->add_option("--height", height,
                      "Bound on numerator/denominator size of drawn entries")
      ->default_val(9);
  gen_rnd->add_option("--out", out_path, "Write the instance here");

  CLI::App* check =
      app.add_subcommand("check", "Check the seed-bracket hypotheses");
  check->add_option("--instance", instance_path, "Instance file")->required();
  check->add_option("--out", out_path, "Write the report here");

  CLI::App* build = app.add_subcommand(
      "build", "Construct the structure maps and verify the claims");
  build->add_option("--instance", instance_path, "Instance file")->required();
  build->add_option("--out", out_path, "Write the structure file here")
      ->required();
  build->add_option("--max-arity", max_arity, "Highest arity to construct")
      ->default_val(5)
      ->check(CLI::Range(2, 6));
  build->add_option("--report", report_out,
                    "Write the report here instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "Re-verify a stored structure file");
  verify->add_option("--structure", structure_path, "Structure file")
      ->required();
  verify->add_option("--out", out_path, "Write the report here");

  CLI::App* trunc = app.add_subcommand(
      "truncate", "Cut an instance down to the three-term complex");
  trunc->add_option("--instance", instance_path, "Instance file")->required();
  trunc->add_option("--out", out_path, "Write the truncated instance here");

  CLI::App* example =
      app.add_subcommand("example", "Run a geometric example suite");
  example->add_option("which", which, "courant or symplectic")->required();
  example->add_option("--samples", samples, "Number of random samples")
      ->default_val(100);
  example->add_option("--seed", seed, "Sample seed")->default_val(0);
  example->add_option("--max-freq", max_freq, "Frequency bound per draw")
      ->default_val(2);
  example->add_option("--out", out_path, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_li->parsed()) return run_gen_lie_ideal(preset, out_path);
    if (gen_rnd->parsed())
      return run_gen_random(seed, dims, height, out_path);
    if (check->parsed()) return run_check(instance_path, out_path);
    if (build->parsed())
      return run_build(instance_path, out_path, max_arity, report_out);
    if (verify->parsed()) return run_verify(structure_path, out_path);
    if (trunc->parsed()) return run_truncate(instance_path, out_path);
    if (example->parsed())
      return run_example(which, samples, seed, max_freq, out_path);
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // NotAComplex, NotAcyclic, SpecInvalid, ConditionsFailed,
    // BoundaryClaimViolated, ContainmentViolation: the input was readable
    // but a mathematical requirement failed.
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
