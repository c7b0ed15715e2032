// sysres: command-line driver for resultants and solvability of
// overdetermined homogeneous systems.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sysres/report.hpp"
#include "sysres/sysres.hpp"

namespace {

using namespace sysres;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "custom:<planfile>" -> plan file path; anything else -> empty.
std::string custom_plan_path(const std::string& scheme) {
  constexpr std::string_view prefix = "custom:";
  if (scheme.rfind(prefix, 0) != 0) return {};
  auto path = scheme.substr(prefix.size());
  if (path.empty()) throw Error(ErrorKind::invalid_argument, "custom scheme needs a plan file: custom:<planfile>");
  return path;
}

void configure_scheme(SolverConfig& config, const std::string& scheme) {
  if (auto path = custom_plan_path(scheme); !path.empty()) {
    config.scheme = Scheme::custom_linear;
    config.custom_plan = parse_plan(read_file(path));
  } else {
    config.scheme = parse_scheme(scheme);
  }
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t idx = 0;
      const long v = std::stol(item, &idx);
      if (idx != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, std::string("invalid ") + what + " '" + text + "'");
    }
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t idx = 0;
      out.push_back(std::stoll(item, &idx));
      if (idx != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, std::string("invalid ") + what + " '" + text + "'");
    }
  }
  return out;
}

int cmd_resultant(const std::string& file, bool json) {
  const auto system = parse_system(read_file(file));
  if (system.size() != system.num_vars())
    throw Error(ErrorKind::dimension_mismatch, "resultant needs as many equations as variables (got " +
                                                   std::to_string(system.size()) + " in " +
                                                   std::to_string(system.num_vars()) + " variables)");
  mpq_class value = 0;
  std::string path = "zero_form";
  bool has_zero = false;
  for (const auto& f : system.polys()) has_zero = has_zero || f.is_zero();
  if (!has_zero) {
    Rng rng(0);
    const auto r = macaulay_resultant(system.polys(), rng);
    value = r.value;
    path = to_string(r.path);
  }
  if (json) {
    std::cout << nlohmann::json{{"resultant", value.get_str()}, {"path", path}, {"degrees", system.degrees()}}.dump()
              << "\n";
  } else {
    std::cout << value.get_str() << "\n";
  }
  return 0;
}

int cmd_sylvester(const std::string& file) {
  const auto system = parse_system(read_file(file));
  if (system.num_vars() != 2 || system.size() != 2)
    throw Error(ErrorKind::dimension_mismatch, "sylvester needs exactly two binary forms");
  std::cout << sylvester_resultant(system[0], system[1]).get_str() << "\n";
  return 0;
}

void print_summary(const SolvabilityReport& r) {
  std::cout << "verdict: " << to_string(r.verdict) << "\n";
  std::cout << "scheme: " << to_string(r.scheme) << " (" << to_string(r.mode) << ")\n";
  if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  for (const auto& t : r.trials)
    std::cout << "trial " << t.index << ": prime " << t.prime << ", resultant " << (t.value_zero ? "zero" : t.value)
              << " [" << to_string(t.path) << ", " << t.redraws << " redraws]\n";
  if (r.witness)
    std::cout << "witness: trial " << r.witness->trial << ", seed " << r.witness->seed << ", prime " << r.witness->prime
              << ", value " << r.witness->value << "\n";
  if (r.verdict == Verdict::probably_solvable)
    std::cout << "error bound: " << r.error_bound.get_str() << " (degree bound " << r.degree_bound << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resultants and solvability of overdetermined homogeneous polynomial systems"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* resultant = app.add_subcommand("resultant", "Exact resultant of n+1 forms in n+1 variables");
  resultant->add_option("file", file, "System file")->required();
  resultant->add_flag("--json", json, "Emit JSON");

  auto* sylvester = app.add_subcommand("sylvester", "Sylvester determinant of two binary forms");
  sylvester->add_option("file", file, "System file")->required();

  std::string scheme = "full";
  SolverConfig config;
  std::string mode = "modular";
  auto* solvable = app.add_subcommand("solvable", "Decide whether the system has a nonzero common zero");
  solvable->add_option("file", file, "System file")->required();
  solvable->add_option("--scheme", scheme, "full|theorem2|powersum|coupled|custom:<planfile>");
  solvable->add_option("--trials", config.trials, "Number of random trials")->check(CLI::PositiveNumber);
  solvable->add_option("--prime-bits", config.prime_bits, "Bit size of the random primes")->check(CLI::Range(31, 62));
  solvable->add_option("--seed", config.seed, "Master seed");
  solvable->add_option("--mode", mode, "modular|rational")->check(CLI::IsMember({"modular", "rational"}));
  solvable->add_option("--inflate", config.inflate, "Increase every target degree m_i by this amount");
  solvable->add_option("--retries", config.retries, "Redraws allowed per trial");
  solvable->add_option("--threads", config.threads, "Worker threads for trials")->check(CLI::PositiveNumber);
  solvable->add_flag("--json", json, "Emit the JSON report");

  InterpolationCaps caps;
  std::uint64_t seed = 0;
  auto* system_cmd = app.add_subcommand("system", "Extract the system of resultants by interpolation");
  system_cmd->add_option("file", file, "System file")->required();
  system_cmd->add_option("--scheme", scheme, "full|theorem2|powersum|coupled|custom:<planfile>");
  system_cmd->add_option("--max-b-vars", caps.max_b_vars, "Cap on multiplier coordinates");
  system_cmd->add_option("--max-degree", caps.max_total_degree, "Cap on the total b-degree");
  system_cmd->add_option("--max-basis", caps.max_basis, "Cap on the interpolation basis size");
  system_cmd->add_option("--inflate", config.inflate, "Increase every target degree m_i by this amount");
  system_cmd->add_option("--seed", seed, "Seed for the interpolation points");
  system_cmd->add_flag("--json", json, "Emit JSON");

  std::string kind;
  std::size_t gen_n = 1, gen_m = 1;
  std::string degrees_text, root_text;
  std::int64_t coeff_bound = 10;
  auto* gen = app.add_subcommand("gen", "Emit a random system file");
  gen->add_option("kind", kind, "planted|generic")->required()->check(CLI::IsMember({"planted", "generic"}));
  gen->add_option("--n", gen_n, "Projective dimension (variables minus one)")->required();
  gen->add_option("--m", gen_m, "Number of equations minus one")->required();
  gen->add_option("--degrees", degrees_text, "Comma-separated degrees n_0,...,n_m")->required();
  gen->add_option("--root", root_text, "Comma-separated integer root (planted only; default all ones)");
  gen->add_option("--coeff-bound", coeff_bound, "Coefficients are drawn from [-B, B]")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Seed")->required();

  std::string plan_spec;
  unsigned plan_trials = 8;
  auto* check_plan = app.add_subcommand("check-plan", "Admissibility evidence for a custom plan");
  check_plan->add_option("plan", plan_spec, "custom:<planfile>")->required();
  check_plan->add_option("--trials", plan_trials, "Random points to test")->check(CLI::PositiveNumber);
  check_plan->add_option("--seed", seed, "Seed");
  check_plan->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*resultant) return cmd_resultant(file, json);
    if (*sylvester) return cmd_sylvester(file);

    if (*solvable) {
      configure_scheme(config, scheme);
      config.mode = mode == "rational" ? FieldMode::rational : FieldMode::modular;
      const auto system = parse_system(read_file(file));
      const auto report = solvable_test(system, config);
      if (json) {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        print_summary(report);
      }
      return 0;
    }

    if (*system_cmd) {
      configure_scheme(config, scheme);
      const auto system = parse_system(read_file(file)).without_zeros();
      const auto plan = config.scheme == Scheme::custom_linear
                            ? bind_custom_plan(*config.custom_plan, system.degrees())
                            : make_plan(config.scheme, system.num_vars(), system.degrees(), config.inflate);
      Rng rng(seed);
      const auto rp = interpolate(system, plan, caps, rng);
      if (json) {
        auto out = to_json(rp);
        out["plan"] = plan_json(&plan);
        out["scheme"] = to_string(plan.scheme);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "b-variables: " << rp.variables.size() << ", terms: " << rp.terms.size() << "\n";
        const auto values = extract_system(rp);
        if (values.empty()) std::cout << "resultant vanishes identically: the system has a nonzero solution\n";
        for (const auto& v : values) std::cout << v.get_str() << "\n";
      }
      return 0;
    }

    if (*gen) {
      const auto degrees = parse_unsigned_list(degrees_text, "degree list");
      if (degrees.size() != gen_m + 1)
        throw Error(ErrorKind::invalid_argument, "--degrees must list m+1 = " + std::to_string(gen_m + 1) + " values");
      Rng rng(seed);
      if (kind == "planted") {
        std::vector<std::int64_t> root(gen_n + 1, 1);
        if (!root_text.empty()) root = parse_int_list(root_text, "root");
        const auto inst = planted_instance(gen_n, degrees, root, rng, coeff_bound);
        std::cout << "# planted root (";
        for (std::size_t i = 0; i < inst.root.size(); ++i) std::cout << (i ? ":" : "") << inst.root[i];
        std::cout << "), seed " << seed << "\n" << format_system(inst.system);
      } else {
        if (!root_text.empty()) throw Error(ErrorKind::invalid_argument, "--root applies to planted instances only");
        std::cout << "# generic instance, seed " << seed << "\n"
                  << format_system(generic_instance(gen_n, gen_m, degrees, coeff_bound, rng));
      }
      return 0;
    }

    if (*check_plan) {
      const auto path = custom_plan_path(plan_spec);
      if (path.empty()) throw Error(ErrorKind::invalid_argument, "check-plan expects custom:<planfile>");
      const auto plan = parse_plan(read_file(path));
      Rng rng(seed);
      const auto report = check_admissible(plan, plan_trials, rng);
      if (json) {
        std::cout << nlohmann::json{{"admissible", report.passed()},
                                    {"applicable", report.applicable},
                                    {"prime", report.prime},
                                    {"trials", report.trial_passed},
                                    {"points", report.points}}
                         .dump(2)
                  << "\n";
      } else {
        std::size_t passed = 0;
        for (bool b : report.trial_passed) passed += b;
        std::cout << (report.passed() ? "admissible" : "not admissible") << ": " << passed << "/"
                  << report.trial_passed.size() << " random points span every slot\n";
      }
      return report.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
