// Command-line front end: derived parameters, generator listings, the
// elimination oracle, and the certification suites, as reproducible batch
// commands with stable output.
//
// Exit codes: 0 pass, 1 claim failure, 2 invalid parameters, 3 resource cap,
// 64 usage error.

#include "rees/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitUsage = 64;

struct CommonArgs {
  int n = 0, a = 0, b = 0;
  std::string format = "text";
};

rees::UniformParams params_or_exit(const CommonArgs& c) {
  return rees::reduction_data(c.n, c.a, c.b);
}

void print_params_text(const rees::UniformParams& P) {
  std::cout << "n=" << P.n << " a=" << P.a << " b=" << P.b
            << " case=" << (P.kind == rees::ReductionCase::J ? "J" : "Q");
  if (P.kind == rees::ReductionCase::J) std::cout << " p=" << P.p;
  std::cout << " r=" << P.r << " wy=" << P.weights.wy << " ww=" << P.weights.ww << "\n";
  if (P.kind == rees::ReductionCase::Q)
    std::cout << "reduction: (x1^a - xn^a, ..., x(n-1)^a - xn^a, (x1...xn)^b)\n";
  else
    std::cout << "reduction: (x1^a, ..., xn^a)\n";
}

int cmd_params(const CommonArgs& c) {
  rees::UniformParams P = params_or_exit(c);
  if (c.format == "json")
    std::cout << rees::params_to_json(P).dump(2) << "\n";
  else
    print_params_text(P);
  return kExitPass;
}

int cmd_gens(const CommonArgs& c) {
  rees::UniformParams P = params_or_exit(c);
  auto sys = rees::rees_generator_system(P);
  if (c.format == "json") {
    rees::Json out;
    out["params"] = rees::params_to_json(P);
    rees::Json gens = rees::Json::array();
    for (const auto& g : sys) gens.push_back(rees::poly_to_json(g.poly));
    out["generators"] = std::move(gens);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& g : sys) std::cout << g.label << ": " << rees::to_string(g.poly) << "\n";
    std::cout << sys.size() << " generators\n";
  }
  return kExitPass;
}

int cmd_oracle(const CommonArgs& c, const rees::EngineLimits& limits) {
  rees::UniformParams P = params_or_exit(c);
  rees::BuchbergerOptions bopt;
  bopt.limits = limits;
  rees::GroebnerBasis gb = rees::rees_oracle(P, bopt);
  if (c.format == "json") {
    rees::Json out;
    out["params"] = rees::params_to_json(P);
    rees::Json gens = rees::Json::array();
    for (const auto& g : gb.gens) gens.push_back(rees::poly_to_json(g));
    out["generators"] = std::move(gens);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& g : gb.gens) std::cout << rees::to_string(g) << "\n";
    std::cout << gb.gens.size() << " generators (minimalized basis)\n";
  }
  return kExitPass;
}

int cmd_verify(const CommonArgs& c, const std::string& suite_name, const std::string& grid_file,
               const rees::VerifyOptions& vopt, int jobs) {
  rees::Suite suite = rees::suite_from_string(suite_name);
  std::vector<rees::GridPoint> grid;
  if (!grid_file.empty()) {
    std::ifstream in(grid_file);
    if (!in) {
      std::cerr << "cannot open grid file: " << grid_file << "\n";
      return kExitUsage;
    }
    grid = rees::parse_grid(in);
  } else {
    // Validate eagerly so a bad single triple exits with the parameter code.
    rees::reduction_data(c.n, c.a, c.b);
    grid = {{c.n, c.a, c.b}};
  }

  auto reports = rees::run_grid(grid, suite, vopt, jobs);
  if (c.format == "json") {
    rees::Json out = rees::Json::array();
    for (const auto& rep : reports) out.push_back(rees::report_to_json(rep));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rees::summary_table(reports);
  }

  bool any_fail = false, any_cap = false, any_rejected = false;
  for (const auto& rep : reports) {
    if (rep.rejected) {
      any_rejected = true;
      continue;
    }
    if (rep.any_fail()) any_fail = true;
    if (rep.resource_capped) any_cap = true;
  }
  if (any_fail) return kExitClaimFailure;
  if (any_cap) return kExitResourceCap;
  if (any_rejected) return kExitInvalidParams;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees ideal generators of uniform monomial ideals, with certification"};
  app.require_subcommand(1);

  CommonArgs c;
  rees::EngineLimits limits;
  std::string suite = "all";
  std::string grid_file;
  int jobs = 1;
  bool timings = false;

  auto add_common = [&](CLI::App* sub, bool need_nab) {
    auto* on = sub->add_option("--n", c.n, "number of x-variables");
    auto* oa = sub->add_option("--a", c.a, "pure-power exponent");
    auto* ob = sub->add_option("--b", c.b, "product exponent");
    if (need_nab) {
      on->required();
      oa->required();
      ob->required();
    }
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-basis", limits.max_basis, "basis size cap");
    sub->add_option("--max-exp", limits.max_exp, "exponent cap");
  };

  CLI::App* sp = app.add_subcommand("params", "derived reduction data");
  add_common(sp, true);

  CLI::App* sg = app.add_subcommand("gens", "closed-form generator ladder");
  add_common(sg, true);

  CLI::App* so = app.add_subcommand("oracle", "elimination oracle's minimal generators");
  add_common(so, true);
  add_limits(so);

  CLI::App* sv = app.add_subcommand("verify", "run certification suites");
  add_common(sv, false);
  add_limits(sv);
  sv->add_option("--suite", suite, "gen|gb|colon|acm|all")
      ->check(CLI::IsMember({"gen", "gb", "colon", "acm", "all"}));
  sv->add_option("--grid", grid_file, "file of 'n a b' triples");
  sv->add_option("--jobs", jobs, "parallel grid points")->check(CLI::PositiveNumber);
  sv->add_flag("--timings", timings, "record wall-clock per claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sp->parsed()) return cmd_params(c);
    if (sg->parsed()) return cmd_gens(c);
    if (so->parsed()) return cmd_oracle(c, limits);
    if (sv->parsed()) {
      if (grid_file.empty() && (c.n == 0 || c.a == 0 || c.b == 0)) {
        std::cerr << "verify: pass --n/--a/--b or --grid FILE\n";
        return kExitUsage;
      }
      rees::VerifyOptions vopt;
      vopt.limits = limits;
      vopt.record_timings = timings;
      return cmd_verify(c, suite, grid_file, vopt, jobs);
    }
  } catch (const rees::InvalidParams& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const rees::ResourceCap& e) {
    std::cerr << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaimFailure;
  }
  return kExitUsage;
}
