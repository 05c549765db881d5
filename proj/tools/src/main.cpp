#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using namespace superreal::cli;

namespace {

void add_algebra_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--family", cfg.family, "gl, sl or osp")->required();
  app->add_option("--m", cfg.m, "even size")->required();
  app->add_option("--n", cfg.n, "odd size (gl, sl)");
  app->add_option("--t", cfg.t, "half the odd size (osp)");
}

// Explicit --output wins; otherwise SUPERREAL_OUTPUT_DIR/<name>; otherwise stdout.
int emit(const CommandResult& r, const RunConfig& cfg, const std::string& default_name) {
  std::string text = r.report.dump(2) + "\n";
  std::string path = cfg.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("SUPERREAL_OUTPUT_DIR"); dir && *dir) path = (fs::path(dir) / default_name).string();
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::error_code ec;
    fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent, ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return kUsage;
    }
    out << text;
    std::cerr << "wrote " << path << "\n";
  }
  std::cerr << r.summary << "\n";
  return r.passed ? kOk : kCheckFailed;
}

std::string file_stem(const RunConfig& cfg) {
  std::string s = cfg.command + "-" + cfg.family + "-" + std::to_string(cfg.m);
  if (cfg.n) s += "-" + std::to_string(*cfg.n);
  if (cfg.t) s += "-t" + std::to_string(*cfg.t);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real structures on Lie superalgebras and supergroup points"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* build = app.add_subcommand("build", "write an algebra as JSON");
  add_algebra_flags(build, cfg);
  build->add_option("-o,--output", cfg.output, "output file");

  auto* verify = app.add_subcommand("verify", "check a real structure on an algebra");
  add_algebra_flags(verify, cfg);
  verify->add_option("--structure", cfg.structure, "omega, sigma-cn, entrywise or a JSON file");
  verify->add_option("--kind", cfg.kind, "kind for entrywise conjugation");
  verify->add_flag("--certificate", cfg.certificate, "also build the Killing-derived Hermitian certificate");
  verify->add_flag("--bijection", cfg.bijection, "also round trip through the automorphism bijection");
  verify->add_option("-o,--output", cfg.output, "output file");

  auto* group = app.add_subcommand("group-check", "sampled identities on supergroup points");
  group->add_option("--group", cfg.family, "group family (gl)")->required();
  group->add_option("--m", cfg.m, "even size")->required();
  group->add_option("--n", cfg.n, "odd size")->required();
  group->add_option("--kind", cfg.kind, "standard or graded");
  group->add_option("--pairs", cfg.pairs, "Grassmann generator pairs");
  group->add_option("--max-pairs", cfg.max_pairs, "largest allowed --pairs");
  group->add_option("--samples", cfg.samples, "number of sampled points");
  group->add_option("--seed", cfg.seed, "sampling seed")->required();
  group->add_option("--sign", cfg.sign, "sign of the odd block of the Hermitian form");
  group->add_option("--jobs", cfg.jobs, "samples evaluated in parallel");
  group->add_option("-o,--output", cfg.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      cfg.command = "build";
      return emit(cmd_build(cfg), cfg, file_stem(cfg) + ".json");
    }
    if (*verify) {
      cfg.command = "verify";
      return emit(cmd_verify(cfg), cfg, file_stem(cfg) + ".json");
    }
    cfg.command = "group-check";
    return emit(cmd_group_check(cfg), cfg, file_stem(cfg) + "-" + cfg.kind + ".json");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
