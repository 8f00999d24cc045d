#include "agss/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "agss/config.hpp"
#include "agss/mpc.hpp"
#include "agss/reference.hpp"
#include "agss/report.hpp"

namespace agss::cli {

namespace {

using report::json;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  long long seed = -1;
  long long budget_subsets = -1;
  long long budget_codewords = -1;
};

void apply_overrides(config::SchemeConfig& cfg, const CommonOpts& o) {
  if (o.seed >= 0) cfg.seed = static_cast<uint64_t>(o.seed);
  if (o.budget_subsets > 0) cfg.subset_budget = o.budget_subsets;
  if (o.budget_codewords > 0) cfg.codeword_budget = o.budget_codewords;
}

// Output is assembled in full before anything is written so a failed run
// leaves no partial file behind.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config::ConfigError("cannot open output file: " + path);
  f << content;
}

std::string rendered(const json& j, const std::string& format) {
  if (format == "text") return report::render_text(j);
  return j.dump(2) + "\n";
}

int cmd_analyze(const CommonOpts& o) {
  config::SchemeConfig cfg = config::load_config(o.config_path);
  apply_overrides(cfg, o);
  config::BuiltScheme built = config::build_scheme(cfg);
  json j = report::analysis_report(cfg, built);
  write_output(o.out_path, rendered(j, o.format));
  return 0;
}

int cmd_paper_verify(const CommonOpts& o) {
  json j = report::discrepancy_report(reference::verify_all());
  write_output(o.out_path, rendered(j, o.format));
  return 0;
}

int cmd_curve_info(const CommonOpts& o) {
  config::SchemeConfig cfg = config::load_config(o.config_path);
  apply_overrides(cfg, o);
  config::BuiltScheme built = config::build_scheme(cfg);
  json j;
  j["family"] = built.family;
  j["field"] = built.scheme.field().to_string();
  j["genus"] = built.genus;
  j["rational_points"] = built.rational_point_count;
  j["group"] = built.group_description.empty() ? json(nullptr)
                                                : json(built.group_description);
  j["m"] = built.m;
  j["code"] = {built.scheme.sharing_code().length(),
               built.scheme.sharing_code().dimension()};
  json pts = json::array();
  for (const auto& p : built.points) pts.push_back(funcspace::to_string(p));
  j["points"] = pts;
  write_output(o.out_path, rendered(j, o.format));
  return 0;
}

int cmd_field_info(const CommonOpts& o) {
  config::SchemeConfig cfg = config::load_config(o.config_path);
  apply_overrides(cfg, o);
  const gf::Field f(cfg.field.p, static_cast<int>(cfg.field.k));
  json j;
  j["name"] = f.to_string();
  j["order"] = f.order();
  j["characteristic"] = cfg.field.p;
  j["degree"] = cfg.field.k;
  j["modulus"] = f.modulus();
  if (f.order() <= 256) {
    json elems = json::array();
    for (long i = 0; i < f.order(); ++i)
      elems.push_back(f.element(i).to_string());
    j["elements"] = elems;
  }
  write_output(o.out_path, rendered(j, o.format));
  return 0;
}

int cmd_mpc_demo(const CommonOpts& o, const std::string& circuit_path) {
  config::SchemeConfig cfg = config::load_config(o.config_path);
  apply_overrides(cfg, o);
  config::BuiltScheme built = config::build_scheme(cfg);
  config::DemoSpec demo = config::load_demo(circuit_path, built.scheme.field());

  mpc::MpcResult result;
  try {
    result = mpc::run_passive_mpc(built.scheme, demo.circuit, demo.inputs,
                                  cfg.seed);
  } catch (const mpc::PreconditionError& e) {
    const long n = static_cast<long>(built.scheme.participants());
    const long g = built.genus;
    std::ostringstream hint;
    hint << "precondition failure: " << e.what() << "\n"
         << "hint: a recombination vector is guaranteed when m >= n/2 + 2g"
         << " (sufficient, not necessary); here n = " << n << ", g = " << g
         << ", m = " << built.m << " and the bound is "
         << (n / 2.0 + 2.0 * g) << "\n";
    std::cerr << hint.str();
    return 3;
  }

  gf::FieldElement plaintext = demo.circuit.evaluate(demo.inputs);
  std::string transcript = report::transcript_jsonl(result.transcript);
  if (!o.out_path.empty()) write_output(o.out_path, transcript);

  json j;
  j["output"] = result.output.index();
  j["plaintext"] = plaintext.index();
  j["match"] = result.output == plaintext;
  j["rounds"] = result.rounds;
  j["messages"] = result.transcript.size();
  j["transcript"] = o.out_path.empty() ? json(nullptr) : json(o.out_path);
  std::cout << rendered(j, o.format);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"secret sharing from algebraic-geometric codes"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string circuit_path;

  auto add_common = [&o](CLI::App* c, bool needs_config) {
    auto* cfg = c->add_option("--config", o.config_path, "scheme config file");
    if (needs_config) cfg->required();
    c->add_option("--out", o.out_path, "output file (default stdout)");
    c->add_option("--seed", o.seed, "seed override");
    c->add_option("--budget-subsets", o.budget_subsets,
                  "subset scan budget override");
    c->add_option("--budget-codewords", o.budget_codewords,
                  "codeword enumeration budget override");
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full scheme report");
  add_common(analyze, true);
  CLI::App* verify = app.add_subcommand(
      "paper-verify", "compare derived structures with the published lists");
  add_common(verify, false);
  CLI::App* demo =
      app.add_subcommand("mpc-demo", "run the passive protocol on a circuit");
  add_common(demo, true);
  demo->add_option("--circuit", circuit_path, "circuit description file")
      ->required();
  CLI::App* curve = app.add_subcommand("curve-info", "curve and point summary");
  add_common(curve, true);
  CLI::App* field = app.add_subcommand("field-info", "field summary");
  add_common(field, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (verify->parsed()) return cmd_paper_verify(o);
    if (demo->parsed()) return cmd_mpc_demo(o, circuit_path);
    if (curve->parsed()) return cmd_curve_info(o);
    if (field->parsed()) return cmd_field_info(o);
  } catch (const code::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const mpc::PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return 3;
  } catch (const config::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace agss::cli
