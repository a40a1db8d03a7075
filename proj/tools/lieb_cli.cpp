// Command-line front end. Talks to the library through the C API only.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "lieb/lieb.h"

namespace {

struct SubcommandSpec {
  const char* name;
  const char* help;
  std::vector<std::pair<const char*, const char*>> options;
};

const std::vector<SubcommandSpec>& specs() {
  static const std::vector<SubcommandSpec> table = {
      {"constants", "Closed-form constants C, L and their defining relations", {}},
      {"verify-solution",
       "Check a closed-form profile against the equation at sample radii",
       {{"which", "singular | lieb"},
        {"radii", "comma-separated sample radii"},
        {"tolerance", "relative residual tolerance"},
        {"scale", "multiply the profile by this factor"}}},
      {"riesz",
       "Riesz potential of a radial profile",
       {{"profile", "singular | lieb | power"},
        {"decay", "power profile exponent"},
        {"amplitude", "power profile amplitude"},
        {"radii", "comma-separated radii"}}},
      {"identity",
       "Integral identities between derivatives of solutions",
       {{"kind", "commutativity | orthogonality | composite"},
        {"f", "singular | lieb"},
        {"g", "singular | lieb"},
        {"alpha", "multi-index, comma-separated"},
        {"beta", "multi-index, comma-separated"},
        {"lambda-form", "differential form, e.g. \"1*d1 + 2*d11\""},
        {"omega-form", "differential form"},
        {"tolerance", "relative tolerance"},
        {"zero-tol", "absolute tolerance for zero targets"}}},
      {"corollary", "Cross identity between the two closed-form solutions", {{"tolerance", "relative tolerance"}}},
      {"regularity",
       "Weighted derivative norms and kernel checks",
       {{"kind", "norm | kernel | translation"},
        {"u", "singular | lieb"},
        {"m", "derivative order"},
        {"nu", "weight exponent"},
        {"domain", "ball | interval"},
        {"radius", "ball radius"},
        {"a", "interval left end"},
        {"b", "interval right end"},
        {"levels", "grid refinement levels"},
        {"expect", "none | finite | infinite"},
        {"samples", "random sample count"},
        {"h", "translation step"},
        {"tolerance", "tolerance"}}},
      {"scan",
       "Decay and singularity scan of a radial profile",
       {{"which", "singular | lieb"},
        {"r-outer", "outer radius"},
        {"threshold", "blow-up threshold"},
        {"decay-tol", "relative decay tolerance"},
        {"expect-singularities", "expected singular point count"}}},
      {"solve",
       "Damped Picard solve on an interval",
       {{"a", "left end"},
        {"b", "right end"},
        {"grid-size", "number of panels"},
        {"grading", "grading exponent"},
        {"max-iters", "iteration cap"},
        {"stop-tol", "stopping tolerance"},
        {"damping", "damping factor in (0,1]"},
        {"init", "constant initial guess"}}},
  };
  return table;
}

int fail_usage(const std::string& msg) {
  std::cerr << "lieb: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for the Lieb integral equation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lieb_version());

  std::map<std::string, std::string> values;
  std::string config_path;
  std::string out_path;
  bool no_timestamp = false;

  for (const auto& spec : specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->set_help_flag("--help", "show options for this subcommand");
    sub->add_option("--n", values["n"], "dimension");
    sub->add_option("--lambda", values["lambda"], "kernel exponent, 0 < lambda < n");
    sub->add_option("--rel-tol", values["rel-tol"], "quadrature relative tolerance");
    sub->add_option("--abs-tol", values["abs-tol"], "quadrature absolute tolerance");
    sub->add_option("--max-subdivisions", values["max-subdivisions"], "quadrature subdivision budget");
    sub->add_option("--config", config_path, "key=value file; flags override it");
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");
    for (const auto& [key, help] : spec.options) {
      sub->add_option(std::string("--") + key, values[key], help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();

  lieb_request* req = nullptr;
  if (lieb_request_create(name.c_str(), &req) != LIEB_OK) return fail_usage(lieb_last_error());

  auto cleanup_fail = [&](const std::string& msg) {
    lieb_request_destroy(req);
    return fail_usage(msg);
  };

  if (!config_path.empty() && lieb_request_merge_config_file(req, config_path.c_str()) != LIEB_OK) {
    return cleanup_fail(lieb_last_error());
  }
  for (const auto& [key, value] : values) {
    const CLI::Option* opt = chosen->get_option_no_throw("--" + key);
    if (opt == nullptr || opt->count() == 0) continue;
    if (lieb_request_set(req, key.c_str(), value.c_str()) != LIEB_OK) return cleanup_fail(lieb_last_error());
  }
  if (no_timestamp) lieb_request_set(req, "timestamp", "false");

  lieb_report* rep = nullptr;
  const lieb_status st = lieb_run(req, &rep);
  lieb_request_destroy(req);
  if (st == LIEB_E_CONFIG || st == LIEB_E_ARGUMENT) return fail_usage(lieb_last_error());
  if (st != LIEB_OK) {
    std::cerr << "lieb: " << lieb_status_name(st) << " failure: " << lieb_last_error() << "\n";
    return 1;
  }

  const std::string json = lieb_report_json(rep);
  const int code = lieb_report_exit_code(rep);
  lieb_report_destroy(rep);

  if (out_path.empty()) {
    std::fwrite(json.data(), 1, json.size(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << json;
    if (!out) {
      std::cerr << "lieb: cannot write '" << out_path << "'\n";
      return 1;
    }
  }
  return code;
}
