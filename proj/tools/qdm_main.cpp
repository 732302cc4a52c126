// qdm: analyze | fuse | confine | glue, each driven by a JSON configuration.
// Reports go to stdout or --out; failures print to stderr and exit with the
// status codes from qdm.h (2 config, 3 cap, 4 internal, 5 fusion, 6 path).
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "qdm/qdm.h"

int main(int argc, char** argv) {
  CLI::App app{"exact desk-scale toolkit for quantum double models with vertex matter"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::uint64_t seed = 0, dense_cap = 0;
  int threads = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON model configuration file")
        ->required();
    sub->add_option("--out", out_path, "write the report to this file");
    sub->add_option("--seed", seed, "override options.seed");
    sub->add_option("--threads", threads, "override options.threads");
    sub->add_option("--dense-cap", dense_cap, "override options.dense_cap");
    return sub;
  };
  auto* cmd_analyze = add_common(app.add_subcommand(
      "analyze", "structure, ground space, algebra verification, vacua"));
  auto* cmd_fuse = add_common(app.add_subcommand(
      "fuse", "quasiparticle family and fusion table"));
  auto* cmd_confine = add_common(app.add_subcommand(
      "confine", "string-tension scan (CSV)"));
  auto* cmd_glue = add_common(app.add_subcommand(
      "glue", "union/wedge degeneracy and domain-wall probe"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : int(QDM_E_CONFIG);
  }
  CLI::App* sub = app.get_subcommands().front();

  qdm_session* session = nullptr;
  qdm_status st = qdm_create_from_file(config_path.c_str(), &session);
  if (st == QDM_OK && sub->count("--seed")) st = qdm_set_seed(session, seed);
  if (st == QDM_OK && sub->count("--threads")) st = qdm_set_threads(session, threads);
  if (st == QDM_OK && sub->count("--dense-cap"))
    st = qdm_set_dense_cap(session, dense_cap);

  const char* doc = nullptr;
  if (st == QDM_OK) {
    if (sub == cmd_analyze) st = qdm_analyze(session, &doc);
    else if (sub == cmd_fuse) st = qdm_fuse(session, &doc);
    else if (sub == cmd_confine) st = qdm_confine(session, &doc);
    else if (sub == cmd_glue) st = qdm_glue(session, &doc);
  }

  int rc = int(st);
  if (st != QDM_OK) {
    std::fprintf(stderr, "qdm: %s\n", qdm_last_error());
  } else if (out_path.empty()) {
    std::fputs(doc, stdout);
    std::fputc('\n', stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << doc << '\n';
    if (!out) {
      std::fprintf(stderr, "qdm: cannot write %s\n", out_path.c_str());
      rc = int(QDM_E_CONFIG);
    }
  }
  qdm_destroy(session);
  return rc;
}
