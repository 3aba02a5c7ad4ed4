#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specat/specat.h"

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string instance, lattice, tol_abs, tol_rel, trials, seed, partition, hom, max_dim, max_carrier;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct StringDeleter {
  void operator()(char* s) const { specat_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

void add_common(CLI::App* sub, Options& o, const std::string& inputs_help) {
  sub->add_option("inputs", o.inputs, inputs_help);
  sub->add_option("--instance", o.instance, "mat-r | mat-c | mat-nn | rel | rel-l")
      ->check(CLI::IsMember({"mat-r", "mat-c", "mat-nn", "rel", "rel-l"}));
  sub->add_option("--lattice", o.lattice, "builtin:bool | builtin:b4 | builtin:chain:k | path to a lattice table");
  sub->add_option("--tol-abs", o.tol_abs, "absolute tolerance (default 1e-9)")->check(CLI::Number);
  sub->add_option("--tol-rel", o.tol_rel, "relative tolerance (default 1e-9)")->check(CLI::Number);
  sub->add_option("--trials", o.trials, "sampled trials")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", o.seed, "RNG seed (fallback: SPECAT_SEED, then 0)")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-dim", o.max_dim, "largest sampled matrix dimension")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-carrier", o.max_carrier, "largest sampled carrier")->check(CLI::NonNegativeNumber);
  sub->add_option("--out", o.out, "write the report here instead of stdout");
  sub->add_option("--format", o.format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
  sub->add_flag("--timing", o.timing, "include wall-clock timing in the report");
}

int fail() {
  std::cerr << "specat: " << specat_last_error() << '\n';
  return 2;
}

int run(const std::string& command, const Options& o) {
  specat_job* raw_job = nullptr;
  if (specat_job_create(command.c_str(), &raw_job) != SPECAT_OK) return fail();
  std::unique_ptr<specat_job, decltype(&specat_job_free)> job(raw_job, specat_job_free);

  for (const auto& in : o.inputs)
    if (specat_job_add_input(job.get(), in.c_str()) != SPECAT_OK) return fail();
  const std::pair<const char*, const std::string*> options[] = {
      {"instance", &o.instance}, {"lattice", &o.lattice},     {"tol-abs", &o.tol_abs},   {"tol-rel", &o.tol_rel},
      {"trials", &o.trials},     {"seed", &o.seed},           {"partition", &o.partition}, {"hom", &o.hom},
      {"max-dim", &o.max_dim},   {"max-carrier", &o.max_carrier}};
  for (const auto& [key, value] : options)
    if (!value->empty() && specat_job_set_option(job.get(), key, value->c_str()) != SPECAT_OK) return fail();
  if (o.timing && specat_job_set_option(job.get(), "timing", "1") != SPECAT_OK) return fail();

  specat_report* raw_report = nullptr;
  if (specat_job_run(job.get(), &raw_report) != SPECAT_OK) return fail();
  std::unique_ptr<specat_report, decltype(&specat_report_free)> report(raw_report, specat_report_free);
  const int code = specat_report_exit_code(report.get());

  char* raw_text = nullptr;
  if (code >= 2 && specat_report_render(report.get(), "text", &raw_text) == SPECAT_OK) {
    CString summary(raw_text);
    const std::string text = summary.get();
    if (const auto at = text.find("error: "); at != std::string::npos)
      std::cerr << "specat: " << text.substr(at + 7, text.find('\n', at) - at - 7) << '\n';
  }

  char* raw_out = nullptr;
  if (specat_report_render(report.get(), o.format.c_str(), &raw_out) != SPECAT_OK) {
    std::cerr << "specat: " << specat_last_error() << '\n';
    return code != 0 ? code : 2;
  }
  CString rendered(raw_out);
  if (o.out.empty()) {
    std::fwrite(rendered.get(), 1, std::char_traits<char>::length(rendered.get()), stdout);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << rendered.get();
    if (!file) {
      std::cerr << "specat: cannot write '" << o.out << "'\n";
      return 2;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral decompositions in semiadditive categories"};
  app.require_subcommand(1);
  Options o;

  add_common(app.add_subcommand("verify", "verify a spectral decomposition"), o,
             "DECOMPOSITION, or F DECOMPOSITION");
  add_common(app.add_subcommand("separate", "split an endo-arrow into connected components"), o,
             "relation JSON or matrix CSV");
  auto* equitable = app.add_subcommand("equitable", "equitable-partition quotient of a graph");
  add_common(equitable, o, "edge list");
  equitable->add_option("--partition", o.partition, "partition JSON to validate instead of the coarsest one");
  auto* laws = app.add_subcommand("laws", "seeded law suite for an instance");
  add_common(laws, o, "(none)");
  laws->add_option("--hom", o.hom, "also check the functor induced by this lattice hom");
  auto* functor = app.add_subcommand("functor", "push a decomposition through a lattice-hom functor");
  add_common(functor, o, "decomposition JSON (optional)");
  functor->add_option("--hom", o.hom, "hom JSON, builtin:identity or builtin:threshold:<label>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), o);
}
