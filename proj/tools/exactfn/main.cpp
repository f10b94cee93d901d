#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "document.hpp"

using namespace exactfn;
using namespace exactfn::cli;

namespace {

constexpr int kInputErrorStatus = 2;

int report_error(const std::string& path, const std::string& message) {
  Json j = Json::object();
  j["schema"] = kReportSchemaId;
  j["status"] = "error";
  j["error"] = {{"path", path}, {"message", message}};
  std::cout << j.dump(2) << '\n';
  std::cerr << "exactfn: " << (path.empty() ? std::string("document") : path) << ": " << message << '\n';
  return kInputErrorStatus;
}

std::size_t closure_budget() {
  const char* text = std::getenv("EXACTFN_CLOSURE_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultClosureBudget;
  std::size_t pos = 0;
  unsigned long long budget = 0;
  try {
    budget = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || text[pos] != '\0' || text[0] == '-' || budget == 0) {
    throw DocumentError("$EXACTFN_CLOSURE_BUDGET", "expected a positive integer");
  }
  return static_cast<std::size_t>(budget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact functionals, coherence, n-monotonicity and Choquet integrals over finite spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "exactfn 0.1.0");

  std::string path;
  Options options;

  auto add = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("document", path, "problem document (JSON)")->required();
    if (name != "format") {
      sub->add_flag("--verify-witness", options.verify_witness, "replay every printed witness through the kernel");
    }
    return sub;
  };

  add("check-asl", "does the assessment avoid sure loss");
  add("check-coherent", "is the assessment a coherent lower prevision");
  add("check-exact", "is the assessment an exact functional");
  add("norm", "norm of the functional (+inf when not exact)");
  add("decompose", "write an exact functional as lambda times a coherent lower prevision");
  auto* natext = add("natext", "natural extension at gambles");
  natext->add_option("--gamble", options.gamble, "declared gamble name or comma-separated values");
  natext->add_option("--mode", options.mode, "exact or prevision")->check(CLI::IsMember({"exact", "prevision"}));
  auto* inner = add("inner", "inner set function at an event or inner extension at a gamble");
  auto* inner_event = inner->add_option("--event", options.event, "declared event name or comma-separated labels");
  inner->add_option("--gamble", options.gamble, "declared gamble name or comma-separated values")
      ->excludes(inner_event);
  for (const char* name : {"nmono", "nalt"}) {
    auto* sub = add(name, std::string(name) == "nmono" ? "is the functional n-monotone" : "is the functional n-alternating");
    sub->add_option("--n", options.n, "order, a positive integer or inf");
    auto* events = sub->add_flag("--events", options.events_only, "check only the event part of the assessment");
    auto* gambles = sub->add_flag("--gambles", "check the whole assessment (default)");
    events->excludes(gambles);
    sub->add_flag("--extend-closure", options.extend_closure,
                  "extend an exact functional to the lattice closure of its domain first");
  }
  auto* mobius = add("mobius", "Moebius transform of a set function on all events");
  mobius->add_flag("--inner", options.inner, "transform the inner set function of a lattice set function");
  auto* choquet = add("choquet", "Choquet integral against the assessed set function");
  choquet->add_option("--gamble", options.gamble, "declared gamble name or comma-separated values");
  add("comadd", "is the functional comonotone additive");
  auto* attain = add("attain", "dominating functional of minimal mass attaining the extension at f and g");
  attain->add_option("--f", options.f, "first gamble");
  attain->add_option("--g", options.g, "second gamble");
  auto* vacuous = add("vacuous", "vacuous lower prevision relative to an event");
  vacuous->add_option("--event", options.event, "declared event name or comma-separated labels")->required();
  vacuous->add_option("--gamble", options.gamble, "declared gamble name or comma-separated values");
  add("format", "parse the document and print it in canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorStatus;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    options.closure_budget = closure_budget();
    const Document doc = load_document(path);
    if (command == "format") {
      std::cout << to_json(doc).dump(2) << '\n';
      return 0;
    }
    const Outcome out = run_command(command, doc, options);
    std::cout << out.report.dump(2) << '\n';
    return static_cast<int>(out.status);
  } catch (const DocumentError& e) {
    return report_error(e.path(), e.what());
  } catch (const ClosureOverflow& e) {
    return report_error("$EXACTFN_CLOSURE_BUDGET", e.what());
  } catch (const InputError& e) {
    return report_error("/assessment", e.what());
  } catch (const PreconditionError& e) {
    return report_error("/assessment", e.what());
  }
}
