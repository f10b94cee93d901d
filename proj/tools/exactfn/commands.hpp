#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "document.hpp"

namespace exactfn::cli {

inline constexpr const char* kReportSchemaId = "exactfn/report/v1";

enum class Status { Yes = 0, No = 1 };

struct Options {
  bool verify_witness = false;
  std::size_t closure_budget = kDefaultClosureBudget;

  std::optional<std::string> gamble;
  std::optional<std::string> event;
  std::optional<std::string> f;
  std::optional<std::string> g;
  std::optional<std::string> n;
  std::string mode = "exact";
  bool events_only = false;
  bool extend_closure = false;
  bool inner = false;
};

struct Outcome {
  Json report;
  Status status = Status::Yes;
};

// Runs one subcommand against a parsed document. Throws DocumentError,
// InputError or PreconditionError on bad input.
[[nodiscard]] Outcome run_command(const std::string& command, const Document& doc, const Options& options);

}  // namespace exactfn::cli
