#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactfn/exactfn.hpp"
#include "json.hpp"

namespace exactfn::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaId = "exactfn/problem/v1";

// Schema violation or unresolved reference, located by a JSON pointer into
// the document (or by the flag name for command-line input).
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string path, const std::string& message)
      : std::runtime_error(message), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct AssessmentEntry {
  bool is_event = false;
  std::string ref;
  Rational value;
};

struct Queries {
  std::optional<std::vector<std::string>> gambles;
  std::optional<std::vector<std::string>> events;
  std::optional<std::vector<std::pair<std::string, std::string>>> pairs;
  std::optional<std::vector<std::size_t>> n;  // kCompletely stands for "inf"
};

struct Document {
  bool has_schema = false;
  Space space{std::vector<std::string>{"_"}};
  std::optional<std::vector<std::pair<std::string, Gamble>>> gambles;
  std::optional<std::vector<std::pair<std::string, Event>>> events;
  std::vector<AssessmentEntry> assessment;
  std::optional<Queries> queries;

  [[nodiscard]] std::size_t size() const { return space.size(); }
  [[nodiscard]] const Gamble* gamble(const std::string& name) const;
  [[nodiscard]] const Event* event(const std::string& name) const;
  // Name of a declared gamble (or of an event, for indicators) equal to f.
  [[nodiscard]] std::optional<std::string> name_of(const Gamble& f) const;

  // The functional described by the assessment section; `path` of a failing
  // entry is reported on duplicates.
  [[nodiscard]] Assessment functional() const;
  // Only the entries that are indicators of events.
  [[nodiscard]] Assessment event_part() const;
};

[[nodiscard]] Document parse_document(const Json& j);
[[nodiscard]] Document load_document(const std::string& path);
[[nodiscard]] Json to_json(const Document& doc);

// Command-line references: a declared name, or an inline comma-separated
// list (values for gambles, labels for events).
[[nodiscard]] Gamble resolve_gamble(const Document& doc, const std::string& text, const std::string& where);
[[nodiscard]] Event resolve_event(const Document& doc, const std::string& text, const std::string& where);
[[nodiscard]] std::size_t parse_order(const std::string& text, const std::string& where);

}  // namespace exactfn::cli
