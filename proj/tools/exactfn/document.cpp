#include "document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace exactfn::cli {

namespace {

std::string child(const std::string& path, const std::string& key) {
  // JSON pointer escaping for '~' and '/'.
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw DocumentError(path, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DocumentError(path, "expected an array");
  return j;
}

const std::string& require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, "expected a string");
  return j.get_ref<const std::string&>();
}

Rational require_rational(const Json& j, const std::string& path) {
  if (j.is_number()) throw DocumentError(path, "numbers must be written as rational strings such as \"1/3\"");
  const std::string& text = require_string(j, path);
  try {
    return Rational::parse(text);
  } catch (const InputError& e) {
    throw DocumentError(path, e.what());
  }
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw DocumentError(child(path, key), "unknown field");
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < require_array(j, path).size(); ++i) {
    out.push_back(require_string(j[i], child(path, i)));
  }
  return out;
}

Json rational_json(const Rational& r) { return r.str(); }

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

const Gamble* Document::gamble(const std::string& name) const {
  if (!gambles) return nullptr;
  for (const auto& [n, g] : *gambles) {
    if (n == name) return &g;
  }
  return nullptr;
}

const Event* Document::event(const std::string& name) const {
  if (!events) return nullptr;
  for (const auto& [n, e] : *events) {
    if (n == name) return &e;
  }
  return nullptr;
}

std::optional<std::string> Document::name_of(const Gamble& f) const {
  if (gambles) {
    for (const auto& [n, g] : *gambles) {
      if (g == f) return n;
    }
  }
  if (events) {
    for (const auto& [n, e] : *events) {
      if (indicator(e) == f) return n;
    }
  }
  return std::nullopt;
}

Assessment Document::functional() const {
  Assessment out(size());
  for (std::size_t i = 0; i < assessment.size(); ++i) {
    const auto& entry = assessment[i];
    const Gamble g = entry.is_event ? indicator(*event(entry.ref)) : *gamble(entry.ref);
    if (out.contains(g)) {
      throw DocumentError(child("/assessment", i), "gamble " + g.str() + " is assessed twice");
    }
    out.add(g, entry.value);
  }
  return out;
}

Assessment Document::event_part() const {
  const Assessment all = functional();
  Assessment out(size());
  for (const auto& [g, v] : all.entries()) {
    if (g.is_indicator()) out.add(g, v);
  }
  return out;
}

Document parse_document(const Json& j) {
  Document doc;
  require_object(j, "");
  only_keys(j, "", {"schema", "space", "gambles", "events", "assessment", "queries"});

  if (j.contains("schema")) {
    if (require_string(j["schema"], "/schema") != kSchemaId) {
      throw DocumentError("/schema", std::string("unsupported schema; expected \"") + kSchemaId + "\"");
    }
    doc.has_schema = true;
  }

  if (!j.contains("space")) throw DocumentError("/space", "missing field");
  const auto labels = string_list(j["space"], "/space");
  if (labels.empty()) throw DocumentError("/space", "the space needs at least one outcome");
  if (labels.size() > Event::kMaxSize) {
    throw DocumentError("/space", "at most " + std::to_string(Event::kMaxSize) + " outcomes are supported");
  }
  try {
    doc.space = Space(labels);
  } catch (const InputError& e) {
    throw DocumentError("/space", e.what());
  }
  const std::size_t m = labels.size();

  std::set<std::string> names;
  if (j.contains("gambles")) {
    doc.gambles.emplace();
    for (const auto& [name, values] : require_object(j["gambles"], "/gambles").items()) {
      const std::string path = child("/gambles", name);
      if (!names.insert(name).second) throw DocumentError(path, "name already used");
      require_array(values, path);
      if (values.size() != m) {
        throw DocumentError(path, "expected " + std::to_string(m) + " values, one per outcome");
      }
      std::vector<Rational> v;
      for (std::size_t i = 0; i < m; ++i) v.push_back(require_rational(values[i], child(path, i)));
      doc.gambles->emplace_back(name, Gamble(std::move(v)));
    }
  }

  if (j.contains("events")) {
    doc.events.emplace();
    for (const auto& [name, members] : require_object(j["events"], "/events").items()) {
      const std::string path = child("/events", name);
      if (!names.insert(name).second) throw DocumentError(path, "name already used");
      std::uint64_t bits = 0;
      const auto list = string_list(members, path);
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::size_t index = 0;
        try {
          index = doc.space.index_of(list[i]);
        } catch (const InputError&) {
          throw DocumentError(child(path, i), "\"" + list[i] + "\" is not an outcome of the space");
        }
        if ((bits >> index) & 1U) throw DocumentError(child(path, i), "outcome listed twice");
        bits |= std::uint64_t{1} << index;
      }
      doc.events->emplace_back(name, Event(m, bits));
    }
  }

  if (!j.contains("assessment")) throw DocumentError("/assessment", "missing field");
  const Json& entries = require_array(j["assessment"], "/assessment");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = child("/assessment", i);
    const Json& e = require_object(entries[i], path);
    only_keys(e, path, {"gamble", "event", "value"});
    AssessmentEntry entry;
    if (e.contains("gamble") == e.contains("event")) {
      throw DocumentError(path, "each entry names exactly one of \"gamble\" or \"event\"");
    }
    entry.is_event = e.contains("event");
    const char* key = entry.is_event ? "event" : "gamble";
    entry.ref = require_string(e[key], child(path, key));
    if (entry.is_event ? doc.event(entry.ref) == nullptr : doc.gamble(entry.ref) == nullptr) {
      throw DocumentError(child(path, key), std::string("no ") + key + " named \"" + entry.ref + "\"");
    }
    if (!e.contains("value")) throw DocumentError(child(path, "value"), "missing field");
    entry.value = require_rational(e["value"], child(path, "value"));
    doc.assessment.push_back(std::move(entry));
  }
  (void)doc.functional();  // duplicate gambles

  if (j.contains("queries")) {
    const Json& q = require_object(j["queries"], "/queries");
    only_keys(q, "/queries", {"gambles", "events", "pairs", "n"});
    Queries out;
    if (q.contains("gambles")) {
      out.gambles = string_list(q["gambles"], "/queries/gambles");
      for (std::size_t i = 0; i < out.gambles->size(); ++i) {
        if (!doc.gamble((*out.gambles)[i])) {
          throw DocumentError(child("/queries/gambles", i), "no gamble named \"" + (*out.gambles)[i] + "\"");
        }
      }
    }
    if (q.contains("events")) {
      out.events = string_list(q["events"], "/queries/events");
      for (std::size_t i = 0; i < out.events->size(); ++i) {
        if (!doc.event((*out.events)[i])) {
          throw DocumentError(child("/queries/events", i), "no event named \"" + (*out.events)[i] + "\"");
        }
      }
    }
    if (q.contains("pairs")) {
      out.pairs.emplace();
      const Json& pairs = require_array(q["pairs"], "/queries/pairs");
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string path = child("/queries/pairs", i);
        const auto pair = string_list(pairs[i], path);
        if (pair.size() != 2) throw DocumentError(path, "a pair has exactly two gamble names");
        for (std::size_t k = 0; k < 2; ++k) {
          if (!doc.gamble(pair[k])) throw DocumentError(child(path, k), "no gamble named \"" + pair[k] + "\"");
        }
        out.pairs->emplace_back(pair[0], pair[1]);
      }
    }
    if (q.contains("n")) {
      out.n.emplace();
      const Json& ns = require_array(q["n"], "/queries/n");
      for (std::size_t i = 0; i < ns.size(); ++i) {
        const std::string path = child("/queries/n", i);
        if (ns[i].is_string() && ns[i] == "inf") {
          out.n->push_back(kCompletely);
        } else if (ns[i].is_number_integer() && ns[i].get<long long>() >= 1) {
          out.n->push_back(ns[i].get<std::size_t>());
        } else {
          throw DocumentError(path, "expected a positive integer or \"inf\"");
        }
      }
    }
    doc.queries = std::move(out);
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("", "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DocumentError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

Json to_json(const Document& doc) {
  Json j = Json::object();
  if (doc.has_schema) j["schema"] = kSchemaId;
  j["space"] = doc.space.labels();
  if (doc.gambles) {
    Json g = Json::object();
    for (const auto& [name, f] : *doc.gambles) {
      Json values = Json::array();
      for (const auto& v : f.values()) values.push_back(rational_json(v));
      g[name] = std::move(values);
    }
    j["gambles"] = std::move(g);
  }
  if (doc.events) {
    Json e = Json::object();
    for (const auto& [name, ev] : *doc.events) e[name] = ev.labels(doc.space);
    j["events"] = std::move(e);
  }
  Json entries = Json::array();
  for (const auto& entry : doc.assessment) {
    Json e = Json::object();
    e[entry.is_event ? "event" : "gamble"] = entry.ref;
    e["value"] = rational_json(entry.value);
    entries.push_back(std::move(e));
  }
  j["assessment"] = std::move(entries);
  if (doc.queries) {
    Json q = Json::object();
    if (doc.queries->gambles) q["gambles"] = *doc.queries->gambles;
    if (doc.queries->events) q["events"] = *doc.queries->events;
    if (doc.queries->pairs) {
      Json pairs = Json::array();
      for (const auto& [a, b] : *doc.queries->pairs) pairs.push_back(Json::array({a, b}));
      q["pairs"] = std::move(pairs);
    }
    if (doc.queries->n) {
      Json ns = Json::array();
      for (std::size_t n : *doc.queries->n) {
        if (n == kCompletely) {
          ns.push_back("inf");
        } else {
          ns.push_back(n);
        }
      }
      q["n"] = std::move(ns);
    }
    j["queries"] = std::move(q);
  }
  return j;
}

Gamble resolve_gamble(const Document& doc, const std::string& text, const std::string& where) {
  if (const Gamble* g = doc.gamble(text)) return *g;
  if (const Event* e = doc.event(text)) return indicator(*e);
  const auto parts = split(text);
  if (parts.size() != doc.size()) {
    throw DocumentError(where, "\"" + text + "\" is neither a declared gamble nor a list of " +
                                   std::to_string(doc.size()) + " values");
  }
  try {
    return Gamble::parse(parts);
  } catch (const InputError& e) {
    throw DocumentError(where, e.what());
  }
}

Event resolve_event(const Document& doc, const std::string& text, const std::string& where) {
  if (const Event* e = doc.event(text)) return *e;
  std::uint64_t bits = 0;
  if (!text.empty()) {
    for (const auto& label : split(text)) {
      try {
        bits |= std::uint64_t{1} << doc.space.index_of(label);
      } catch (const InputError&) {
        throw DocumentError(where, "\"" + label + "\" is neither a declared event nor an outcome");
      }
    }
  }
  return Event(doc.size(), bits);
}

std::size_t parse_order(const std::string& text, const std::string& where) {
  if (text == "inf") return kCompletely;
  std::size_t pos = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-' || n == 0) {
    throw DocumentError(where, "expected a positive integer or \"inf\"");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace exactfn::cli
