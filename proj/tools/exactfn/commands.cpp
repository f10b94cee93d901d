#include "commands.hpp"

#include <functional>
#include <map>

namespace exactfn::cli {

namespace {

Json rational_json(const Rational& r) { return r.str(); }

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

Json gamble_json(const Document& doc, const Gamble& f) {
  Json out = Json::object();
  if (auto name = doc.name_of(f)) out["name"] = *name;
  out["values"] = rationals_json(f.values());
  return out;
}

Json event_json(const Document& doc, const Event& e) { return e.labels(doc.space); }

Json order_json(std::size_t n) {
  if (n == kCompletely) return "inf";
  return n;
}

Json witness_json(const Document& doc, const Witness& witness) {
  Json out = Json::object();
  out["kind"] = witness_kind(witness);
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, MassFunctional>) {
          out["masses"] = rationals_json(w.masses());
          out["total"] = rational_json(w.total());
        } else if constexpr (std::is_same_v<W, SureLossWitness>) {
          Json gambles = Json::array();
          for (const auto& g : w.gambles) gambles.push_back(gamble_json(doc, g));
          out["gambles"] = std::move(gambles);
          out["coefficients"] = rationals_json(w.coefficients);
          out["lower_values"] = rationals_json(w.lower_values);
          out["sup_of_combination"] = rational_json(w.sup_of_combination);
          out["combined_lower_value"] = rational_json(w.combined_lower_value);
        } else if constexpr (std::is_same_v<W, GambleWitness>) {
          out["gamble"] = gamble_json(doc, w.gamble);
          out["assessed"] = rational_json(w.assessed);
          out["extension"] = w.extension ? Json(w.extension->str()) : Json(nullptr);
        } else if constexpr (std::is_same_v<W, PairWitness>) {
          out["first"] = gamble_json(doc, w.first);
          out["second"] = gamble_json(doc, w.second);
          out["lhs"] = rational_json(w.lhs);
          out["rhs"] = rational_json(w.rhs);
        } else if constexpr (std::is_same_v<W, HomomorphismWitness>) {
          out["first"] = gamble_json(doc, w.first);
          out["second"] = gamble_json(doc, w.second);
          out["image_of_meet"] = gamble_json(doc, w.image_of_meet);
          out["meet_of_images"] = gamble_json(doc, w.meet_of_images);
        } else if constexpr (std::is_same_v<W, TupleWitness>) {
          out["base"] = gamble_json(doc, w.base);
          Json components = Json::array();
          for (const auto& c : w.components) components.push_back(gamble_json(doc, c));
          out["components"] = std::move(components);
          out["alternating_sum"] = rational_json(w.alternating_sum);
        } else if constexpr (std::is_same_v<W, EventWitness>) {
          out["event"] = event_json(doc, w.event);
          out["value"] = rational_json(w.value);
        } else if constexpr (std::is_same_v<W, WitnessUnavailable>) {
          out["reason"] = w.reason;
        }
      },
      witness);
  return out;
}

void put_witness(Json& report, const Document& doc, const Witness& witness,
                 const std::function<bool()>& verify, const Options& options) {
  if (std::holds_alternative<std::monostate>(witness)) return;
  report["witness"] = witness_json(doc, witness);
  if (options.verify_witness) report["witness_verified"] = verify();
}

void put_notes(Json& report, const std::vector<std::string>& notes) {
  if (!notes.empty()) report["notes"] = notes;
}

// ---- witness replay ----------------------------------------------------------

LinearProgram dominance(const Assessment& l) {
  LinearProgram lp;
  lp.objective.assign(l.space_size(), Rational{});
  for (const auto& [g, v] : l.entries()) lp.add(g.values(), Relation::GreaterEqual, v);
  return lp;
}

// Infinite-norm certificates: a domain gamble whose value no dominating
// functional matches, a zero gamble with a nonzero value, or a pair whose
// admissible total masses do not overlap.
bool verify_norm_witness(const Assessment& l, const Witness& witness) {
  const std::size_t m = l.space_size();
  if (const auto* w = std::get_if<GambleWitness>(&witness)) {
    if (l.at(w->gamble) != w->assessed) return false;
    if (w->extension) {
      return w->gamble == Gamble::constant(m, Rational{}) && w->extension->is_zero() && !w->assessed.is_zero();
    }
    LinearProgram lp = dominance(l);
    lp.add(w->gamble.values(), Relation::Equal, w->assessed);
    return solve(lp).status == LPStatus::Infeasible;
  }
  if (const auto* w = std::get_if<PairWitness>(&witness)) {
    auto total = [&](const Gamble& f, bool maximize) -> std::optional<Rational> {
      LinearProgram lp = dominance(l);
      lp.add(f.values(), Relation::Equal, *l.at(f));
      lp.objective.assign(m, Rational(1));
      const LPOutcome out = maximize ? solve_max(lp) : solve(lp);
      if (!out.optimal()) return std::nullopt;
      return out.value;
    };
    if (!l.contains(w->first) || !l.contains(w->second)) return false;
    return total(w->first, false) == w->lhs && total(w->second, true) == w->rhs && w->rhs < w->lhs;
  }
  return false;
}

// A linear prevision that dominates the assessment: the certificate printed
// alongside a positive sure-loss or coherence verdict.
bool verify_dominating(const Assessment& l, const Witness& witness) {
  const auto* w = std::get_if<MassFunctional>(&witness);
  if (!w || w->size() != l.space_size() || w->total() != Rational(1)) return false;
  for (const auto& [g, v] : l.entries()) {
    if (evaluate(*w, g) < v) return false;
  }
  return true;
}

bool verify_tuple(const Assessment& functional, const Witness& witness) {
  const auto* w = std::get_if<TupleWitness>(&witness);
  if (!w || w->alternating_sum.sign() >= 0) return false;
  try {
    return alternating_sum(functional, w->base, w->components) == w->alternating_sum;
  } catch (const InputError&) {
    // Tuples from the Möbius route live on the inner set function.
    return alternating_sum(inner_power_set(functional), w->base, w->components) == w->alternating_sum;
  }
}

// ---- query selection ---------------------------------------------------------

std::vector<Gamble> gamble_queries(const Document& doc, const Options& o) {
  if (o.gamble) return {resolve_gamble(doc, *o.gamble, "--gamble")};
  if (doc.queries && doc.queries->gambles) {
    std::vector<Gamble> out;
    for (const auto& name : *doc.queries->gambles) out.push_back(*doc.gamble(name));
    return out;
  }
  throw DocumentError("--gamble", "no gamble given and the document has no queries.gambles");
}

std::vector<Event> event_queries(const Document& doc, const Options& o) {
  if (o.event) return {resolve_event(doc, *o.event, "--event")};
  if (doc.queries && doc.queries->events) {
    std::vector<Event> out;
    for (const auto& name : *doc.queries->events) out.push_back(*doc.event(name));
    return out;
  }
  throw DocumentError("--event", "no event given and the document has no queries.events");
}

std::vector<std::pair<Gamble, Gamble>> pair_queries(const Document& doc, const Options& o) {
  if (o.f || o.g) {
    if (!o.f || !o.g) throw DocumentError(o.f ? "--g" : "--f", "--f and --g go together");
    return {{resolve_gamble(doc, *o.f, "--f"), resolve_gamble(doc, *o.g, "--g")}};
  }
  if (doc.queries && doc.queries->pairs) {
    std::vector<std::pair<Gamble, Gamble>> out;
    for (const auto& [a, b] : *doc.queries->pairs) out.emplace_back(*doc.gamble(a), *doc.gamble(b));
    return out;
  }
  throw DocumentError("--f", "no pair given and the document has no queries.pairs");
}

std::vector<std::size_t> order_queries(const Document& doc, const Options& o) {
  if (o.n) return {parse_order(*o.n, "--n")};
  if (doc.queries && doc.queries->n) return *doc.queries->n;
  return {2};
}

Status worst(Status a, Status b) { return a == Status::No || b == Status::No ? Status::No : Status::Yes; }

const char* verdict_text(bool holds) { return holds ? "yes" : "no"; }

Outcome single(Json report, bool holds) {
  return Outcome{Json::array({std::move(report)}), holds ? Status::Yes : Status::No};
}

// ---- commands ----------------------------------------------------------------

Outcome check_asl(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  const Verdict v = avoids_sure_loss(l);
  Json r = Json::object();
  r["verdict"] = verdict_text(v.holds);
  put_witness(r, doc, v.witness, [&] {
    if (const auto* w = std::get_if<SureLossWitness>(&v.witness)) return validates_sure_loss(l, *w);
    return verify_dominating(l, v.witness);
  }, o);
  put_notes(r, v.notes);
  return single(std::move(r), v.holds);
}

Outcome check_coherent(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  const Verdict v = is_coherent(l);
  Json r = Json::object();
  r["verdict"] = verdict_text(v.holds);
  put_witness(r, doc, v.witness, [&] {
    if (const auto* w = std::get_if<SureLossWitness>(&v.witness)) return validates_sure_loss(l, *w);
    if (std::holds_alternative<MassFunctional>(v.witness)) return verify_dominating(l, v.witness);
    const auto* w = std::get_if<GambleWitness>(&v.witness);
    return w && w->extension && l.at(w->gamble) == w->assessed &&
           natural_extension_prevision(l, w->gamble) == *w->extension && *w->extension != w->assessed;
  }, o);
  put_notes(r, v.notes);
  return single(std::move(r), v.holds);
}

Outcome check_exact(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  const Verdict v = is_exact(l);
  Json r = Json::object();
  r["verdict"] = verdict_text(v.holds);
  put_witness(r, doc, v.witness, [&] { return verify_norm_witness(l, v.witness); }, o);
  put_notes(r, v.notes);
  return single(std::move(r), v.holds);
}

Outcome norm_command(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  const NormAnalysis a = analyze_norm(l);
  Json r = Json::object();
  r["norm"] = a.value ? Json(a.value->str()) : Json("+inf");
  r["lower"] = rational_json(a.lower);
  r["upper"] = a.upper ? Json(a.upper->str()) : Json("+inf");
  if (!a.value) put_witness(r, doc, a.witness, [&] { return verify_norm_witness(l, a.witness); }, o);
  return single(std::move(r), a.value.has_value());
}

Outcome decompose_command(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  const NormAnalysis a = analyze_norm(l);
  Json r = Json::object();
  if (!a.value) {
    r["verdict"] = "no";
    put_witness(r, doc, a.witness, [&] { return verify_norm_witness(l, a.witness); }, o);
    put_notes(r, {"only exact functionals decompose"});
    return single(std::move(r), false);
  }
  const ExactDecomposition d = decompose(l);
  r["verdict"] = "yes";
  r["lambda"] = rational_json(d.lambda);
  Json part = Json::array();
  for (const auto& [g, v] : d.coherent_part.entries()) {
    Json e = Json::object();
    e["gamble"] = gamble_json(doc, g);
    e["value"] = rational_json(v);
    part.push_back(std::move(e));
  }
  r["coherent_part"] = std::move(part);
  r["unique"] = d.unique;
  return single(std::move(r), true);
}

Outcome natext(const Document& doc, const Options& o) {
  if (o.mode != "exact" && o.mode != "prevision") {
    throw DocumentError("--mode", "expected \"exact\" or \"prevision\"");
  }
  const Assessment l = doc.functional();
  std::optional<ExactExtension> exact;
  if (o.mode == "exact") exact.emplace(l);
  Json reports = Json::array();
  for (const Gamble& g : gamble_queries(doc, o)) {
    Json r = Json::object();
    r["gamble"] = gamble_json(doc, g);
    r["mode"] = o.mode;
    r["value"] = rational_json(exact ? (*exact)(g) : natural_extension_prevision(l, g));
    reports.push_back(std::move(r));
  }
  return Outcome{std::move(reports), Status::Yes};
}

Outcome inner(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  Json reports = Json::array();
  if (o.gamble) {
    const Gamble g = resolve_gamble(doc, *o.gamble, "--gamble");
    Json r = Json::object();
    r["gamble"] = gamble_json(doc, g);
    r["value"] = rational_json(inner_extension(l, g));
    reports.push_back(std::move(r));
  } else if (o.event || (doc.queries && doc.queries->events)) {
    for (const Event& e : event_queries(doc, o)) {
      Json r = Json::object();
      r["event"] = event_json(doc, e);
      r["value"] = rational_json(inner_set_function(l, e));
      reports.push_back(std::move(r));
    }
  } else {
    for (const Gamble& g : gamble_queries(doc, o)) {
      Json r = Json::object();
      r["gamble"] = gamble_json(doc, g);
      r["value"] = rational_json(inner_extension(l, g));
      reports.push_back(std::move(r));
    }
  }
  return Outcome{std::move(reports), Status::Yes};
}

// The functional whose monotonicity is checked: the event part when asked,
// extended to the lattice closure of its domain when asked.
Assessment monotonicity_target(const Document& doc, const Options& o, std::vector<std::string>& notes) {
  Assessment l = o.events_only ? doc.event_part() : doc.functional();
  if (l.empty()) throw DocumentError("/assessment", "nothing to check: the selected assessment is empty");
  if (!o.extend_closure) return l;
  const auto domain = l.domain();
  const GambleLattice closure = lattice_closure(domain, o.closure_budget);
  if (closure.size() == l.size()) return l;
  const ExactExtension e(l);
  Assessment out(l.space_size());
  for (const auto& g : closure.elements()) {
    const auto v = l.at(g);
    out.add(g, v ? *v : e(g));
  }
  notes.push_back("domain extended by natural extension to its lattice closure of " +
                  std::to_string(closure.size()) + " gambles");
  return out;
}

Outcome monotonicity(const Document& doc, const Options& o, bool alternating) {
  std::vector<std::string> prefix;
  const Assessment target = monotonicity_target(doc, o, prefix);
  const Assessment checked = alternating ? conjugate(target) : target;
  Json reports = Json::array();
  Status status = Status::Yes;
  for (std::size_t n : order_queries(doc, o)) {
    const MonotonicityReport rep = alternating ? is_n_alternating(target, n) : is_n_monotone(target, n);
    Json r = Json::object();
    r["n"] = order_json(n);
    r["verdict"] = verdict_text(rep.holds());
    r["verified_up_to"] = order_json(rep.verified_up_to);
    if (rep.violation) {
      const Witness w = *rep.violation;
      put_witness(r, doc, w, [&] { return verify_tuple(checked, w); }, o);
    }
    std::vector<std::string> notes = prefix;
    if (alternating && rep.violation) notes.emplace_back("witness tuple refers to the conjugate functional");
    notes.insert(notes.end(), rep.notes.begin(), rep.notes.end());
    put_notes(r, notes);
    status = worst(status, rep.holds() ? Status::Yes : Status::No);
    reports.push_back(std::move(r));
  }
  return Outcome{std::move(reports), status};
}

Outcome mobius_command(const Document& doc, const Options& o) {
  Assessment l = doc.functional();
  if (o.inner) l = inner_power_set(l);
  const MobiusTransform t = mobius(l);
  Json coefficients = Json::array();
  for (const Event& e : power_set(doc.size())) {
    Json c = Json::object();
    c["event"] = event_json(doc, e);
    c["mass"] = rational_json(t[e]);
    coefficients.push_back(std::move(c));
  }
  Json r = Json::object();
  r["coefficients"] = std::move(coefficients);
  return single(std::move(r), true);
}

Outcome choquet(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  Json reports = Json::array();
  for (const Gamble& g : gamble_queries(doc, o)) {
    const ChoquetResult c = choquet_integral(l, g);
    Json trace = Json::array();
    for (const auto& b : c.trace.breakpoints) {
      Json t = Json::object();
      t["threshold"] = rational_json(b.threshold);
      t["level_set"] = event_json(doc, b.level_set);
      t["level"] = rational_json(b.level);
      trace.push_back(std::move(t));
    }
    Json r = Json::object();
    r["gamble"] = gamble_json(doc, g);
    r["value"] = rational_json(c.value);
    r["trace"] = std::move(trace);
    reports.push_back(std::move(r));
  }
  return Outcome{std::move(reports), Status::Yes};
}

Outcome comadd(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  const Verdict v = is_comonotone_additive(l);
  Json r = Json::object();
  r["verdict"] = verdict_text(v.holds);
  put_witness(r, doc, v.witness, [&] {
    const auto* w = std::get_if<PairWitness>(&v.witness);
    if (!w || !is_comonotone(w->first, w->second)) return false;
    const auto a = l.at(w->first), b = l.at(w->second);
    if (!a || !b || *a + *b != w->rhs) return false;
    const Gamble sum = w->first + w->second;
    const auto direct = l.at(sum);
    const Rational lhs = direct ? *direct : natural_extension_exact(l, sum);
    return lhs == w->lhs && w->lhs != w->rhs;
  }, o);
  put_notes(r, v.notes);
  return single(std::move(r), v.holds);
}

Outcome attain(const Document& doc, const Options& o) {
  const Assessment l = doc.functional();
  Json reports = Json::array();
  Status status = Status::Yes;
  std::optional<ExactExtension> e;
  for (const auto& [f, g] : pair_queries(doc, o)) {
    const auto lambda = find_attaining(l, f, g);
    Json r = Json::object();
    r["f"] = gamble_json(doc, f);
    r["g"] = gamble_json(doc, g);
    r["verdict"] = verdict_text(lambda.has_value());
    if (lambda) {
      put_witness(r, doc, *lambda, [&] {
        if (!e) e.emplace(l);
        return validates_attaining(l, *lambda, e->norm(), {{f, (*e)(f)}, {g, (*e)(g)}});
      }, o);
    } else {
      put_notes(r, {"no dominating functional of minimal mass attains both"});
      status = Status::No;
    }
    reports.push_back(std::move(r));
  }
  return Outcome{std::move(reports), status};
}

Outcome vacuous_command(const Document& doc, const Options& o) {
  if (!o.event) throw DocumentError("--event", "vacuous needs --event");
  const Event a = resolve_event(doc, *o.event, "--event");
  std::vector<Gamble> gambles;
  if (o.gamble || (doc.queries && doc.queries->gambles)) {
    gambles = gamble_queries(doc, o);
  } else {
    gambles = doc.functional().domain();
  }
  Json reports = Json::array();
  for (const Gamble& g : gambles) {
    Json r = Json::object();
    r["event"] = event_json(doc, a);
    r["gamble"] = gamble_json(doc, g);
    r["value"] = rational_json(vacuous_value(a, g));
    reports.push_back(std::move(r));
  }
  return Outcome{std::move(reports), Status::Yes};
}

}  // namespace

Outcome run_command(const std::string& command, const Document& doc, const Options& options) {
  using Handler = std::function<Outcome(const Document&, const Options&)>;
  static const std::map<std::string, Handler> handlers = {
      {"check-asl", check_asl},
      {"check-coherent", check_coherent},
      {"check-exact", check_exact},
      {"norm", norm_command},
      {"decompose", decompose_command},
      {"natext", natext},
      {"inner", inner},
      {"nmono", [](const Document& d, const Options& o) { return monotonicity(d, o, false); }},
      {"nalt", [](const Document& d, const Options& o) { return monotonicity(d, o, true); }},
      {"mobius", mobius_command},
      {"choquet", choquet},
      {"comadd", comadd},
      {"attain", attain},
      {"vacuous", vacuous_command},
  };
  Outcome out = handlers.at(command)(doc, options);
  Json wrapped = Json::object();
  wrapped["schema"] = kReportSchemaId;
  wrapped["command"] = command;
  wrapped["status"] = out.status == Status::Yes ? "yes" : "no";
  wrapped["reports"] = std::move(out.report);
  out.report = std::move(wrapped);
  return out;
}

}  // namespace exactfn::cli
