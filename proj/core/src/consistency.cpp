#include "exactfn/consistency.hpp"

#include <algorithm>

#include "exactfn/errors.hpp"
#include "exactfn/monotone.hpp"

namespace exactfn {

namespace {

// Domain lattices above this size skip the 2-monotonicity shortcut in is_exact.
constexpr std::size_t kShortcutLatticeLimit = 64;

std::vector<Rational> row_of(const Gamble& f) { return f.values(); }

std::vector<Rational> ones(std::size_t m) { return std::vector<Rational>(m, Rational(1)); }

// Variables: masses p(ω) >= 0. Rows: Λ(g) >= ℓ(g) for every domain g.
LinearProgram dominance_program(const Assessment& functional) {
  LinearProgram lp;
  lp.objective.assign(functional.space_size(), Rational{});
  for (const auto& [g, v] : functional.entries()) lp.add(row_of(g), Relation::GreaterEqual, v);
  return lp;
}

void require_same_space(const Assessment& functional, const Gamble& f) {
  if (f.size() != functional.space_size()) {
    throw InputError("gamble " + f.str() + " does not match the space size " +
                     std::to_string(functional.space_size()));
  }
}

// Dual of the dominance feasibility program: minimize t - Σ yᵢ P(fᵢ) subject to
// t >= Σ yᵢ fᵢ(ω) for every ω, Σ yᵢ = 1, y >= 0, t free. A negative optimum is
// a sure-loss certificate.
std::optional<SureLossWitness> sure_loss_certificate(const Assessment& prevision) {
  const std::size_t n = prevision.size();
  const std::size_t m = prevision.space_size();
  if (n == 0) return std::nullopt;
  LinearProgram lp;
  lp.objective.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = -prevision.value(i);
  lp.objective[n] = Rational(1);
  lp.kinds.assign(n + 1, VariableKind::NonNegative);
  lp.kinds[n] = VariableKind::Free;
  for (std::size_t w = 0; w < m; ++w) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = -prevision.gamble(i)[w];
    row[n] = Rational(1);
    lp.add(std::move(row), Relation::GreaterEqual, Rational{});
  }
  std::vector<Rational> normalization(n + 1, Rational(1));
  normalization[n] = Rational{};
  lp.add(std::move(normalization), Relation::Equal, Rational(1));

  const LPOutcome out = solve(lp);
  if (!out.optimal() || out.value.sign() >= 0) return std::nullopt;

  SureLossWitness w;
  Gamble combination = Gamble::constant(m, Rational{});
  for (std::size_t i = 0; i < n; ++i) {
    if (out.optimizer[i].is_zero()) continue;
    w.gambles.push_back(prevision.gamble(i));
    w.coefficients.push_back(out.optimizer[i]);
    w.lower_values.push_back(prevision.value(i));
    combination = combination + out.optimizer[i] * prevision.gamble(i);
    w.combined_lower_value += out.optimizer[i] * prevision.value(i);
  }
  w.sup_of_combination = combination.sup();
  return w;
}

MassFunctional to_masses(std::vector<Rational> values, std::size_t m) {
  values.resize(m);
  return MassFunctional(std::move(values));
}

}  // namespace

// ---- avoiding sure loss and coherence --------------------------------------

Verdict avoids_sure_loss(const Assessment& prevision) {
  const std::size_t m = prevision.space_size();
  LinearProgram lp = dominance_program(prevision);
  lp.add(ones(m), Relation::Equal, Rational(1));
  const LPOutcome out = solve(lp);
  if (out.optimal()) return Verdict::yes(to_masses(out.optimizer, m));

  if (auto w = sure_loss_certificate(prevision); w && validates_sure_loss(prevision, *w)) {
    return Verdict::no(std::move(*w));
  }
  return Verdict::no(WitnessUnavailable{"dual certificate did not re-verify"});
}

bool validates_sure_loss(const Assessment& prevision, const SureLossWitness& w) {
  const std::size_t k = w.gambles.size();
  if (k == 0 || w.coefficients.size() != k || w.lower_values.size() != k) return false;
  Gamble combination = Gamble::constant(prevision.space_size(), Rational{});
  Rational combined;
  for (std::size_t i = 0; i < k; ++i) {
    if (w.coefficients[i].sign() < 0) return false;
    const auto assessed = prevision.at(w.gambles[i]);
    if (!assessed || *assessed != w.lower_values[i]) return false;
    combination = combination + w.coefficients[i] * w.gambles[i];
    combined += w.coefficients[i] * w.lower_values[i];
  }
  return combination.sup() < combined && combination.sup() == w.sup_of_combination &&
         combined == w.combined_lower_value;
}

Rational natural_extension_prevision(const Assessment& prevision, const Gamble& f) {
  require_same_space(prevision, f);
  LinearProgram lp = dominance_program(prevision);
  lp.add(ones(prevision.space_size()), Relation::Equal, Rational(1));
  lp.objective = row_of(f);
  const LPOutcome out = solve(lp);
  if (out.status == LPStatus::Infeasible) {
    throw PreconditionError("natural extension requires an assessment that avoids sure loss");
  }
  // Bounded: the feasible set lies in the probability simplex.
  return out.value;
}

Verdict is_coherent(const Assessment& prevision) {
  Verdict asl = avoids_sure_loss(prevision);
  if (!asl) return asl;
  for (const auto& [g, v] : prevision.entries()) {
    Rational extended = natural_extension_prevision(prevision, g);
    if (extended != v) return Verdict::no(GambleWitness{g, v, std::move(extended)});
  }
  return Verdict::yes(std::move(asl.witness));
}

// ---- norm and exactness ----------------------------------------------------

NormAnalysis analyze_norm(const Assessment& functional) {
  NormAnalysis result;
  const std::size_t m = functional.space_size();
  if (functional.empty()) {
    result.value = Rational{};
    return result;
  }
  std::optional<std::size_t> lower_arg;
  std::optional<std::size_t> upper_arg;
  for (std::size_t k = 0; k < functional.size(); ++k) {
    LinearProgram lp = dominance_program(functional);
    lp.add(row_of(functional.gamble(k)), Relation::Equal, functional.value(k));
    lp.objective = ones(m);
    const LPOutcome low = solve(lp);
    if (low.status == LPStatus::Infeasible) {
      result.witness = GambleWitness{functional.gamble(k), functional.value(k), std::nullopt};
      return result;
    }
    // Λ >= 0 keeps the minimum total mass bounded below by zero.
    if (!lower_arg || result.lower < low.value) {
      result.lower = low.value;
      lower_arg = k;
    }
    const LPOutcome high = solve_max(lp);
    if (high.optimal() && (!result.upper || high.value < *result.upper)) {
      result.upper = high.value;
      upper_arg = k;
    }
  }
  if (result.upper && *result.upper < result.lower) {
    result.witness = PairWitness{functional.gamble(*lower_arg), functional.gamble(*upper_arg),
                                 result.lower, *result.upper};
    return result;
  }
  result.value = result.lower;
  return result;
}

std::optional<Rational> norm(const Assessment& functional) { return analyze_norm(functional).value; }

Verdict is_exact(const Assessment& functional) {
  const std::size_t m = functional.space_size();
  if (!functional.empty() && functional.is_set_function() && m <= Event::kMaxSize &&
      functional.size() <= kShortcutLatticeLimit) {
    const Gamble empty = Gamble::constant(m, Rational{});
    const Gamble full = Gamble::constant(m, Rational(1));
    const auto at_empty = functional.at(empty);
    if (at_empty && functional.contains(full)) {
      std::optional<GambleLattice> lattice;
      try {
        lattice = functional.lattice();
      } catch (const InputError&) {
        lattice.reset();
      }
      if (lattice && is_n_monotone(functional, 2).holds()) {
        Verdict v = at_empty->is_zero()
                        ? Verdict::yes()
                        : Verdict::no(GambleWitness{empty, *at_empty, Rational{}});
        v.notes.emplace_back("2-monotone set function on a lattice with empty set and whole space: "
                             "decided by the value on the empty set");
        return v;
      }
    }
  }
  NormAnalysis analysis = analyze_norm(functional);
  if (analysis.value) return Verdict::yes();
  return Verdict::no(std::move(analysis.witness));
}

// ---- natural extension of exact functionals --------------------------------

ExactExtension::ExactExtension(Assessment functional) : functional_(std::move(functional)) {
  const NormAnalysis analysis = analyze_norm(functional_);
  if (!analysis.value) throw PreconditionError("functional is not exact (its norm is infinite)");
  norm_ = *analysis.value;
}

LinearProgram ExactExtension::credal_program() const {
  LinearProgram lp = dominance_program(functional_);
  lp.add(ones(functional_.space_size()), Relation::Equal, norm_);
  return lp;
}

Rational ExactExtension::operator()(const Gamble& f) const {
  require_same_space(functional_, f);
  if (norm_.is_zero()) return Rational{};
  LinearProgram lp = credal_program();
  lp.objective = row_of(f);
  const LPOutcome out = solve(lp);
  if (!out.optimal()) throw PreconditionError("credal set of an exact functional is empty");
  return out.value;
}

MassFunctional ExactExtension::attaining(const Gamble& f) const {
  require_same_space(functional_, f);
  LinearProgram lp = credal_program();
  lp.objective = row_of(f);
  const LPOutcome out = solve(lp);
  if (!out.optimal()) throw PreconditionError("credal set of an exact functional is empty");
  return to_masses(out.optimizer, functional_.space_size());
}

Rational natural_extension_exact(const Assessment& functional, const Gamble& f) {
  return ExactExtension(functional)(f);
}

ExactDecomposition decompose(const Assessment& functional) {
  const auto lambda = norm(functional);
  if (!lambda) throw PreconditionError("only exact functionals decompose");
  ExactDecomposition out{*lambda, Assessment(functional.space_size()), false};
  const Gamble one = Gamble::constant(functional.space_size(), Rational(1));
  out.unique = functional.contains(one) && !functional.is_zero();
  if (lambda->is_zero()) {
    for (const auto& g : functional.domain()) out.coherent_part.add(g, g.inf());
  } else {
    out.coherent_part = functional.scaled(Rational(1) / *lambda);
  }
  return out;
}

Assessment conjugate(const Assessment& functional) {
  Assessment out(functional.space_size());
  for (const auto& [g, v] : functional.entries()) out.add(-g, -v);
  return out;
}

std::optional<MassFunctional> find_attaining(const Assessment& functional, const Gamble& f,
                                             const Gamble& g) {
  const ExactExtension extension(functional);
  auto target = [&](const Gamble& h) {
    if (auto v = functional.at(h)) return *v;
    return extension(h);
  };
  LinearProgram lp = extension.credal_program();
  lp.add(row_of(f), Relation::Equal, target(f));
  if (g != f) lp.add(row_of(g), Relation::Equal, target(g));
  const LPOutcome out = solve(lp);
  if (!out.optimal()) return std::nullopt;
  return to_masses(out.optimizer, functional.space_size());
}

bool validates_attaining(const Assessment& functional, const MassFunctional& lambda,
                         const Rational& total,
                         const std::vector<std::pair<Gamble, Rational>>& targets) {
  if (lambda.size() != functional.space_size() || lambda.total() != total) return false;
  for (const auto& [g, v] : functional.entries()) {
    if (evaluate(lambda, g) < v) return false;
  }
  return std::all_of(targets.begin(), targets.end(),
                     [&](const auto& t) { return evaluate(lambda, t.first) == t.second; });
}

}  // namespace exactfn
