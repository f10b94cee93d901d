#pragma once

#include <optional>
#include <vector>

#include "exactfn/assessment.hpp"
#include "exactfn/gamble.hpp"
#include "exactfn/lp.hpp"
#include "exactfn/rational.hpp"
#include "exactfn/verdict.hpp"

namespace exactfn {

// Avoiding sure loss, coherence, the norm of a functional, exactness, natural
// extension, and the decomposition of an exact functional into a norm times a
// coherent lower prevision. Every decision is one or more exact LP solves over
// mass functionals (masses p(ω) >= 0).

/// Holds iff some probability mass function dominates `prevision` on its
/// domain (yes-witness: that MassFunctional). The no-witness is a
/// SureLossWitness taken from the dual program and re-verified exactly.
[[nodiscard]] Verdict avoids_sure_loss(const Assessment& prevision);

/// Natural extension of a lower prevision that avoids sure loss, evaluated at
/// `f`: the minimum of Λ(f) over dominating probability mass functions.
/// Throws PreconditionError on sure loss.
[[nodiscard]] Rational natural_extension_prevision(const Assessment& prevision, const Gamble& f);

/// Holds iff the assessment avoids sure loss and coincides with its natural
/// extension on its domain. The no-witness is the SureLossWitness or the
/// first domain gamble whose natural extension is strictly larger.
[[nodiscard]] Verdict is_coherent(const Assessment& prevision);

/// Result of the norm computation. `value` is empty when the norm is +∞; in
/// that case `witness` names the gamble(s) responsible.
struct NormAnalysis {
  std::optional<Rational> value;
  Witness witness;
  /// Tightest interval of admissible total masses, for diagnostics.
  Rational lower;
  std::optional<Rational> upper;  // empty means unbounded
};

/// Norm of a functional: the smallest λ >= 0 with ℓ = λ·P for some coherent
/// lower prevision P on dom ℓ, or +∞ (nullopt) when none exists.
///
/// For each domain gamble f0 the total masses of dominating functionals that
/// attain ℓ(f0) form an interval [l(f0), u(f0)]; the norm is max l(f0) when
/// all these intervals intersect, and +∞ otherwise. The empty functional has
/// norm zero.
[[nodiscard]] NormAnalysis analyze_norm(const Assessment& functional);
[[nodiscard]] std::optional<Rational> norm(const Assessment& functional);

/// Holds iff the norm is finite. Set functions on a lattice of events with ∅
/// and Ω that pass a 2-monotonicity check are decided by ℓ(∅) = 0 (noted in
/// the verdict); everything else goes through analyze_norm.
[[nodiscard]] Verdict is_exact(const Assessment& functional);

/// Natural extension of an exact functional. Construction computes the norm
/// once; evaluation is one LP per gamble: min Λ(f) over Λ >= ℓ on dom ℓ with
/// Λ(1) = ‖ℓ‖.
class ExactExtension {
 public:
  /// Throws PreconditionError if `functional` is not exact.
  explicit ExactExtension(Assessment functional);

  [[nodiscard]] const Rational& norm() const { return norm_; }
  [[nodiscard]] const Assessment& functional() const { return functional_; }
  [[nodiscard]] Rational operator()(const Gamble& f) const;
  /// A mass functional in the credal set attaining the minimum at f.
  [[nodiscard]] MassFunctional attaining(const Gamble& f) const;

  /// Dominance constraints Λ >= ℓ on dom ℓ and Λ(1) = ‖ℓ‖ over m mass
  /// variables, with a zero objective.
  [[nodiscard]] LinearProgram credal_program() const;

 private:
  Assessment functional_;
  Rational norm_;
};

[[nodiscard]] Rational natural_extension_exact(const Assessment& functional, const Gamble& f);

struct ExactDecomposition {
  Rational lambda;
  Assessment coherent_part;
  /// False when another (λ, P) pair also reproduces the functional: the
  /// constant gamble 1 is not in the domain, or the functional is zero.
  bool unique = false;
};

/// ℓ = λ·P with λ = ‖ℓ‖. For λ = 0 the coherent part is the vacuous lower
/// prevision P(f) = inf f on dom ℓ. Throws PreconditionError if not exact.
[[nodiscard]] ExactDecomposition decompose(const Assessment& functional);

/// ℓ̄(f) = -ℓ(-f): domain negated, values negated.
[[nodiscard]] Assessment conjugate(const Assessment& functional);

/// A Λ in the credal set of an exact functional (Λ >= ℓ on dom ℓ, total mass
/// ‖ℓ‖) attaining the natural extension at both f and g, or nullopt when no
/// such Λ exists. Gambles outside the domain are targeted at their natural
/// extension value. Throws PreconditionError if not exact.
[[nodiscard]] std::optional<MassFunctional> find_attaining(const Assessment& functional,
                                                           const Gamble& f, const Gamble& g);

/// Checks that Λ dominates ℓ on its domain, has the given total mass, and
/// attains the given targets exactly.
[[nodiscard]] bool validates_attaining(const Assessment& functional, const MassFunctional& lambda,
                                       const Rational& total,
                                       const std::vector<std::pair<Gamble, Rational>>& targets);

/// Re-evaluates a sure-loss witness: sup Σ cᵢ fᵢ < Σ cᵢ P(fᵢ), all cᵢ >= 0,
/// and the listed gambles and values belong to `prevision`.
[[nodiscard]] bool validates_sure_loss(const Assessment& prevision, const SureLossWitness& w);

}  // namespace exactfn
