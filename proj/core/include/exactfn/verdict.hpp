#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exactfn/gamble.hpp"
#include "exactfn/rational.hpp"

namespace exactfn {

/// A positive linear functional Λ(f) = Σ mass(ω) f(ω) on a finite space.
class MassFunctional {
 public:
  MassFunctional() = default;
  /// Throws InputError if any mass is negative.
  explicit MassFunctional(std::vector<Rational> masses);

  static MassFunctional uniform(std::size_t size);

  [[nodiscard]] std::size_t size() const { return masses_.size(); }
  [[nodiscard]] const std::vector<Rational>& masses() const { return masses_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return masses_[i]; }
  /// Λ(1), which is also the norm of Λ.
  [[nodiscard]] Rational total() const;

  friend bool operator==(const MassFunctional&, const MassFunctional&) = default;

 private:
  std::vector<Rational> masses_;
};

/// Σ mass(ω) f(ω). Throws InputError on a size mismatch.
[[nodiscard]] Rational evaluate(const MassFunctional& functional, const Gamble& f);

/// sup Σ cᵢ fᵢ < Σ cᵢ P(fᵢ) with cᵢ > 0: a finite selection that incurs sure loss.
struct SureLossWitness {
  std::vector<Gamble> gambles;
  std::vector<Rational> coefficients;
  std::vector<Rational> lower_values;
  Rational sup_of_combination;
  Rational combined_lower_value;
};

/// A domain gamble singled out by a negative verdict: its assessed value and,
/// when one exists, the value the relevant extension assigns to it.
struct GambleWitness {
  Gamble gamble;
  Rational assessed;
  std::optional<Rational> extension;
};

/// Two gambles and the two sides of the identity or inequality they break.
struct PairWitness {
  Gamble first;
  Gamble second;
  Rational lhs;
  Rational rhs;
};

/// r(f ∧ g) differs from r(f) ∧ r(g).
struct HomomorphismWitness {
  Gamble first;
  Gamble second;
  Gamble image_of_meet;
  Gamble meet_of_images;
};

/// Σ_{I ⊆ {1..p}} (-1)^|I| ℓ(base ∧ ⋀_{i∈I} componentᵢ) < 0.
struct TupleWitness {
  Gamble base;
  std::vector<Gamble> components;
  Rational alternating_sum;
};

/// An event with an offending coefficient (e.g. a negative Möbius mass).
struct EventWitness {
  Event event;
  Rational value;
};

/// A negative verdict whose certificate could not be reconstructed.
struct WitnessUnavailable {
  std::string reason;
};

using Witness = std::variant<std::monostate, MassFunctional, SureLossWitness, GambleWitness,
                             PairWitness, HomomorphismWitness, TupleWitness, EventWitness,
                             WitnessUnavailable>;

/// A yes/no decision with the object certifying it. Negative decisions always
/// carry a witness (possibly WitnessUnavailable); positive ones may carry one
/// too (e.g. a dominating mass functional).
struct Verdict {
  bool holds = false;
  Witness witness;
  std::vector<std::string> notes;

  static Verdict yes(Witness w = {}) { return Verdict{true, std::move(w), {}}; }
  static Verdict no(Witness w) { return Verdict{false, std::move(w), {}}; }

  explicit operator bool() const { return holds; }
};

[[nodiscard]] const char* witness_kind(const Witness& witness);

}  // namespace exactfn
