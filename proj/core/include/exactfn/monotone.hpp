#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "exactfn/assessment.hpp"
#include "exactfn/gamble.hpp"
#include "exactfn/homomorphism.hpp"
#include "exactfn/verdict.hpp"

namespace exactfn {

/// Order argument meaning "every n" (complete monotonicity).
inline constexpr std::size_t kCompletely = std::numeric_limits<std::size_t>::max();

struct MonotonicityReport {
  /// Largest p for which every tuple passed. Equals the requested n on
  /// success, or kCompletely when complete monotonicity was certified.
  std::size_t verified_up_to = 0;
  /// First violating tuple in enumeration order.
  std::optional<TupleWitness> violation;
  std::vector<std::string> notes;

  [[nodiscard]] bool holds() const { return !violation.has_value(); }
};

/// Σ_{I ⊆ {1..p}} (-1)^|I| ℓ(base ∧ ⋀_{i∈I} componentᵢ), with the empty I
/// contributing ℓ(base). Throws InputError when a meet leaves the domain.
[[nodiscard]] Rational alternating_sum(const Assessment& functional, const Gamble& base,
                                       const std::vector<Gamble>& components);

/// Checks n-monotonicity on a lattice domain. For p = 1..n (outer), each base
/// in domain order, and each p-combination of the other elements in
/// lexicographic index order, the alternating sum must be >= 0.
///
/// n = kCompletely: set functions on a lattice of events containing ∅ and Ω
/// are certified through the Möbius transform of the inner set function;
/// other lattices are checked up to n = |domain| - 1, past which tuples of
/// distinct elements do not exist. Throws InputError if the domain is not a
/// lattice, n is zero, or the enumeration would be too large.
[[nodiscard]] MonotonicityReport is_n_monotone(const Assessment& functional, std::size_t n);

/// is_n_monotone of the conjugate on the negated lattice.
[[nodiscard]] MonotonicityReport is_n_alternating(const Assessment& functional, std::size_t n);

/// max{ℓ(B) : B ∈ dom ℓ, B ⊆ A}. Requires ∅ and Ω in the domain of a set
/// function; throws InputError otherwise.
[[nodiscard]] Rational inner_set_function(const Assessment& set_function, const Event& event);

/// The inner set function on every event, ordered by bit mask.
[[nodiscard]] Assessment inner_power_set(const Assessment& set_function);

/// max{ℓ(g) : g ∈ dom ℓ, g <= f}; throws InputError when no domain gamble is
/// below f.
[[nodiscard]] Rational inner_extension(const Assessment& functional, const Gamble& f);

/// Möbius coefficients of a set function on the full power set, indexed by
/// event bit mask.
class MobiusTransform {
 public:
  MobiusTransform(std::size_t space_size, std::vector<Rational> coefficients);

  [[nodiscard]] std::size_t space_size() const { return space_size_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coefficients_; }
  [[nodiscard]] const Rational& operator[](const Event& event) const {
    return coefficients_[event.bits()];
  }
  /// Σ_{B ⊆ A} m(B).
  [[nodiscard]] Rational reconstruct(const Event& event) const;
  /// The set function with these coefficients, on every event by bit mask.
  [[nodiscard]] Assessment set_function() const;

 private:
  std::size_t space_size_;
  std::vector<Rational> coefficients_;
};

/// m(A) = Σ_{B ⊆ A} (-1)^{|A \ B|} ℓ(B). Throws InputError unless the domain
/// is exactly the power set (any order).
[[nodiscard]] MobiusTransform mobius(const Assessment& set_function);

/// Holds iff every Möbius coefficient of a non-empty event is >= 0. Requires
/// the full power set and ℓ(∅) = 0 (PreconditionError otherwise). The
/// no-witness is the first offending event.
[[nodiscard]] Verdict is_completely_monotone(const Assessment& set_function);

/// g ↦ ℓ(r(g)) on the sources of r. Throws InputError with the violating pair
/// when r is not a ∧-homomorphism, or when r leaves dom ℓ.
[[nodiscard]] Assessment compose_homomorphism(const Assessment& functional,
                                              const HomomorphismTable& r);

/// inf over A of f. Throws InputError for an empty A.
[[nodiscard]] Rational vacuous_value(const Event& event, const Gamble& f);
/// The vacuous lower prevision relative to A on the given gambles.
[[nodiscard]] Assessment vacuous(const Event& event, const std::vector<Gamble>& gambles);

/// Λ restricted to the given gambles.
[[nodiscard]] Assessment expectation(const MassFunctional& functional,
                                     const std::vector<Gamble>& gambles);

/// Holds iff ℓ(f ∧ g) = min(ℓ(f), ℓ(g)) on every pair of the lattice domain;
/// the no-witness pair carries ℓ(f ∧ g) and min(ℓ(f), ℓ(g)).
[[nodiscard]] Verdict minimum_preserving_check(const Assessment& functional);

}  // namespace exactfn
