#pragma once

#include <vector>

#include "exactfn/assessment.hpp"
#include "exactfn/gamble.hpp"
#include "exactfn/rational.hpp"
#include "exactfn/verdict.hpp"

namespace exactfn {

/// Step representation of x ↦ ℓ({f >= x}) on [inf f, sup f]: at each distinct
/// value of f (ascending) the level value ℓ({f >= threshold}).
struct DecreasingDistribution {
  struct Breakpoint {
    Rational threshold;
    Event level_set;
    Rational level;
  };
  std::vector<Breakpoint> breakpoints;
};

struct ChoquetResult {
  Rational value;
  /// Breakpoints used by the telescoping sum.
  DecreasingDistribution trace;
};

/// Requires a set function on every event (any order) that is monotone;
/// throws InputError otherwise.
[[nodiscard]] DecreasingDistribution decreasing_distribution(const Assessment& set_function,
                                                             const Gamble& f);

/// ℓ(Ω)·inf f + Σⱼ (vⱼ - vⱼ₋₁)·ℓ({f >= vⱼ}) over the sorted distinct values of
/// f. Requires a monotone set function on every event with ℓ(∅) = 0.
[[nodiscard]] ChoquetResult choquet_integral(const Assessment& set_function, const Gamble& f);

/// Recomputes the telescoping sum from a trace.
[[nodiscard]] Rational choquet_from_trace(const DecreasingDistribution& trace);

/// Holds iff ℓ(f + g) = ℓ(f) + ℓ(g) for every comonotone pair f, g of the
/// domain (f = g included). When f + g is outside the domain it is evaluated
/// through the natural extension of the exact functional; such pairs are
/// listed in the verdict notes. The no-witness PairWitness carries
/// lhs = ℓ(f + g) and rhs = ℓ(f) + ℓ(g). Throws InputError when some sum is
/// outside the domain and the functional is not exact.
[[nodiscard]] Verdict is_comonotone_additive(const Assessment& functional);

}  // namespace exactfn
