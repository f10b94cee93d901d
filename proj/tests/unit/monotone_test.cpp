#include <gtest/gtest.h>

#include "exactfn/consistency.hpp"
#include "exactfn/errors.hpp"
#include "exactfn/monotone.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace exactfn;
using testkit::Rng;

namespace {

Assessment random_values_on(Rng& rng, const GambleLattice& lattice, std::size_t m) {
  Assessment out(m);
  for (const auto& g : lattice.elements()) out.add(g, rng.rational(-2, 2, 2));
  return out;
}

// Monotone values on a lattice: a random mass functional plus noise that
// keeps order (adds a multiple of the sum of coordinates).
Assessment random_monotone_on(Rng& rng, const GambleLattice& lattice, std::size_t m) {
  Assessment out(m);
  const MassFunctional p = rng.masses(m);
  const Rational wobble = rng.rational(0, 1, 4);
  for (const auto& g : lattice.elements()) {
    Rational s;
    for (std::size_t i = 0; i < m; ++i) s += g[i];
    out.add(g, evaluate(p, g) + wobble * s * s);
  }
  return out;
}

}  // namespace

TEST(NMonotone, TrioClosureViolatesTwo) {
  const Assessment l = testkit::trio_closure();
  const MonotonicityReport r1 = is_n_monotone(l, 1);
  EXPECT_TRUE(r1.holds());
  const MonotonicityReport r = is_n_monotone(l, 2);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.verified_up_to, 1u);
  EXPECT_EQ(r.violation->base, testkit::trio_join());
  EXPECT_EQ(r.violation->components, (std::vector<Gamble>{testkit::trio_f(), testkit::trio_one()}));
  EXPECT_EQ(r.violation->alternating_sum, Rational(-1, 2));
  EXPECT_EQ(alternating_sum(l, r.violation->base, r.violation->components), Rational(-1, 2));
  EXPECT_FALSE(testkit::multiset_n_monotone(l, 2));
}

TEST(NMonotone, TrioEventsPassTwo) {
  const Assessment l = testkit::trio_events();
  const std::vector<Rational> expected{0, 0, 0, 0, 0, 0, Rational(1, 2), 1};
  for (std::size_t mask = 0; mask < 8; ++mask) {
    EXPECT_EQ(*l.at(indicator(Event(3, mask))), expected[mask]);
  }
  EXPECT_TRUE(is_n_monotone(l, 2).holds());
  EXPECT_EQ(is_n_monotone(l, 2).verified_up_to, 2u);
  EXPECT_TRUE(testkit::multiset_n_monotone(l, 2));
}

TEST(NMonotone, UniformExpectationOnSampledLattices) {
  Rng rng(201);
  for (int trial = 0; trial < 15; ++trial) {
    const GambleLattice lattice = testkit::random_gamble_lattice(rng, 3, 3, 12);
    const Assessment l = expectation(MassFunctional::uniform(3), lattice.elements());
    EXPECT_TRUE(is_n_monotone(l, 4).holds());
  }
}

TEST(NMonotone, DistinctReductionMatchesMultisetEnumeration) {
  Rng rng(202);
  int violations = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 2 + rng.index(2);
    const GambleLattice lattice = testkit::random_gamble_lattice(rng, m, 2, 4, 3);
    const Assessment l = rng.coin() ? random_values_on(rng, lattice, m)
                                    : random_monotone_on(rng, lattice, m);
    for (std::size_t n = 1; n <= 3; ++n) {
      const bool fast = is_n_monotone(l, n).holds();
      EXPECT_EQ(fast, testkit::multiset_n_monotone(l, n));
      if (!fast) ++violations;
    }
  }
  EXPECT_GT(violations, 50);
}

TEST(NMonotone, DownwardClosed) {
  Rng rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const GambleLattice lattice = testkit::random_gamble_lattice(rng, 3, 3, 10, 3);
    const Assessment l = random_monotone_on(rng, lattice, 3);
    const MonotonicityReport r = is_n_monotone(l, 3);
    const std::size_t verified = r.verified_up_to;
    for (std::size_t p = 1; p <= std::min<std::size_t>(verified, 3); ++p) {
      EXPECT_TRUE(is_n_monotone(l, p).holds());
    }
    if (!r.holds()) {
      EXPECT_LT(r.violation->alternating_sum, Rational(0));
      EXPECT_EQ(alternating_sum(l, r.violation->base, r.violation->components),
                r.violation->alternating_sum);
      EXPECT_FALSE(is_n_monotone(l, verified + 1).holds());
    }
  }
}

TEST(NMonotone, InputErrors) {
  Assessment not_lattice(2);
  not_lattice.add(Gamble{1, 0}, Rational(0));
  not_lattice.add(Gamble{0, 1}, Rational(0));
  EXPECT_THROW((void)is_n_monotone(not_lattice, 2), InputError);
  EXPECT_THROW((void)is_n_monotone(testkit::trio_closure(), 0), InputError);
}

TEST(NMonotone, CompletelyOnEventsUsesMobius) {
  const MonotonicityReport r = is_n_monotone(testkit::trio_events(), kCompletely);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.verified_up_to, kCompletely);

  // Lattice {∅, {a}, {b}, {a,b}} ∪ Ω on three outcomes with a superadditivity
  // failure: ℓ({a,b}) < ℓ({a}) + ℓ({b}).
  Assessment bad(3);
  bad.add(Event::empty(3), Rational(0));
  bad.add(Event::of(3, {0}), Rational(1, 2));
  bad.add(Event::of(3, {1}), Rational(1, 2));
  bad.add(Event::of(3, {0, 1}), Rational(1, 2));
  bad.add(Event::full(3), Rational(1));
  const MonotonicityReport rb = is_n_monotone(bad, kCompletely);
  ASSERT_FALSE(rb.holds());
  EXPECT_LT(rb.violation->alternating_sum, Rational(0));
  EXPECT_EQ(alternating_sum(bad, rb.violation->base, rb.violation->components),
            rb.violation->alternating_sum);
}

TEST(NMonotone, CompletelyOnGambleLatticeStopsAtSizeMinusOne) {
  const MonotonicityReport r = is_n_monotone(
      expectation(MassFunctional::uniform(3), testkit::trio_closure().domain()), kCompletely);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.verified_up_to, 3u);
  EXPECT_FALSE(r.notes.empty());
}

TEST(NMonotone, MobiusCertificateAgreesWithDirectChecks) {
  Rng rng(204);
  int negative = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 2 + rng.index(2);
    std::vector<Rational> values;
    if (rng.coin()) {
      values = testkit::random_belief_values(rng, m, rng.positive(2));
    } else {
      // Monotone but arbitrary: sort random values along cardinality.
      values.assign(std::size_t{1} << m, Rational(0));
      for (std::size_t a = 1; a < values.size(); ++a) {
        Rational floor_value;
        for (std::size_t b = 0; b < a; ++b) {
          if ((b & a) == b) floor_value = max(floor_value, values[b]);
        }
        values[a] = floor_value + rng.rational(0, 1, 3);
      }
    }
    const Assessment l = testkit::power_set_function(m, values);
    const bool certified = is_completely_monotone(l).holds;
    const bool direct = is_n_monotone(l, (std::size_t{1} << m) - 1).holds();
    EXPECT_EQ(certified, direct);
    EXPECT_EQ(certified, is_n_monotone(l, kCompletely).holds());
    if (m <= 2) EXPECT_EQ(certified, testkit::multiset_n_monotone(l, 3));
    if (!certified) ++negative;
  }
  EXPECT_GT(negative, 10);
}

TEST(NAlternating, Examples) {
  Rng rng(205);
  for (int trial = 0; trial < 10; ++trial) {
    const GambleLattice lattice = testkit::random_gamble_lattice(rng, 3, 3, 10);
    // Conjugate of the vacuous lower prevision is sup f; its conjugate again
    // is the vacuous one, which is completely monotone.
    Assessment upper(3);
    for (const auto& g : lattice.elements()) upper.add(-g, -g.inf());
    EXPECT_TRUE(is_n_alternating(upper, 3).holds());
    EXPECT_TRUE(testkit::multiset_n_monotone(conjugate(upper), 3));
    const Assessment linear = expectation(rng.masses(3), lattice.elements());
    EXPECT_TRUE(is_n_alternating(linear, 3).holds());
  }
  const MonotonicityReport r = is_n_alternating(conjugate(testkit::trio_closure()), 2);
  EXPECT_FALSE(r.holds());
}

TEST(InnerSetFunction, Examples) {
  Assessment l(3);
  l.add(Event::empty(3), Rational(0));
  l.add(Event::of(3, {0}), Rational(1, 4));
  l.add(Event::of(3, {0, 1}), Rational(1, 2));
  l.add(Event::full(3), Rational(1));
  EXPECT_EQ(inner_set_function(l, Event::of(3, {0, 1})), Rational(1, 2));
  EXPECT_EQ(inner_set_function(l, Event::of(3, {0, 2})), Rational(1, 4));
  EXPECT_EQ(inner_set_function(l, Event::of(3, {2})), Rational(0));
  Assessment missing(3);
  missing.add(Event::of(3, {0}), Rational(1));
  EXPECT_THROW((void)inner_set_function(missing, Event::full(3)), InputError);
  const Assessment full = inner_power_set(l);
  EXPECT_EQ(full.size(), 8u);
  EXPECT_EQ(*full.at(indicator(Event::of(3, {1, 2}))), Rational(0));
}

TEST(InnerExtension, Examples) {
  Assessment l(2);
  l.add(Gamble{0, 0}, Rational(0));
  l.add(Gamble{1, 1}, Rational(1));
  l.add(Gamble{2, 0}, Rational(1, 2));
  EXPECT_EQ(inner_extension(l, Gamble{1, 1}), Rational(1));
  EXPECT_EQ(inner_extension(l, Gamble{2, 1}), Rational(1));
  EXPECT_EQ(inner_extension(l, Gamble(std::vector<Rational>{2, Rational(1, 2)})), Rational(1, 2));
  EXPECT_THROW((void)inner_extension(l, Gamble{-1, 5}), InputError);
}

TEST(InnerSetFunction, PreservesNMonotonicity) {
  Rng rng(206);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng.index(3);
    const auto values = testkit::random_belief_values(rng, m, rng.positive(2));
    const auto events = testkit::random_event_lattice(rng, m, 2);
    const Assessment l = testkit::restrict_values(values, events);
    for (std::size_t n = 1; n <= 3; ++n) {
      if (is_n_monotone(l, n).holds()) {
        EXPECT_TRUE(is_n_monotone(inner_power_set(l), n).holds()) << "n=" << n;
      }
    }
    // Inner set function equals natural extension on every event.
    const ExactExtension e(l);
    for (const auto& a : power_set(m)) EXPECT_EQ(inner_set_function(l, a), e(indicator(a)));
  }
}

TEST(InnerExtension, PreservesNMonotonicityOnLatticesWithConstants) {
  Rng rng(207);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = 2;
    std::vector<Gamble> gens{Gamble::constant(m, Rational(0)), Gamble::constant(m, Rational(2))};
    gens.push_back(rng.grid_gamble(m, 3));
    const GambleLattice small = lattice_closure(gens);
    const Assessment l = expectation(rng.masses(m), small.elements());
    // Extend to the full grid {0,1,2}^2 by the inner extension.
    const auto grid = testkit::full_grid(m, 3);
    const Assessment extended =
        tabulate(m, grid, [&](const Gamble& g) { return inner_extension(l, g); });
    for (std::size_t n = 1; n <= 2; ++n) {
      if (is_n_monotone(l, n).holds()) EXPECT_TRUE(is_n_monotone(extended, n).holds());
    }
  }
}

TEST(Mobius, Examples) {
  const Assessment uniform = expectation(MassFunctional::uniform(2), {indicator(Event(2, 0)),
                                                                     indicator(Event(2, 1)),
                                                                     indicator(Event(2, 2)),
                                                                     indicator(Event(2, 3))});
  const MobiusTransform mu = mobius(uniform);
  EXPECT_EQ(mu.coefficients(),
            (std::vector<Rational>{0, Rational(1, 2), Rational(1, 2), 0}));

  Assessment vac(3);
  for (const auto& e : power_set(3)) vac.add(e, e.is_full() ? Rational(1) : Rational(0));
  const MobiusTransform mv = mobius(vac);
  for (std::size_t a = 0; a < 8; ++a) EXPECT_EQ(mv.coefficients()[a], a == 7 ? 1 : 0);

  const MobiusTransform mc = mobius(testkit::trio_events());
  for (std::size_t a = 0; a < 8; ++a) {
    EXPECT_EQ(mc.coefficients()[a], (a == 6 || a == 7) ? Rational(1, 2) : Rational(0));
  }
  EXPECT_THROW((void)mobius(testkit::trio_closure()), InputError);
}

TEST(Mobius, InversionAndBruteForce) {
  Rng rng(208);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng.index(5);
    std::vector<Rational> values(std::size_t{1} << m);
    for (auto& v : values) v = rng.rational(-2, 2);
    const Assessment l = testkit::power_set_function(m, values);
    const MobiusTransform mu = mobius(l);
    EXPECT_EQ(mu.coefficients(), testkit::brute_mobius(values));
    for (const auto& e : power_set(m)) EXPECT_EQ(mu.reconstruct(e), values[e.bits()]);
    EXPECT_EQ(mu.set_function(), l);
  }
}

TEST(CompletelyMonotone, Examples) {
  Rng rng(209);
  for (int i = 0; i < 20; ++i) {
    const MassFunctional p = rng.masses(3);
    std::vector<Gamble> events;
    for (const auto& e : power_set(3)) events.push_back(indicator(e));
    EXPECT_TRUE(is_completely_monotone(expectation(p, events)).holds);
    EXPECT_TRUE(is_n_alternating(expectation(p, events), 3).holds());
  }
  Assessment vac(3);
  for (const auto& e : power_set(3)) vac.add(e, e.is_full() ? Rational(1) : Rational(0));
  EXPECT_TRUE(is_completely_monotone(vac).holds);
  EXPECT_TRUE(is_completely_monotone(testkit::trio_events()).holds);

  Assessment shifted(2);
  for (const auto& e : power_set(2)) shifted.add(e, Rational(1, 10));
  EXPECT_THROW((void)is_completely_monotone(shifted), PreconditionError);

  Assessment neg(2);
  neg.add(Event(2, 0), Rational(0));
  neg.add(Event(2, 1), Rational(1, 2));
  neg.add(Event(2, 2), Rational(1, 2));
  neg.add(Event(2, 3), Rational(3, 4));
  const Verdict v = is_completely_monotone(neg);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(std::get<EventWitness>(v.witness).event, Event::full(2));
  EXPECT_EQ(std::get<EventWitness>(v.witness).value, Rational(-1, 4));
}

TEST(ComposeHomomorphism, VacuousFromConstantMinimum) {
  Rng rng(210);
  const Event a = Event::of(3, {1, 2});
  for (int trial = 0; trial < 10; ++trial) {
    const GambleLattice source = testkit::random_gamble_lattice(rng, 3, 3, 15);
    const auto r = HomomorphismTable::tabulate(
        source, [&](const Gamble& g) { return Gamble::constant(3, testkit::min_over(a, g)); });
    Assessment q(3);
    q.add(Event::empty(3), Rational(0));
    q.add(Event::full(3), Rational(1));
    Assessment target(3);
    for (const auto& [g, img] : r.entries()) {
      if (!target.contains(img)) target.add(img, natural_extension_exact(q, img));
    }
    const Assessment composed = compose_homomorphism(target, r);
    EXPECT_EQ(composed, vacuous(a, source.elements()));
    const auto id = HomomorphismTable::tabulate(source, [](const Gamble& g) { return g; });
    const Assessment l = expectation(rng.masses(3), source.elements());
    EXPECT_EQ(compose_homomorphism(l, id), l);
  }
}

TEST(ComposeHomomorphism, ChainCollapsePreservesMonotonicity) {
  Rng rng(211);
  for (int trial = 0; trial < 30; ++trial) {
    const GambleLattice source = testkit::random_gamble_lattice(rng, 3, 3, 10);
    // r(g) = min(g)·1 onto a chain of constants; ℓ is completely monotone.
    const auto r = HomomorphismTable::tabulate(
        source, [](const Gamble& g) { return Gamble::constant(3, g.inf()); });
    const MassFunctional p = rng.masses(3);
    Assessment target(3);
    for (const auto& [g, img] : r.entries()) {
      if (!target.contains(img)) target.add(img, evaluate(p, img));
    }
    const Assessment composed = compose_homomorphism(target, r);
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(is_n_monotone(composed, n).holds());
  }
}

TEST(ComposeHomomorphism, RejectsNonHomomorphism) {
  const HomomorphismTable r({{Gamble{0, 1}, Gamble{0, 0}},
                             {Gamble{1, 0}, Gamble{0, 0}},
                             {Gamble{0, 0}, Gamble{1, 1}},
                             {Gamble{1, 1}, Gamble{1, 1}}});
  Assessment l(2);
  l.add(Gamble{0, 0}, Rational(0));
  l.add(Gamble{1, 1}, Rational(1));
  EXPECT_THROW((void)compose_homomorphism(l, r), InputError);
}

TEST(Vacuous, Examples) {
  EXPECT_EQ(vacuous_value(Event::full(3), testkit::trio_f()), Rational(0));
  EXPECT_EQ(vacuous_value(Event::of(3, {2}), testkit::trio_f()), Rational(2));
  EXPECT_EQ(vacuous_value(Event::of(3, {1, 2}), testkit::trio_f()), Rational(1));
  EXPECT_THROW((void)vacuous(Event::empty(3), {testkit::trio_f()}), InputError);
}

TEST(MinimumPreserving, Examples) {
  Rng rng(212);
  for (int trial = 0; trial < 10; ++trial) {
    const GambleLattice lattice = testkit::random_gamble_lattice(rng, 3, 3, 12);
    const Assessment v = vacuous(rng.nonempty_event(3), lattice.elements());
    EXPECT_TRUE(minimum_preserving_check(v).holds);
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(is_n_monotone(v, n).holds());
  }
  const Assessment u = expectation(MassFunctional::uniform(2),
                                   {Gamble{0, 0}, Gamble{1, 0}, Gamble{0, 1}, Gamble{1, 1}});
  const Verdict v = minimum_preserving_check(u);
  ASSERT_FALSE(v.holds);
  const auto& w = std::get<PairWitness>(v.witness);
  EXPECT_EQ(w.first, (Gamble{1, 0}));
  EXPECT_EQ(w.second, (Gamble{0, 1}));
  EXPECT_EQ(w.lhs, Rational(0));
  EXPECT_EQ(w.rhs, Rational(1, 2));

  // Monotone on a chain: f ∧ g ∈ {f, g}.
  Assessment chain(2);
  chain.add(Gamble{0, 0}, Rational(-1));
  chain.add(Gamble{1, 0}, Rational(0));
  chain.add(Gamble{1, 2}, Rational(3));
  EXPECT_TRUE(minimum_preserving_check(chain).holds);
}

TEST(MinimumPreserving, ImpliesCompleteMonotonicity) {
  Rng rng(213);
  int passing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GambleLattice lattice = testkit::random_gamble_lattice(rng, 2, 2, 6, 3);
    Assessment l(2);
    // Values of the form h(min over a random event), h increasing: minimum
    // preserving by construction half of the time.
    const Event a = rng.nonempty_event(2);
    for (const auto& g : lattice.elements()) {
      l.add(g, rng.coin(0.7) ? Rational(2) * testkit::min_over(a, g) : rng.rational(0, 3));
    }
    if (!minimum_preserving_check(l).holds) continue;
    ++passing;
    EXPECT_TRUE(is_n_monotone(l, kCompletely).holds());
    EXPECT_TRUE(testkit::multiset_n_monotone(l, 3));
  }
  EXPECT_GT(passing, 30);
}
