#pragma once

#include <vector>

#include "exactfn/exactfn.hpp"

namespace exactfn::testkit {

// Three outcomes a, b, c; f = (0, 1, 2) and the lower prevision P(f) = 1,
// P(1) = 1, whose natural extension is g ↦ min{g(b), g(c), (g(a) + g(c))/2}.
inline Gamble trio_f() { return Gamble{0, 1, 2}; }
inline Gamble trio_one() { return Gamble{1, 1, 1}; }
inline Gamble trio_join() { return Gamble{1, 1, 2}; }
inline Gamble trio_meet() { return Gamble{0, 1, 1}; }

inline Assessment trio_assessment() {
  Assessment a(3);
  a.add(trio_f(), Rational(1));
  a.add(trio_one(), Rational(1));
  return a;
}

inline Rational trio_formula(const Gamble& g) {
  return min(min(g[1], g[2]), (g[0] + g[2]) / Rational(2));
}

// The natural extension on the four-element closure {f, 1, f∨1, f∧1}.
inline Assessment trio_closure() {
  Assessment a(3);
  a.add(trio_f(), Rational(1));
  a.add(trio_one(), Rational(1));
  a.add(trio_join(), Rational(1));
  a.add(trio_meet(), Rational(1, 2));
  return a;
}

// The natural extension restricted to all eight events, values obtained by
// evaluating the closed form on each indicator.
inline Assessment trio_events() {
  Assessment a(3);
  for (const auto& e : power_set(3)) a.add(e, trio_formula(indicator(e)));
  return a;
}

inline Space abc() { return Space({"a", "b", "c"}); }

}  // namespace exactfn::testkit
