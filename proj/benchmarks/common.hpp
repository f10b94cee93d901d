#pragma once

#include <random>
#include <vector>

#include "exactfn/exactfn.hpp"

namespace bench {

using exactfn::Gamble;
using exactfn::Rational;

inline Rational small_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return Rational(std::uniform_int_distribution<long>(lo * den, hi * den)(rng), den);
}

inline Gamble random_gamble(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(small_rational(rng, -3, 3, 4));
  return Gamble(std::move(v));
}

inline exactfn::MassFunctional random_masses(std::mt19937_64& rng, std::size_t m) {
  std::vector<long> w(m);
  long sum = 0;
  for (auto& x : w) sum += x = std::uniform_int_distribution<long>(1, 9)(rng);
  std::vector<Rational> out;
  for (long x : w) out.emplace_back(x, sum);
  return exactfn::MassFunctional(std::move(out));
}

// Lower envelope of `k` random probabilities over `gambles` random gambles:
// coherent, hence exact.
inline exactfn::Assessment random_envelope(std::mt19937_64& rng, std::size_t m, std::size_t gambles,
                                           std::size_t k) {
  std::vector<exactfn::MassFunctional> credal;
  for (std::size_t i = 0; i < k; ++i) credal.push_back(random_masses(rng, m));
  exactfn::Assessment out(m);
  while (out.size() < gambles) {
    const Gamble g = random_gamble(rng, m);
    if (out.contains(g)) continue;
    Rational low = evaluate(credal.front(), g);
    for (const auto& c : credal) low = exactfn::min(low, evaluate(c, g));
    out.add(g, low);
  }
  return out;
}

// Belief function on every event: nonnegative Möbius mass on random events.
inline exactfn::Assessment random_belief(std::mt19937_64& rng, std::size_t m) {
  const std::size_t count = std::size_t{1} << m;
  std::vector<long> w(count, 0);
  long sum = 0;
  for (std::size_t a = 1; a < count; ++a) {
    if (std::bernoulli_distribution(0.4)(rng)) sum += w[a] = std::uniform_int_distribution<long>(1, 6)(rng);
  }
  if (sum == 0) sum = w[count - 1] = 1;
  std::vector<Rational> values(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a;; b = (b - 1) & a) {
      if (w[b] != 0) values[a] += Rational(w[b], sum);
      if (b == 0) break;
    }
  }
  return exactfn::set_function(m, exactfn::power_set(m), values);
}

}  // namespace bench
