#include "exactfn/choquet.hpp"

#include <algorithm>
#include <memory>

#include "exactfn/consistency.hpp"
#include "exactfn/errors.hpp"

namespace exactfn {

namespace {

constexpr std::size_t kMaxPowerSetSize = 20;

std::vector<Rational> event_values(const Assessment& set_function) {
  const std::size_t m = set_function.space_size();
  if (m > kMaxPowerSetSize) throw InputError("set function space too large");
  const std::size_t count = std::size_t{1} << m;
  if (set_function.size() != count || !set_function.is_set_function()) {
    throw InputError("Choquet integration needs a set function on all " + std::to_string(count) +
                     " events");
  }
  std::vector<Rational> values(count);
  for (const auto& [g, v] : set_function.entries()) values[event_of(g)->bits()] = v;
  return values;
}

void require_monotone(const std::vector<Rational>& values, std::size_t m) {
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    for (std::size_t bit = 0; bit < m; ++bit) {
      const std::size_t smaller = mask & ~(std::size_t{1} << bit);
      if (smaller != mask && values[mask] < values[smaller]) {
        throw InputError("set function is not monotone on " +
                         indicator(Event(m, smaller)).str() + " ⊆ " +
                         indicator(Event(m, mask)).str());
      }
    }
  }
}

DecreasingDistribution distribution_of(const std::vector<Rational>& values, std::size_t m,
                                       const Gamble& f) {
  if (f.size() != m) throw InputError("gamble and set function live on different spaces");
  std::vector<Rational> levels = f.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  DecreasingDistribution out;
  out.breakpoints.reserve(levels.size());
  for (auto& v : levels) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(f[i] < v)) bits |= std::uint64_t{1} << i;
    }
    out.breakpoints.push_back({std::move(v), Event(m, bits), values[bits]});
  }
  return out;
}

}  // namespace

DecreasingDistribution decreasing_distribution(const Assessment& set_function, const Gamble& f) {
  const std::vector<Rational> values = event_values(set_function);
  require_monotone(values, set_function.space_size());
  return distribution_of(values, set_function.space_size(), f);
}

Rational choquet_from_trace(const DecreasingDistribution& trace) {
  if (trace.breakpoints.empty()) return Rational{};
  // The first breakpoint is inf f with level set Ω, whose level is ℓ(Ω).
  const auto& first = trace.breakpoints.front();
  Rational value = first.level * first.threshold;
  for (std::size_t j = 1; j < trace.breakpoints.size(); ++j) {
    const auto& cur = trace.breakpoints[j];
    value += (cur.threshold - trace.breakpoints[j - 1].threshold) * cur.level;
  }
  return value;
}

ChoquetResult choquet_integral(const Assessment& set_function, const Gamble& f) {
  const std::vector<Rational> values = event_values(set_function);
  if (!values.front().is_zero()) {
    throw InputError("Choquet integration expects a value of zero on the empty set");
  }
  require_monotone(values, set_function.space_size());
  ChoquetResult out;
  out.trace = distribution_of(values, set_function.space_size(), f);
  out.value = choquet_from_trace(out.trace);
  return out;
}

Verdict is_comonotone_additive(const Assessment& functional) {
  std::unique_ptr<ExactExtension> extension;
  std::vector<std::string> extended;
  const std::size_t n = functional.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Gamble& f = functional.gamble(i);
      const Gamble& g = functional.gamble(j);
      if (!is_comonotone(f, g)) continue;
      const Gamble sum = f + g;
      Rational lhs;
      bool via_extension = false;
      if (auto v = functional.at(sum)) {
        lhs = *v;
      } else {
        if (!extension) {
          try {
            extension = std::make_unique<ExactExtension>(functional);
          } catch (const PreconditionError&) {
            throw InputError("cannot evaluate " + sum.str() + " = " + f.str() + " + " + g.str() +
                             ": it is outside the domain and the functional is not exact");
          }
        }
        lhs = (*extension)(sum);
        extended.push_back(sum.str());
        via_extension = true;
      }
      Rational rhs = functional.value(i) + functional.value(j);
      if (lhs != rhs) {
        Verdict v = Verdict::no(PairWitness{f, g, std::move(lhs), std::move(rhs)});
        if (via_extension) {
          v.notes.push_back("f + g = " + sum.str() + " evaluated by natural extension");
        }
        return v;
      }
    }
  }
  Verdict v = Verdict::yes();
  if (!extended.empty()) {
    v.notes.push_back(std::to_string(extended.size()) +
                      " sums evaluated by natural extension");
  }
  return v;
}

}  // namespace exactfn
