#include "exactfn/monotone.hpp"

#include <algorithm>
#include <bit>

#include "exactfn/consistency.hpp"
#include "exactfn/errors.hpp"

namespace exactfn {

namespace {

// Upper bound on ℓ-evaluations a single is_n_monotone call may perform.
constexpr double kEvaluationBudget = 5e7;

constexpr std::size_t kMaxPowerSetSize = 20;

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

class TupleChecker {
 public:
  TupleChecker(const Assessment& functional, const GambleLattice& lattice)
      : lattice_(lattice), values_(lattice.size()) {
    for (std::size_t i = 0; i < lattice.size(); ++i) values_[i] = *functional.at(lattice[i]);
  }

  // Scans all tuples of size p; returns the first violation.
  std::optional<TupleWitness> scan(std::size_t p) {
    const std::size_t n = lattice_.size();
    std::vector<std::size_t> combo(p);
    for (std::size_t base = 0; base < n; ++base) {
      // Candidate components: every index except base, ascending.
      std::vector<std::size_t> others;
      others.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != base) others.push_back(i);
      }
      if (others.size() < p) continue;
      std::vector<std::size_t> pos(p);
      for (std::size_t i = 0; i < p; ++i) pos[i] = i;
      for (;;) {
        for (std::size_t i = 0; i < p; ++i) combo[i] = others[pos[i]];
        Rational sum = sum_from(base, combo, 0, true);
        if (sum.sign() < 0) {
          TupleWitness w{lattice_[base], {}, std::move(sum)};
          for (std::size_t c : combo) w.components.push_back(lattice_[c]);
          return w;
        }
        // Next combination in lexicographic order.
        std::size_t k = p;
        while (k > 0 && pos[k - 1] == others.size() - p + (k - 1)) --k;
        if (k == 0) break;
        ++pos[k - 1];
        for (std::size_t i = k; i < p; ++i) pos[i] = pos[i - 1] + 1;
      }
    }
    return std::nullopt;
  }

 private:
  // Σ over subsets of combo[depth..] of ±ℓ(current ∧ ...).
  Rational sum_from(std::size_t current, const std::vector<std::size_t>& combo, std::size_t depth,
                    bool positive) const {
    if (depth == combo.size()) return positive ? values_[current] : -values_[current];
    Rational without = sum_from(current, combo, depth + 1, positive);
    without += sum_from(lattice_.meet_index(current, combo[depth]), combo, depth + 1, !positive);
    return without;
  }

  const GambleLattice& lattice_;
  std::vector<Rational> values_;
};

bool contains_empty_and_full(const Assessment& set_function) {
  const std::size_t m = set_function.space_size();
  return set_function.contains(Gamble::constant(m, Rational{})) &&
         set_function.contains(Gamble::constant(m, Rational(1)));
}

void require_inner_domain(const Assessment& set_function) {
  if (!set_function.is_set_function()) {
    throw InputError("inner set function needs a set function (indicator domain)");
  }
  if (!contains_empty_and_full(set_function)) {
    throw InputError("inner set function needs the empty set and the whole space in the domain");
  }
  if (set_function.space_size() > kMaxPowerSetSize) {
    throw InputError("set functions are limited to spaces of " + std::to_string(kMaxPowerSetSize) +
                     " outcomes");
  }
}

std::vector<Rational> power_set_values(const Assessment& set_function) {
  const std::size_t m = set_function.space_size();
  if (m > kMaxPowerSetSize) {
    throw InputError("power-set operations are limited to spaces of " +
                     std::to_string(kMaxPowerSetSize) + " outcomes");
  }
  const std::size_t count = std::size_t{1} << m;
  if (set_function.size() != count || !set_function.is_set_function()) {
    throw InputError("expected a set function on all " + std::to_string(count) + " events");
  }
  std::vector<Rational> values(count);
  for (const auto& [g, v] : set_function.entries()) values[event_of(g)->bits()] = v;
  return values;
}

// Tuple (A; A \ {ω} for ω ∈ A) whose alternating sum is the Möbius mass of A.
TupleWitness mobius_tuple(const Assessment& power_set_function, const Event& event) {
  TupleWitness w{indicator(event), {}, {}};
  for (std::size_t i = 0; i < event.space_size(); ++i) {
    if (!event.contains(i)) continue;
    w.components.push_back(indicator(Event(event.space_size(), event.bits() & ~(std::uint64_t{1} << i))));
  }
  w.alternating_sum = alternating_sum(power_set_function, w.base, w.components);
  return w;
}

}  // namespace

Rational alternating_sum(const Assessment& functional, const Gamble& base,
                         const std::vector<Gamble>& components) {
  Rational sum;
  const std::size_t p = components.size();
  if (p >= 63) throw InputError("tuple too long");
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << p); ++subset) {
    Gamble current = base;
    for (std::size_t i = 0; i < p; ++i) {
      if (((subset >> i) & 1U) != 0) current = meet(current, components[i]);
    }
    const auto value = functional.at(current);
    if (!value) throw InputError("meet " + current.str() + " is outside the domain");
    if (std::popcount(subset) % 2 == 0) {
      sum += *value;
    } else {
      sum -= *value;
    }
  }
  return sum;
}

MonotonicityReport is_n_monotone(const Assessment& functional, std::size_t n) {
  if (n == 0) throw InputError("monotonicity order must be at least 1");
  const GambleLattice lattice = functional.lattice();
  MonotonicityReport report;

  if (n == kCompletely) {
    const bool event_route = functional.is_set_function() && !functional.empty() &&
                             contains_empty_and_full(functional) &&
                             functional.space_size() <= kMaxPowerSetSize;
    if (event_route) {
      const Assessment full =
          functional.size() == (std::size_t{1} << functional.space_size())
              ? functional
              : inner_power_set(functional);
      const MobiusTransform transform = mobius(full);
      for (std::uint64_t bits = 1; bits < transform.coefficients().size(); ++bits) {
        if (transform.coefficients()[bits].sign() >= 0) continue;
        const Event offending(functional.space_size(), bits);
        // The inner set function preserves n-monotonicity, so the domain
        // itself must already fail at order |A|.
        try {
          MonotonicityReport direct = is_n_monotone(functional, offending.cardinality());
          if (!direct.holds()) {
            direct.notes.emplace_back("negative Moebius mass on " + indicator(offending).str());
            return direct;
          }
        } catch (const InputError&) {
          // Too many tuples for a direct scan; report the Moebius tuple instead.
        }
        report.violation = mobius_tuple(full, offending);
        report.notes.emplace_back("negative Moebius mass on " + indicator(offending).str() +
                                  "; tuple evaluated on the inner set function");
        return report;
      }
      report.verified_up_to = kCompletely;
      report.notes.emplace_back("certified by nonnegative Moebius masses");
      return report;
    }
    n = lattice.size() > 1 ? lattice.size() - 1 : 1;
    report.notes.emplace_back("finite lattice: tuples of distinct elements stop at order " +
                              std::to_string(n));
  }

  const std::size_t size = lattice.size();
  double evaluations = 0.0;
  for (std::size_t p = 1; p <= n && p < size; ++p) {
    evaluations += static_cast<double>(size) * binomial(size - 1, p) * static_cast<double>(1ULL << std::min<std::size_t>(p, 62));
  }
  if (evaluations > kEvaluationBudget) {
    throw InputError("n-monotonicity check too large: about " +
                     std::to_string(static_cast<long long>(evaluations)) + " evaluations");
  }

  TupleChecker checker(functional, lattice);
  for (std::size_t p = 1; p <= n; ++p) {
    if (p >= size) {
      // No tuples of p distinct components remain; larger orders hold trivially.
      report.verified_up_to = n;
      return report;
    }
    if (auto violation = checker.scan(p)) {
      report.verified_up_to = p - 1;
      report.violation = std::move(violation);
      return report;
    }
    report.verified_up_to = p;
  }
  return report;
}

MonotonicityReport is_n_alternating(const Assessment& functional, std::size_t n) {
  return is_n_monotone(conjugate(functional), n);
}

Rational inner_set_function(const Assessment& set_function, const Event& event) {
  require_inner_domain(set_function);
  if (event.space_size() != set_function.space_size()) {
    throw InputError("event and set function live on different spaces");
  }
  std::optional<Rational> best;
  for (const auto& [g, v] : set_function.entries()) {
    if (!event_of(g)->subset_of(event)) continue;
    if (!best || *best < v) best = v;
  }
  return *best;  // ∅ is always a candidate
}

Assessment inner_power_set(const Assessment& set_function) {
  require_inner_domain(set_function);
  const std::size_t m = set_function.space_size();
  Assessment out(m);
  for (const Event& e : power_set(m)) out.add(e, inner_set_function(set_function, e));
  return out;
}

Rational inner_extension(const Assessment& functional, const Gamble& f) {
  if (f.size() != functional.space_size()) {
    throw InputError("gamble " + f.str() + " does not match the space size");
  }
  std::optional<Rational> best;
  for (const auto& [g, v] : functional.entries()) {
    if (!g.dominated_by(f)) continue;
    if (!best || *best < v) best = v;
  }
  if (!best) throw InputError("no domain gamble lies below " + f.str());
  return *best;
}

MobiusTransform::MobiusTransform(std::size_t space_size, std::vector<Rational> coefficients)
    : space_size_(space_size), coefficients_(std::move(coefficients)) {
  if (space_size == 0 || space_size > kMaxPowerSetSize ||
      coefficients_.size() != (std::size_t{1} << space_size)) {
    throw InputError("Moebius transform needs one coefficient per event");
  }
}

Rational MobiusTransform::reconstruct(const Event& event) const {
  Rational sum;
  // Enumerate the subsets of the event's bit mask.
  const std::uint64_t a = event.bits();
  for (std::uint64_t b = a;; b = (b - 1) & a) {
    sum += coefficients_[b];
    if (b == 0) break;
  }
  return sum;
}

Assessment MobiusTransform::set_function() const {
  // Zeta transform: ℓ(A) = Σ_{B ⊆ A} m(B).
  std::vector<Rational> values = coefficients_;
  for (std::size_t bit = 0; bit < space_size_; ++bit) {
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if ((mask >> bit) & 1U) values[mask] += values[mask ^ (std::size_t{1} << bit)];
    }
  }
  Assessment out(space_size_);
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    out.add(Event(space_size_, mask), values[mask]);
  }
  return out;
}

MobiusTransform mobius(const Assessment& set_function) {
  std::vector<Rational> values = power_set_values(set_function);
  const std::size_t m = set_function.space_size();
  for (std::size_t bit = 0; bit < m; ++bit) {
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if ((mask >> bit) & 1U) values[mask] -= values[mask ^ (std::size_t{1} << bit)];
    }
  }
  return MobiusTransform(m, std::move(values));
}

Verdict is_completely_monotone(const Assessment& set_function) {
  const MobiusTransform transform = mobius(set_function);
  if (!transform.coefficients().front().is_zero()) {
    throw PreconditionError("complete monotonicity check expects a value of zero on the empty set");
  }
  for (std::size_t mask = 1; mask < transform.coefficients().size(); ++mask) {
    if (transform.coefficients()[mask].sign() < 0) {
      return Verdict::no(
          EventWitness{Event(set_function.space_size(), mask), transform.coefficients()[mask]});
    }
  }
  return Verdict::yes();
}

Assessment compose_homomorphism(const Assessment& functional, const HomomorphismTable& r) {
  const Verdict preserved = check_wedge_homomorphism(r);
  if (!preserved) {
    const auto& w = std::get<HomomorphismWitness>(preserved.witness);
    throw InputError("not a meet homomorphism: r(" + w.first.str() + " ∧ " + w.second.str() +
                     ") = " + w.image_of_meet.str() + " but r(f) ∧ r(g) = " +
                     w.meet_of_images.str());
  }
  const std::size_t source_size =
      r.entries().empty() ? functional.space_size() : r.entries().front().first.size();
  Assessment out(source_size);
  for (const auto& [source, target] : r.entries()) {
    const auto value = functional.at(target);
    if (!value) throw InputError("homomorphism image " + target.str() + " is outside the domain");
    out.add(source, *value);
  }
  return out;
}

Rational vacuous_value(const Event& event, const Gamble& f) {
  if (event.is_empty()) throw InputError("vacuous lower prevision needs a non-empty event");
  if (event.space_size() != f.size()) throw InputError("event and gamble live on different spaces");
  std::optional<Rational> best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (event.contains(i) && (!best || f[i] < *best)) best = f[i];
  }
  return *best;
}

Assessment vacuous(const Event& event, const std::vector<Gamble>& gambles) {
  if (event.is_empty()) throw InputError("vacuous lower prevision needs a non-empty event");
  return tabulate(event.space_size(), gambles, [&](const Gamble& g) { return vacuous_value(event, g); });
}

Assessment expectation(const MassFunctional& functional, const std::vector<Gamble>& gambles) {
  return tabulate(functional.size(), gambles,
                  [&](const Gamble& g) { return evaluate(functional, g); });
}

Verdict minimum_preserving_check(const Assessment& functional) {
  const GambleLattice lattice = functional.lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      const Rational lhs = *functional.at(lattice[lattice.meet_index(i, j)]);
      const Rational rhs = min(*functional.at(lattice[i]), *functional.at(lattice[j]));
      if (lhs != rhs) return Verdict::no(PairWitness{lattice[i], lattice[j], lhs, rhs});
    }
  }
  return Verdict::yes();
}

}  // namespace exactfn
