#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exactfn/gamble.hpp"
#include "exactfn/rational.hpp"

namespace exactfn {

/// A functional on a finite domain of gambles: each distinct gamble carries
/// an exact lower value. Entries keep insertion order, which fixes the order
/// in which checks visit the domain.
class Assessment {
 public:
  using Entry = std::pair<Gamble, Rational>;

  explicit Assessment(std::size_t space_size);
  /// Throws InputError on duplicate gambles or size mismatches.
  Assessment(std::size_t space_size, std::vector<Entry> entries);

  /// Throws InputError if `f` is already present or has the wrong size.
  void add(Gamble f, Rational value);
  void add(const Event& event, Rational value) { add(indicator(event), std::move(value)); }

  [[nodiscard]] std::size_t space_size() const { return space_size_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] const Gamble& gamble(std::size_t i) const { return entries_[i].first; }
  [[nodiscard]] const Rational& value(std::size_t i) const { return entries_[i].second; }
  [[nodiscard]] std::vector<Gamble> domain() const;

  [[nodiscard]] std::optional<std::size_t> find(const Gamble& f) const;
  [[nodiscard]] bool contains(const Gamble& f) const { return find(f).has_value(); }
  [[nodiscard]] std::optional<Rational> at(const Gamble& f) const;

  /// All domain gambles are indicators, i.e. this is a set function.
  [[nodiscard]] bool is_set_function() const;
  [[nodiscard]] bool is_zero() const;

  /// Entrywise λ·ℓ.
  [[nodiscard]] Assessment scaled(const Rational& lambda) const;

  /// The domain as a lattice; throws InputError when it is not one.
  [[nodiscard]] GambleLattice lattice() const;

  friend bool operator==(const Assessment&, const Assessment&) = default;

 private:
  std::size_t space_size_;
  std::vector<Entry> entries_;
  std::unordered_map<Gamble, std::size_t, GambleHash> index_;
};

/// Assessment on events, `values[k]` for `events[k]`.
[[nodiscard]] Assessment set_function(std::size_t space_size, const std::vector<Event>& events,
                                      const std::vector<Rational>& values);

/// Evaluates `fn` on each gamble to build an assessment.
template <typename Fn>
[[nodiscard]] Assessment tabulate(std::size_t space_size, const std::vector<Gamble>& gambles,
                                  Fn&& fn) {
  Assessment out(space_size);
  for (const auto& g : gambles) out.add(g, fn(g));
  return out;
}

}  // namespace exactfn
