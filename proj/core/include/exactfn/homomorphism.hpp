#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exactfn/gamble.hpp"
#include "exactfn/verdict.hpp"

namespace exactfn {

/// A finite map r from the gambles of a source lattice to gambles of a target
/// lattice. Meet preservation is checked by check_wedge_homomorphism, never
/// assumed.
class HomomorphismTable {
 public:
  HomomorphismTable() = default;
  /// Throws InputError on duplicate sources or inconsistent sizes.
  explicit HomomorphismTable(std::vector<std::pair<Gamble, Gamble>> entries);

  /// Builds the table by applying `map` to every element of `source`.
  template <typename Fn>
  static HomomorphismTable tabulate(const GambleLattice& source, Fn&& map) {
    std::vector<std::pair<Gamble, Gamble>> entries;
    entries.reserve(source.size());
    for (const auto& g : source.elements()) entries.emplace_back(g, map(g));
    return HomomorphismTable(std::move(entries));
  }

  [[nodiscard]] const std::vector<std::pair<Gamble, Gamble>>& entries() const { return entries_; }
  [[nodiscard]] std::optional<Gamble> image(const Gamble& f) const;
  [[nodiscard]] std::vector<Gamble> sources() const;

 private:
  std::vector<std::pair<Gamble, Gamble>> entries_;
  std::unordered_map<Gamble, std::size_t, GambleHash> index_;
};

/// Holds iff r(f ∧ g) = r(f) ∧ r(g) for every pair of sources; otherwise the
/// first violating pair (in table order) is the witness. Throws InputError
/// when the sources are not meet-closed (r is not total on a lattice).
[[nodiscard]] Verdict check_wedge_homomorphism(const HomomorphismTable& r);

}  // namespace exactfn
