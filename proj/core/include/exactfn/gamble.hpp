#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exactfn/rational.hpp"

namespace exactfn {

/// A finite, ordered possibility space. Labels are distinct and non-empty.
class Space {
 public:
  explicit Space(std::vector<std::string> labels);
  /// Space with labels "w0", "w1", ...
  static Space anonymous(std::size_t size);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t index) const { return labels_.at(index); }
  /// Throws InputError for an unknown label.
  [[nodiscard]] std::size_t index_of(std::string_view label) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A gamble on a finite space: one exact value per outcome. Gambles compare
/// by value, lexicographically.
class Gamble {
 public:
  Gamble() = default;
  explicit Gamble(std::vector<Rational> values) : values_(std::move(values)) {}
  Gamble(std::initializer_list<Rational> values) : values_(values) {}

  static Gamble constant(std::size_t size, const Rational& value);
  /// Parses rational strings, e.g. {"0", "1/2", "0.75"}.
  static Gamble parse(std::span<const std::string> texts);

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  [[nodiscard]] Rational inf() const;
  [[nodiscard]] Rational sup() const;
  [[nodiscard]] bool is_constant() const;
  /// Pointwise f <= g.
  [[nodiscard]] bool dominated_by(const Gamble& other) const;
  [[nodiscard]] bool is_indicator() const;

  friend Gamble operator+(const Gamble& f, const Gamble& g);
  friend Gamble operator-(const Gamble& f, const Gamble& g);
  friend Gamble operator-(const Gamble& f);
  friend Gamble operator*(const Rational& scale, const Gamble& f);
  /// Adds a constant to every coordinate.
  friend Gamble operator+(const Gamble& f, const Rational& shift);

  friend bool operator==(const Gamble&, const Gamble&) = default;
  friend auto operator<=>(const Gamble& a, const Gamble& b) { return a.values_ <=> b.values_; }

  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const;

 private:
  std::vector<Rational> values_;
};

/// A subset of outcome indices, stored as a bit mask. Spaces are limited to
/// 64 outcomes wherever events are involved.
class Event {
 public:
  static constexpr std::size_t kMaxSize = 64;

  Event() = default;
  Event(std::size_t space_size, std::uint64_t bits);
  static Event empty(std::size_t space_size) { return Event(space_size, 0); }
  static Event full(std::size_t space_size);
  static Event of(std::size_t space_size, std::initializer_list<std::size_t> members);
  static Event from_labels(const Space& space, std::span<const std::string> labels);

  [[nodiscard]] std::size_t space_size() const { return size_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool contains(std::size_t index) const { return ((bits_ >> index) & 1U) != 0; }
  [[nodiscard]] bool is_empty() const { return bits_ == 0; }
  [[nodiscard]] bool is_full() const;
  [[nodiscard]] std::size_t cardinality() const;
  [[nodiscard]] bool subset_of(const Event& other) const { return (bits_ & ~other.bits_) == 0; }

  [[nodiscard]] Event complement() const;
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);

  [[nodiscard]] std::vector<std::string> labels(const Space& space) const;
  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;

 private:
  std::size_t size_ = 0;
  std::uint64_t bits_ = 0;
};

[[nodiscard]] Gamble indicator(const Event& event);
/// Inverse of indicator for 0/1-valued gambles; nullopt otherwise.
[[nodiscard]] std::optional<Event> event_of(const Gamble& f);

/// Pointwise minimum. Throws InputError on a size mismatch.
[[nodiscard]] Gamble meet(const Gamble& f, const Gamble& g);
/// Pointwise maximum. Throws InputError on a size mismatch.
[[nodiscard]] Gamble join(const Gamble& f, const Gamble& g);

/// No outcome pair on which f and g are strictly oppositely ordered.
[[nodiscard]] bool is_comonotone(const Gamble& f, const Gamble& g);

/// Max |f - g|.
[[nodiscard]] Rational sup_distance(const Gamble& f, const Gamble& g);

void require_same_size(const Gamble& f, const Gamble& g);

struct GambleHash {
  std::size_t operator()(const Gamble& f) const noexcept { return f.hash(); }
};

/// A finite set of distinct gambles closed under meet and join. Elements keep
/// the order in which they were supplied (closure appends new elements).
class GambleLattice {
 public:
  GambleLattice() = default;
  /// Throws InputError if the gambles are not distinct, differ in size, or
  /// are not closed under meet and join.
  explicit GambleLattice(std::vector<Gamble> elements);

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Gamble>& elements() const { return elements_; }
  [[nodiscard]] const Gamble& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::optional<std::size_t> find(const Gamble& f) const;
  [[nodiscard]] bool contains(const Gamble& f) const { return find(f).has_value(); }

  /// meet_index(i, j) is the index of elements[i] ∧ elements[j].
  [[nodiscard]] std::size_t meet_index(std::size_t i, std::size_t j) const {
    return meet_table_[i * elements_.size() + j];
  }
  [[nodiscard]] std::size_t join_index(std::size_t i, std::size_t j) const {
    return join_table_[i * elements_.size() + j];
  }

 private:
  struct Unchecked {};
  GambleLattice(std::vector<Gamble> elements, Unchecked);
  void build_tables();

  std::vector<Gamble> elements_;
  std::vector<std::size_t> meet_table_;
  std::vector<std::size_t> join_table_;
  std::unordered_map<Gamble, std::size_t, GambleHash> index_;

  friend GambleLattice lattice_closure(std::span<const Gamble>, std::size_t);
};

inline constexpr std::size_t kDefaultClosureBudget = 10000;

/// Smallest meet/join-closed set containing the generators (deduplicated,
/// generators first in their given order). Throws ClosureOverflow when more
/// than `budget` elements would be produced.
[[nodiscard]] GambleLattice lattice_closure(std::span<const Gamble> generators,
                                            std::size_t budget = kDefaultClosureBudget);

/// Closed under intersection, union and complement, and contains the empty
/// set. An empty collection is not a field.
[[nodiscard]] bool is_field(std::span<const Event> events);

/// Smallest lattice of events containing the given events.
[[nodiscard]] std::vector<Event> event_lattice_closure(std::span<const Event> generators);

/// Every event of a space of the given size, ordered by bit mask.
[[nodiscard]] std::vector<Event> power_set(std::size_t space_size);

}  // namespace exactfn

template <>
struct std::hash<exactfn::Gamble> {
  std::size_t operator()(const exactfn::Gamble& f) const noexcept { return f.hash(); }
};
