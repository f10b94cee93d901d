#include "exactfn/assessment.hpp"

#include <algorithm>

#include "exactfn/errors.hpp"

namespace exactfn {

Assessment::Assessment(std::size_t space_size) : space_size_(space_size) {
  if (space_size == 0) throw InputError("assessment needs a non-empty space");
}

Assessment::Assessment(std::size_t space_size, std::vector<Entry> entries)
    : Assessment(space_size) {
  for (auto& [f, v] : entries) add(std::move(f), std::move(v));
}

void Assessment::add(Gamble f, Rational value) {
  if (f.size() != space_size_) {
    throw InputError("gamble " + f.str() + " does not match the space size " +
                     std::to_string(space_size_));
  }
  if (!index_.emplace(f, entries_.size()).second) {
    throw InputError("gamble " + f.str() + " assessed twice");
  }
  entries_.emplace_back(std::move(f), std::move(value));
}

std::vector<Gamble> Assessment::domain() const {
  std::vector<Gamble> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

std::optional<std::size_t> Assessment::find(const Gamble& f) const {
  const auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> Assessment::at(const Gamble& f) const {
  if (const auto i = find(f)) return entries_[*i].second;
  return std::nullopt;
}

bool Assessment::is_set_function() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.first.is_indicator(); });
}

bool Assessment::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second.is_zero(); });
}

Assessment Assessment::scaled(const Rational& lambda) const {
  Assessment out(space_size_);
  out.entries_.reserve(entries_.size());
  for (const auto& [f, v] : entries_) out.entries_.emplace_back(f, lambda * v);
  out.index_ = index_;
  return out;
}

GambleLattice Assessment::lattice() const { return GambleLattice(domain()); }

Assessment set_function(std::size_t space_size, const std::vector<Event>& events,
                        const std::vector<Rational>& values) {
  if (events.size() != values.size()) throw InputError("events and values differ in length");
  Assessment out(space_size);
  for (std::size_t i = 0; i < events.size(); ++i) out.add(events[i], values[i]);
  return out;
}

}  // namespace exactfn
