#include "exactfn/gamble.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "exactfn/errors.hpp"

namespace exactfn {

// ---- Space ----------------------------------------------------------------

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("space must have at least one outcome");
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("outcome labels must be non-empty");
    if (!seen.insert(label).second) throw InputError("duplicate outcome label \"" + label + "\"");
  }
}

Space Space::anonymous(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back("w" + std::to_string(i));
  return Space(std::move(labels));
}

std::size_t Space::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown outcome label \"" + std::string(label) + "\"");
  return static_cast<std::size_t>(it - labels_.begin());
}

// ---- Gamble ---------------------------------------------------------------

Gamble Gamble::constant(std::size_t size, const Rational& value) {
  return Gamble(std::vector<Rational>(size, value));
}

Gamble Gamble::parse(std::span<const std::string> texts) {
  std::vector<Rational> values;
  values.reserve(texts.size());
  for (const auto& t : texts) values.push_back(Rational::parse(t));
  return Gamble(std::move(values));
}

Rational Gamble::inf() const {
  if (values_.empty()) throw InputError("empty gamble has no infimum");
  return *std::min_element(values_.begin(), values_.end());
}

Rational Gamble::sup() const {
  if (values_.empty()) throw InputError("empty gamble has no supremum");
  return *std::max_element(values_.begin(), values_.end());
}

bool Gamble::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](const Rational& v) { return v == values_.front(); });
}

bool Gamble::dominated_by(const Gamble& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (other.values_[i] < values_[i]) return false;
  }
  return true;
}

bool Gamble::is_indicator() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v.is_zero() || v == Rational(1); });
}

Gamble operator+(const Gamble& f, const Gamble& g) {
  require_same_size(f, g);
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
  return Gamble(std::move(out));
}

Gamble operator-(const Gamble& f, const Gamble& g) {
  require_same_size(f, g);
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] - g[i];
  return Gamble(std::move(out));
}

Gamble operator-(const Gamble& f) {
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = -f[i];
  return Gamble(std::move(out));
}

Gamble operator*(const Rational& scale, const Gamble& f) {
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = scale * f[i];
  return Gamble(std::move(out));
}

Gamble operator+(const Gamble& f, const Rational& shift) {
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + shift;
  return Gamble(std::move(out));
}

std::string Gamble::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ", ";
    out += values_[i].str();
  }
  return out + ")";
}

std::size_t Gamble::hash() const {
  std::size_t h = values_.size();
  for (const auto& v : values_) h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void require_same_size(const Gamble& f, const Gamble& g) {
  if (f.size() != g.size()) {
    throw InputError("gambles live on different spaces (sizes " + std::to_string(f.size()) +
                     " and " + std::to_string(g.size()) + ")");
  }
}

Gamble meet(const Gamble& f, const Gamble& g) {
  require_same_size(f, g);
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = min(f[i], g[i]);
  return Gamble(std::move(out));
}

Gamble join(const Gamble& f, const Gamble& g) {
  require_same_size(f, g);
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = max(f[i], g[i]);
  return Gamble(std::move(out));
}

bool is_comonotone(const Gamble& f, const Gamble& g) {
  require_same_size(f, g);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (f[a] < f[b] && g[b] < g[a]) return false;
    }
  }
  return true;
}

Rational sup_distance(const Gamble& f, const Gamble& g) {
  require_same_size(f, g);
  Rational best;
  for (std::size_t i = 0; i < f.size(); ++i) best = max(best, (f[i] - g[i]).abs());
  return best;
}

// ---- Event ----------------------------------------------------------------

Event::Event(std::size_t space_size, std::uint64_t bits) : size_(space_size), bits_(bits) {
  if (space_size == 0 || space_size > kMaxSize) {
    throw InputError("events need a space of 1.." + std::to_string(kMaxSize) + " outcomes");
  }
  if (space_size < kMaxSize && (bits >> space_size) != 0) {
    throw InputError("event mentions outcomes outside the space");
  }
}

Event Event::full(std::size_t space_size) {
  const std::uint64_t bits =
      space_size >= kMaxSize ? ~std::uint64_t{0} : ((std::uint64_t{1} << space_size) - 1);
  return Event(space_size, bits);
}

Event Event::of(std::size_t space_size, std::initializer_list<std::size_t> members) {
  std::uint64_t bits = 0;
  for (std::size_t i : members) {
    if (i >= space_size) throw InputError("event member out of range");
    bits |= std::uint64_t{1} << i;
  }
  return Event(space_size, bits);
}

Event Event::from_labels(const Space& space, std::span<const std::string> labels) {
  std::uint64_t bits = 0;
  for (const auto& label : labels) bits |= std::uint64_t{1} << space.index_of(label);
  return Event(space.size(), bits);
}

bool Event::is_full() const { return *this == full(size_); }

std::size_t Event::cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }

Event Event::complement() const { return Event(size_, full(size_).bits_ & ~bits_); }

Event operator&(const Event& a, const Event& b) {
  if (a.size_ != b.size_) throw InputError("events live on different spaces");
  return Event(a.size_, a.bits_ & b.bits_);
}

Event operator|(const Event& a, const Event& b) {
  if (a.size_ != b.size_) throw InputError("events live on different spaces");
  return Event(a.size_, a.bits_ | b.bits_);
}

std::vector<std::string> Event::labels(const Space& space) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (contains(i)) out.push_back(space.label(i));
  }
  return out;
}

Gamble indicator(const Event& event) {
  std::vector<Rational> values(event.space_size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = event.contains(i) ? 1 : 0;
  return Gamble(std::move(values));
}

std::optional<Event> event_of(const Gamble& f) {
  if (f.size() == 0 || f.size() > Event::kMaxSize || !f.is_indicator()) return std::nullopt;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_zero()) bits |= std::uint64_t{1} << i;
  }
  return Event(f.size(), bits);
}

// ---- Lattices -------------------------------------------------------------

GambleLattice::GambleLattice(std::vector<Gamble> elements) : elements_(std::move(elements)) {
  std::unordered_set<Gamble> seen;
  for (const auto& g : elements_) {
    if (!elements_.empty()) require_same_size(g, elements_.front());
    if (!seen.insert(g).second) throw InputError("duplicate lattice element " + g.str());
  }
  build_tables();
}

GambleLattice::GambleLattice(std::vector<Gamble> elements, Unchecked)
    : elements_(std::move(elements)) {
  build_tables();
}

void GambleLattice::build_tables() {
  const std::size_t n = elements_.size();
  auto& index = index_;
  index.clear();
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements_[i], i);
  meet_table_.assign(n * n, 0);
  join_table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto m = index.find(meet(elements_[i], elements_[j]));
      const auto k = index.find(join(elements_[i], elements_[j]));
      if (m == index.end() || k == index.end()) {
        throw InputError("not a lattice: " + elements_[i].str() + " and " + elements_[j].str() +
                         " have no " + (m == index.end() ? "meet" : "join") + " in the set");
      }
      meet_table_[i * n + j] = meet_table_[j * n + i] = m->second;
      join_table_[i * n + j] = join_table_[j * n + i] = k->second;
    }
  }
}

std::optional<std::size_t> GambleLattice::find(const Gamble& f) const {
  const auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GambleLattice lattice_closure(std::span<const Gamble> generators, std::size_t budget) {
  std::vector<Gamble> elements;
  std::unordered_set<Gamble> seen;
  auto add = [&](Gamble g) {
    if (seen.contains(g)) return;
    if (elements.size() >= budget) {
      throw ClosureOverflow("lattice closure exceeds the element budget of " +
                            std::to_string(budget));
    }
    seen.insert(g);
    elements.push_back(std::move(g));
  };
  for (const auto& g : generators) {
    if (!elements.empty()) require_same_size(g, elements.front());
    add(g);
  }
  // Each new element is combined with every earlier one exactly once.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Gamble lo = meet(elements[i], elements[j]);
      Gamble hi = join(elements[i], elements[j]);
      add(std::move(lo));
      add(std::move(hi));
    }
  }
  return GambleLattice(std::move(elements), GambleLattice::Unchecked{});
}

bool is_field(std::span<const Event> events) {
  if (events.empty()) return false;
  const std::set<Event> members(events.begin(), events.end());
  if (!members.contains(Event::empty(events.front().space_size()))) return false;
  for (const auto& a : members) {
    if (!members.contains(a.complement())) return false;
    for (const auto& b : members) {
      if (!members.contains(a & b) || !members.contains(a | b)) return false;
    }
  }
  return true;
}

std::vector<Event> event_lattice_closure(std::span<const Event> generators) {
  std::vector<Event> out;
  std::set<Event> seen;
  for (const auto& e : generators) {
    if (seen.insert(e).second) out.push_back(e);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (const Event e : {out[i] & out[j], out[i] | out[j]}) {
        if (seen.insert(e).second) out.push_back(e);
      }
    }
  }
  return out;
}

std::vector<Event> power_set(std::size_t space_size) {
  if (space_size == 0 || space_size > 24) {
    throw InputError("power set enumeration supports spaces of 1..24 outcomes");
  }
  std::vector<Event> out;
  out.reserve(std::size_t{1} << space_size);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space_size); ++bits) {
    out.emplace_back(space_size, bits);
  }
  return out;
}

}  // namespace exactfn
