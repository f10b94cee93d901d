#include "exactfn/homomorphism.hpp"

#include "exactfn/errors.hpp"

namespace exactfn {

HomomorphismTable::HomomorphismTable(std::vector<std::pair<Gamble, Gamble>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& [source, target] = entries_[i];
    if (!entries_.empty()) {
      require_same_size(source, entries_.front().first);
      require_same_size(target, entries_.front().second);
    }
    if (!index_.emplace(source, i).second) {
      throw InputError("homomorphism table lists " + source.str() + " twice");
    }
  }
}

std::optional<Gamble> HomomorphismTable::image(const Gamble& f) const {
  const auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].second;
}

std::vector<Gamble> HomomorphismTable::sources() const {
  std::vector<Gamble> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

Verdict check_wedge_homomorphism(const HomomorphismTable& r) {
  const auto& entries = r.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const Gamble m = meet(entries[i].first, entries[j].first);
      const auto image_of_meet = r.image(m);
      if (!image_of_meet) {
        throw InputError("homomorphism source is not a lattice: missing " + m.str());
      }
      Gamble meet_of_images = meet(entries[i].second, entries[j].second);
      if (*image_of_meet != meet_of_images) {
        return Verdict::no(HomomorphismWitness{entries[i].first, entries[j].first, *image_of_meet,
                                               std::move(meet_of_images)});
      }
    }
  }
  return Verdict::yes();
}

}  // namespace exactfn
