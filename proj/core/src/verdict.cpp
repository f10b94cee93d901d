#include "exactfn/verdict.hpp"

#include "exactfn/errors.hpp"

namespace exactfn {

MassFunctional::MassFunctional(std::vector<Rational> masses) : masses_(std::move(masses)) {
  for (const auto& m : masses_) {
    if (m.sign() < 0) throw InputError("mass functional with negative mass " + m.str());
  }
}

MassFunctional MassFunctional::uniform(std::size_t size) {
  return MassFunctional(std::vector<Rational>(size, Rational(1, static_cast<long>(size))));
}

Rational MassFunctional::total() const {
  Rational sum;
  for (const auto& m : masses_) sum += m;
  return sum;
}

Rational evaluate(const MassFunctional& functional, const Gamble& f) {
  if (functional.size() != f.size()) {
    throw InputError("mass functional and gamble live on different spaces");
  }
  Rational sum;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!functional[i].is_zero()) sum += functional[i] * f[i];
  }
  return sum;
}

const char* witness_kind(const Witness& witness) {
  struct Kind {
    const char* operator()(const std::monostate&) const { return "none"; }
    const char* operator()(const MassFunctional&) const { return "mass_functional"; }
    const char* operator()(const SureLossWitness&) const { return "sure_loss"; }
    const char* operator()(const GambleWitness&) const { return "gamble"; }
    const char* operator()(const PairWitness&) const { return "pair"; }
    const char* operator()(const HomomorphismWitness&) const { return "homomorphism_pair"; }
    const char* operator()(const TupleWitness&) const { return "tuple"; }
    const char* operator()(const EventWitness&) const { return "event"; }
    const char* operator()(const WitnessUnavailable&) const { return "unavailable"; }
  };
  return std::visit(Kind{}, witness);
}

}  // namespace exactfn
