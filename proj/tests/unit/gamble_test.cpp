#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "exactfn/errors.hpp"
#include "exactfn/gamble.hpp"
#include "exactfn/homomorphism.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace exactfn;
using testkit::Rng;

TEST(Space, RejectsDuplicateOrEmptyLabels) {
  EXPECT_THROW(Space({"a", "a"}), InputError);
  EXPECT_THROW(Space({"a", ""}), InputError);
  EXPECT_THROW(Space(std::vector<std::string>{}), InputError);
  const Space s = testkit::abc();
  EXPECT_EQ(s.index_of("c"), 2u);
  EXPECT_THROW((void)s.index_of("d"), InputError);
  EXPECT_EQ(Space::anonymous(2).labels(), (std::vector<std::string>{"w0", "w1"}));
}

TEST(Indicator, Basics) {
  EXPECT_EQ(indicator(Event::empty(2)), (Gamble{0, 0}));
  EXPECT_EQ(indicator(Event::full(2)), (Gamble{1, 1}));
  EXPECT_EQ(indicator(Event::of(3, {0})), (Gamble{1, 0, 0}));
  EXPECT_EQ(event_of(Gamble{0, 1, 1}), Event::of(3, {1, 2}));
  EXPECT_FALSE(event_of(Gamble{0, 2}).has_value());
}

TEST(Event, FromLabels) {
  const Space s = testkit::abc();
  const std::vector<std::string> bc{"b", "c"};
  EXPECT_EQ(Event::from_labels(s, bc), Event::of(3, {1, 2}));
  EXPECT_EQ(Event::of(3, {1, 2}).labels(s), bc);
  const std::vector<std::string> bad{"z"};
  EXPECT_THROW((void)Event::from_labels(s, bad), InputError);
}

TEST(MeetJoin, TrioGambles) {
  EXPECT_EQ(meet(testkit::trio_f(), testkit::trio_one()), testkit::trio_meet());
  EXPECT_EQ(join(testkit::trio_f(), testkit::trio_one()), testkit::trio_join());
  EXPECT_EQ(meet(testkit::trio_f(), testkit::trio_f()), testkit::trio_f());
  EXPECT_THROW((void)meet(Gamble{1}, Gamble{1, 2}), InputError);
  EXPECT_THROW((void)join(Gamble{1}, Gamble{1, 2}), InputError);
}

TEST(LatticeClosure, Examples) {
  const std::vector<Gamble> gens{testkit::trio_f(), testkit::trio_one()};
  const GambleLattice l = lattice_closure(gens);
  EXPECT_EQ(l.elements(), (std::vector<Gamble>{testkit::trio_f(), testkit::trio_one(),
                                               testkit::trio_meet(), testkit::trio_join()}));
  const std::vector<Gamble> single{Gamble{3, 1}};
  EXPECT_EQ(lattice_closure(single).size(), 1u);
  const std::vector<Gamble> cross{Gamble{1, 0}, Gamble{0, 1}};
  const auto c = lattice_closure(cross).elements();
  const std::set<Gamble> got(c.begin(), c.end());
  EXPECT_EQ(got, (std::set<Gamble>{Gamble{1, 0}, Gamble{0, 1}, Gamble{0, 0}, Gamble{1, 1}}));
}

TEST(LatticeClosure, BudgetOverflow) {
  Rng rng(3);
  std::vector<Gamble> gens;
  for (int i = 0; i < 12; ++i) gens.push_back(rng.grid_gamble(5, 8));
  EXPECT_THROW((void)lattice_closure(gens, 10), ClosureOverflow);
}

TEST(LatticeClosure, OutputIsClosedAndMinimal) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + rng.index(3);
    std::vector<Gamble> gens;
    for (std::size_t i = 0; i < 1 + rng.index(4); ++i) gens.push_back(rng.grid_gamble(m, 3));
    const GambleLattice l = lattice_closure(gens);
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) {
        EXPECT_EQ(l[l.meet_index(i, j)], meet(l[i], l[j]));
        EXPECT_EQ(l[l.join_index(i, j)], join(l[i], l[j]));
      }
    }
    // Every element is a join of meets of generators (minimality).
    for (const auto& g : l.elements()) {
      std::optional<Gamble> acc;
      for (std::size_t s = 1; s < (std::size_t{1} << gens.size()); ++s) {
        std::optional<Gamble> mt;
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if ((s >> k) & 1U) mt = mt ? meet(*mt, gens[k]) : gens[k];
        }
        if (!mt->dominated_by(g)) continue;
        acc = acc ? join(*acc, *mt) : *mt;
      }
      ASSERT_TRUE(acc.has_value());
      EXPECT_EQ(*acc, g);
    }
    EXPECT_NO_THROW(GambleLattice(l.elements()));
  }
}

TEST(GambleLattice, RejectsNonLattice) {
  EXPECT_THROW(GambleLattice({Gamble{1, 0}, Gamble{0, 1}}), InputError);
  EXPECT_THROW(GambleLattice({Gamble{1, 0}, Gamble{1, 0}}), InputError);
}

TEST(LatticeLaws, RandomGambles) {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const Gamble f = rng.gamble(4), g = rng.gamble(4), h = rng.gamble(4);
    EXPECT_EQ(meet(f, g), meet(g, f));
    EXPECT_EQ(join(f, g), join(g, f));
    EXPECT_EQ(meet(meet(f, g), h), meet(f, meet(g, h)));
    EXPECT_EQ(join(join(f, g), h), join(f, join(g, h)));
    EXPECT_EQ(meet(f, f), f);
    EXPECT_EQ(join(f, f), f);
    EXPECT_EQ(meet(f, join(f, g)), f);
    EXPECT_EQ(join(f, meet(f, g)), f);
  }
}

TEST(Indicator, LatticeHomomorphism) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Event a = rng.event(5), b = rng.event(5);
    EXPECT_EQ(indicator(a & b), meet(indicator(a), indicator(b)));
    EXPECT_EQ(indicator(a | b), join(indicator(a), indicator(b)));
  }
}

TEST(Comonotone, Examples) {
  EXPECT_TRUE(is_comonotone(testkit::trio_f(), Gamble{5, 5, 5}));
  EXPECT_FALSE(is_comonotone(Gamble{0, 1}, Gamble{1, 0}));
  EXPECT_TRUE(is_comonotone(testkit::trio_join(), testkit::trio_meet()));
  EXPECT_THROW((void)is_comonotone(Gamble{0}, Gamble{0, 1}), InputError);
}

namespace {

bool comonotone_by_products(const Gamble& f, const Gamble& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if ((f[i] - f[j]) * (g[i] - g[j]) < Rational(0)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Comonotone, Properties) {
  Rng rng(10);
  int comonotone_pairs = 0;
  for (int i = 0; i < 800; ++i) {
    const Gamble f = rng.grid_gamble(4, 3), g = rng.grid_gamble(4, 3);
    const bool c = is_comonotone(f, g);
    EXPECT_EQ(c, comonotone_by_products(f, g));
    EXPECT_EQ(c, is_comonotone(g, f));
    EXPECT_TRUE(is_comonotone(f, f));
    EXPECT_TRUE(is_comonotone(f, Gamble::constant(4, rng.rational(-2, 2))));
    if (c) {
      ++comonotone_pairs;
      EXPECT_TRUE(is_comonotone(meet(f, g), join(f, g)));
      EXPECT_TRUE(is_comonotone(f, meet(f, g)));
      EXPECT_TRUE(is_comonotone(f, join(f, g)));
    }
  }
  EXPECT_GT(comonotone_pairs, 20);
}

TEST(Field, Examples) {
  const std::vector<Event> trivial{Event::empty(3), Event::full(3)};
  EXPECT_TRUE(is_field(trivial));
  EXPECT_TRUE(is_field(power_set(3)));
  const std::vector<Event> missing{Event::empty(2), Event::of(2, {0}), Event::full(2)};
  EXPECT_FALSE(is_field(missing));
  EXPECT_FALSE(is_field(std::vector<Event>{}));
}

TEST(Homomorphism, VacuousMinimumIsPreserved) {
  Rng rng(12);
  const Event a = Event::of(3, {1, 2});
  for (int i = 0; i < 20; ++i) {
    const GambleLattice l = testkit::random_gamble_lattice(rng, 3, 3, 30);
    const auto r = HomomorphismTable::tabulate(l, [&](const Gamble& g) {
      return Gamble::constant(3, testkit::min_over(a, g));
    });
    EXPECT_TRUE(check_wedge_homomorphism(r).holds);
    const auto id = HomomorphismTable::tabulate(l, [](const Gamble& g) { return g; });
    EXPECT_TRUE(check_wedge_homomorphism(id).holds);
  }
}

TEST(Homomorphism, ViolatingPair) {
  const HomomorphismTable r({{Gamble{0, 1}, Gamble{0, 0}},
                             {Gamble{1, 0}, Gamble{0, 0}},
                             {Gamble{0, 0}, Gamble{1, 1}}});
  const Verdict v = check_wedge_homomorphism(r);
  ASSERT_FALSE(v.holds);
  const auto& w = std::get<HomomorphismWitness>(v.witness);
  EXPECT_EQ(w.first, (Gamble{0, 1}));
  EXPECT_EQ(w.second, (Gamble{1, 0}));
  EXPECT_EQ(w.image_of_meet, (Gamble{1, 1}));
  EXPECT_EQ(w.meet_of_images, (Gamble{0, 0}));
}

TEST(Homomorphism, SourcesMustBeMeetClosed) {
  const HomomorphismTable r({{Gamble{0, 1}, Gamble{0, 0}}, {Gamble{1, 0}, Gamble{0, 0}}});
  EXPECT_THROW((void)check_wedge_homomorphism(r), InputError);
}

TEST(EventLattice, ClosureIsClosed) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto events = testkit::random_event_lattice(rng, 4, 3);
    const std::set<Event> s(events.begin(), events.end());
    EXPECT_EQ(s.size(), events.size());
    for (const auto& a : events) {
      for (const auto& b : events) {
        EXPECT_TRUE(s.count(a & b));
        EXPECT_TRUE(s.count(a | b));
      }
    }
  }
}
