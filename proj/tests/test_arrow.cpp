#include <gtest/gtest.h>

#include <set>

#include "sct/arrow.hpp"
#include "sct/errors.hpp"

using namespace sct;
using namespace sct::arrow;

namespace {

// Total preorders found by filtering every relation on m elements.
std::set<std::uint32_t> brute_force_weak_orders(std::size_t m) {
  std::set<std::uint32_t> out;
  const std::uint32_t cells = static_cast<std::uint32_t>(m * m);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cells); ++bits) {
    auto in = [&](std::size_t a, std::size_t b) { return (bits >> (a * m + b)) & 1U; };
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) {
        if (!in(a, b) && !in(b, a)) ok = false;
        for (std::size_t c = 0; c < m && ok; ++c) {
          if (in(a, b) && in(b, c) && !in(a, c)) ok = false;
        }
      }
    }
    if (ok) out.insert(bits);
  }
  return out;
}

std::shared_ptr<const ArrowDomain> domain(std::size_t n = 2, std::size_t m = 3) {
  return std::make_shared<const ArrowDomain>(n, m);
}

// IIA checked directly from the definition over all profile pairs.
bool naive_iia(const SwfTable& f) {
  const auto& d = f.domain();
  const std::size_t m = d.alternatives();
  for (std::size_t x = 0; x < d.profile_count(); ++x) {
    for (std::size_t y = 0; y < d.profile_count(); ++y) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          bool same = true;
          for (std::size_t v = 0; v < d.voters() && same; ++v) {
            same = restrict(d.orders()[d.order_of(x, v)], a, b) == restrict(d.orders()[d.order_of(y, v)], a, b);
          }
          if (same && (f(x).contains(a, b) != f(y).contains(a, b) || f(x).contains(b, a) != f(y).contains(b, a))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST(WeakOrders, CountsMatchRelationFilter) {
  const std::vector<std::size_t> ordered_bell{1, 1, 3, 13, 75};
  for (std::size_t m = 1; m <= 4; ++m) {
    auto orders = enumerate_weak_orders(m);
    EXPECT_EQ(orders.size(), ordered_bell[m]);
    std::set<std::uint32_t> ours;
    for (const auto& w : orders) {
      EXPECT_TRUE(w.relation().is_total_preorder());
      ours.insert(w.relation().bits());
    }
    EXPECT_EQ(ours, brute_force_weak_orders(m));
  }
  EXPECT_EQ(enumerate_weak_orders(5).size(), 541U);
}

TEST(WeakOrders, ParsePrintAndRelationRoundTrip) {
  auto names = default_names(3);
  auto w = WeakOrder::parse("a > b = c", names);
  EXPECT_EQ(w.to_string(names), "a > b = c");
  EXPECT_EQ(w.rank(0), 0U);
  EXPECT_EQ(w.rank(1), 1U);
  EXPECT_TRUE(w.weakly_prefers(1, 2) && w.weakly_prefers(2, 1));
  EXPECT_EQ(restrict(w, 0, 1), Stance::first);
  EXPECT_EQ(restrict(w, 1, 2), Stance::tie);
  EXPECT_EQ(restrict(w, 2, 0), Stance::second);
  EXPECT_EQ(w.relation().to_weak_order(), w);
  EXPECT_EQ(w.reversed().to_string(names), "b = c > a");
  for (const auto& v : enumerate_weak_orders(4)) EXPECT_EQ(v.relation().to_weak_order(), v);
  EXPECT_THROW(WeakOrder::parse("a > b", names), InputError);
  EXPECT_THROW(WeakOrder::parse("a > b > a", names), InputError);
  EXPECT_THROW(WeakOrder::parse("a > b > d", names), InputError);
  EXPECT_THROW(WeakOrder({0, 2, 2}), InputError);
}

TEST(Relations, Properties) {
  Relation r(3);
  EXPECT_FALSE(r.is_reflexive());
  for (std::size_t a = 0; a < 3; ++a) r.insert(a, a);
  r.set_stance(0, 1, Stance::first);
  r.set_stance(1, 2, Stance::first);
  r.set_stance(2, 0, Stance::first);
  EXPECT_TRUE(r.is_complete());
  EXPECT_FALSE(r.is_transitive());
  EXPECT_FALSE(r.to_weak_order());
  EXPECT_TRUE(r.strictly(0, 1));
  EXPECT_EQ(r.stance(1, 0), Stance::second);
  EXPECT_THROW(Relation(6), InputError);
}

TEST(Domain, IndexingRoundTrips) {
  auto d = domain();
  EXPECT_EQ(d->orders().size(), 13U);
  EXPECT_EQ(d->profile_count(), 169U);
  for (std::size_t p = 0; p < d->profile_count(); ++p) {
    EXPECT_EQ(d->index_of(d->profile(p)), p);
    for (std::size_t v = 0; v < 2; ++v) {
      for (std::size_t o = 0; o < 13; ++o) EXPECT_EQ(d->order_of(d->with_order(p, v, o), v), o);
    }
  }
  EXPECT_EQ(d->order_of(13, 0), 1U);
  EXPECT_EQ(d->order_of(13, 1), 0U);
}

TEST(ArrowCheckers, ProjectionsAreDictatorships) {
  auto d = domain();
  for (std::size_t v = 0; v < 2; ++v) {
    auto f = projection_swf(d, v);
    EXPECT_TRUE(check_a1(f).pass);
    EXPECT_TRUE(check_a2(f).pass);
    EXPECT_TRUE(check_a3(f).pass);
    EXPECT_TRUE(naive_iia(f));
    EXPECT_TRUE(check_a4(f).pass);
    EXPECT_EQ(find_dictator(f), v);
    EXPECT_FALSE(check_a5(f).pass);
  }
}

TEST(ArrowCheckers, FoilsFailWhereExpected) {
  auto d = domain();
  auto anti = anti_dictator_swf(d, 0);
  EXPECT_TRUE(check_a1(anti).pass);
  EXPECT_TRUE(check_a3(anti).pass);
  EXPECT_FALSE(check_a2(anti).pass);

  auto names = d->names();
  auto flat = constant_swf(d, WeakOrder::parse("a = b = c", names));
  EXPECT_FALSE(check_a4(flat, PreferenceReading::strict).pass);
  EXPECT_TRUE(check_a4(flat, PreferenceReading::weak).pass);
  EXPECT_TRUE(check_a5(flat).pass);
  auto fixed = constant_swf(d, WeakOrder::parse("a > b > c", names));
  EXPECT_FALSE(check_a4(fixed, PreferenceReading::strict).pass);
  EXPECT_FALSE(check_a4(fixed, PreferenceReading::weak).pass);

  auto borda = borda_swf(d);
  EXPECT_TRUE(check_a1(borda).pass);
  EXPECT_FALSE(check_a3(borda).pass);
  EXPECT_FALSE(naive_iia(borda));
  EXPECT_TRUE(check_a5(borda).pass);

  auto majority = pairwise_majority_table(d);
  EXPECT_FALSE(check_a1(majority).pass);
  EXPECT_TRUE(check_a3(majority).pass);
  EXPECT_TRUE(naive_iia(majority));
}

TEST(ArrowCheckers, PairFunctionsFactorIiaTables) {
  auto d = domain();
  auto proj = projection_swf(d, 1);
  auto pfs = pair_functions(proj);
  ASSERT_TRUE(pfs);
  EXPECT_EQ(pfs->size(), 3U);
  EXPECT_TRUE(factors_through_pairs(proj));
  EXPECT_FALSE(pair_functions(borda_swf(d)));
}

TEST(PairwiseMajority, CondorcetCycleIsIntransitive) {
  auto names = default_names(3);
  ArrowProfile cycle{WeakOrder::parse("a > b > c", names), WeakOrder::parse("b > c > a", names),
                     WeakOrder::parse("c > a > b", names)};
  auto r = pairwise_majority_swf(cycle);
  EXPECT_FALSE(r.transitive);
  EXPECT_TRUE(r.relation.strictly(0, 1));
  EXPECT_TRUE(r.relation.strictly(1, 2));
  EXPECT_TRUE(r.relation.strictly(2, 0));

  ArrowProfile agree{WeakOrder::parse("a > b = c", names), WeakOrder::parse("a > c > b", names)};
  auto s = pairwise_majority_swf(agree);
  EXPECT_TRUE(s.transitive);
  EXPECT_EQ(s.relation.to_weak_order()->to_string(names), "a > c > b");
}

TEST(ArrowSearch, SurvivorsAreDictatorialArrowAggregators) {
  auto result = arrow_search(2, 3, 1);
  ASSERT_FALSE(result.survivors.empty());
  const auto& d = result.domain;
  bool has_p0 = false, has_p1 = false;
  for (const auto& f : result.survivors) {
    EXPECT_TRUE(check_a1(f).pass);
    EXPECT_TRUE(check_a2(f).pass);
    EXPECT_TRUE(check_a3(f).pass);
    EXPECT_TRUE(check_a4(f).pass);
    EXPECT_TRUE(find_dictator(f).has_value());
    EXPECT_FALSE(check_a5(f).pass);
    has_p0 = has_p0 || f == projection_swf(d, 0);
    has_p1 = has_p1 || f == projection_swf(d, 1);
  }
  EXPECT_TRUE(has_p0);
  EXPECT_TRUE(has_p1);
  EXPECT_TRUE(std::is_sorted(result.survivors.begin(), result.survivors.end()));
  EXPECT_TRUE(naive_iia(result.survivors.front()));
  EXPECT_TRUE(naive_iia(result.survivors.back()));
}

TEST(ArrowSearch, ThreadCountDoesNotChangeTheResult) {
  auto one = arrow_search(2, 3, 1);
  auto many = arrow_search(2, 3, 5);
  EXPECT_EQ(one.survivors, many.survivors);
  EXPECT_EQ(one.combinations, many.combinations);
  EXPECT_EQ(one.pair_candidates, many.pair_candidates);
}

TEST(ArrowSearch, TwoAlternativesAdmitNonDictatorialRules) {
  auto result = arrow_search(2, 2, 1);
  bool free = false;
  for (const auto& f : result.survivors) free = free || !find_dictator(f);
  EXPECT_TRUE(free);
  for (const auto& f : arrow_search(1, 3, 1).survivors) EXPECT_EQ(find_dictator(f), 0U);
}

TEST(ArrowSearch, BoundsAreEnforced) {
  EXPECT_THROW(arrow_search(3, 3), BoundError);
  EXPECT_THROW(arrow_search(2, 4), BoundError);
  EXPECT_THROW(arrow_search(0, 3), BoundError);
}
