#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sct/errors.hpp"
#include "sct/profile.hpp"
#include "sct/rational.hpp"

using namespace sct;

TEST(Alphabet, LettersPutTheTieLast) {
  auto a = Alphabet::letters(3);
  EXPECT_EQ(a.symbols(), (std::vector<std::string>{"a", "b", "c", "_"}));
  EXPECT_EQ(a.name(a.bot()), "_");
  EXPECT_EQ(a.non_bot_count(), 3U);
  EXPECT_EQ(a.non_bot_position(a.at("c")), 2U);
  EXPECT_FALSE(a.is_may());
}

TEST(Alphabet, MayAlphabet) {
  auto m = Alphabet::may();
  EXPECT_TRUE(m.is_may());
  EXPECT_EQ(m.name(m.bot()), "0");
  EXPECT_EQ(m.symbols(), (std::vector<std::string>{"-1", "0", "1"}));
}

TEST(Alphabet, RejectsMalformedDeclarations) {
  EXPECT_THROW(Alphabet({"a", "a", "_"}, "_"), InputError);
  EXPECT_THROW(Alphabet({"a", "b"}, "_"), InputError);
  EXPECT_THROW(Alphabet({"_"}, "_"), InputError);
  EXPECT_THROW(Alphabet::letters(0), InputError);
  EXPECT_THROW(Alphabet::letters(3).at("z"), InputError);
  EXPECT_FALSE(Alphabet::letters(2).find("c"));
}

TEST(Alphabet, EqualityIsStructural) {
  EXPECT_TRUE(Alphabet::letters(2) == Alphabet({"a", "b", "_"}, "_"));
  EXPECT_FALSE(Alphabet::letters(2) == Alphabet({"b", "a", "_"}, "_"));
  EXPECT_FALSE(Alphabet::letters(2) == Alphabet({"a", "b", "_"}, "a"));
}

TEST(Profile, ToStringAndOf) {
  auto a = Alphabet::letters(2);
  auto p = Profile::of(a, {"a", "b", "_"});
  EXPECT_EQ(p.to_string(), "[a,b,_]");
  EXPECT_EQ(p.size(), 3U);
  EXPECT_EQ(Profile(a).to_string(), "[]");
  EXPECT_THROW(Profile::of(a, {"q"}), InputError);
}

TEST(Profile, EnumerationMatchesRecursiveOracle) {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto a = Alphabet::letters(k);
    for (int n = 0; n <= 4; ++n) {
      std::vector<Profile> seen;
      for_each_profile(a, static_cast<std::size_t>(n), [&](const Profile& p) {
        seen.push_back(p);
        return true;
      });
      auto expected = oracle::all_profiles(a, n);
      ASSERT_EQ(seen.size(), expected.size());
      for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], expected[i]);
    }
  }
}

TEST(Profile, EnumerationStopsEarly) {
  auto a = Alphabet::letters(2);
  int visits = 0;
  EXPECT_FALSE(for_each_profile(a, 3, [&](const Profile&) { return ++visits < 5; }));
  EXPECT_EQ(visits, 5);
  std::size_t total = 0;
  for_each_profile_up_to(a, 3, [&](const Profile&) {
    ++total;
    return true;
  });
  EXPECT_EQ(total, 1U + 3 + 9 + 27);
}

TEST(Profile, TallyAndSignatureAgreeWithNaiveCounts) {
  auto a = Alphabet::letters(3);
  for (const auto& p : oracle::profiles_up_to(a, 4)) {
    auto t = tally(p);
    auto naive = oracle::count_names(p);
    for (Alt x : a.all()) EXPECT_EQ(static_cast<int>(t[x]), naive[a.name(x)]);
    EXPECT_EQ(t.total(), p.size());
    auto s = signature(p);
    ASSERT_EQ(s.counts.size(), 3U);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(static_cast<int>(s.counts[i]), naive[a.name(a.non_bot()[i])]);
    EXPECT_EQ(s.total(), p.size() - static_cast<std::size_t>(naive["_"]));
  }
}

TEST(Profile, StrictPluralityAgreesWithOracle) {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto a = Alphabet::letters(k);
    for (const auto& p : oracle::profiles_up_to(a, 5 - static_cast<int>(k) + 1)) {
      auto w = strict_plurality(a, tally(p));
      auto expected = oracle::plurality_name(p);
      ASSERT_EQ(w.has_value(), expected.has_value()) << p.to_string();
      if (w) {
        EXPECT_EQ(a.name(*w), *expected);
      }
    }
  }
}

TEST(Permutations, AltPermutationsFixTheTieAndAreExhaustive) {
  auto a = Alphabet::letters(3);
  auto perms = AltPermutation::all(a);
  EXPECT_EQ(perms.size(), 6U);
  std::set<std::vector<Alt>> distinct;
  for (const auto& pi : perms) {
    EXPECT_EQ(pi(a.bot()), a.bot());
    distinct.insert(pi.image());
  }
  EXPECT_EQ(distinct.size(), 6U);
  EXPECT_TRUE(perms.front().is_identity());
  EXPECT_THROW(AltPermutation(a, {a.at("a"), a.at("a"), a.at("c"), a.bot()}), InputError);
  EXPECT_THROW(AltPermutation(a, {a.bot(), a.at("b"), a.at("c"), a.at("a")}), InputError);
}

TEST(Permutations, RelabellingPreservesTallyUpToPermutation) {
  auto a = Alphabet::letters(3);
  for (const auto& pi : AltPermutation::all(a)) {
    for (const auto& p : oracle::profiles_up_to(a, 3)) {
      auto q = apply_alt_permutation(p, pi);
      auto tp = tally(p);
      auto tq = tally(q);
      for (Alt x : a.all()) EXPECT_EQ(tp[x], tq[pi(x)]);
    }
  }
}

TEST(Permutations, VoterPermutationsPreserveTally) {
  auto a = Alphabet::letters(2);
  auto p = Profile::of(a, {"a", "b", "_", "a"});
  std::vector<std::size_t> img{0, 1, 2, 3};
  do {
    VoterPermutation pi(img);
    auto q = apply_voter_permutation(p, pi);
    EXPECT_EQ(tally(q), tally(p));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(q[i], p[img[i]]);
  } while (std::next_permutation(img.begin(), img.end()));
  EXPECT_THROW(VoterPermutation({0, 0}), InputError);
  EXPECT_THROW(apply_voter_permutation(p, VoterPermutation::identity(3)), InputError);
}

TEST(Profile, ExtendAppendsOneBallot) {
  auto a = Alphabet::letters(2);
  auto p = extend(Profile::of(a, {"a"}), a.bot());
  EXPECT_EQ(p.to_string(), "[a,_]");
  EXPECT_EQ(signature(p), signature(Profile::of(a, {"a"})));
}

TEST(Rational, ParsesAndNormalizes) {
  auto q = Rational::parse("2/4");
  EXPECT_EQ(q.num(), 1);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(q.to_string(), "1/2");
  EXPECT_TRUE(Rational(1, 2) < Rational(2, 3));
  EXPECT_TRUE(q.times_is_below(4, 3));
  EXPECT_FALSE(q.times_is_below(4, 2));
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("x/2"), InputError);
  EXPECT_THROW(Rational::parse("3"), InputError);
}
