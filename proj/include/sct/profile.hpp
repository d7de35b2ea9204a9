#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sct/alphabet.hpp"

namespace sct {

/// One ballot per anonymous voter; index = voter id. May be empty.
class Profile {
 public:
  explicit Profile(Alphabet alphabet, std::vector<Alt> ballots = {});
  /// Builds from symbol names, e.g. Profile::of(abc, {"a", "a", "_"}).
  static Profile of(const Alphabet& alphabet, std::initializer_list<std::string_view> symbols);
  static Profile of(const Alphabet& alphabet, const std::vector<std::string>& symbols);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Alt>& ballots() const { return ballots_; }
  std::vector<Alt>& mutable_ballots() { return ballots_; }
  std::size_t size() const { return ballots_.size(); }
  bool empty() const { return ballots_.empty(); }
  Alt operator[](std::size_t voter) const { return ballots_[voter]; }

  std::vector<std::string> symbol_names() const;
  /// Space-separated symbols, "[]"-style formatting is left to callers.
  std::string to_string() const;

  friend bool operator==(const Profile& x, const Profile& y) {
    return x.ballots_ == y.ballots_ && x.alphabet_ == y.alphabet_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Alt> ballots_;
};

/// Ballot counts for every alternative, tie symbol included.
struct Tally {
  std::vector<std::size_t> counts;

  std::size_t operator[](Alt a) const { return counts[index(a)]; }
  std::size_t total() const;
  friend bool operator==(const Tally&, const Tally&) = default;
};

/// Counts over the non-bot alternatives only, in canonical order. Profiles
/// that differ by voter order or by abstaining ballots share a signature.
struct CountSignature {
  std::vector<std::uint32_t> counts;

  std::size_t total() const;
  friend auto operator<=>(const CountSignature&, const CountSignature&) = default;
};

/// Bijection on alternatives that fixes the tie symbol.
class AltPermutation {
 public:
  /// image[i] is the image of alternative i. Throws InputError unless
  /// `image` is a bijection on the alphabet fixing bot.
  AltPermutation(const Alphabet& alphabet, std::vector<Alt> image);
  static AltPermutation identity(const Alphabet& alphabet);
  static AltPermutation swap(const Alphabet& alphabet, Alt x, Alt y);
  /// All permutations fixing bot, in lexicographic order of their images.
  static std::vector<AltPermutation> all(const Alphabet& alphabet);

  Alt operator()(Alt a) const { return image_[index(a)]; }
  const std::vector<Alt>& image() const { return image_; }
  bool is_identity() const;
  friend bool operator==(const AltPermutation&, const AltPermutation&) = default;

 private:
  std::vector<Alt> image_;
};

/// Bijection on voter indices {0, ..., n-1}.
class VoterPermutation {
 public:
  explicit VoterPermutation(std::vector<std::size_t> image);
  static VoterPermutation identity(std::size_t n);
  static VoterPermutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t operator()(std::size_t v) const { return image_[v]; }
  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }
  friend bool operator==(const VoterPermutation&, const VoterPermutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

Tally tally(const Profile& p);

/// Ballot i of the result is pi(ballot i).
Profile apply_alt_permutation(const Profile& p, const AltPermutation& pi);

/// Ballot i of the result is ballot pi(i) of `p`.
Profile apply_voter_permutation(const Profile& p, const VoterPermutation& pi);

/// `p` with one more voter casting `a`.
Profile extend(const Profile& p, Alt a);

CountSignature signature(const Profile& p);
CountSignature signature(const Alphabet& alphabet, const Tally& t);

/// The unique non-bot alternative whose count beats every other non-bot
/// count; nullopt on a tie at the top or when no non-bot ballot was cast.
std::optional<Alt> strict_plurality(const Alphabet& alphabet, const Tally& t);

/// Calls `visit(profile)` for every profile of exactly `size` ballots, in
/// lexicographic order of the canonical symbol order (last voter fastest).
/// Stops early when `visit` returns false; returns false in that case.
template <typename Visit>
bool for_each_profile(const Alphabet& alphabet, std::size_t size, Visit&& visit) {
  Profile p(alphabet, std::vector<Alt>(size, alt_at(0)));
  auto& ballots = p.mutable_ballots();
  const std::size_t k = alphabet.size();
  while (true) {
    if (!visit(static_cast<const Profile&>(p))) return false;
    std::size_t pos = size;
    while (pos > 0) {
      --pos;
      std::size_t next = index(ballots[pos]) + 1;
      if (next < k) {
        ballots[pos] = alt_at(next);
        break;
      }
      ballots[pos] = alt_at(0);
      if (pos == 0) return true;
    }
    if (size == 0) return true;
  }
}

/// Same as for_each_profile over sizes 0..max_size in increasing order.
template <typename Visit>
bool for_each_profile_up_to(const Alphabet& alphabet, std::size_t max_size, Visit&& visit) {
  for (std::size_t s = 0; s <= max_size; ++s) {
    if (!for_each_profile(alphabet, s, visit)) return false;
  }
  return true;
}

}  // namespace sct
