#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sct::arrow {

using AltIndex = std::size_t;

/// Pairwise stance on an ordered pair (a, b): a strictly better, indifferent,
/// or b strictly better.
enum class Stance : std::uint8_t { first = 0, tie = 1, second = 2 };

class WeakOrder;

/// Binary relation on up to 5 alternatives; (a, b) in R reads "a is at least
/// as good as b".
class Relation {
 public:
  static constexpr std::size_t kMaxAlternatives = 5;

  explicit Relation(std::size_t alternatives);

  std::size_t alternatives() const { return m_; }
  bool contains(AltIndex a, AltIndex b) const { return (bits_ >> (a * m_ + b)) & 1U; }
  void insert(AltIndex a, AltIndex b) { bits_ |= std::uint32_t{1} << (a * m_ + b); }
  void set_stance(AltIndex a, AltIndex b, Stance s);
  /// Stance on (a, b), or nullopt when neither direction holds.
  std::optional<Stance> stance(AltIndex a, AltIndex b) const;
  /// Strict preference of a over b.
  bool strictly(AltIndex a, AltIndex b) const { return contains(a, b) && !contains(b, a); }

  bool is_reflexive() const;
  bool is_complete() const;
  bool is_transitive() const;
  bool is_total_preorder() const { return is_reflexive() && is_complete() && is_transitive(); }
  std::optional<WeakOrder> to_weak_order() const;
  std::uint32_t bits() const { return bits_; }

  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  std::size_t m_;
  std::uint32_t bits_ = 0;
};

/// Total preorder stored as an ordered partition: rank 0 is the best block.
class WeakOrder {
 public:
  /// ranks[a] is the block of alternative a; the used ranks must be
  /// exactly 0..k-1.
  explicit WeakOrder(std::vector<std::uint8_t> ranks);
  static WeakOrder from_blocks(const std::vector<std::vector<AltIndex>>& blocks, std::size_t alternatives);
  /// Parses "a > b = c" over the given names.
  static WeakOrder parse(std::string_view text, const std::vector<std::string>& names);

  std::size_t alternatives() const { return ranks_.size(); }
  std::size_t rank(AltIndex a) const { return ranks_[a]; }
  const std::vector<std::uint8_t>& ranks() const { return ranks_; }
  bool weakly_prefers(AltIndex a, AltIndex b) const { return ranks_[a] <= ranks_[b]; }
  std::vector<std::vector<AltIndex>> blocks() const;
  Relation relation() const;
  WeakOrder reversed() const;
  std::string to_string(const std::vector<std::string>& names) const;

  friend auto operator<=>(const WeakOrder&, const WeakOrder&) = default;

 private:
  std::vector<std::uint8_t> ranks_;
};

/// All total preorders on `alternatives` elements, ordered by number of
/// blocks and then lexicographically by rank vector.
std::vector<WeakOrder> enumerate_weak_orders(std::size_t alternatives);

/// Stance of `w` on the pair (a, b), a != b.
Stance restrict(const WeakOrder& w, AltIndex a, AltIndex b);

std::vector<std::string> default_names(std::size_t alternatives);

using ArrowProfile = std::vector<WeakOrder>;

/// The full profile space for a fixed electorate and alternative set.
/// Profile index = order indices read as base-W digits, voter 0 most
/// significant, with W the number of weak orders.
class ArrowDomain {
 public:
  ArrowDomain(std::size_t voters, std::size_t alternatives);

  std::size_t voters() const { return voters_; }
  std::size_t alternatives() const { return alternatives_; }
  const std::vector<WeakOrder>& orders() const { return orders_; }
  std::size_t profile_count() const { return profile_count_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Order index held by `voter` in profile `p`.
  std::size_t order_of(std::size_t p, std::size_t voter) const;
  /// Profile `p` with `voter` switched to order `o`.
  std::size_t with_order(std::size_t p, std::size_t voter, std::size_t o) const;
  ArrowProfile profile(std::size_t p) const;
  std::size_t index_of(const ArrowProfile& x) const;
  std::size_t order_index(const WeakOrder& w) const;

 private:
  std::size_t voters_;
  std::size_t alternatives_;
  std::vector<WeakOrder> orders_;
  std::vector<std::string> names_;
  std::size_t profile_count_;
  std::vector<std::size_t> place_;  // W^(voters-1-v)
};

/// Tabulated aggregator: one relation per profile. An SWF proper when every
/// outcome is a total preorder (check_a1).
class SwfTable {
 public:
  SwfTable(std::shared_ptr<const ArrowDomain> domain, std::vector<Relation> outcomes, std::string name);
  static SwfTable tabulate(std::shared_ptr<const ArrowDomain> domain,
                           const std::function<Relation(const ArrowProfile&)>& f, std::string name);

  const ArrowDomain& domain() const { return *domain_; }
  const std::shared_ptr<const ArrowDomain>& domain_ptr() const { return domain_; }
  const Relation& operator()(std::size_t p) const { return outcomes_[p]; }
  const std::vector<Relation>& outcomes() const { return outcomes_; }
  const std::string& name() const { return name_; }

  friend bool operator==(const SwfTable& x, const SwfTable& y) { return x.outcomes_ == y.outcomes_; }
  friend bool operator<(const SwfTable& x, const SwfTable& y) { return x.outcomes_ < y.outcomes_; }

 private:
  std::shared_ptr<const ArrowDomain> domain_;
  std::vector<Relation> outcomes_;
  std::string name_;
};

/// How "a over b in a ballot" is read for dictatorship and non-imposition.
enum class PreferenceReading { strict, weak };
std::string to_string(PreferenceReading r);

struct ArrowWitness {
  std::string condition;
  std::vector<std::size_t> profiles;  // profile indices, in the order used
  std::optional<std::size_t> voter;
  std::optional<std::pair<AltIndex, AltIndex>> pair;
};

struct ArrowVerdict {
  bool pass = true;
  std::optional<ArrowWitness> witness;
};

/// Every outcome is a total preorder.
ArrowVerdict check_a1(const SwfTable& f);
/// Non-negative responsiveness: one voter moving from a'-over-a to
/// a-over-a' (weakly), unchanged on pairs avoiding {a, a'}, never turns
/// (a, a') in f(x) into (a, a') not in f(y).
ArrowVerdict check_a2(const SwfTable& f);
/// Independence of irrelevant alternatives.
ArrowVerdict check_a3(const SwfTable& f);
/// Non-imposition. Strict: for each ordered pair some profile yields a
/// strictly over a'. Weak: (a, a') in f(x) and (a', a) in f(y) for some x, y.
ArrowVerdict check_a4(const SwfTable& f, PreferenceReading reading = PreferenceReading::strict);
/// Least voter whose preferences f always reproduces, if any.
std::optional<std::size_t> find_dictator(const SwfTable& f, PreferenceReading reading = PreferenceReading::strict);
/// Passes iff there is no dictator.
ArrowVerdict check_a5(const SwfTable& f, PreferenceReading reading = PreferenceReading::strict);

/// Social stance on one pair as a function of the voters' stances on it.
struct PairFunction {
  AltIndex a;
  AltIndex b;
  std::size_t voters;
  std::vector<Stance> outcome;  // indexed by stance vector, voter 0 most significant

  friend auto operator<=>(const PairFunction&, const PairFunction&) = default;
};

std::size_t stance_vector_index(const ArrowDomain& domain, std::size_t p, AltIndex a, AltIndex b);

/// Pair functions read off the table when the table is consistent with
/// IIA on every pair; nullopt otherwise.
std::optional<std::vector<PairFunction>> pair_functions(const SwfTable& f);
/// True iff rebuilding every outcome from pair_functions() reproduces the
/// table exactly.
bool factors_through_pairs(const SwfTable& f);

struct MajorityResult {
  Relation relation;
  bool transitive;
};

/// Pairwise majority of strict stances; a pair is tied when neither side
/// has more strict supporters. Intransitivity is reported, not thrown.
MajorityResult pairwise_majority_swf(const ArrowProfile& x);

SwfTable projection_swf(std::shared_ptr<const ArrowDomain> domain, std::size_t voter);
SwfTable anti_dictator_swf(std::shared_ptr<const ArrowDomain> domain, std::size_t voter);
SwfTable constant_swf(std::shared_ptr<const ArrowDomain> domain, const WeakOrder& w);
/// Rank by total Borda score (alternatives beaten minus alternatives beating).
SwfTable borda_swf(std::shared_ptr<const ArrowDomain> domain);
SwfTable pairwise_majority_table(std::shared_ptr<const ArrowDomain> domain);

struct ArrowSearchResult {
  std::shared_ptr<const ArrowDomain> domain;
  std::vector<std::size_t> pair_candidates;  // surviving pair functions per pair
  std::uint64_t combinations = 0;            // joined combinations examined
  std::vector<SwfTable> survivors;           // canonically sorted
};

/// All SWFs satisfying A1-A4 (strict non-imposition) for the given size.
/// Only 1 <= voters <= 2 and 2 <= alternatives <= 3 are accepted;
/// BoundError otherwise. The result does not depend on `threads`.
ArrowSearchResult arrow_search(std::size_t voters = 2, std::size_t alternatives = 3, unsigned threads = 1);

}  // namespace sct::arrow
