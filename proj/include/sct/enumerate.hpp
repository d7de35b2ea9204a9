#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sct/axioms.hpp"
#include "sct/profile.hpp"
#include "sct/rules.hpp"
#include "sct/tabulated.hpp"

namespace sct {

/// Ballot counts for -1, 0 and 1.
struct MayTriple {
  std::uint32_t minus;
  std::uint32_t zero;
  std::uint32_t plus;
  friend auto operator<=>(const MayTriple&, const MayTriple&) = default;
};

/// An anonymous choice function for exactly n voters over {-1, 0, 1},
/// stored per count triple.
class MayFunctionTable {
 public:
  /// All C(n+2, 2) triples summing to n, lexicographic on (minus, zero, plus).
  static std::vector<MayTriple> triples(std::size_t voters);

  MayFunctionTable(std::size_t voters, std::vector<int> outcomes);

  std::size_t voters() const { return voters_; }
  const std::vector<MayTriple>& domain() const { return domain_; }
  const std::vector<int>& outcomes() const { return outcomes_; }
  int value(const MayTriple& t) const;
  /// Throws InputError unless the profile has exactly voters() ballots over
  /// the May alphabet.
  int evaluate(const Profile& p) const;
  RulePtr as_rule() const;

  friend bool operator==(const MayFunctionTable& x, const MayFunctionTable& y) {
    return x.voters_ == y.voters_ && x.outcomes_ == y.outcomes_;
  }
  friend bool operator<(const MayFunctionTable& x, const MayFunctionTable& y) { return x.outcomes_ < y.outcomes_; }

 private:
  std::size_t voters_;
  std::vector<MayTriple> domain_;
  std::vector<int> outcomes_;
};

MayFunctionTable may_sign_table(std::size_t voters);

/// Every table satisfying Ma3 and Ma4 (Ma2 holds by the count domain).
/// Neutrality fixes the self-negating triples to 0 and pairs the rest;
/// the remaining values are found by backtracking with Ma4 pruning.
/// Throws BoundError outside 1 <= voters <= max_voters.
std::vector<MayFunctionTable> enumerate_may_functions(std::size_t voters, Ma4Semantics semantics,
                                                      std::size_t max_voters = 4);

struct FamilySet {
  Alphabet alphabet;
  std::size_t horizon;
  bool with_c6;
  std::vector<TabulatedFamily> families;  // canonically sorted, pairwise distinct
};

struct CFamilyOptions {
  bool with_c6 = false;
  std::size_t max_horizon = 8;
  std::size_t max_families = 2'000'000;
  unsigned threads = 1;
};

/// All signature tables up to `horizon` that are neutral (constant on
/// alternative-permutation orbits up to relabelling) and closed under
/// consistency inside the horizon; with C6, every tie below the horizon also
/// has a conclusive one-ballot extension. Anonymity and abstention
/// invariance hold by the signature representation. Throws BoundError for
/// alphabets outside 2..3 non-tie alternatives, horizons above
/// max_horizon, or more than max_families results.
FamilySet enumerate_c_families(const Alphabet& alphabet, std::size_t horizon, const CFamilyOptions& options = {});

struct OrderVerdict {
  bool leq = true;
  std::optional<Profile> witness;  // minimal profile where f is conclusive and differs from g
  std::optional<Alt> f_value;
  std::optional<Alt> g_value;
};

/// f <= g iff on every profile of size <= max_voters, f is the tie or agrees
/// with g.
OrderVerdict rule_leq(const Rule& f, const Rule& g, std::size_t max_voters);

/// The same order on tables over a common signature space.
bool family_leq(const TabulatedFamily& f, const TabulatedFamily& g);

/// Indices of the families with nothing strictly above them.
std::vector<std::size_t> maximal_elements(const FamilySet& set);

/// The families at the given indices, in the given order.
FamilySet subset(const FamilySet& set, const std::vector<std::size_t>& indices);

/// Total of the first signature (canonical order) where `family` is
/// conclusive but not the strict plurality winner; nullopt if none.
std::optional<std::size_t> first_plurality_violation(const TabulatedFamily& family);

/// A consistency argument can only reach H/2 inside a horizon of H, so a
/// family deviating from plurality only above H/2 is a horizon artifact
/// rather than a counterexample.
struct HorizonSplit {
  std::vector<std::size_t> sound;      // plurality everywhere within the horizon
  std::vector<std::size_t> artifacts;  // first deviation above H/2
  std::vector<std::size_t> violations; // deviation at or below H/2
};
HorizonSplit split_horizon_artifacts(const FamilySet& set);

}  // namespace sct
