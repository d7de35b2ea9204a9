#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sct/profile.hpp"
#include "sct/rules.hpp"

namespace sct {

// Totality and determinism (C1 / Ma1) hold structurally for every Rule and
// are not checked.
enum class AxiomId {
  C2,                  // neutrality: f(pi . x) = pi(f(x)) for pi fixing the tie
  C3,                  // anonymity: f(x . pi) = f(x)
  C4,                  // an abstaining voter changes nothing
  C5,                  // consistency: a voter backing the outcome changes nothing
  C6,                  // every tie can be broken by one more voter
  MA2,                 // May's symmetry
  MA3,                 // May's neutrality: f(-x) = -f(x)
  MA4,                 // May's positive responsiveness
  PLURALITY_PROPERTY,  // conclusive outcomes are strict plurality winners
  UNAVOIDABLE_TIES,    // a shared top count forces the tie
  TIE_CLOSURE,         // f(b) = x != tie  =>  f(b + x) != tie
};

std::string to_string(AxiomId id);
/// Case-insensitive; accepts the enumerator names plus "plurality",
/// "ties" and "tie-closure".
std::optional<AxiomId> parse_axiom(std::string_view name);
/// Comma separated names and ranges ("C2-C5,TIE_CLOSURE", "Ma2-Ma4", "all").
std::vector<AxiomId> parse_axiom_list(std::string_view text);
std::vector<AxiomId> all_axioms();

enum class Ma4Semantics {
  flip,      // one voter reverses a non-zero ballot
  in_favor,  // one voter moves one or two steps in either direction
};
std::string to_string(Ma4Semantics s);

/// Counterexample evidence. `expected` is what the axiom demands, `observed`
/// is what the rule returned; see reproduces() for the per-axiom meaning.
struct Witness {
  AxiomId kind;
  Profile base_profile;
  std::optional<Profile> moved_to;
  std::optional<AltPermutation> alt_permutation;
  std::optional<VoterPermutation> voter_permutation;
  Alt expected;
  Alt observed;

  std::size_t size() const { return base_profile.size(); }
};

/// Re-evaluates `rule` on the stored profiles and confirms the witness is a
/// genuine violation with exactly the recorded values.
bool reproduces(const Rule& rule, const Witness& w);

enum class VerdictStatus { pass, fail, error };
std::string to_string(VerdictStatus s);

struct Verdict {
  AxiomId axiom;
  VerdictStatus status = VerdictStatus::pass;
  std::optional<Witness> witness;
  std::uint64_t profiles_checked = 0;
  std::string message;
  bool bound_error = false;  // raised by a BoundError (horizon or size limit)

  bool passed() const { return status == VerdictStatus::pass; }
  bool failed() const { return status == VerdictStatus::fail; }
};

// Exhaustive checkers. Each enumerates profiles by increasing size and in
// canonical lexicographic order, so the first witness found is minimal.
// The C-family checkers need at least two non-tie alternatives and throw
// InputError otherwise.
Verdict check_c2(const Rule& rule, std::size_t max_voters);
Verdict check_c3(const Rule& rule, std::size_t max_voters);
Verdict check_c4(const Rule& rule, std::size_t max_voters);
Verdict check_c5(const Rule& rule, std::size_t max_voters);
/// Probes one-voter extensions, so evaluates profiles of max_voters + 1.
Verdict check_c6(const Rule& rule, std::size_t max_voters);
Verdict check_plurality_property(const Rule& rule, std::size_t max_voters);
Verdict check_unavoidable_ties(const Rule& rule, std::size_t max_voters);
Verdict check_tie_closure(const Rule& rule, std::size_t max_voters);

// May's conditions at an exact electorate size over the alphabet {-1,0,1}.
Verdict check_ma2(const Rule& rule, std::size_t voters);
Verdict check_ma3(const Rule& rule, std::size_t voters);
Verdict check_ma4(const Rule& rule, std::size_t voters, Ma4Semantics semantics);

/// Dispatches to the checker for `id`. MA checks run every size 0..max_voters.
Verdict check(const Rule& rule, AxiomId id, std::size_t max_voters, Ma4Semantics ma4 = Ma4Semantics::in_favor);

struct AuditOptions {
  Ma4Semantics ma4 = Ma4Semantics::in_favor;
  unsigned threads = 1;
};

struct AuditReport {
  std::string rule;
  Alphabet alphabet;
  std::size_t max_voters;
  Ma4Semantics ma4;
  std::vector<Verdict> verdicts;  // in the order requested

  bool all_passed() const;
  bool any_error() const;
};

/// Runs the selected checkers. A checker that throws yields an error verdict
/// without stopping the others. The result does not depend on `threads`.
AuditReport audit(const Rule& rule, const std::vector<AxiomId>& axioms, std::size_t max_voters,
                  const AuditOptions& options = {});

/// One claim in a replay of the plurality argument: the axioms force
/// `claimed` at `profile`, and the rule actually returns `observed`.
struct ProofStep {
  std::string action;
  std::optional<AxiomId> axiom;
  Profile profile;
  Alt claimed;
  Alt observed;

  bool holds() const { return claimed == observed; }
};

struct ProofReplay {
  Profile input;
  Alt winner;   // strict plurality winner of the input
  Alt outcome;  // rule(input)
  bool confirmed = false;  // outcome is the winner or the tie; no chain
  std::vector<ProofStep> chain;
  std::optional<AltPermutation> alt_swap;
  std::optional<VoterPermutation> voter_swap;
  /// The last two steps evaluate the same profile (x-block and y-block
  /// exchanged by voters equals x and y relabelled) yet claim y and x.
  bool profiles_coincide = false;

  /// Index of the first step whose claim the rule does not honor.
  std::optional<std::size_t> first_broken() const;
};

/// Replays the argument that a C2/C3/C5 rule cannot elect y over a strict
/// plurality winner x: extend with k = count(x) - count(y) ballots for y,
/// exchange the x- and y-blocks of voters, relabel x <-> y. Throws InputError
/// without a strict plurality winner; HorizonError propagates from
/// tabulated rules.
ProofReplay replay_main_proof(const Rule& rule, const Profile& p);

}  // namespace sct
