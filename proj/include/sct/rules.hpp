#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "sct/alphabet.hpp"
#include "sct/profile.hpp"
#include "sct/rational.hpp"

namespace sct {

/// A family of choice functions, one per electorate size, over a fixed
/// alphabet. Evaluation is total on profiles over that alphabet and
/// deterministic.
class Rule {
 public:
  virtual ~Rule() = default;

  virtual const Alphabet& alphabet() const = 0;
  /// Throws InputError if `p` is over a different alphabet.
  virtual Alt evaluate(const Profile& p) const = 0;
  /// Stable name including parameters, e.g. "quorum:literal:3".
  virtual std::string descriptor() const = 0;

  Alt operator()(const Profile& p) const { return evaluate(p); }
};

using RulePtr = std::shared_ptr<const Rule>;

enum class QuorumMode { literal, participation };
enum class Denominator { all, non_bot };

// Sign of the ballot sum over the alphabet {-1, 0, 1} with 0 as the tie.
Alt may_sign_rule(const Profile& p);

// Strict plurality winner among non-tie alternatives, otherwise the tie.
Alt pure_majority(const Profile& p);

/// Tie below `quorum` voters, pure majority otherwise. Literal mode counts
/// every ballot; participation mode ignores abstaining ballots.
Alt quorum_rule(const Profile& p, std::size_t quorum, QuorumMode mode);

/// The non-tie alternative whose count exceeds `threshold` times the
/// denominator (all ballots, or non-abstaining ballots), else the tie.
/// Exact arithmetic; a threshold below 1/2 is rejected as ill-formed.
Alt supermajority(const Profile& p, const Rational& threshold, Denominator denom);

RulePtr make_may_sign();
RulePtr make_pure_majority(const Alphabet& alphabet);
RulePtr make_quorum(const Alphabet& alphabet, std::size_t quorum, QuorumMode mode);
RulePtr make_supermajority(const Alphabet& alphabet, const Rational& threshold, Denominator denom);

/// Wraps an arbitrary evaluator; used for foils and ad-hoc rules in tests.
RulePtr make_function_rule(const Alphabet& alphabet, std::string descriptor,
                           std::function<Alt(const Profile&)> evaluate);

// Foils: rules that deliberately break one axiom or another.
RulePtr make_constant(const Alphabet& alphabet, Alt value);
RulePtr make_always_bot(const Alphabet& alphabet);
/// First voter's ballot; the tie on the empty profile.
RulePtr make_first_ballot_dictator(const Alphabet& alphabet);
/// Negation of may_sign_rule.
RulePtr make_negated_sign();

std::string to_string(QuorumMode mode);
std::string to_string(Denominator denom);

}  // namespace sct
