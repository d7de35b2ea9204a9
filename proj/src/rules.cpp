#include "sct/rules.hpp"

#include <utility>

#include "sct/errors.hpp"

namespace sct {
namespace {

class FunctionRule final : public Rule {
 public:
  FunctionRule(Alphabet alphabet, std::string descriptor, std::function<Alt(const Profile&)> fn)
      : alphabet_(std::move(alphabet)), descriptor_(std::move(descriptor)), fn_(std::move(fn)) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  std::string descriptor() const override { return descriptor_; }
  Alt evaluate(const Profile& p) const override {
    if (!(p.alphabet() == alphabet_)) throw InputError("profile alphabet does not match rule " + descriptor_);
    return fn_(p);
  }

 private:
  Alphabet alphabet_;
  std::string descriptor_;
  std::function<Alt(const Profile&)> fn_;
};

void require_may(const Alphabet& alphabet) {
  if (!alphabet.is_may()) throw InputError("may-sign needs the alphabet -1,0,1 with 0 as the tie");
}

void check_threshold(const Rational& q) {
  if (q.num() == 0 || q.num() >= q.den()) throw InputError("supermajority threshold must lie in (0,1)");
}

}  // namespace

Alt may_sign_rule(const Profile& p) {
  const auto& alphabet = p.alphabet();
  require_may(alphabet);
  auto t = tally(p);
  auto plus = t[alphabet.at("1")];
  auto minus = t[alphabet.at("-1")];
  if (plus > minus) return alphabet.at("1");
  if (plus < minus) return alphabet.at("-1");
  return alphabet.bot();
}

Alt pure_majority(const Profile& p) {
  auto winner = strict_plurality(p.alphabet(), tally(p));
  return winner ? *winner : p.alphabet().bot();
}

Alt quorum_rule(const Profile& p, std::size_t quorum, QuorumMode mode) {
  if (quorum < 1) throw InputError("quorum must be at least 1");
  std::size_t turnout = p.size();
  if (mode == QuorumMode::participation) turnout -= tally(p)[p.alphabet().bot()];
  if (turnout < quorum) return p.alphabet().bot();
  return pure_majority(p);
}

Alt supermajority(const Profile& p, const Rational& threshold, Denominator denom) {
  check_threshold(threshold);
  const auto& alphabet = p.alphabet();
  auto t = tally(p);
  auto base = static_cast<std::int64_t>(p.size());
  if (denom == Denominator::non_bot) base -= static_cast<std::int64_t>(t[alphabet.bot()]);
  std::optional<Alt> winner;
  for (Alt a : alphabet.non_bot()) {
    if (!threshold.times_is_below(base, static_cast<std::int64_t>(t[a]))) continue;
    if (winner) throw InputError("supermajority threshold " + threshold.to_string() + " admits two winners");
    winner = a;
  }
  return winner ? *winner : alphabet.bot();
}

RulePtr make_function_rule(const Alphabet& alphabet, std::string descriptor,
                           std::function<Alt(const Profile&)> evaluate) {
  return std::make_shared<FunctionRule>(alphabet, std::move(descriptor), std::move(evaluate));
}

RulePtr make_may_sign() { return make_function_rule(Alphabet::may(), "may-sign", may_sign_rule); }

RulePtr make_pure_majority(const Alphabet& alphabet) {
  return make_function_rule(alphabet, "pure-majority", pure_majority);
}

RulePtr make_quorum(const Alphabet& alphabet, std::size_t quorum, QuorumMode mode) {
  if (quorum < 1) throw InputError("quorum must be at least 1");
  return make_function_rule(alphabet, "quorum:" + to_string(mode) + ":" + std::to_string(quorum),
                            [quorum, mode](const Profile& p) { return quorum_rule(p, quorum, mode); });
}

RulePtr make_supermajority(const Alphabet& alphabet, const Rational& threshold, Denominator denom) {
  check_threshold(threshold);
  if (alphabet.non_bot_count() >= 2 && threshold < Rational(1, 2)) {
    throw InputError("supermajority threshold below 1/2 can elect two alternatives at once");
  }
  return make_function_rule(alphabet, "supermajority:" + to_string(denom) + ":" + threshold.to_string(),
                            [threshold, denom](const Profile& p) { return supermajority(p, threshold, denom); });
}

RulePtr make_constant(const Alphabet& alphabet, Alt value) {
  if (!alphabet.contains(value)) throw InputError("constant outside the alphabet");
  return make_function_rule(alphabet, "constant:" + alphabet.name(value), [value](const Profile&) { return value; });
}

RulePtr make_always_bot(const Alphabet& alphabet) {
  return make_function_rule(alphabet, "always-bot", [](const Profile& p) { return p.alphabet().bot(); });
}

RulePtr make_first_ballot_dictator(const Alphabet& alphabet) {
  return make_function_rule(alphabet, "first-ballot-dictator",
                            [](const Profile& p) { return p.empty() ? p.alphabet().bot() : p[0]; });
}

RulePtr make_negated_sign() {
  return make_function_rule(Alphabet::may(), "negated-sign", [](const Profile& p) {
    Alt s = may_sign_rule(p);
    const auto& alphabet = p.alphabet();
    if (s == alphabet.bot()) return s;
    return s == alphabet.at("1") ? alphabet.at("-1") : alphabet.at("1");
  });
}

std::string to_string(QuorumMode mode) { return mode == QuorumMode::literal ? "literal" : "participation"; }
std::string to_string(Denominator denom) { return denom == Denominator::all ? "all" : "nonbot"; }

}  // namespace sct
