#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sct/alphabet.hpp"
#include "sct/rules.hpp"

namespace sct::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kAxiomFail = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBoundError = 3;

/// `--alternatives` value: a count of non-tie letters ("2"), "may", or an
/// explicit list "x,y,z" (tie symbol `_` appended).
Alphabet parse_alphabet(std::string_view text);

/// Rule descriptors:
///   pure-majority | may-sign | negated-sign | always-bot |
///   first-ballot-dictator | constant:<symbol> |
///   quorum:<literal|participation>:<N> |
///   supermajority:<all|nonbot>:<num>/<den> |
///   tabulated:<file>[#<index>]
/// may-sign and negated-sign use the May alphabet and tabulated rules the
/// alphabet stored in their file; the others use `alphabet`.
RulePtr parse_rule(std::string_view descriptor, const Alphabet& alphabet);

/// Runs one command line (without the program name). Diagnostics go to
/// `err`; reports and results go to `out` or to the --out file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sct::cli
