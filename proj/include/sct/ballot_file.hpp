#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sct/alphabet.hpp"
#include "sct/arrow.hpp"
#include "sct/profile.hpp"

namespace sct {

// Text format:
//
//   # comment
//   alternatives: a,b,_ bot: _
//   a
//   _
//
// or, for weak-order ballots,
//
//   alternatives: a,b,c
//   rank: a > b = c
//
// The tie symbol defaults to `_` and is added to the alternatives when not
// listed. A file holds ballots of one kind only.
struct BallotFile {
  enum class Mode { single, rank };

  Alphabet alphabet;
  Mode mode = Mode::single;
  Profile profile;                       // single-choice ballots
  std::vector<std::string> rank_names;   // non-tie alternatives, rank mode
  std::vector<arrow::WeakOrder> rankings;
};

/// Throws InputError naming the offending line.
BallotFile parse_ballot_file(std::string_view text);
/// Throws InputError when the file cannot be read.
BallotFile read_ballot_file(const std::filesystem::path& path);

/// Single-choice file that parse_ballot_file() maps back to `p`.
std::string format_ballot_file(const Profile& p);
std::string format_rank_file(const std::vector<std::string>& names, const std::vector<arrow::WeakOrder>& rankings);

}  // namespace sct
