#include "sct/ballot_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sct/errors.hpp"

namespace sct {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_symbols(std::string_view list, std::size_t line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = list.find(',', start);
    auto item = trim(list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) fail(line, "empty symbol in alternatives list");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

BallotFile parse_ballot_file(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> names;
  std::optional<BallotFile::Mode> mode;
  std::vector<Alt> ballots;
  std::vector<arrow::WeakOrder> rankings;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!alphabet) {
      constexpr std::string_view key = "alternatives:";
      if (line.substr(0, key.size()) != key) fail(line_no, "expected header 'alternatives: <sym>,... bot: <sym>'");
      auto rest = line.substr(key.size());
      std::string bot = "_";
      auto bot_at = rest.find("bot:");
      if (bot_at != std::string_view::npos) {
        bot = std::string(trim(rest.substr(bot_at + 4)));
        if (bot.empty() || bot.find_first_of(" \t,") != std::string::npos) fail(line_no, "malformed bot symbol");
        rest = rest.substr(0, bot_at);
      }
      auto symbols = split_symbols(trim(rest), line_no);
      for (const auto& s : symbols) {
        if (s.find_first_of(" \t>=") != std::string::npos) fail(line_no, "malformed symbol '" + s + "'");
        if (s != bot) names.push_back(s);
      }
      if (std::find(symbols.begin(), symbols.end(), bot) == symbols.end()) symbols.push_back(bot);
      try {
        alphabet.emplace(std::move(symbols), bot);
      } catch (const InputError& e) {
        fail(line_no, e.what());
      }
      continue;
    }

    constexpr std::string_view rank_key = "rank:";
    const bool is_rank = line.substr(0, rank_key.size()) == rank_key;
    const auto this_mode = is_rank ? BallotFile::Mode::rank : BallotFile::Mode::single;
    if (mode && *mode != this_mode) fail(line_no, "single-choice and rank ballots are mixed");
    mode = this_mode;

    if (is_rank) {
      try {
        rankings.push_back(arrow::WeakOrder::parse(trim(line.substr(rank_key.size())), names));
      } catch (const InputError& e) {
        fail(line_no, e.what());
      }
    } else {
      auto symbol = alphabet->find(line);
      if (!symbol) fail(line_no, "undeclared symbol '" + std::string(line) + "'");
      ballots.push_back(*symbol);
    }
  }
  if (!alphabet) throw InputError("line 1: missing 'alternatives:' header");

  BallotFile out{*alphabet, mode.value_or(BallotFile::Mode::single), Profile(*alphabet, std::move(ballots)),
                 std::move(names), std::move(rankings)};
  return out;
}

BallotFile read_ballot_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read ballot file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ballot_file(buf.str());
}

std::string format_ballot_file(const Profile& p) {
  const auto& alphabet = p.alphabet();
  std::string out = "alternatives: ";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out += ',';
    out += alphabet.symbols()[i];
  }
  out += " bot: " + alphabet.name(alphabet.bot()) + "\n";
  for (Alt a : p.ballots()) out += alphabet.name(a) + "\n";
  return out;
}

std::string format_rank_file(const std::vector<std::string>& names, const std::vector<arrow::WeakOrder>& rankings) {
  std::string out = "alternatives: ";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  out += "\n";
  for (const auto& w : rankings) out += "rank: " + w.to_string(names) + "\n";
  return out;
}

}  // namespace sct
