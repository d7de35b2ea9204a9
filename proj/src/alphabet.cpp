#include "sct/alphabet.hpp"

#include <algorithm>
#include <set>

#include "sct/errors.hpp"

namespace sct {

Alphabet::Alphabet(std::vector<std::string> symbols, std::string_view bot) {
  if (symbols.size() > kMaxSymbols) {
    throw InputError("alphabet has more than " + std::to_string(kMaxSymbols) + " symbols");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw InputError("empty alternative symbol");
    if (!seen.insert(s).second) throw InputError("duplicate alternative symbol '" + s + "'");
  }
  auto it = std::find(symbols.begin(), symbols.end(), bot);
  if (it == symbols.end()) {
    throw InputError("tie symbol '" + std::string(bot) + "' is not among the alternatives");
  }
  if (symbols.size() < 2) throw InputError("alphabet needs at least one non-tie alternative");

  auto data = std::make_shared<Data>();
  data->bot = alt_at(static_cast<std::size_t>(it - symbols.begin()));
  data->non_bot_pos.assign(symbols.size(), 0);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (alt_at(i) == data->bot) continue;
    data->non_bot_pos[i] = data->non_bot.size();
    data->non_bot.push_back(alt_at(i));
  }
  data->symbols = std::move(symbols);
  data_ = std::move(data);
}

Alphabet Alphabet::letters(std::size_t non_bot_count) {
  if (non_bot_count < 1 || non_bot_count + 1 > kMaxSymbols) {
    throw InputError("unsupported number of alternatives: " + std::to_string(non_bot_count));
  }
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < non_bot_count; ++i) symbols.emplace_back(1, static_cast<char>('a' + i));
  symbols.emplace_back("_");
  return Alphabet(std::move(symbols), "_");
}

Alphabet Alphabet::may() { return Alphabet({"-1", "0", "1"}, "0"); }

bool Alphabet::is_may() const {
  return data_->symbols == std::vector<std::string>{"-1", "0", "1"} && index(data_->bot) == 1;
}

std::size_t Alphabet::non_bot_position(Alt a) const {
  if (!contains(a) || is_bot(a)) throw InputError("not a non-tie alternative");
  return data_->non_bot_pos[index(a)];
}

std::vector<Alt> Alphabet::all() const {
  std::vector<Alt> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(alt_at(i));
  return out;
}

std::optional<Alt> Alphabet::find(std::string_view symbol) const {
  const auto& s = data_->symbols;
  auto it = std::find(s.begin(), s.end(), symbol);
  if (it == s.end()) return std::nullopt;
  return alt_at(static_cast<std::size_t>(it - s.begin()));
}

Alt Alphabet::at(std::string_view symbol) const {
  if (auto a = find(symbol)) return *a;
  throw InputError("unknown alternative '" + std::string(symbol) + "'");
}

}  // namespace sct
