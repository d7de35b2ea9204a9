#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sct {

// An alternative, identified by its position in the alphabet's canonical order.
enum class Alt : std::uint8_t {};

constexpr std::size_t index(Alt a) { return static_cast<std::size_t>(a); }
constexpr Alt alt_at(std::size_t i) { return static_cast<Alt>(i); }

/// Finite, ordered set of alternatives with a distinguished tie/abstain
/// symbol. The declared order is the canonical order used for every
/// enumeration and report. Copies share the underlying symbol table.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSymbols = 16;

  /// `symbols` must be pairwise distinct and contain `bot`, plus at least one
  /// other alternative. Throws InputError otherwise.
  Alphabet(std::vector<std::string> symbols, std::string_view bot);

  /// Letters a, b, c, ... followed by `_` as the tie symbol.
  static Alphabet letters(std::size_t non_bot_count);
  /// -1, 0, 1 with 0 as the tie symbol.
  static Alphabet may();

  std::size_t size() const { return data_->symbols.size(); }
  Alt bot() const { return data_->bot; }
  bool is_bot(Alt a) const { return a == data_->bot; }
  std::size_t non_bot_count() const { return size() - 1; }
  /// Non-bot alternatives in canonical order.
  const std::vector<Alt>& non_bot() const { return data_->non_bot; }
  /// Position of `a` among the non-bot alternatives.
  std::size_t non_bot_position(Alt a) const;
  std::vector<Alt> all() const;

  const std::string& name(Alt a) const { return data_->symbols.at(index(a)); }
  const std::vector<std::string>& symbols() const { return data_->symbols; }
  std::optional<Alt> find(std::string_view symbol) const;
  /// Like find(), but throws InputError for unknown symbols.
  Alt at(std::string_view symbol) const;
  bool contains(Alt a) const { return index(a) < size(); }

  bool is_may() const;

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.data_ == y.data_ ||
           (x.data_->symbols == y.data_->symbols && x.data_->bot == y.data_->bot);
  }

 private:
  struct Data {
    std::vector<std::string> symbols;
    Alt bot{};
    std::vector<Alt> non_bot;
    std::vector<std::size_t> non_bot_pos;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace sct
