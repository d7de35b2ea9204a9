#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sct {

/// Exact non-negative fraction, always stored in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den);
  /// Parses "num/den". Throws InputError on malformed text.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string to_string() const;

  /// this * whole < count, computed without rounding.
  bool times_is_below(std::int64_t whole, std::int64_t count) const { return num_ * whole < count * den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& x, const Rational& y) { return x.num_ * y.den_ < y.num_ * x.den_; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace sct
