#include "sct/rational.hpp"

#include <charconv>
#include <numeric>

#include "sct/errors.hpp"

namespace sct {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw InputError("fraction must have a positive denominator and non-negative numerator");
  if (num > (std::int64_t{1} << 31) || den > (std::int64_t{1} << 31)) throw InputError("fraction terms too large");
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw InputError("expected a fraction num/den, got '" + std::string(text) + "'");
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InputError("malformed fraction '" + std::string(text) + "'");
    }
    return v;
  };
  return Rational(read(text.substr(0, slash)), read(text.substr(slash + 1)));
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

}  // namespace sct
