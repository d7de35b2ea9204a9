#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sct/alphabet.hpp"
#include "sct/profile.hpp"
#include "sct/rules.hpp"

namespace sct {

/// All count signatures over `dimension` non-tie alternatives with total at
/// most `horizon`, ordered by total and then lexicographically descending
/// (so {a:1,b:0} precedes {a:0,b:1}).
class SignatureSpace {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SignatureSpace(std::size_t dimension, std::size_t horizon);
  /// Shared, cached instance.
  static std::shared_ptr<const SignatureSpace> get(std::size_t dimension, std::size_t horizon);

  std::size_t dimension() const { return dimension_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t size() const { return signatures_.size(); }
  const CountSignature& operator[](std::size_t i) const { return signatures_[i]; }
  const std::vector<CountSignature>& signatures() const { return signatures_; }
  std::size_t total(std::size_t i) const { return totals_[i]; }

  /// Index of `s`, or npos when its total exceeds the horizon.
  std::size_t index_of(const CountSignature& s) const;
  /// Index of signature i plus one ballot for non-tie position `pos`; npos
  /// beyond the horizon.
  std::size_t successor(std::size_t i, std::size_t pos) const { return successors_[i * dimension_ + pos]; }

 private:
  std::size_t code(const std::vector<std::uint32_t>& counts) const;

  std::size_t dimension_;
  std::size_t horizon_;
  std::vector<CountSignature> signatures_;
  std::vector<std::size_t> totals_;
  std::vector<std::size_t> dense_;
  std::vector<std::size_t> successors_;
};

/// Explicit signature -> outcome table up to a horizon. Profiles whose
/// non-tie ballot count exceeds the horizon are not covered.
class TabulatedFamily {
 public:
  /// `table[i]` is the outcome for signature i of the space. Throws
  /// InputError when sizes disagree or an entry is outside the alphabet.
  TabulatedFamily(Alphabet alphabet, std::shared_ptr<const SignatureSpace> space, std::vector<Alt> table);
  TabulatedFamily(Alphabet alphabet, std::size_t horizon, std::vector<Alt> table);

  /// Tabulates `rule` by evaluating one representative profile per signature.
  static TabulatedFamily from_rule(const Rule& rule, std::size_t horizon);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t horizon() const { return space_->horizon(); }
  const SignatureSpace& space() const { return *space_; }
  const std::shared_ptr<const SignatureSpace>& space_ptr() const { return space_; }
  const std::vector<Alt>& table() const { return table_; }
  Alt at(std::size_t i) const { return table_[i]; }
  /// Throws HorizonError beyond the horizon.
  Alt lookup(const CountSignature& s) const;

  friend bool operator==(const TabulatedFamily& x, const TabulatedFamily& y) {
    return x.horizon() == y.horizon() && x.table_ == y.table_ && x.alphabet_ == y.alphabet_;
  }
  friend bool operator<(const TabulatedFamily& x, const TabulatedFamily& y) { return x.table_ < y.table_; }

 private:
  Alphabet alphabet_;
  std::shared_ptr<const SignatureSpace> space_;
  std::vector<Alt> table_;
};

/// Ballots a^{c_a} b^{c_b} ... in canonical order.
Profile representative(const Alphabet& alphabet, const CountSignature& s);

/// Table lookup on signature(p); HorizonError beyond the horizon.
Alt tabulated_evaluate(const TabulatedFamily& family, const Profile& p);

RulePtr make_tabulated(TabulatedFamily family, std::string descriptor = "tabulated");
RulePtr make_tabulated(std::shared_ptr<const TabulatedFamily> family, std::string descriptor = "tabulated");

}  // namespace sct
