#include "sct/tabulated.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "sct/errors.hpp"

namespace sct {
namespace {

constexpr std::size_t kMaxDense = std::size_t{1} << 22;

void compositions(std::size_t dimension, std::size_t total, std::vector<std::uint32_t>& prefix,
                  std::vector<CountSignature>& out) {
  if (prefix.size() + 1 == dimension) {
    prefix.push_back(static_cast<std::uint32_t>(total));
    out.push_back(CountSignature{prefix});
    prefix.pop_back();
    return;
  }
  for (std::size_t c = total + 1; c-- > 0;) {
    prefix.push_back(static_cast<std::uint32_t>(c));
    compositions(dimension, total - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SignatureSpace::SignatureSpace(std::size_t dimension, std::size_t horizon)
    : dimension_(dimension), horizon_(horizon) {
  if (dimension < 1) throw InputError("signature space needs at least one alternative");
  std::size_t dense_size = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    dense_size *= horizon + 1;
    if (dense_size > kMaxDense) throw BoundError("signature space too large");
  }
  std::vector<std::uint32_t> prefix;
  for (std::size_t t = 0; t <= horizon; ++t) {
    std::size_t before = signatures_.size();
    compositions(dimension, t, prefix, signatures_);
    totals_.insert(totals_.end(), signatures_.size() - before, t);
  }
  dense_.assign(dense_size, npos);
  for (std::size_t i = 0; i < signatures_.size(); ++i) dense_[code(signatures_[i].counts)] = i;
  successors_.assign(signatures_.size() * dimension, npos);
  for (std::size_t i = 0; i < signatures_.size(); ++i) {
    if (totals_[i] == horizon) continue;
    for (std::size_t pos = 0; pos < dimension; ++pos) {
      auto next = signatures_[i].counts;
      ++next[pos];
      successors_[i * dimension + pos] = dense_[code(next)];
    }
  }
}

std::shared_ptr<const SignatureSpace> SignatureSpace::get(std::size_t dimension, std::size_t horizon) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const SignatureSpace>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{dimension, horizon}];
  if (!slot) slot = std::make_shared<const SignatureSpace>(dimension, horizon);
  return slot;
}

std::size_t SignatureSpace::code(const std::vector<std::uint32_t>& counts) const {
  std::size_t c = 0;
  for (auto v : counts) c = c * (horizon_ + 1) + v;
  return c;
}

std::size_t SignatureSpace::index_of(const CountSignature& s) const {
  if (s.counts.size() != dimension_) throw InputError("signature dimension mismatch");
  if (s.total() > horizon_) return npos;
  return dense_[code(s.counts)];
}

TabulatedFamily::TabulatedFamily(Alphabet alphabet, std::shared_ptr<const SignatureSpace> space,
                                 std::vector<Alt> table)
    : alphabet_(std::move(alphabet)), space_(std::move(space)), table_(std::move(table)) {
  if (space_->dimension() != alphabet_.non_bot_count()) {
    throw InputError("signature space does not match the alphabet");
  }
  if (table_.size() != space_->size()) throw InputError("table does not cover the signature space");
  for (Alt a : table_) {
    if (!alphabet_.contains(a)) throw InputError("table entry outside the alphabet");
  }
}

TabulatedFamily::TabulatedFamily(Alphabet alphabet, std::size_t horizon, std::vector<Alt> table)
    : TabulatedFamily(alphabet, SignatureSpace::get(alphabet.non_bot_count(), horizon), std::move(table)) {}

TabulatedFamily TabulatedFamily::from_rule(const Rule& rule, std::size_t horizon) {
  const auto& alphabet = rule.alphabet();
  auto space = SignatureSpace::get(alphabet.non_bot_count(), horizon);
  std::vector<Alt> table;
  table.reserve(space->size());
  for (const auto& s : space->signatures()) table.push_back(rule.evaluate(representative(alphabet, s)));
  return TabulatedFamily(alphabet, std::move(space), std::move(table));
}

Alt TabulatedFamily::lookup(const CountSignature& s) const {
  auto i = space_->index_of(s);
  if (i == SignatureSpace::npos) {
    throw HorizonError("profile with " + std::to_string(s.total()) + " non-tie ballots exceeds horizon " +
                       std::to_string(horizon()));
  }
  return table_[i];
}

Profile representative(const Alphabet& alphabet, const CountSignature& s) {
  std::vector<Alt> ballots;
  for (std::size_t pos = 0; pos < s.counts.size(); ++pos) {
    ballots.insert(ballots.end(), s.counts[pos], alphabet.non_bot().at(pos));
  }
  return Profile(alphabet, std::move(ballots));
}

Alt tabulated_evaluate(const TabulatedFamily& family, const Profile& p) {
  if (!(p.alphabet() == family.alphabet())) throw InputError("profile alphabet does not match the table");
  return family.lookup(signature(p));
}

RulePtr make_tabulated(std::shared_ptr<const TabulatedFamily> family, std::string descriptor) {
  auto alphabet = family->alphabet();
  return make_function_rule(alphabet, std::move(descriptor),
                            [family = std::move(family)](const Profile& p) { return tabulated_evaluate(*family, p); });
}

RulePtr make_tabulated(TabulatedFamily family, std::string descriptor) {
  return make_tabulated(std::make_shared<const TabulatedFamily>(std::move(family)), std::move(descriptor));
}

}  // namespace sct
