#include "sct/profile.hpp"

#include <algorithm>
#include <numeric>

#include "sct/errors.hpp"

namespace sct {

Profile::Profile(Alphabet alphabet, std::vector<Alt> ballots)
    : alphabet_(std::move(alphabet)), ballots_(std::move(ballots)) {
  for (Alt b : ballots_) {
    if (!alphabet_.contains(b)) throw InputError("ballot outside the alphabet");
  }
}

Profile Profile::of(const Alphabet& alphabet, std::initializer_list<std::string_view> symbols) {
  std::vector<Alt> ballots;
  for (auto s : symbols) ballots.push_back(alphabet.at(s));
  return Profile(alphabet, std::move(ballots));
}

Profile Profile::of(const Alphabet& alphabet, const std::vector<std::string>& symbols) {
  std::vector<Alt> ballots;
  for (const auto& s : symbols) ballots.push_back(alphabet.at(s));
  return Profile(alphabet, std::move(ballots));
}

std::vector<std::string> Profile::symbol_names() const {
  std::vector<std::string> out;
  out.reserve(ballots_.size());
  for (Alt b : ballots_) out.push_back(alphabet_.name(b));
  return out;
}

std::string Profile::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    if (i) out += ",";
    out += alphabet_.name(ballots_[i]);
  }
  return out + "]";
}

std::size_t Tally::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::size_t CountSignature::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

AltPermutation::AltPermutation(const Alphabet& alphabet, std::vector<Alt> image) : image_(std::move(image)) {
  if (image_.size() != alphabet.size()) throw InputError("permutation size does not match the alphabet");
  std::vector<bool> hit(image_.size(), false);
  for (Alt a : image_) {
    if (!alphabet.contains(a) || hit[index(a)]) throw InputError("alternative map is not a bijection");
    hit[index(a)] = true;
  }
  if (image_[index(alphabet.bot())] != alphabet.bot()) {
    throw InputError("alternative permutation must fix the tie symbol");
  }
}

AltPermutation AltPermutation::identity(const Alphabet& alphabet) { return AltPermutation(alphabet, alphabet.all()); }

AltPermutation AltPermutation::swap(const Alphabet& alphabet, Alt x, Alt y) {
  auto image = alphabet.all();
  if (!alphabet.contains(x) || !alphabet.contains(y)) throw InputError("swap of unknown alternatives");
  std::swap(image[index(x)], image[index(y)]);
  return AltPermutation(alphabet, std::move(image));
}

std::vector<AltPermutation> AltPermutation::all(const Alphabet& alphabet) {
  std::vector<Alt> movable = alphabet.non_bot();
  std::vector<AltPermutation> out;
  do {
    std::vector<Alt> image(alphabet.size(), alphabet.bot());
    for (std::size_t i = 0; i < movable.size(); ++i) image[index(alphabet.non_bot()[i])] = movable[i];
    out.emplace_back(alphabet, std::move(image));
  } while (std::next_permutation(movable.begin(), movable.end()));
  return out;
}

bool AltPermutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (index(image_[i]) != i) return false;
  }
  return true;
}

VoterPermutation::VoterPermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || hit[v]) throw InputError("voter map is not a bijection");
    hit[v] = true;
  }
}

VoterPermutation VoterPermutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return VoterPermutation(std::move(image));
}

VoterPermutation VoterPermutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  auto pi = identity(n);
  if (i >= n || j >= n) throw InputError("transposition index out of range");
  std::swap(pi.image_[i], pi.image_[j]);
  return pi;
}

Tally tally(const Profile& p) {
  Tally t{std::vector<std::size_t>(p.alphabet().size(), 0)};
  for (Alt b : p.ballots()) ++t.counts[index(b)];
  return t;
}

Profile apply_alt_permutation(const Profile& p, const AltPermutation& pi) {
  if (pi.image().size() != p.alphabet().size() || pi(p.alphabet().bot()) != p.alphabet().bot()) {
    throw InputError("alternative permutation does not fit the profile's alphabet");
  }
  std::vector<Alt> out;
  out.reserve(p.size());
  for (Alt b : p.ballots()) out.push_back(pi(b));
  return Profile(p.alphabet(), std::move(out));
}

Profile apply_voter_permutation(const Profile& p, const VoterPermutation& pi) {
  if (pi.size() != p.size()) throw InputError("voter permutation size does not match the profile");
  std::vector<Alt> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[pi(i)];
  return Profile(p.alphabet(), std::move(out));
}

Profile extend(const Profile& p, Alt a) {
  if (!p.alphabet().contains(a)) throw InputError("extension ballot outside the alphabet");
  auto ballots = p.ballots();
  ballots.push_back(a);
  return Profile(p.alphabet(), std::move(ballots));
}

CountSignature signature(const Alphabet& alphabet, const Tally& t) {
  CountSignature s;
  s.counts.reserve(alphabet.non_bot_count());
  for (Alt a : alphabet.non_bot()) s.counts.push_back(static_cast<std::uint32_t>(t[a]));
  return s;
}

CountSignature signature(const Profile& p) { return signature(p.alphabet(), tally(p)); }

std::optional<Alt> strict_plurality(const Alphabet& alphabet, const Tally& t) {
  std::optional<Alt> best;
  std::size_t best_count = 0;
  bool tied = false;
  for (Alt a : alphabet.non_bot()) {
    std::size_t c = t[a];
    if (c > best_count) {
      best = a;
      best_count = c;
      tied = false;
    } else if (c == best_count) {
      tied = true;
    }
  }
  if (!best || tied) return std::nullopt;
  return best;
}

}  // namespace sct
