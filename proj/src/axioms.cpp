#include "sct/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <numeric>

#include "sct/errors.hpp"

namespace sct {
namespace {

constexpr AxiomId kAllAxioms[] = {
    AxiomId::C2,  AxiomId::C3,  AxiomId::C4,  AxiomId::C5,
    AxiomId::C6,  AxiomId::MA2, AxiomId::MA3, AxiomId::MA4,
    AxiomId::PLURALITY_PROPERTY, AxiomId::UNAVOIDABLE_TIES, AxiomId::TIE_CLOSURE,
};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

void require_choice_alphabet(const Rule& rule) {
  if (rule.alphabet().non_bot_count() < 2) {
    throw InputError("axiom checks need at least two non-tie alternatives");
  }
}

void require_may_alphabet(const Rule& rule) {
  if (!rule.alphabet().is_may()) throw InputError("May's conditions need the alphabet -1,0,1 with 0 as the tie");
}

Verdict fail(Verdict v, Witness w) {
  v.status = VerdictStatus::fail;
  v.witness = std::move(w);
  return v;
}

// Largest non-tie count is shared by at least two alternatives.
bool top_is_shared(const Alphabet& alphabet, const Tally& t) {
  std::size_t best = 0;
  std::size_t holders = 0;
  for (Alt a : alphabet.non_bot()) {
    if (t[a] > best) {
      best = t[a];
      holders = 1;
    } else if (t[a] == best) {
      ++holders;
    }
  }
  return holders >= 2;
}

// -1 <-> 1 on the May alphabet.
Alt negate(const Alphabet& may, Alt a) {
  if (may.is_bot(a)) return a;
  return a == may.at("1") ? may.at("-1") : may.at("1");
}

int value_of(const Alphabet& may, Alt a) { return std::stoi(may.name(a)); }

Alt alt_of(const Alphabet& may, int v) { return may.at(std::to_string(v)); }

}  // namespace

std::string to_string(AxiomId id) {
  switch (id) {
    case AxiomId::C2: return "C2";
    case AxiomId::C3: return "C3";
    case AxiomId::C4: return "C4";
    case AxiomId::C5: return "C5";
    case AxiomId::C6: return "C6";
    case AxiomId::MA2: return "MA2";
    case AxiomId::MA3: return "MA3";
    case AxiomId::MA4: return "MA4";
    case AxiomId::PLURALITY_PROPERTY: return "PLURALITY_PROPERTY";
    case AxiomId::UNAVOIDABLE_TIES: return "UNAVOIDABLE_TIES";
    case AxiomId::TIE_CLOSURE: return "TIE_CLOSURE";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view name) {
  auto key = upper(name);
  if (key == "PLURALITY") return AxiomId::PLURALITY_PROPERTY;
  if (key == "TIES") return AxiomId::UNAVOIDABLE_TIES;
  for (AxiomId id : kAllAxioms) {
    if (to_string(id) == key) return id;
  }
  return std::nullopt;
}

std::vector<AxiomId> all_axioms() { return {std::begin(kAllAxioms), std::end(kAllAxioms)}; }

std::vector<AxiomId> parse_axiom_list(std::string_view text) {
  std::vector<AxiomId> out;
  auto add = [&](AxiomId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw InputError("empty entry in axiom list '" + std::string(text) + "'");
    if (upper(item) == "ALL") {
      for (AxiomId id : kAllAxioms) add(id);
    } else if (auto id = parse_axiom(item)) {
      add(*id);
    } else {
      // A range such as C2-C5 or Ma2-Ma4.
      auto dash = item.find('-');
      std::optional<AxiomId> lo, hi;
      if (dash != std::string_view::npos) {
        lo = parse_axiom(item.substr(0, dash));
        hi = parse_axiom(item.substr(dash + 1));
      }
      if (!lo || !hi || *hi < *lo) throw InputError("unknown axiom '" + std::string(item) + "'");
      for (AxiomId id : kAllAxioms) {
        if (*lo <= id && id <= *hi) add(id);
      }
    }
    start = end + 1;
  }
  return out;
}

std::string to_string(Ma4Semantics s) { return s == Ma4Semantics::flip ? "flip" : "in-favor"; }

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::error: return "error";
  }
  return "?";
}

Verdict check_c2(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::C2};
  auto perms = AltPermutation::all(rule.alphabet());
  std::optional<Witness> found;
  for_each_profile_up_to(rule.alphabet(), max_voters, [&](const Profile& x) {
    ++v.profiles_checked;
    Alt fx = rule(x);
    for (const auto& pi : perms) {
      if (pi.is_identity()) continue;
      auto moved = apply_alt_permutation(x, pi);
      Alt got = rule(moved);
      if (got != pi(fx)) {
        found = Witness{AxiomId::C2, x, moved, pi, std::nullopt, pi(fx), got};
        return false;
      }
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_c3(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::C3};
  std::optional<Witness> found;
  for_each_profile_up_to(rule.alphabet(), max_voters, [&](const Profile& x) {
    ++v.profiles_checked;
    Alt fx = rule(x);
    std::vector<std::size_t> image(x.size());
    std::iota(image.begin(), image.end(), std::size_t{0});
    while (std::next_permutation(image.begin(), image.end())) {
      VoterPermutation pi(image);
      auto moved = apply_voter_permutation(x, pi);
      if (moved == x) continue;
      Alt got = rule(moved);
      if (got != fx) {
        found = Witness{AxiomId::C3, x, moved, std::nullopt, pi, fx, got};
        return false;
      }
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_c4(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::C4};
  if (max_voters == 0) return v;
  std::optional<Witness> found;
  const Alt bot = rule.alphabet().bot();
  for_each_profile_up_to(rule.alphabet(), max_voters - 1, [&](const Profile& x) {
    ++v.profiles_checked;
    Alt fx = rule(x);
    auto moved = extend(x, bot);
    Alt got = rule(moved);
    if (got != fx) {
      found = Witness{AxiomId::C4, x, moved, std::nullopt, std::nullopt, fx, got};
      return false;
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_c5(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::C5};
  if (max_voters == 0) return v;
  std::optional<Witness> found;
  for_each_profile_up_to(rule.alphabet(), max_voters - 1, [&](const Profile& x) {
    ++v.profiles_checked;
    Alt fx = rule(x);
    auto moved = extend(x, fx);
    Alt got = rule(moved);
    if (got != fx) {
      found = Witness{AxiomId::C5, x, moved, std::nullopt, std::nullopt, fx, got};
      return false;
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_c6(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::C6};
  const auto& alphabet = rule.alphabet();
  const Alt bot = alphabet.bot();
  std::optional<Witness> found;
  for_each_profile_up_to(alphabet, max_voters, [&](const Profile& x) {
    ++v.profiles_checked;
    if (rule(x) != bot) return true;
    for (Alt b : alphabet.non_bot()) {
      if (rule(extend(x, b)) != bot) return true;
    }
    found = Witness{AxiomId::C6, x, std::nullopt, std::nullopt, std::nullopt, bot, bot};
    return false;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_plurality_property(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::PLURALITY_PROPERTY};
  const auto& alphabet = rule.alphabet();
  std::optional<Witness> found;
  for_each_profile_up_to(alphabet, max_voters, [&](const Profile& x) {
    ++v.profiles_checked;
    Alt fx = rule(x);
    if (alphabet.is_bot(fx)) return true;
    auto winner = strict_plurality(alphabet, tally(x));
    if (winner && *winner == fx) return true;
    found = Witness{AxiomId::PLURALITY_PROPERTY, x, std::nullopt, std::nullopt, std::nullopt,
                    winner ? *winner : alphabet.bot(), fx};
    return false;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_unavoidable_ties(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::UNAVOIDABLE_TIES};
  const auto& alphabet = rule.alphabet();
  std::optional<Witness> found;
  for_each_profile_up_to(alphabet, max_voters, [&](const Profile& x) {
    ++v.profiles_checked;
    if (!top_is_shared(alphabet, tally(x))) return true;
    Alt fx = rule(x);
    if (alphabet.is_bot(fx)) return true;
    found = Witness{AxiomId::UNAVOIDABLE_TIES, x, std::nullopt, std::nullopt, std::nullopt, alphabet.bot(), fx};
    return false;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_tie_closure(const Rule& rule, std::size_t max_voters) {
  require_choice_alphabet(rule);
  Verdict v{AxiomId::TIE_CLOSURE};
  if (max_voters == 0) return v;
  const auto& alphabet = rule.alphabet();
  std::optional<Witness> found;
  for_each_profile_up_to(alphabet, max_voters - 1, [&](const Profile& b) {
    ++v.profiles_checked;
    Alt fb = rule(b);
    if (alphabet.is_bot(fb)) return true;
    auto moved = extend(b, fb);
    Alt got = rule(moved);
    if (!alphabet.is_bot(got)) return true;
    found = Witness{AxiomId::TIE_CLOSURE, b, moved, std::nullopt, std::nullopt, fb, got};
    return false;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_ma2(const Rule& rule, std::size_t voters) {
  require_may_alphabet(rule);
  Verdict v{AxiomId::MA2};
  std::optional<Witness> found;
  for_each_profile(rule.alphabet(), voters, [&](const Profile& x) {
    ++v.profiles_checked;
    Alt fx = rule(x);
    std::vector<std::size_t> image(voters);
    std::iota(image.begin(), image.end(), std::size_t{0});
    while (std::next_permutation(image.begin(), image.end())) {
      VoterPermutation pi(image);
      auto moved = apply_voter_permutation(x, pi);
      if (moved == x) continue;
      Alt got = rule(moved);
      if (got != fx) {
        found = Witness{AxiomId::MA2, x, moved, std::nullopt, pi, fx, got};
        return false;
      }
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_ma3(const Rule& rule, std::size_t voters) {
  require_may_alphabet(rule);
  Verdict v{AxiomId::MA3};
  const auto& may = rule.alphabet();
  std::optional<Witness> found;
  for_each_profile(may, voters, [&](const Profile& x) {
    ++v.profiles_checked;
    std::vector<Alt> neg;
    for (Alt b : x.ballots()) neg.push_back(negate(may, b));
    Profile y(may, std::move(neg));
    Alt want = negate(may, rule(x));
    Alt got = rule(y);
    if (got != want) {
      found = Witness{AxiomId::MA3, x, y, std::nullopt, std::nullopt, want, got};
      return false;
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check_ma4(const Rule& rule, std::size_t voters, Ma4Semantics semantics) {
  require_may_alphabet(rule);
  Verdict v{AxiomId::MA4};
  const auto& may = rule.alphabet();
  std::optional<Witness> found;
  for_each_profile(may, voters, [&](const Profile& x) {
    ++v.profiles_checked;
    const int fx = value_of(may, rule(x));
    for (std::size_t voter = 0; voter < voters; ++voter) {
      const int from = value_of(may, x[voter]);
      for (Alt to_alt : may.all()) {
        const int to = value_of(may, to_alt);
        if (to == from) continue;
        if (semantics == Ma4Semantics::flip && (from == 0 || to != -from)) continue;
        const int direction = to > from ? 1 : -1;
        if (fx != 0 && fx != direction) continue;
        auto ballots = x.ballots();
        ballots[voter] = to_alt;
        Profile y(may, std::move(ballots));
        Alt got = rule(y);
        if (value_of(may, got) != direction) {
          found = Witness{AxiomId::MA4, x, y, std::nullopt, std::nullopt, alt_of(may, direction), got};
          return false;
        }
      }
    }
    return true;
  });
  return found ? fail(std::move(v), std::move(*found)) : v;
}

Verdict check(const Rule& rule, AxiomId id, std::size_t max_voters, Ma4Semantics ma4) {
  auto over_sizes = [&](auto&& one) {
    Verdict total{id};
    for (std::size_t n = 0; n <= max_voters; ++n) {
      Verdict v = one(n);
      total.profiles_checked += v.profiles_checked;
      if (v.failed()) {
        total.status = VerdictStatus::fail;
        total.witness = std::move(v.witness);
        break;
      }
    }
    return total;
  };
  switch (id) {
    case AxiomId::C2: return check_c2(rule, max_voters);
    case AxiomId::C3: return check_c3(rule, max_voters);
    case AxiomId::C4: return check_c4(rule, max_voters);
    case AxiomId::C5: return check_c5(rule, max_voters);
    case AxiomId::C6: return check_c6(rule, max_voters);
    case AxiomId::MA2: return over_sizes([&](std::size_t n) { return check_ma2(rule, n); });
    case AxiomId::MA3: return over_sizes([&](std::size_t n) { return check_ma3(rule, n); });
    case AxiomId::MA4: return over_sizes([&](std::size_t n) { return check_ma4(rule, n, ma4); });
    case AxiomId::PLURALITY_PROPERTY: return check_plurality_property(rule, max_voters);
    case AxiomId::UNAVOIDABLE_TIES: return check_unavoidable_ties(rule, max_voters);
    case AxiomId::TIE_CLOSURE: return check_tie_closure(rule, max_voters);
  }
  throw InputError("unknown axiom");
}

bool reproduces(const Rule& rule, const Witness& w) {
  const auto& alphabet = rule.alphabet();
  const Alt bot = alphabet.bot();
  const Profile& x = w.base_profile;
  auto moved_is = [&](const Profile& want) { return w.moved_to && *w.moved_to == want; };
  switch (w.kind) {
    case AxiomId::C2:
      return w.alt_permutation && moved_is(apply_alt_permutation(x, *w.alt_permutation)) &&
             w.expected == (*w.alt_permutation)(rule(x)) && w.observed == rule(*w.moved_to) &&
             w.expected != w.observed;
    case AxiomId::C3:
    case AxiomId::MA2:
      return w.voter_permutation && moved_is(apply_voter_permutation(x, *w.voter_permutation)) &&
             w.expected == rule(x) && w.observed == rule(*w.moved_to) && w.expected != w.observed;
    case AxiomId::C4:
      return moved_is(extend(x, bot)) && w.expected == rule(x) && w.observed == rule(*w.moved_to) &&
             w.expected != w.observed;
    case AxiomId::C5:
      return moved_is(extend(x, rule(x))) && w.expected == rule(x) && w.observed == rule(*w.moved_to) &&
             w.expected != w.observed;
    case AxiomId::C6: {
      if (rule(x) != bot || w.expected != bot || w.observed != bot) return false;
      for (Alt b : alphabet.non_bot()) {
        if (rule(extend(x, b)) != bot) return false;
      }
      return true;
    }
    case AxiomId::PLURALITY_PROPERTY: {
      auto winner = strict_plurality(alphabet, tally(x));
      Alt want = winner ? *winner : bot;
      return w.expected == want && w.observed == rule(x) && w.observed != bot && w.observed != want;
    }
    case AxiomId::UNAVOIDABLE_TIES:
      return top_is_shared(alphabet, tally(x)) && w.expected == bot && w.observed == rule(x) && w.observed != bot;
    case AxiomId::TIE_CLOSURE:
      return rule(x) != bot && moved_is(extend(x, rule(x))) && w.expected == rule(x) &&
             w.observed == rule(*w.moved_to) && w.observed == bot;
    case AxiomId::MA3: {
      std::vector<Alt> neg;
      for (Alt b : x.ballots()) neg.push_back(negate(alphabet, b));
      return moved_is(Profile(alphabet, std::move(neg))) && w.expected == negate(alphabet, rule(x)) &&
             w.observed == rule(*w.moved_to) && w.expected != w.observed;
    }
    case AxiomId::MA4: {
      if (!w.moved_to || w.moved_to->size() != x.size()) return false;
      std::size_t changed = 0;
      std::size_t voter = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != (*w.moved_to)[i]) {
          ++changed;
          voter = i;
        }
      }
      if (changed != 1) return false;
      const int from = value_of(alphabet, x[voter]);
      const int to = value_of(alphabet, (*w.moved_to)[voter]);
      const int direction = to > from ? 1 : -1;
      const int fx = value_of(alphabet, rule(x));
      return (fx == 0 || fx == direction) && w.expected == alt_of(alphabet, direction) &&
             w.observed == rule(*w.moved_to) && w.observed != w.expected;
    }
  }
  return false;
}

bool AuditReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); });
}

bool AuditReport::any_error() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == VerdictStatus::error; });
}

AuditReport audit(const Rule& rule, const std::vector<AxiomId>& axioms, std::size_t max_voters,
                  const AuditOptions& options) {
  auto run_one = [&](AxiomId id) {
    try {
      return check(rule, id, max_voters, options.ma4);
    } catch (const BoundError& e) {
      Verdict v{id};
      v.status = VerdictStatus::error;
      v.message = e.what();
      v.bound_error = true;
      return v;
    } catch (const std::exception& e) {
      Verdict v{id};
      v.status = VerdictStatus::error;
      v.message = e.what();
      return v;
    }
  };
  AuditReport report{rule.descriptor(), rule.alphabet(), max_voters, options.ma4, {}};
  if (options.threads <= 1) {
    for (AxiomId id : axioms) report.verdicts.push_back(run_one(id));
    return report;
  }
  std::vector<std::future<Verdict>> pending;
  for (AxiomId id : axioms) pending.push_back(std::async(std::launch::async, run_one, id));
  for (auto& f : pending) report.verdicts.push_back(f.get());
  return report;
}

std::optional<std::size_t> ProofReplay::first_broken() const {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].holds()) return i;
  }
  return std::nullopt;
}

ProofReplay replay_main_proof(const Rule& rule, const Profile& p) {
  const auto& alphabet = rule.alphabet();
  auto counts = tally(p);
  auto winner = strict_plurality(alphabet, counts);
  if (!winner) throw InputError("no strict plurality winner in " + p.to_string());
  const Alt x = *winner;
  const Alt y = rule(p);
  ProofReplay out{p, x, y};
  if (y == x || alphabet.is_bot(y)) {
    out.confirmed = true;
    return out;
  }

  out.chain.push_back({"outcome of the input", std::nullopt, p, y, y});
  const std::size_t k = counts[x] - counts[y];
  Profile star = p;
  for (std::size_t i = 0; i < k; ++i) {
    star = extend(star, y);
    out.chain.push_back({"extend with a ballot for " + alphabet.name(y), AxiomId::C5, star, y, rule(star)});
  }

  // Pair the x-voters with the y-voters in index order and exchange them.
  std::vector<std::size_t> xs, ys;
  for (std::size_t v = 0; v < star.size(); ++v) {
    if (star[v] == x) xs.push_back(v);
    if (star[v] == y) ys.push_back(v);
  }
  auto image = VoterPermutation::identity(star.size()).image();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    image[xs[i]] = ys[i];
    image[ys[i]] = xs[i];
  }
  VoterPermutation voter_swap(image);
  auto alt_swap = AltPermutation::swap(alphabet, x, y);
  auto by_voters = apply_voter_permutation(star, voter_swap);
  auto by_labels = apply_alt_permutation(star, alt_swap);
  out.profiles_coincide = by_voters == by_labels;

  out.chain.push_back({"exchange the " + alphabet.name(x) + "-voters with the " + alphabet.name(y) + "-voters",
                       AxiomId::C3, by_voters, y, rule(by_voters)});
  out.chain.push_back({"relabel " + alphabet.name(x) + " <-> " + alphabet.name(y), AxiomId::C2, by_labels,
                       alt_swap(y), rule(by_labels)});
  out.alt_swap = alt_swap;
  out.voter_swap = voter_swap;
  return out;
}

}  // namespace sct
