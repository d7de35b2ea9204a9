#include "sct/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>

#include "sct/errors.hpp"

namespace sct {

// ---------------------------------------------------------------------------
// May tables

std::vector<MayTriple> MayFunctionTable::triples(std::size_t voters) {
  std::vector<MayTriple> out;
  const auto n = static_cast<std::uint32_t>(voters);
  for (std::uint32_t minus = 0; minus <= n; ++minus) {
    for (std::uint32_t zero = 0; zero + minus <= n; ++zero) out.push_back({minus, zero, n - minus - zero});
  }
  return out;
}

MayFunctionTable::MayFunctionTable(std::size_t voters, std::vector<int> outcomes)
    : voters_(voters), domain_(triples(voters)), outcomes_(std::move(outcomes)) {
  if (outcomes_.size() != domain_.size()) throw InputError("May table does not cover every count triple");
  for (int v : outcomes_) {
    if (v < -1 || v > 1) throw InputError("May table values must be -1, 0 or 1");
  }
}

int MayFunctionTable::value(const MayTriple& t) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), t);
  if (it == domain_.end() || *it != t) throw InputError("count triple outside the table");
  return outcomes_[static_cast<std::size_t>(it - domain_.begin())];
}

int MayFunctionTable::evaluate(const Profile& p) const {
  const auto& may = p.alphabet();
  if (!may.is_may()) throw InputError("May tables need the alphabet -1,0,1");
  if (p.size() != voters_) throw InputError("May table is defined for exactly " + std::to_string(voters_) + " voters");
  auto t = tally(p);
  return value({static_cast<std::uint32_t>(t[may.at("-1")]), static_cast<std::uint32_t>(t[may.at("0")]),
                static_cast<std::uint32_t>(t[may.at("1")])});
}

RulePtr MayFunctionTable::as_rule() const {
  auto self = *this;
  return make_function_rule(Alphabet::may(), "may-table:" + std::to_string(voters_), [self](const Profile& p) {
    return p.alphabet().at(std::to_string(self.evaluate(p)));
  });
}

MayFunctionTable may_sign_table(std::size_t voters) {
  std::vector<int> out;
  for (const auto& t : MayFunctionTable::triples(voters)) {
    out.push_back(t.plus > t.minus ? 1 : t.plus < t.minus ? -1 : 0);
  }
  return MayFunctionTable(voters, std::move(out));
}

namespace {

struct MayMove {
  std::size_t from;
  std::size_t to;
  int direction;
};

std::vector<MayMove> may_moves(const std::vector<MayTriple>& domain, Ma4Semantics semantics) {
  auto find = [&](MayTriple t) {
    return static_cast<std::size_t>(std::lower_bound(domain.begin(), domain.end(), t) - domain.begin());
  };
  std::vector<MayMove> moves;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto t = domain[i];
    // One voter changes ballot; count triples shift accordingly.
    if (t.minus > 0) moves.push_back({i, find({t.minus - 1, t.zero, t.plus + 1}), 1});
    if (t.plus > 0) moves.push_back({i, find({t.minus + 1, t.zero, t.plus - 1}), -1});
    if (semantics == Ma4Semantics::in_favor) {
      if (t.minus > 0) moves.push_back({i, find({t.minus - 1, t.zero + 1, t.plus}), 1});
      if (t.zero > 0) moves.push_back({i, find({t.minus, t.zero - 1, t.plus + 1}), 1});
      if (t.plus > 0) moves.push_back({i, find({t.minus, t.zero + 1, t.plus - 1}), -1});
      if (t.zero > 0) moves.push_back({i, find({t.minus + 1, t.zero - 1, t.plus}), -1});
    }
  }
  return moves;
}

}  // namespace

std::vector<MayFunctionTable> enumerate_may_functions(std::size_t voters, Ma4Semantics semantics,
                                                      std::size_t max_voters) {
  if (voters < 1 || voters > max_voters) {
    throw BoundError("May enumeration supports 1 to " + std::to_string(max_voters) + " voters");
  }
  const auto domain = MayFunctionTable::triples(voters);
  const std::size_t size = domain.size();
  constexpr int kUnset = 2;

  std::vector<std::size_t> partner(size);
  std::vector<std::size_t> free_slots;
  std::vector<int> value(size, kUnset);
  for (std::size_t i = 0; i < size; ++i) {
    const auto t = domain[i];
    partner[i] = static_cast<std::size_t>(
        std::lower_bound(domain.begin(), domain.end(), MayTriple{t.plus, t.zero, t.minus}) - domain.begin());
    if (partner[i] == i) {
      value[i] = 0;
    } else if (t.minus > t.plus) {
      free_slots.push_back(i);
    }
  }

  const auto moves = may_moves(domain, semantics);
  std::vector<std::vector<std::size_t>> touching(size);
  for (std::size_t m = 0; m < moves.size(); ++m) {
    touching[moves[m].from].push_back(m);
    touching[moves[m].to].push_back(m);
  }
  auto violated = [&](const MayMove& mv) {
    int fx = value[mv.from];
    int fy = value[mv.to];
    if (fx == kUnset || fy == kUnset) return false;
    return (fx == 0 || fx == mv.direction) && fy != mv.direction;
  };

  std::vector<MayFunctionTable> out;
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == free_slots.size()) {
      out.emplace_back(voters, value);
      return;
    }
    const std::size_t i = free_slots[depth];
    for (int v : {-1, 0, 1}) {
      value[i] = v;
      value[partner[i]] = -v;
      bool ok = true;
      for (std::size_t slot : {i, partner[i]}) {
        for (std::size_t m : touching[slot]) {
          if (violated(moves[m])) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) assign(depth + 1);
    }
    value[i] = kUnset;
    value[partner[i]] = kUnset;
  };
  // Self-negating triples can already conflict with each other.
  for (const auto& mv : moves) {
    if (violated(mv)) return out;
  }
  assign(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// C-families

namespace {

struct Orbit {
  std::size_t rep;
  std::size_t level;
  // (member signature, position map: rep position i lands on map[i])
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> members;
  std::vector<std::size_t> allowed;  // rep positions with a unique count
};

std::vector<Orbit> build_orbits(const SignatureSpace& space) {
  const std::size_t k = space.dimension();
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(space.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (seen[i]) continue;
    Orbit o{i, space.total(i), {}, {}};
    const auto& rep = space[i].counts;
    for (const auto& p : perms) {
      CountSignature moved{std::vector<std::uint32_t>(k)};
      for (std::size_t pos = 0; pos < k; ++pos) moved.counts[p[pos]] = rep[pos];
      auto j = space.index_of(moved);
      if (seen[j]) continue;
      seen[j] = true;
      o.members.emplace_back(j, p);
    }
    for (std::size_t pos = 0; pos < k; ++pos) {
      if (std::count(rep.begin(), rep.end(), rep[pos]) == 1) o.allowed.push_back(pos);
    }
    orbits.push_back(std::move(o));
  }
  return orbits;
}

class FamilySearch {
 public:
  FamilySearch(const Alphabet& alphabet, std::shared_ptr<const SignatureSpace> space, const CFamilyOptions& options)
      : alphabet_(alphabet), space_(std::move(space)), options_(options), orbits_(build_orbits(*space_)) {
    const std::size_t k = space_->dimension();
    // Predecessor (signature minus one ballot at pos) of each signature.
    preds_.assign(space_->size() * k, SignatureSpace::npos);
    for (std::size_t i = 0; i < space_->size(); ++i) {
      for (std::size_t pos = 0; pos < k; ++pos) {
        auto next = space_->successor(i, pos);
        if (next != SignatureSpace::npos) preds_[next * k + pos] = i;
      }
    }
    level_start_.assign(space_->horizon() + 2, orbits_.size());
    for (std::size_t o = orbits_.size(); o-- > 0;) level_start_[orbits_[o].level] = o;
    for (std::size_t l = space_->horizon() + 1; l-- > 0;) level_start_[l] = std::min(level_start_[l], level_start_[l + 1]);
  }

  std::size_t orbit_count() const { return orbits_.size(); }

  // Value codes: 0 = tie, p + 1 = non-tie position p.
  using Table = std::vector<std::uint8_t>;

  /// Assignments of the first `depth` orbits that pass every check so far.
  std::vector<Table> prefixes(std::size_t depth) {
    std::vector<Table> out;
    Table t(space_->size(), 0);
    collect(0, depth, t, out);
    return out;
  }

  /// Completes `prefix` (first `depth` orbits fixed), appending to `out`.
  void complete(Table prefix, std::size_t depth, std::vector<Table>& out) {
    run(depth, prefix, out);
  }

 private:
  bool assign(std::size_t o, std::size_t choice, Table& t) const {
    const auto& orbit = orbits_[o];
    const std::size_t k = space_->dimension();
    for (const auto& [sig, map] : orbit.members) {
      const std::uint8_t v = choice == 0 ? 0 : static_cast<std::uint8_t>(map[orbit.allowed[choice - 1]] + 1);
      t[sig] = v;
      // Consistency inside the horizon: a predecessor won by p forces p here.
      for (std::size_t pos = 0; pos < k; ++pos) {
        auto pred = preds_[sig * k + pos];
        if (pred != SignatureSpace::npos && t[pred] == pos + 1 && v != pos + 1) return false;
      }
    }
    return true;
  }

  // Every tie at `level` has a conclusive one-ballot extension.
  bool c6_holds(std::size_t level, const Table& t) const {
    if (!options_.with_c6 || level + 1 > space_->horizon()) return true;
    for (std::size_t o = level_start_[level]; o < level_start_[level + 1]; ++o) {
      for (const auto& [sig, map] : orbits_[o].members) {
        if (t[sig] != 0) continue;
        bool breakable = false;
        for (std::size_t pos = 0; pos < space_->dimension() && !breakable; ++pos) {
          breakable = t[space_->successor(sig, pos)] != 0;
        }
        if (!breakable) return false;
      }
    }
    return true;
  }

  bool level_checks(std::size_t o, const Table& t) const {
    // Entering orbit o: if it starts level L, level L-2 is now decidable.
    if (o == orbits_.size()) return space_->horizon() == 0 || c6_holds(space_->horizon() - 1, t);
    const std::size_t level = orbits_[o].level;
    if (o == level_start_[level] && level >= 2) return c6_holds(level - 2, t);
    return true;
  }

  void collect(std::size_t o, std::size_t depth, Table& t, std::vector<Table>& out) {
    if (!level_checks(o, t)) return;
    if (o == depth || o == orbits_.size()) {
      out.push_back(t);
      return;
    }
    for (std::size_t choice = 0; choice <= orbits_[o].allowed.size(); ++choice) {
      if (assign(o, choice, t)) collect(o + 1, depth, t, out);
    }
  }

  void run(std::size_t o, Table& t, std::vector<Table>& out) {
    if (!level_checks(o, t)) return;
    if (o == orbits_.size()) {
      if (out.size() >= options_.max_families) throw BoundError("more than " + std::to_string(options_.max_families) + " families");
      out.push_back(t);
      return;
    }
    for (std::size_t choice = 0; choice <= orbits_[o].allowed.size(); ++choice) {
      if (assign(o, choice, t)) run(o + 1, t, out);
    }
  }

  Alphabet alphabet_;
  std::shared_ptr<const SignatureSpace> space_;
  CFamilyOptions options_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> preds_;
  std::vector<std::size_t> level_start_;
};

}  // namespace

FamilySet enumerate_c_families(const Alphabet& alphabet, std::size_t horizon, const CFamilyOptions& options) {
  const std::size_t k = alphabet.non_bot_count();
  if (k < 2 || k > 3) throw BoundError("C-family enumeration supports 2 or 3 non-tie alternatives");
  if (horizon > options.max_horizon) {
    throw BoundError("horizon " + std::to_string(horizon) + " exceeds the bound " + std::to_string(options.max_horizon));
  }
  auto space = SignatureSpace::get(k, horizon);
  FamilySearch search(alphabet, space, options);

  std::vector<FamilySearch::Table> tables;
  const unsigned workers = std::max(1U, options.threads);
  if (workers == 1) {
    search.complete(FamilySearch::Table(space->size(), 0), 0, tables);
  } else {
    const std::size_t depth = std::min<std::size_t>(search.orbit_count(), 6);
    auto prefixes = search.prefixes(depth);
    std::vector<std::vector<FamilySearch::Table>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < prefixes.size(); i += workers) search.complete(prefixes[i], depth, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& part : parts) {
      for (auto& t : part) tables.push_back(std::move(t));
    }
    if (tables.size() > options.max_families) {
      throw BoundError("more than " + std::to_string(options.max_families) + " families");
    }
  }

  FamilySet set{alphabet, horizon, options.with_c6, {}};
  set.families.reserve(tables.size());
  for (const auto& t : tables) {
    std::vector<Alt> values;
    values.reserve(t.size());
    for (auto code : t) values.push_back(code == 0 ? alphabet.bot() : alphabet.non_bot()[code - 1U]);
    set.families.emplace_back(alphabet, space, std::move(values));
  }
  std::sort(set.families.begin(), set.families.end());
  return set;
}

// ---------------------------------------------------------------------------
// The order f <= g

OrderVerdict rule_leq(const Rule& f, const Rule& g, std::size_t max_voters) {
  if (!(f.alphabet() == g.alphabet())) throw InputError("compared rules must share an alphabet");
  const auto& alphabet = f.alphabet();
  OrderVerdict out;
  for_each_profile_up_to(alphabet, max_voters, [&](const Profile& p) {
    Alt fv = f(p);
    if (alphabet.is_bot(fv)) return true;
    Alt gv = g(p);
    if (fv == gv) return true;
    out = {false, p, fv, gv};
    return false;
  });
  return out;
}

bool family_leq(const TabulatedFamily& f, const TabulatedFamily& g) {
  if (f.table().size() != g.table().size() || !(f.alphabet() == g.alphabet())) {
    throw InputError("compared families must share alphabet and horizon");
  }
  const Alt bot = f.alphabet().bot();
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (f.at(i) != bot && f.at(i) != g.at(i)) return false;
  }
  return true;
}

std::vector<std::size_t> maximal_elements(const FamilySet& set) {
  const auto& fams = set.families;
  if (fams.empty()) return {};
  const std::size_t sigs = fams.front().table().size();
  const std::size_t words = (sigs + 63) / 64;
  const std::size_t symbols = set.alphabet.size();
  const Alt bot = set.alphabet.bot();
  // masks[f][s] marks the signatures where family f returns symbol s.
  std::vector<std::uint64_t> masks(fams.size() * symbols * words, 0);
  std::vector<std::size_t> conclusive(fams.size(), 0);
  for (std::size_t f = 0; f < fams.size(); ++f) {
    for (std::size_t i = 0; i < sigs; ++i) {
      Alt v = fams[f].at(i);
      if (v == bot) continue;
      ++conclusive[f];
      masks[(f * symbols + index(v)) * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  auto leq = [&](std::size_t f, std::size_t g) {
    for (std::size_t s = 0; s < symbols; ++s) {
      for (std::size_t w = 0; w < words; ++w) {
        auto mf = masks[(f * symbols + s) * words + w];
        auto mg = masks[(g * symbols + s) * words + w];
        if ((mf & ~mg) != 0) return false;
      }
    }
    return true;
  };
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < fams.size(); ++g) {
    bool dominated = false;
    for (std::size_t h = 0; h < fams.size() && !dominated; ++h) {
      // Distinct h above g must be conclusive on strictly more signatures.
      if (conclusive[h] <= conclusive[g]) continue;
      dominated = leq(g, h);
    }
    if (!dominated) out.push_back(g);
  }
  return out;
}

FamilySet subset(const FamilySet& set, const std::vector<std::size_t>& indices) {
  FamilySet out{set.alphabet, set.horizon, set.with_c6, {}};
  for (auto i : indices) out.families.push_back(set.families.at(i));
  return out;
}

std::optional<std::size_t> first_plurality_violation(const TabulatedFamily& family) {
  const auto& alphabet = family.alphabet();
  const auto& space = family.space();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Alt v = family.at(i);
    if (alphabet.is_bot(v)) continue;
    const auto& counts = space[i].counts;
    const auto top = counts[alphabet.non_bot_position(v)];
    const bool strict = std::count_if(counts.begin(), counts.end(), [&](auto c) { return c >= top; }) == 1;
    if (!strict) return space.total(i);
  }
  return std::nullopt;
}

HorizonSplit split_horizon_artifacts(const FamilySet& set) {
  HorizonSplit out;
  for (std::size_t i = 0; i < set.families.size(); ++i) {
    auto bad = first_plurality_violation(set.families[i]);
    if (!bad) {
      out.sound.push_back(i);
    } else if (2 * *bad > set.horizon) {
      out.artifacts.push_back(i);
    } else {
      out.violations.push_back(i);
    }
  }
  return out;
}

}  // namespace sct
