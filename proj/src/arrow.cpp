#include "sct/arrow.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <thread>

#include "sct/errors.hpp"

namespace sct::arrow {

Relation::Relation(std::size_t alternatives) : m_(alternatives) {
  if (alternatives < 1 || alternatives > kMaxAlternatives) throw InputError("unsupported number of alternatives");
}

void Relation::set_stance(AltIndex a, AltIndex b, Stance s) {
  const std::uint32_t ab = std::uint32_t{1} << (a * m_ + b);
  const std::uint32_t ba = std::uint32_t{1} << (b * m_ + a);
  bits_ &= ~(ab | ba);
  if (s != Stance::second) bits_ |= ab;
  if (s != Stance::first) bits_ |= ba;
}

std::optional<Stance> Relation::stance(AltIndex a, AltIndex b) const {
  bool ab = contains(a, b);
  bool ba = contains(b, a);
  if (ab && ba) return Stance::tie;
  if (ab) return Stance::first;
  if (ba) return Stance::second;
  return std::nullopt;
}

bool Relation::is_reflexive() const {
  for (AltIndex a = 0; a < m_; ++a) {
    if (!contains(a, a)) return false;
  }
  return true;
}

bool Relation::is_complete() const {
  for (AltIndex a = 0; a < m_; ++a) {
    for (AltIndex b = 0; b < m_; ++b) {
      if (!contains(a, b) && !contains(b, a)) return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (AltIndex a = 0; a < m_; ++a) {
    for (AltIndex b = 0; b < m_; ++b) {
      if (!contains(a, b)) continue;
      for (AltIndex c = 0; c < m_; ++c) {
        if (contains(b, c) && !contains(a, c)) return false;
      }
    }
  }
  return true;
}

std::optional<WeakOrder> Relation::to_weak_order() const {
  if (!is_total_preorder()) return std::nullopt;
  // Rank = number of distinct strictly-better classes.
  std::vector<std::size_t> better(m_, 0);
  for (AltIndex a = 0; a < m_; ++a) {
    for (AltIndex b = 0; b < m_; ++b) {
      if (strictly(b, a)) ++better[a];
    }
  }
  std::vector<std::size_t> levels(better);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::uint8_t> ranks(m_);
  for (AltIndex a = 0; a < m_; ++a) {
    ranks[a] = static_cast<std::uint8_t>(std::lower_bound(levels.begin(), levels.end(), better[a]) - levels.begin());
  }
  return WeakOrder(std::move(ranks));
}

WeakOrder::WeakOrder(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty() || ranks_.size() > Relation::kMaxAlternatives) throw InputError("unsupported order size");
  std::vector<bool> used(ranks_.size(), false);
  for (auto r : ranks_) {
    if (r >= ranks_.size()) throw InputError("rank out of range");
    used[r] = true;
  }
  auto top = *std::max_element(ranks_.begin(), ranks_.end());
  for (std::size_t r = 0; r <= top; ++r) {
    if (!used[r]) throw InputError("ranks of a weak order must be contiguous from 0");
  }
}

WeakOrder WeakOrder::from_blocks(const std::vector<std::vector<AltIndex>>& blocks, std::size_t alternatives) {
  std::vector<std::uint8_t> ranks(alternatives, 0xFF);
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    if (blocks[r].empty()) throw InputError("empty indifference block");
    for (AltIndex a : blocks[r]) {
      if (a >= alternatives || ranks[a] != 0xFF) throw InputError("blocks must partition the alternatives");
      ranks[a] = static_cast<std::uint8_t>(r);
    }
  }
  if (std::count(ranks.begin(), ranks.end(), 0xFF) != 0) throw InputError("blocks must cover every alternative");
  return WeakOrder(std::move(ranks));
}

WeakOrder WeakOrder::parse(std::string_view text, const std::vector<std::string>& names) {
  std::vector<std::vector<AltIndex>> blocks(1);
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw InputError("missing alternative in order '" + std::string(text) + "'");
    auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end()) throw InputError("unknown alternative '" + token + "'");
    blocks.back().push_back(static_cast<AltIndex>(it - names.begin()));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '>' || c == '=') {
      flush();
      if (c == '>') blocks.emplace_back();
    } else {
      token += c;
    }
  }
  flush();
  return from_blocks(blocks, names.size());
}

std::vector<std::vector<AltIndex>> WeakOrder::blocks() const {
  auto top = *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<std::vector<AltIndex>> out(top + 1U);
  for (AltIndex a = 0; a < ranks_.size(); ++a) out[ranks_[a]].push_back(a);
  return out;
}

Relation WeakOrder::relation() const {
  Relation r(ranks_.size());
  for (AltIndex a = 0; a < ranks_.size(); ++a) {
    for (AltIndex b = 0; b < ranks_.size(); ++b) {
      if (ranks_[a] <= ranks_[b]) r.insert(a, b);
    }
  }
  return r;
}

WeakOrder WeakOrder::reversed() const {
  auto top = *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<std::uint8_t> out(ranks_.size());
  for (std::size_t a = 0; a < ranks_.size(); ++a) out[a] = static_cast<std::uint8_t>(top - ranks_[a]);
  return WeakOrder(std::move(out));
}

std::string WeakOrder::to_string(const std::vector<std::string>& names) const {
  std::string out;
  auto bs = blocks();
  for (std::size_t r = 0; r < bs.size(); ++r) {
    if (r) out += " > ";
    for (std::size_t i = 0; i < bs[r].size(); ++i) {
      if (i) out += " = ";
      out += names.at(bs[r][i]);
    }
  }
  return out;
}

std::vector<WeakOrder> enumerate_weak_orders(std::size_t alternatives) {
  if (alternatives < 1 || alternatives > Relation::kMaxAlternatives) {
    throw BoundError("weak orders are enumerated for 1 to 5 alternatives");
  }
  std::vector<std::pair<std::size_t, WeakOrder>> keyed;
  std::vector<std::uint8_t> ranks(alternatives, 0);
  while (true) {
    std::vector<bool> used(alternatives, false);
    for (auto r : ranks) used[r] = true;
    auto blocks = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
    if (std::all_of(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(blocks), [](bool u) { return u; })) {
      keyed.emplace_back(blocks, WeakOrder(ranks));
    }
    std::size_t pos = alternatives;
    while (pos > 0 && ranks[pos - 1] + 1U == alternatives) ranks[--pos] = 0;
    if (pos == 0) break;
    ++ranks[pos - 1];
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<WeakOrder> out;
  for (auto& [_, w] : keyed) out.push_back(std::move(w));
  return out;
}

Stance restrict(const WeakOrder& w, AltIndex a, AltIndex b) {
  if (a == b) throw InputError("restriction needs two distinct alternatives");
  if (w.rank(a) < w.rank(b)) return Stance::first;
  if (w.rank(a) > w.rank(b)) return Stance::second;
  return Stance::tie;
}

std::vector<std::string> default_names(std::size_t alternatives) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < alternatives; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

ArrowDomain::ArrowDomain(std::size_t voters, std::size_t alternatives)
    : voters_(voters),
      alternatives_(alternatives),
      orders_(enumerate_weak_orders(alternatives)),
      names_(default_names(alternatives)) {
  if (voters < 1) throw InputError("an Arrow profile needs at least one voter");
  profile_count_ = 1;
  place_.assign(voters, 1);
  for (std::size_t v = voters; v-- > 0;) {
    place_[v] = profile_count_;
    if (profile_count_ > (std::size_t{1} << 24) / orders_.size()) throw BoundError("Arrow profile space too large");
    profile_count_ *= orders_.size();
  }
}

std::size_t ArrowDomain::order_of(std::size_t p, std::size_t voter) const {
  return (p / place_[voter]) % orders_.size();
}

std::size_t ArrowDomain::with_order(std::size_t p, std::size_t voter, std::size_t o) const {
  return p - order_of(p, voter) * place_[voter] + o * place_[voter];
}

ArrowProfile ArrowDomain::profile(std::size_t p) const {
  ArrowProfile x;
  for (std::size_t v = 0; v < voters_; ++v) x.push_back(orders_[order_of(p, v)]);
  return x;
}

std::size_t ArrowDomain::order_index(const WeakOrder& w) const {
  auto it = std::find(orders_.begin(), orders_.end(), w);
  if (it == orders_.end()) throw InputError("order over a different alternative set");
  return static_cast<std::size_t>(it - orders_.begin());
}

std::size_t ArrowDomain::index_of(const ArrowProfile& x) const {
  if (x.size() != voters_) throw InputError("profile has the wrong number of voters");
  std::size_t p = 0;
  for (std::size_t v = 0; v < voters_; ++v) p += order_index(x[v]) * place_[v];
  return p;
}

SwfTable::SwfTable(std::shared_ptr<const ArrowDomain> domain, std::vector<Relation> outcomes, std::string name)
    : domain_(std::move(domain)), outcomes_(std::move(outcomes)), name_(std::move(name)) {
  if (outcomes_.size() != domain_->profile_count()) throw InputError("SWF table does not cover the profile space");
  for (const auto& r : outcomes_) {
    if (r.alternatives() != domain_->alternatives()) throw InputError("SWF outcome over the wrong alternatives");
  }
}

SwfTable SwfTable::tabulate(std::shared_ptr<const ArrowDomain> domain,
                            const std::function<Relation(const ArrowProfile&)>& f, std::string name) {
  std::vector<Relation> out;
  out.reserve(domain->profile_count());
  for (std::size_t p = 0; p < domain->profile_count(); ++p) out.push_back(f(domain->profile(p)));
  return SwfTable(std::move(domain), std::move(out), std::move(name));
}

std::string to_string(PreferenceReading r) { return r == PreferenceReading::strict ? "strict" : "weak"; }

ArrowVerdict check_a1(const SwfTable& f) {
  for (std::size_t p = 0; p < f.domain().profile_count(); ++p) {
    if (!f(p).is_total_preorder()) return {false, ArrowWitness{"A1", {p}, std::nullopt, std::nullopt}};
  }
  return {};
}

ArrowVerdict check_a2(const SwfTable& f) {
  const auto& d = f.domain();
  const auto& orders = d.orders();
  const std::size_t m = d.alternatives();
  for (std::size_t x = 0; x < d.profile_count(); ++x) {
    for (std::size_t v = 0; v < d.voters(); ++v) {
      const auto& xv = orders[d.order_of(x, v)];
      for (std::size_t o = 0; o < orders.size(); ++o) {
        const auto& yv = orders[o];
        const std::size_t y = d.with_order(x, v, o);
        for (AltIndex a = 0; a < m; ++a) {
          for (AltIndex a2 = 0; a2 < m; ++a2) {
            if (a == a2) continue;
            if (!xv.weakly_prefers(a2, a) || !yv.weakly_prefers(a, a2)) continue;
            bool same_elsewhere = true;
            for (AltIndex s = 0; s < m && same_elsewhere; ++s) {
              for (AltIndex t = 0; t < m; ++t) {
                if (s == a || s == a2 || t == a || t == a2) continue;
                if (xv.weakly_prefers(s, t) != yv.weakly_prefers(s, t)) {
                  same_elsewhere = false;
                  break;
                }
              }
            }
            if (!same_elsewhere) continue;
            if (f(x).contains(a, a2) && !f(y).contains(a, a2)) {
              return {false, ArrowWitness{"A2", {x, y}, v, std::pair{a, a2}}};
            }
          }
        }
      }
    }
  }
  return {};
}

std::size_t stance_vector_index(const ArrowDomain& domain, std::size_t p, AltIndex a, AltIndex b) {
  std::size_t key = 0;
  for (std::size_t v = 0; v < domain.voters(); ++v) {
    key = key * 3 + static_cast<std::size_t>(restrict(domain.orders()[domain.order_of(p, v)], a, b));
  }
  return key;
}

ArrowVerdict check_a3(const SwfTable& f) {
  const auto& d = f.domain();
  const std::size_t m = d.alternatives();
  for (AltIndex a = 0; a < m; ++a) {
    for (AltIndex b = a + 1; b < m; ++b) {
      std::map<std::size_t, std::size_t> first_seen;
      for (std::size_t p = 0; p < d.profile_count(); ++p) {
        auto key = stance_vector_index(d, p, a, b);
        auto [it, fresh] = first_seen.emplace(key, p);
        if (fresh) continue;
        const auto& fx = f(it->second);
        const auto& fy = f(p);
        if (fx.contains(a, b) != fy.contains(a, b) || fx.contains(b, a) != fy.contains(b, a)) {
          return {false, ArrowWitness{"A3", {it->second, p}, std::nullopt, std::pair{a, b}}};
        }
      }
    }
  }
  return {};
}

ArrowVerdict check_a4(const SwfTable& f, PreferenceReading reading) {
  const auto& d = f.domain();
  const std::size_t m = d.alternatives();
  for (AltIndex a = 0; a < m; ++a) {
    for (AltIndex b = 0; b < m; ++b) {
      if (a == b) continue;
      bool hit_ab = false;
      bool hit_ba = false;
      for (std::size_t p = 0; p < d.profile_count(); ++p) {
        if (reading == PreferenceReading::strict) {
          hit_ab = hit_ab || f(p).strictly(a, b);
          hit_ba = true;
        } else {
          hit_ab = hit_ab || f(p).contains(a, b);
          hit_ba = hit_ba || f(p).contains(b, a);
        }
        if (hit_ab && hit_ba) break;
      }
      if (!hit_ab || !hit_ba) return {false, ArrowWitness{"A4", {}, std::nullopt, std::pair{a, b}}};
    }
  }
  return {};
}

std::optional<std::size_t> find_dictator(const SwfTable& f, PreferenceReading reading) {
  const auto& d = f.domain();
  const std::size_t m = d.alternatives();
  for (std::size_t v = 0; v < d.voters(); ++v) {
    bool dictator = true;
    for (std::size_t p = 0; p < d.profile_count() && dictator; ++p) {
      const auto mine = d.orders()[d.order_of(p, v)].relation();
      for (AltIndex a = 0; a < m && dictator; ++a) {
        for (AltIndex b = 0; b < m; ++b) {
          if (a == b) continue;
          bool honored = reading == PreferenceReading::strict ? (!mine.strictly(a, b) || f(p).strictly(a, b))
                                                              : (!mine.contains(a, b) || f(p).contains(a, b));
          if (!honored) {
            dictator = false;
            break;
          }
        }
      }
    }
    if (dictator) return v;
  }
  return std::nullopt;
}

ArrowVerdict check_a5(const SwfTable& f, PreferenceReading reading) {
  if (auto v = find_dictator(f, reading)) return {false, ArrowWitness{"A5", {}, *v, std::nullopt}};
  return {};
}

std::optional<std::vector<PairFunction>> pair_functions(const SwfTable& f) {
  const auto& d = f.domain();
  const std::size_t m = d.alternatives();
  std::size_t grid = 1;
  for (std::size_t v = 0; v < d.voters(); ++v) grid *= 3;
  std::vector<PairFunction> out;
  for (AltIndex a = 0; a < m; ++a) {
    for (AltIndex b = a + 1; b < m; ++b) {
      std::vector<std::optional<Stance>> seen(grid);
      for (std::size_t p = 0; p < d.profile_count(); ++p) {
        auto s = f(p).stance(a, b);
        if (!s) return std::nullopt;
        auto& slot = seen[stance_vector_index(d, p, a, b)];
        if (slot && *slot != *s) return std::nullopt;
        slot = s;
      }
      PairFunction pf{a, b, d.voters(), {}};
      for (auto& s : seen) pf.outcome.push_back(s.value_or(Stance::tie));
      out.push_back(std::move(pf));
    }
  }
  return out;
}

bool factors_through_pairs(const SwfTable& f) {
  auto pfs = pair_functions(f);
  if (!pfs) return false;
  const auto& d = f.domain();
  for (std::size_t p = 0; p < d.profile_count(); ++p) {
    Relation rebuilt(d.alternatives());
    for (AltIndex a = 0; a < d.alternatives(); ++a) rebuilt.insert(a, a);
    for (const auto& pf : *pfs) rebuilt.set_stance(pf.a, pf.b, pf.outcome[stance_vector_index(d, p, pf.a, pf.b)]);
    if (rebuilt != f(p)) return false;
  }
  return true;
}

MajorityResult pairwise_majority_swf(const ArrowProfile& x) {
  if (x.empty()) throw InputError("pairwise majority needs at least one voter");
  const std::size_t m = x.front().alternatives();
  Relation r(m);
  for (AltIndex a = 0; a < m; ++a) {
    r.insert(a, a);
    for (AltIndex b = a + 1; b < m; ++b) {
      int margin = 0;
      for (const auto& w : x) {
        if (w.alternatives() != m) throw InputError("orders over different alternative sets");
        auto s = restrict(w, a, b);
        margin += s == Stance::first ? 1 : s == Stance::second ? -1 : 0;
      }
      r.set_stance(a, b, margin > 0 ? Stance::first : margin < 0 ? Stance::second : Stance::tie);
    }
  }
  return {r, r.is_transitive()};
}

SwfTable projection_swf(std::shared_ptr<const ArrowDomain> domain, std::size_t voter) {
  if (voter >= domain->voters()) throw InputError("no such voter");
  return SwfTable::tabulate(
      domain, [voter](const ArrowProfile& x) { return x[voter].relation(); },
      "projection:" + std::to_string(voter));
}

SwfTable anti_dictator_swf(std::shared_ptr<const ArrowDomain> domain, std::size_t voter) {
  if (voter >= domain->voters()) throw InputError("no such voter");
  return SwfTable::tabulate(
      domain, [voter](const ArrowProfile& x) { return x[voter].reversed().relation(); },
      "anti-dictator:" + std::to_string(voter));
}

SwfTable constant_swf(std::shared_ptr<const ArrowDomain> domain, const WeakOrder& w) {
  auto names = domain->names();
  return SwfTable::tabulate(
      domain, [w](const ArrowProfile&) { return w.relation(); }, "constant:" + w.to_string(names));
}

SwfTable borda_swf(std::shared_ptr<const ArrowDomain> domain) {
  const std::size_t m = domain->alternatives();
  return SwfTable::tabulate(
      domain,
      [m](const ArrowProfile& x) {
        std::vector<int> score(m, 0);
        for (const auto& w : x) {
          for (AltIndex a = 0; a < m; ++a) {
            for (AltIndex b = 0; b < m; ++b) {
              if (w.rank(a) < w.rank(b)) ++score[a];
              if (w.rank(a) > w.rank(b)) --score[a];
            }
          }
        }
        Relation r(m);
        for (AltIndex a = 0; a < m; ++a) {
          for (AltIndex b = 0; b < m; ++b) {
            if (score[a] >= score[b]) r.insert(a, b);
          }
        }
        return r;
      },
      "borda");
}

SwfTable pairwise_majority_table(std::shared_ptr<const ArrowDomain> domain) {
  return SwfTable::tabulate(
      domain, [](const ArrowProfile& x) { return pairwise_majority_swf(x).relation; }, "pairwise-majority");
}

namespace {

// Pair-level A2 in both orientations plus strict non-imposition.
bool admissible(const std::vector<Stance>& g, std::size_t voters) {
  const std::size_t grid = g.size();
  bool hits_first = false;
  bool hits_second = false;
  for (auto s : g) {
    hits_first = hits_first || s == Stance::first;
    hits_second = hits_second || s == Stance::second;
  }
  if (!hits_first || !hits_second) return false;
  std::size_t place = 1;
  for (std::size_t v = voters; v-- > 0;) {
    for (std::size_t key = 0; key < grid; ++key) {
      const std::size_t from = (key / place) % 3;
      for (std::size_t to = 0; to < 3; ++to) {
        if (to == from) continue;
        const std::size_t moved = key - from * place + to * place;
        // Toward the first alternative: stance index decreases, from weakly
        // second to weakly first.
        if (from >= 1 && to <= 1 && g[key] != Stance::second && g[moved] == Stance::second) return false;
        // Toward the second alternative.
        if (from <= 1 && to >= 1 && g[key] != Stance::first && g[moved] == Stance::first) return false;
      }
    }
    place *= 3;
  }
  return true;
}

std::vector<std::vector<Stance>> pair_candidates(std::size_t voters) {
  std::size_t grid = 1;
  for (std::size_t v = 0; v < voters; ++v) grid *= 3;
  std::vector<std::vector<Stance>> out;
  std::vector<Stance> g(grid, Stance::first);
  while (true) {
    if (admissible(g, voters)) out.push_back(g);
    std::size_t pos = grid;
    while (pos > 0 && g[pos - 1] == Stance::second) g[--pos] = Stance::first;
    if (pos == 0) break;
    g[pos - 1] = static_cast<Stance>(static_cast<int>(g[pos - 1]) + 1);
  }
  return out;
}

}  // namespace

ArrowSearchResult arrow_search(std::size_t voters, std::size_t alternatives, unsigned threads) {
  if (voters < 1 || voters > 2 || alternatives < 2 || alternatives > 3) {
    throw BoundError("arrow search is limited to 1-2 voters and 2-3 alternatives");
  }
  auto domain = std::make_shared<const ArrowDomain>(voters, alternatives);
  const auto candidates = pair_candidates(voters);

  std::vector<std::pair<AltIndex, AltIndex>> pairs;
  for (AltIndex a = 0; a < alternatives; ++a) {
    for (AltIndex b = a + 1; b < alternatives; ++b) pairs.emplace_back(a, b);
  }

  // Per profile, the stance-vector key on each pair; duplicates collapse.
  std::vector<std::vector<std::size_t>> keys(domain->profile_count());
  for (std::size_t p = 0; p < domain->profile_count(); ++p) {
    for (auto [a, b] : pairs) keys[p].push_back(stance_vector_index(*domain, p, a, b));
  }
  auto distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  auto build = [&](const std::vector<const std::vector<Stance>*>& chosen) {
    std::vector<Relation> outcomes;
    outcomes.reserve(domain->profile_count());
    for (std::size_t p = 0; p < domain->profile_count(); ++p) {
      Relation r(alternatives);
      for (AltIndex a = 0; a < alternatives; ++a) r.insert(a, a);
      for (std::size_t i = 0; i < pairs.size(); ++i) r.set_stance(pairs[i].first, pairs[i].second, (*chosen[i])[keys[p][i]]);
      outcomes.push_back(r);
    }
    return outcomes;
  };

  ArrowSearchResult result{domain, std::vector<std::size_t>(pairs.size(), candidates.size()), 0, {}};
  std::vector<std::vector<Relation>> found;

  if (pairs.size() == 1) {
    for (const auto& g : candidates) {
      ++result.combinations;
      found.push_back(build({&g}));
    }
  } else {
    // Stance triples on (ab, ac, bc) that form a total preorder.
    std::array<bool, 27> consistent{};
    for (std::size_t code = 0; code < 27; ++code) {
      Relation r(3);
      for (AltIndex a = 0; a < 3; ++a) r.insert(a, a);
      r.set_stance(0, 1, static_cast<Stance>(code / 9));
      r.set_stance(0, 2, static_cast<Stance>((code / 3) % 3));
      r.set_stance(1, 2, static_cast<Stance>(code % 3));
      consistent[code] = r.is_transitive();
    }
    const std::size_t n = candidates.size();
    const unsigned workers = std::max(1U, threads);
    std::vector<std::vector<std::vector<Relation>>> per_worker(workers);
    std::vector<std::uint64_t> examined(workers, 0);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < n; i += workers) {
        const auto& g01 = candidates[i];
        for (const auto& g02 : candidates) {
          for (const auto& g12 : candidates) {
            ++examined[w];
            bool ok = true;
            for (const auto& k : distinct) {
              auto code = static_cast<std::size_t>(g01[k[0]]) * 9 + static_cast<std::size_t>(g02[k[1]]) * 3 +
                          static_cast<std::size_t>(g12[k[2]]);
              if (!consistent[code]) {
                ok = false;
                break;
              }
            }
            if (ok) per_worker[w].push_back(build({&g01, &g02, &g12}));
          }
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (unsigned w = 0; w < workers; ++w) {
      result.combinations += examined[w];
      for (auto& o : per_worker[w]) found.push_back(std::move(o));
    }
  }

  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    result.survivors.emplace_back(domain, std::move(found[i]), "survivor:" + std::to_string(i));
  }
  return result;
}

}  // namespace sct::arrow
