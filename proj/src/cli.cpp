#include "sct/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sct/arrow.hpp"
#include "sct/axioms.hpp"
#include "sct/ballot_file.hpp"
#include "sct/enumerate.hpp"
#include "sct/errors.hpp"
#include "sct/report.hpp"

namespace sct::cli {

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = text.find(sep, start);
    out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

RulePtr load_tabulated(std::string_view spec) {
  std::string path(spec);
  std::optional<std::size_t> pick;
  if (auto hash = path.rfind('#'); hash != std::string::npos) {
    pick = parse_count(std::string_view(path).substr(hash + 1), "family index");
    path.resize(hash);
  }
  auto doc = read_json(path);
  std::string name = "tabulated:" + std::string(spec);
  if (doc.contains("families")) {
    const auto& fams = doc["families"];
    if (!pick) {
      if (fams.size() != 1) throw InputError(path + " holds " + std::to_string(fams.size()) + " families; add #<index>");
      pick = 0;
    }
    if (*pick >= fams.size()) throw InputError("family index " + std::to_string(*pick) + " out of range");
    return make_tabulated(family_from_json(fams[*pick]), name);
  }
  if (pick) throw InputError(path + " holds a single family; drop the #index");
  return make_tabulated(family_from_json(doc), name);
}

}  // namespace

Alphabet parse_alphabet(std::string_view text) {
  if (text == "may") return Alphabet::may();
  if (text.find(',') != std::string_view::npos) {
    auto symbols = split(text, ',');
    symbols.push_back("_");
    return Alphabet(std::move(symbols), "_");
  }
  auto k = parse_count(text, "alternative count");
  if (k < 1 || k + 1 > Alphabet::kMaxSymbols) throw InputError("alternative count must be 1.." + std::to_string(Alphabet::kMaxSymbols - 1));
  return Alphabet::letters(k);
}

RulePtr parse_rule(std::string_view descriptor, const Alphabet& alphabet) {
  auto parts = split(descriptor, ':');
  const auto& head = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n) throw InputError("malformed rule descriptor '" + std::string(descriptor) + "'");
  };
  if (head == "tabulated") {
    if (descriptor.size() <= 10) throw InputError("tabulated needs a file: tabulated:<file>[#index]");
    return load_tabulated(descriptor.substr(10));
  }
  if (head == "pure-majority") {
    arity(1);
    return make_pure_majority(alphabet);
  }
  if (head == "may-sign") {
    arity(1);
    return make_may_sign();
  }
  if (head == "negated-sign") {
    arity(1);
    return make_negated_sign();
  }
  if (head == "always-bot") {
    arity(1);
    return make_always_bot(alphabet);
  }
  if (head == "first-ballot-dictator") {
    arity(1);
    return make_first_ballot_dictator(alphabet);
  }
  if (head == "constant") {
    arity(2);
    return make_constant(alphabet, alphabet.at(parts[1]));
  }
  if (head == "quorum") {
    arity(3);
    QuorumMode mode;
    if (parts[1] == "literal") {
      mode = QuorumMode::literal;
    } else if (parts[1] == "participation") {
      mode = QuorumMode::participation;
    } else {
      throw InputError("quorum mode must be literal or participation");
    }
    return make_quorum(alphabet, parse_count(parts[2], "quorum"), mode);
  }
  if (head == "supermajority") {
    arity(3);
    Denominator denom;
    if (parts[1] == "all") {
      denom = Denominator::all;
    } else if (parts[1] == "nonbot") {
      denom = Denominator::non_bot;
    } else {
      throw InputError("supermajority denominator must be all or nonbot");
    }
    return make_supermajority(alphabet, Rational::parse(parts[2]), denom);
  }
  throw InputError("unknown rule '" + std::string(descriptor) + "'");
}

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// Writes the report to `path`, or to `out` when no path is given.
void emit(Context& ctx, const Json& report, const std::string& path) {
  if (path.empty()) {
    ctx.out << dump(report);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << dump(report);
}

int exit_for(const AuditReport& r) {
  bool bound = false;
  bool input = false;
  for (const auto& v : r.verdicts) {
    if (v.status != VerdictStatus::error) continue;
    (v.bound_error ? bound : input) = true;
  }
  if (bound) return kBoundError;
  if (input) return kInputError;
  return r.all_passed() ? kPass : kAxiomFail;
}

Alphabet default_alphabet(const std::string& rule, const std::string& alternatives) {
  if (!alternatives.empty()) return parse_alphabet(alternatives);
  if (rule == "may-sign" || rule == "negated-sign") return Alphabet::may();
  return Alphabet::letters(2);
}

Ma4Semantics parse_semantics(const std::string& s) {
  if (s == "flip") return Ma4Semantics::flip;
  if (s == "in-favor" || s == "in_favor") return Ma4Semantics::in_favor;
  throw InputError("semantics must be flip or in-favor");
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string rule;
  std::string profile;
};

int cmd_eval(Context& ctx, const EvalArgs& a) {
  auto file = read_ballot_file(a.profile);
  if (file.mode != BallotFile::Mode::single) throw InputError(a.profile + ": eval needs single-choice ballots");
  auto rule = parse_rule(a.rule, file.alphabet);
  Profile p = file.profile;
  if (!(rule->alphabet() == p.alphabet())) {
    // Tabulated and May rules carry their own alphabet; re-read the ballots in it.
    std::vector<Alt> ballots;
    for (const auto& s : p.symbol_names()) ballots.push_back(rule->alphabet().at(s));
    p = Profile(rule->alphabet(), std::move(ballots));
  }
  ctx.out << rule->alphabet().name((*rule)(p)) << "\n";
  return kPass;
}

// --- audit ----------------------------------------------------------------

struct AuditArgs {
  std::string rule;
  std::string alternatives;
  std::size_t max_voters = 5;
  std::string axioms;
  std::string semantics = "in-favor";
  std::string out;
  unsigned threads = 1;
};

int cmd_audit(Context& ctx, const AuditArgs& a) {
  auto rule = parse_rule(a.rule, default_alphabet(a.rule, a.alternatives));
  const auto& alphabet = rule->alphabet();
  std::string axioms = a.axioms.empty() ? (alphabet.is_may() ? "Ma2-Ma4" : "C2-C6") : a.axioms;
  auto ids = parse_axiom_list(axioms);
  auto semantics = parse_semantics(a.semantics);
  auto report = audit(*rule, ids, a.max_voters, {semantics, a.threads});

  Json j = report_header("audit");
  j["parameters"] = Json{{"rule", rule->descriptor()},
                         {"alphabet", alphabet_json(alphabet)},
                         {"axioms", Json::array()},
                         {"ma4_semantics", to_string(semantics)}};
  for (auto id : ids) j["parameters"]["axioms"].push_back(to_string(id));
  j["bounds"] = Json{{"max_voters", a.max_voters},
                     {"profile_sizes", "0.." + std::to_string(a.max_voters)},
                     {"c6_extension_size", a.max_voters + 1},
                     {"may_sizes", "each exact size 0.." + std::to_string(a.max_voters)}};
  std::size_t pass = 0, fail = 0, error = 0;
  for (const auto& v : report.verdicts) {
    j["verdicts"].push_back(verdict_json(v));
    if (v.witness) j["witnesses"].push_back(witness_json(*rule, *v.witness));
    (v.passed() ? pass : v.failed() ? fail : error) += 1;
  }
  j["counts"] = Json{{"pass", pass}, {"fail", fail}, {"error", error}};
  emit(ctx, j, a.out);
  if (!a.out.empty()) {
    for (const auto& v : report.verdicts) {
      ctx.out << to_string(v.axiom) << ": " << to_string(v.status);
      if (v.witness) ctx.out << " " << v.witness->base_profile.to_string();
      if (!v.message.empty()) ctx.out << " (" << v.message << ")";
      ctx.out << "\n";
    }
  }
  return exit_for(report);
}

// --- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::size_t alternatives = 2;
  std::size_t horizon = 6;
  bool with_c6 = false;
  std::size_t max_families = 2'000'000;
  std::string out;
  unsigned threads = 1;
};

int cmd_enumerate(Context& ctx, const EnumerateArgs& a) {
  auto alphabet = Alphabet::letters(a.alternatives);
  CFamilyOptions options;
  options.with_c6 = a.with_c6;
  options.max_families = a.max_families;
  options.threads = a.threads;
  auto set = enumerate_c_families(alphabet, a.horizon, options);
  auto split = split_horizon_artifacts(set);
  auto maximal = maximal_elements(set);
  auto sound_set = subset(set, split.sound);
  std::vector<std::size_t> maximal_sound;
  for (auto i : maximal_elements(sound_set)) maximal_sound.push_back(split.sound[i]);

  const auto pm = TabulatedFamily::from_rule(*make_pure_majority(alphabet), a.horizon);
  std::optional<std::size_t> pm_index;
  for (std::size_t i = 0; i < set.families.size(); ++i) {
    if (set.families[i] == pm) pm_index = i;
  }

  const std::size_t half = a.horizon / 2;
  std::size_t plurality_failures = 0;
  std::size_t tie_failures = 0;
  Json j = report_header("enumerate");
  j["parameters"] = Json{{"alphabet", alphabet_json(alphabet)}, {"horizon", a.horizon}, {"with_c6", a.with_c6}};
  j["bounds"] = Json{{"horizon", a.horizon},
                     {"max_families", a.max_families},
                     {"c6_checked_up_to", a.with_c6 && a.horizon > 0 ? Json(a.horizon - 1) : Json(nullptr)},
                     {"plurality_asserted_up_to", half}};
  for (std::size_t i = 0; i < set.families.size(); ++i) {
    auto rule = make_tabulated(set.families[i]);
    for (auto* check_fn : {&check_plurality_property, &check_unavoidable_ties}) {
      auto v = (*check_fn)(*rule, half);
      if (v.passed()) continue;
      (check_fn == &check_plurality_property ? plurality_failures : tie_failures) += 1;
      Json w = witness_json(*rule, *v.witness);
      w["family"] = i;
      j["witnesses"].push_back(w);
    }
  }
  j["verdicts"].push_back(Json{{"check", "PLURALITY_PROPERTY"},
                               {"up_to", half},
                               {"status", plurality_failures == 0 ? "pass" : "fail"},
                               {"failing_families", plurality_failures}});
  j["verdicts"].push_back(Json{{"check", "UNAVOIDABLE_TIES"},
                               {"up_to", half},
                               {"status", tie_failures == 0 ? "pass" : "fail"},
                               {"failing_families", tie_failures}});
  j["counts"] = Json{{"families", set.families.size()},
                     {"plurality_everywhere", split.sound.size()},
                     {"horizon_artifacts", split.artifacts.size()},
                     {"violations_within_half_horizon", split.violations.size()},
                     {"maximal", maximal.size()},
                     {"maximal_without_artifacts", maximal_sound.size()}};
  j["pure_majority_index"] = pm_index ? Json(*pm_index) : Json(nullptr);
  j["maximal"] = maximal;
  j["maximal_without_artifacts"] = maximal_sound;
  j["horizon_artifacts"] = split.artifacts;
  j["signatures"] = signatures_json(*SignatureSpace::get(alphabet.non_bot_count(), a.horizon));
  Json fams = Json::array();
  for (const auto& f : set.families) fams.push_back(family_json(f));
  j["families"] = fams;
  emit(ctx, j, a.out);
  if (!a.out.empty()) {
    ctx.out << "families: " << set.families.size() << "\nmaximal: " << maximal.size()
            << "\nmaximal without horizon artifacts: " << maximal_sound.size() << "\n";
  }
  return plurality_failures + tie_failures == 0 ? kPass : kAxiomFail;
}

// --- may ------------------------------------------------------------------

struct MayArgs {
  std::size_t voters = 3;
  std::string semantics = "in-favor";
  std::string out;
};

int cmd_may(Context& ctx, const MayArgs& a) {
  auto semantics = parse_semantics(a.semantics);
  auto tables = enumerate_may_functions(a.voters, semantics);
  auto sign = may_sign_table(a.voters);
  Json j = report_header("may");
  j["parameters"] = Json{{"voters", a.voters}, {"semantics", to_string(semantics)}};
  j["bounds"] = Json{{"voters", a.voters}, {"max_voters", 4}};
  bool cross_ok = true;
  Json list = Json::array();
  Json findings = Json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    auto rule = tables[i].as_rule();
    Json entry = may_table_json(tables[i]);
    entry["equals_sign_rule"] = tables[i] == sign;
    for (auto v : {check_ma2(*rule, a.voters), check_ma3(*rule, a.voters), check_ma4(*rule, a.voters, semantics)}) {
      Json vj = verdict_json(v);
      vj["table"] = i;
      j["verdicts"].push_back(vj);
      if (!v.passed()) cross_ok = false;
      if (v.witness) j["witnesses"].push_back(witness_json(*rule, *v.witness));
    }
    if (!(tables[i] == sign)) findings.push_back(Json{{"table", i}, {"note", "satisfies the conditions but differs from the sign rule"}});
    list.push_back(entry);
  }
  j["counts"] = Json{{"tables", tables.size()}, {"triples", sign.domain().size()}};
  j["tables"] = list;
  j["findings"] = findings;
  emit(ctx, j, a.out);
  if (!a.out.empty()) ctx.out << "tables: " << tables.size() << "\n";
  return cross_ok ? kPass : kAxiomFail;
}

// --- arrow-search ---------------------------------------------------------

struct ArrowArgs {
  std::size_t voters = 2;
  std::size_t alternatives = 3;
  std::string reading = "strict";
  bool include_tables = false;
  std::string out;
  unsigned threads = 1;
};

int cmd_arrow_search(Context& ctx, const ArrowArgs& a) {
  arrow::PreferenceReading reading;
  if (a.reading == "strict") {
    reading = arrow::PreferenceReading::strict;
  } else if (a.reading == "weak") {
    reading = arrow::PreferenceReading::weak;
  } else {
    throw InputError("reading must be strict or weak");
  }
  auto result = arrow::arrow_search(a.voters, a.alternatives, a.threads);
  const auto& domain = *result.domain;
  Json j = report_header("arrow-search");
  j["parameters"] = Json{{"voters", a.voters}, {"alternatives", domain.names()}, {"dictator_reading", arrow::to_string(reading)}};
  j["bounds"] = Json{{"voters", a.voters},
                     {"alternatives", a.alternatives},
                     {"weak_orders", domain.orders().size()},
                     {"profiles", domain.profile_count()}};
  std::size_t dictatorial = 0;
  Json swfs = Json::array();
  for (std::size_t i = 0; i < result.survivors.size(); ++i) {
    const auto& f = result.survivors[i];
    auto d = arrow::find_dictator(f, reading);
    if (d) ++dictatorial;
    Json entry;
    entry["index"] = i;
    entry["dictator"] = d ? Json(*d) : Json(nullptr);
    // A weak order per pair and voter-stance vector determines the table.
    Json pairs = Json::array();
    if (auto pfs = arrow::pair_functions(f)) {
      for (const auto& pf : *pfs) {
        Json stances = Json::array();
        for (auto s : pf.outcome) stances.push_back(s == arrow::Stance::first ? ">" : s == arrow::Stance::tie ? "=" : "<");
        pairs.push_back(Json{{"pair", {domain.names()[pf.a], domain.names()[pf.b]}}, {"outcome", stances}});
      }
    }
    entry["pair_functions"] = pairs;
    if (a.include_tables) entry["outcomes"] = swf_json(f)["outcomes"];
    swfs.push_back(entry);
  }
  j["verdicts"].push_back(Json{{"check", "every survivor has a dictator"},
                               {"status", dictatorial == result.survivors.size() ? "pass" : "fail"}});
  j["counts"] = Json{{"pair_candidates", result.pair_candidates},
                     {"combinations", result.combinations},
                     {"survivors", result.survivors.size()},
                     {"dictatorial", dictatorial}};
  j["swfs"] = swfs;
  emit(ctx, j, a.out);
  if (!a.out.empty()) ctx.out << "survivors: " << result.survivors.size() << "\ndictatorial: " << dictatorial << "\n";
  return dictatorial == result.survivors.size() ? kPass : kAxiomFail;
}

// --- order ----------------------------------------------------------------

struct OrderArgs {
  std::string rule_a;
  std::string rule_b;
  std::string alternatives;
  std::size_t max_voters = 6;
  std::string out;
};

int cmd_order(Context& ctx, const OrderArgs& a) {
  auto alphabet = default_alphabet(a.rule_a, a.alternatives);
  auto f = parse_rule(a.rule_a, alphabet);
  auto g = parse_rule(a.rule_b, alphabet);
  auto v = rule_leq(*f, *g, a.max_voters);
  ctx.out << "a < b: " << (v.leq ? "true" : "false") << "\n";
  if (v.witness) {
    const auto& names = f->alphabet();
    ctx.out << "witness: " << v.witness->to_string() << " a=" << names.name(*v.f_value) << " b=" << names.name(*v.g_value)
            << "\n";
  }
  if (!a.out.empty()) {
    Json j = report_header("order");
    j["parameters"] = Json{{"rule_a", f->descriptor()}, {"rule_b", g->descriptor()}, {"alphabet", alphabet_json(f->alphabet())}};
    j["bounds"] = Json{{"max_voters", a.max_voters}};
    j["verdicts"].push_back(Json{{"check", "a < b"}, {"status", v.leq ? "pass" : "fail"}});
    if (v.witness) {
      Json w;
      w["profile"] = v.witness->symbol_names();
      w["a"] = profile_json(*f, *v.witness);
      w["b"] = profile_json(*g, *v.witness);
      j["witnesses"].push_back(w);
    }
    j["counts"] = Json{{"leq", v.leq}};
    emit(ctx, j, a.out);
  }
  return v.leq ? kPass : kAxiomFail;
}

// --- pairwise -------------------------------------------------------------

struct PairwiseArgs {
  std::string profile;
  std::string out;
};

int cmd_pairwise(Context& ctx, const PairwiseArgs& a) {
  auto file = read_ballot_file(a.profile);
  if (file.mode != BallotFile::Mode::rank) throw InputError(a.profile + ": pairwise needs rank: ballots");
  if (file.rank_names.size() > arrow::Relation::kMaxAlternatives) {
    throw BoundError("pairwise supports at most " + std::to_string(arrow::Relation::kMaxAlternatives) + " alternatives");
  }
  auto result = arrow::pairwise_majority_swf(file.rankings);
  const auto& names = file.rank_names;
  Json relation = Json::array();
  for (std::size_t x = 0; x < names.size(); ++x) {
    for (std::size_t y = x + 1; y < names.size(); ++y) {
      auto s = result.relation.stance(x, y).value_or(arrow::Stance::tie);
      std::string line = names[x] + (s == arrow::Stance::first ? " > " : s == arrow::Stance::tie ? " = " : " < ") + names[y];
      relation.push_back(line);
      ctx.out << line << "\n";
    }
  }
  ctx.out << "transitive: " << (result.transitive ? "true" : "false") << "\n";
  if (!a.out.empty()) {
    Json j = report_header("pairwise");
    j["parameters"] = Json{{"alternatives", names}, {"voters", file.rankings.size()}};
    j["verdicts"].push_back(Json{{"check", "transitive"}, {"status", result.transitive ? "pass" : "fail"}});
    j["counts"] = Json{{"voters", file.rankings.size()}};
    j["relation"] = relation;
    if (auto w = result.relation.to_weak_order()) j["order"] = w->to_string(names);
    emit(ctx, j, a.out);
  }
  return result.transitive ? kPass : kAxiomFail;
}

// --- replay ---------------------------------------------------------------

struct ReplayArgs {
  std::string rule;
  std::string profile;
  std::string out;
};

int cmd_replay(Context& ctx, const ReplayArgs& a) {
  auto file = read_ballot_file(a.profile);
  auto rule = parse_rule(a.rule, file.alphabet);
  const auto& alphabet = rule->alphabet();
  std::vector<Alt> ballots;
  for (const auto& s : file.profile.symbol_names()) ballots.push_back(alphabet.at(s));
  auto replay = replay_main_proof(*rule, Profile(alphabet, std::move(ballots)));
  Json j = report_header("replay");
  j["parameters"] = Json{{"rule", rule->descriptor()}, {"profile", replay.input.symbol_names()}};
  j["counts"] = Json{{"steps", replay.chain.size()}};
  j["winner"] = alphabet.name(replay.winner);
  j["outcome"] = alphabet.name(replay.outcome);
  j["confirmed"] = replay.confirmed;
  Json chain = Json::array();
  for (const auto& step : replay.chain) {
    chain.push_back(Json{{"action", step.action},
                         {"axiom", step.axiom ? Json(to_string(*step.axiom)) : Json(nullptr)},
                         {"profile", step.profile.symbol_names()},
                         {"claimed", alphabet.name(step.claimed)},
                         {"observed", alphabet.name(step.observed)}});
  }
  j["chain"] = chain;
  j["profiles_coincide"] = replay.profiles_coincide;
  emit(ctx, j, a.out);
  if (!a.out.empty()) {
    if (replay.confirmed) {
      ctx.out << "confirmed: " << alphabet.name(replay.outcome) << "\n";
    } else {
      for (const auto& step : replay.chain) {
        ctx.out << step.action << " " << step.profile.to_string() << " claims " << alphabet.name(step.claimed)
                << ", rule gives " << alphabet.name(step.observed) << "\n";
      }
    }
  }
  return replay.confirmed ? kPass : kAxiomFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Axiom audits, rule enumeration and Arrow search for small voting rules", "sct"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a rule on a ballot file");
  eval_cmd->add_option("--rule", eval.rule, "Rule descriptor")->required();
  eval_cmd->add_option("--profile", eval.profile, "Ballot file")->required();

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Check a rule against axioms, exhaustively up to a voter bound");
  audit_cmd->add_option("--rule", audit_args.rule, "Rule descriptor")->required();
  audit_cmd->add_option("--alternatives", audit_args.alternatives, "Non-tie alternative count, 'may', or x,y,z");
  audit_cmd->add_option("--max-voters", audit_args.max_voters, "Largest profile size")->capture_default_str();
  audit_cmd->add_option("--axioms", audit_args.axioms, "Axiom list, e.g. C2-C6 or Ma2-Ma4");
  audit_cmd->add_option("--ma4-semantics", audit_args.semantics, "flip or in-favor")->capture_default_str();
  audit_cmd->add_option("--out", audit_args.out, "Report file");
  audit_cmd->add_option("--threads", audit_args.threads, "Worker threads")->capture_default_str();

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate neutral, consistent signature tables up to a horizon");
  enum_cmd->add_option("--alternatives", enum_args.alternatives, "Non-tie alternatives (2 or 3)")->capture_default_str();
  enum_cmd->add_option("--horizon", enum_args.horizon, "Largest non-tie ballot count")->capture_default_str();
  enum_cmd->add_flag("--with-c6", enum_args.with_c6, "Require every tie to be breakable by one more voter");
  enum_cmd->add_option("--max-families", enum_args.max_families, "Abort above this many families")->capture_default_str();
  enum_cmd->add_option("--out", enum_args.out, "Report file");
  enum_cmd->add_option("--threads", enum_args.threads, "Worker threads")->capture_default_str();

  MayArgs may_args;
  auto* may_cmd = app.add_subcommand("may", "Enumerate choice functions over {-1,0,1} meeting May's conditions");
  may_cmd->add_option("--voters", may_args.voters, "Electorate size (1..4)")->capture_default_str();
  may_cmd->add_option("--semantics", may_args.semantics, "flip or in-favor")->capture_default_str();
  may_cmd->add_option("--out", may_args.out, "Report file");

  ArrowArgs arrow_args;
  auto* arrow_cmd = app.add_subcommand("arrow-search", "Find every aggregator meeting Arrow's conditions at small size");
  arrow_cmd->add_option("--voters", arrow_args.voters, "Voters (1..2)")->capture_default_str();
  arrow_cmd->add_option("--alternatives", arrow_args.alternatives, "Alternatives (2..3)")->capture_default_str();
  arrow_cmd->add_option("--dictator-reading", arrow_args.reading, "strict or weak")->capture_default_str();
  arrow_cmd->add_flag("--tables", arrow_args.include_tables, "Include the full outcome table of each survivor");
  arrow_cmd->add_option("--out", arrow_args.out, "Report file");
  arrow_cmd->add_option("--threads", arrow_args.threads, "Worker threads")->capture_default_str();

  OrderArgs order_args;
  auto* order_cmd = app.add_subcommand("order", "Decide a < b: a is the tie or agrees with b on every profile");
  order_cmd->add_option("--rule-a", order_args.rule_a, "Rule descriptor for a")->required();
  order_cmd->add_option("--rule-b", order_args.rule_b, "Rule descriptor for b")->required();
  order_cmd->add_option("--alternatives", order_args.alternatives, "Non-tie alternative count, 'may', or x,y,z");
  order_cmd->add_option("--max-voters", order_args.max_voters, "Largest profile size")->capture_default_str();
  order_cmd->add_option("--out", order_args.out, "Report file");

  PairwiseArgs pairwise_args;
  auto* pairwise_cmd = app.add_subcommand("pairwise", "Pairwise majority of weak-order ballots");
  pairwise_cmd->add_option("--profile", pairwise_args.profile, "Ballot file with rank: lines")->required();
  pairwise_cmd->add_option("--out", pairwise_args.out, "Report file");

  ReplayArgs replay_args;
  auto* replay_cmd = app.add_subcommand("replay", "Replay the plurality argument against a rule on one profile");
  replay_cmd->add_option("--rule", replay_args.rule, "Rule descriptor")->required();
  replay_cmd->add_option("--profile", replay_args.profile, "Ballot file")->required();
  replay_cmd->add_option("--out", replay_args.out, "Report file");

  std::vector<const char*> argv{"sct"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolkitVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "sct: " << e.what() << "\n";
    return kInputError;
  }

  Context ctx{out, err};
  try {
    if (*eval_cmd) return cmd_eval(ctx, eval);
    if (*audit_cmd) return cmd_audit(ctx, audit_args);
    if (*enum_cmd) return cmd_enumerate(ctx, enum_args);
    if (*may_cmd) return cmd_may(ctx, may_args);
    if (*arrow_cmd) return cmd_arrow_search(ctx, arrow_args);
    if (*order_cmd) return cmd_order(ctx, order_args);
    if (*pairwise_cmd) return cmd_pairwise(ctx, pairwise_args);
    if (*replay_cmd) return cmd_replay(ctx, replay_args);
  } catch (const BoundError& e) {
    err << "sct: " << e.what() << "\n";
    return kBoundError;
  } catch (const InputError& e) {
    err << "sct: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace sct::cli
