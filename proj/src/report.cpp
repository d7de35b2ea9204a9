#include "sct/report.hpp"

#include "sct/ballot_file.hpp"
#include "sct/errors.hpp"

namespace sct {

Json report_header(std::string_view command) {
  Json j;
  j["schema"] = kReportSchema;
  j["toolkit_version"] = kToolkitVersion;
  j["command"] = command;
  j["parameters"] = Json::object();
  j["bounds"] = Json::object();
  j["verdicts"] = Json::array();
  j["witnesses"] = Json::array();
  j["counts"] = Json::object();
  return j;
}

Json alphabet_json(const Alphabet& alphabet) {
  return Json{{"symbols", alphabet.symbols()}, {"bot", alphabet.name(alphabet.bot())}};
}

Alphabet alphabet_from_json(const Json& j) {
  try {
    return Alphabet(j.at("symbols").get<std::vector<std::string>>(), j.at("bot").get<std::string>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed alphabet: ") + e.what());
  }
}

Json profile_json(const Rule& rule, const Profile& p) {
  Json j;
  j["ballots"] = p.symbol_names();
  j["outcome"] = p.alphabet().name(rule(p));
  j["ballot_file"] = format_ballot_file(p);
  return j;
}

Json witness_json(const Rule& rule, const Witness& w) {
  const auto& alphabet = w.base_profile.alphabet();
  Json j;
  j["axiom"] = to_string(w.kind);
  j["size"] = w.size();
  j["profile"] = profile_json(rule, w.base_profile);
  if (w.moved_to) j["moved_to"] = profile_json(rule, *w.moved_to);
  if (w.alt_permutation) {
    Json perm = Json::object();
    for (Alt a : alphabet.all()) perm[alphabet.name(a)] = alphabet.name((*w.alt_permutation)(a));
    j["alt_permutation"] = perm;
  }
  if (w.voter_permutation) j["voter_permutation"] = w.voter_permutation->image();
  j["expected"] = alphabet.name(w.expected);
  j["observed"] = alphabet.name(w.observed);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["axiom"] = to_string(v.axiom);
  j["status"] = to_string(v.status);
  j["profiles_checked"] = v.profiles_checked;
  if (v.witness) j["witness_size"] = v.witness->size();
  if (!v.message.empty()) j["message"] = v.message;
  return j;
}

Json family_json(const TabulatedFamily& family) {
  Json j;
  j["alphabet"] = alphabet_json(family.alphabet());
  j["horizon"] = family.horizon();
  Json table = Json::array();
  for (Alt a : family.table()) table.push_back(family.alphabet().name(a));
  j["table"] = table;
  return j;
}

TabulatedFamily family_from_json(const Json& j) {
  try {
    auto alphabet = alphabet_from_json(j.at("alphabet"));
    auto horizon = j.at("horizon").get<std::size_t>();
    std::vector<Alt> table;
    for (const auto& s : j.at("table")) table.push_back(alphabet.at(s.get<std::string>()));
    return TabulatedFamily(alphabet, horizon, std::move(table));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed family: ") + e.what());
  }
}

Json signatures_json(const SignatureSpace& space) {
  Json out = Json::array();
  for (const auto& s : space.signatures()) out.push_back(s.counts);
  return out;
}

Json may_table_json(const MayFunctionTable& t) {
  Json j;
  j["voters"] = t.voters();
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.domain().size(); ++i) {
    const auto& d = t.domain()[i];
    entries.push_back(Json{{"minus", d.minus}, {"zero", d.zero}, {"plus", d.plus}, {"value", t.outcomes()[i]}});
  }
  j["entries"] = entries;
  return j;
}

Json swf_json(const arrow::SwfTable& f) {
  const auto& names = f.domain().names();
  Json outcomes = Json::array();
  for (const auto& r : f.outcomes()) {
    auto w = r.to_weak_order();
    outcomes.push_back(w ? w->to_string(names) : std::string("(not a weak order)"));
  }
  Json j;
  j["name"] = f.name();
  j["outcomes"] = outcomes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sct
