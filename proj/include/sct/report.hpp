#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "sct/arrow.hpp"
#include "sct/axioms.hpp"
#include "sct/enumerate.hpp"
#include "sct/tabulated.hpp"

namespace sct {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr std::string_view kToolkitVersion = "0.1.0";

/// Skeleton shared by every report: schema, version, command, then empty
/// parameters / bounds / verdicts / witnesses / counts in that order.
Json report_header(std::string_view command);

Json alphabet_json(const Alphabet& alphabet);
Alphabet alphabet_from_json(const Json& j);

/// Ballots, the rule's outcome on them, and the same profile as ballot-file
/// text so the witness can be replayed with `sct eval`.
Json profile_json(const Rule& rule, const Profile& p);
Json witness_json(const Rule& rule, const Witness& w);
Json verdict_json(const Verdict& v);

Json family_json(const TabulatedFamily& family);
/// Reads family_json() output. Throws InputError on malformed documents.
TabulatedFamily family_from_json(const Json& j);
Json signatures_json(const SignatureSpace& space);

Json may_table_json(const MayFunctionTable& t);

Json swf_json(const arrow::SwfTable& f);

/// Serialized form with a trailing newline.
std::string dump(const Json& j);

}  // namespace sct
