#pragma once

#include <json.hpp>

#include "apseq/families.hpp"
#include "apseq/vdw.hpp"

namespace apseq {

using Json = nlohmann::ordered_json;

Json to_json(const APResult& r);
Json to_json(const DifferenceFamily& f);
Json to_json(const BoundReport& r);
Json to_json(const ColumnGroup& g, const Alphabet& alphabet);
Json to_json(const PalindromicityReport& p, const Alphabet& alphabet);
Json to_json(const RecurrenceReport& r);
Json to_json(const SetGraph& g, const Alphabet& alphabet);
Json to_json(const VdwUpper& v);
Json to_json(const VdwLower& v);

/// Validation, primitivity, bijectivity, aperiodicity, group, palindromicity and recurrence constants.
Json analyze(const AnalysisTarget& target);

}  // namespace apseq
