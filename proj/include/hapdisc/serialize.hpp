#pragma once

// JSON forms of the library's results.
//
//   realization     {start, signs[], skips[], terms[]}
//   verdict         {status, start?, failure?: {i, j, reason}}
//   classification  {forces, rule, labeling, cycle?: {pattern, start}}
//   reduction       {M, r, t, s[], ess: {answer, X?, Y?}, cycle?}
//
// Arbitrary-precision values are written as decimal strings in reduction
// output; elsewhere they are numbers when they fit in 64 bits.

#include <optional>

#include <json.hpp>

#include "hapdisc/classify.hpp"
#include "hapdisc/pattern.hpp"
#include "hapdisc/realizability.hpp"
#include "hapdisc/reduction.hpp"
#include "hapdisc/rules.hpp"
#include "hapdisc/search.hpp"
#include "hapdisc/skipgraph.hpp"

namespace hapdisc {

using Json = nlohmann::json;

Json integer_json(const Integer& v);

Json to_json(const Realization& r);
/// Inverse of to_json(Realization) up to re-walking the steps.
Realization realization_from_json(const Json& j);

Json to_json(const RealizabilityVerdict& v);
Json to_json(const CycleVerdict& v);
Json to_json(const RuleVerdict& v);
Json to_json(const Classification& c);
Json to_json(const OddCycleCertificate& c);
Json to_json(const SearchResult& r);
Json to_json(const ReductionInstance& ri, const std::optional<EssWitness>& w,
             const std::optional<SignedPattern>& cycle);

}  // namespace hapdisc
