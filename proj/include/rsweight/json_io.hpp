#pragma once

#include "rsweight/counting.hpp"
#include "rsweight/moments.hpp"
#include "rsweight/oracle.hpp"

#include "json.hpp"

namespace rsw {

/// All machine-readable output goes through these helpers.  Counts are
/// decimal strings (they outgrow doubles), rationals are "num/den" in lowest
/// terms with integers printed bare, and quadratic-extension values carry
/// their rational part, irrational coefficient, and radicand.  Object key
/// order is fixed by construction so equal results serialize byte-identically.
using Json = nlohmann::ordered_json;

Json field_to_json(const Field& field);
Json domain_to_json(const DomainSet& domain);
Json query_to_json(const CountQuery& query);

Json quadext_to_json(const QuadExt& value);
QuadExt quadext_from_json(const Json& j);

Json count_result_json(const CountQuery& query, Engine engine, const BigInt& value);
Json estimate_result_json(const CountQuery& query, const EstimateResult& estimate);
Json histogram_to_json(const DistanceHistogram& hist);
Json moment_report_json(const MomentReport& report);

}   // namespace rsw
