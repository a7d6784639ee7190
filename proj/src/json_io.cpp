#include "rsweight/json_io.hpp"

#include <stdexcept>

namespace rsw {

BigRat rat_from_string(const std::string& text) {
    if (text.empty()) throw PreconditionError("empty rational literal");
    const std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw PreconditionError("rational literal has zero denominator");
        return BigRat(num, den);
    } catch (const std::runtime_error&) {
        throw PreconditionError("malformed rational literal '" + text + "'");
    }
}

Json field_to_json(const Field& field) {
    return Json{{"p", field.p()}, {"a", field.a()}, {"q", field.q()}};
}

Json domain_to_json(const DomainSet& domain) {
    return Json{{"kind", domain_kind_name(domain.kind)}, {"elements", domain.elements}};
}

Json query_to_json(const CountQuery& query) {
    Json j;
    j["field"] = field_to_json(*query.field);
    j["domain"] = domain_to_json(query.domain);
    j["k"] = query.k;
    j["ell"] = query.ell();
    j["gammas"] = query.gammas;
    j["r"] = query.r;
    return j;
}

Json quadext_to_json(const QuadExt& value) {
    return Json{{"rat", rat_to_string(value.rational_part())},
                {"irr", rat_to_string(value.irrational_part())},
                {"radicand", value.radicand()}};
}

QuadExt quadext_from_json(const Json& j) {
    return QuadExt(rat_from_string(j.at("rat").get<std::string>()),
                   rat_from_string(j.at("irr").get<std::string>()),
                   j.at("radicand").get<std::uint64_t>());
}

Json count_result_json(const CountQuery& query, Engine engine, const BigInt& value) {
    Json j;
    j["query"] = query_to_json(query);
    j["engine"] = engine_name(engine);
    j["value"] = value.str();
    return j;
}

Json estimate_result_json(const CountQuery& query, const EstimateResult& estimate) {
    Json j;
    j["query"] = query_to_json(query);
    j["engine"] = engine_name(Engine::Theorem5);
    j["main"] = rat_to_string(estimate.main);
    j["bound"] = quadext_to_json(estimate.bound);
    j["exact_value"] = estimate.exact_value ? Json(estimate.exact_value->str()) : Json(nullptr);
    return j;
}

Json histogram_to_json(const DistanceHistogram& hist) {
    Json counts = Json::object();
    for (const auto& [distance, count] : hist.counts)
        counts[std::to_string(distance)] = count.str();
    return Json{{"total", hist.total.str()}, {"counts", counts}};
}

Json moment_report_json(const MomentReport& report) {
    return Json{{"mean", rat_to_string(report.mean)},
                {"variance", rat_to_string(report.variance)},
                {"source", report.source}};
}

}   // namespace rsw
