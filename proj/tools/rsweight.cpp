// Command-line front end: exact codeword counts at a given distance, full
// distance distributions, moment checks, and the cross-validation suites.
//
// Exit codes: 0 success, 2 unmet mathematical precondition, 3 enumeration
// budget exceeded, 1 anything else.

#include "rsweight/counting.hpp"
#include "rsweight/json_io.hpp"
#include "rsweight/moments.hpp"
#include "rsweight/oracle.hpp"
#include "rsweight/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace rsw;

std::vector<Fe> parse_fe_list(const std::string& text) {
    std::vector<Fe> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string item = text.substr(pos, next - pos);
        if (item.empty()) throw PreconditionError("empty element in list '" + text + "'");
        out.push_back(static_cast<Fe>(std::stoul(item)));
        pos = next + 1;
    }
    return out;
}

// full | subfield:N | subgroup:b1,b2,... | punctured:b1,... | explicit:e1,e2,...
DomainSet parse_domain(const Field& field, const std::string& spec) {
    if (spec == "full") return domain_full(field);
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw PreconditionError("domain spec '" + spec +
                                "' is not full|subfield:n|subgroup:...|punctured:...|explicit:...");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "subfield") return domain_subfield(field, std::stoull(rest));
    if (kind == "subgroup") return domain_additive_subgroup(field, parse_fe_list(rest));
    if (kind == "punctured") return domain_subgroup_minus_zero(field, parse_fe_list(rest));
    if (kind == "explicit") return domain_explicit(field, parse_fe_list(rest));
    throw PreconditionError("unknown domain kind '" + kind + "'");
}

struct QueryArgs {
    std::uint32_t p = 0;
    std::uint32_t a = 1;
    std::string domain_spec = "full";
    std::vector<std::uint32_t> gammas;
    std::optional<std::uint32_t> ell;
    std::int64_t k = 0;
    std::string engine = "auto";
    std::optional<std::uint64_t> budget_steps;

    void attach(CLI::App* cmd, bool with_engine = true) {
        cmd->add_option("--p", p, "field characteristic")->required();
        cmd->add_option("--a", a, "extension degree, field order p^a");
        cmd->add_option("--domain", domain_spec,
                        "evaluation set: full|subfield:n|subgroup:b,..|punctured:b,..|explicit:e,..");
        cmd->add_option("--gamma", gammas, "prescribed leading coefficients, one per flag, top first");
        cmd->add_option("--ell", ell, "number of prescribed coefficients (checked against --gamma)");
        cmd->add_option("--k", k, "code dimension: codewords are monic of degree k + ell")->required();
        if (with_engine)
            cmd->add_option("--engine", engine,
                            "auto|theorem1|theorem2|theorem3|theorem4|theorem5|series|oracle");
        cmd->add_option("--budget", budget_steps, "enumeration step limit");
    }

    Budget budget() const {
        Budget b = Budget::from_env();
        if (budget_steps) b.max_steps = *budget_steps;
        return b;
    }

    std::vector<Fe> resolved_gammas() const {
        std::vector<Fe> out(gammas.begin(), gammas.end());
        if (ell) {
            if (!out.empty() && out.size() != *ell)
                throw PreconditionError("--ell disagrees with the number of --gamma flags");
            if (out.empty()) out.assign(*ell, 0);
        }
        return out;
    }
};

int cmd_count(const QueryArgs& args, std::int64_t r) {
    Field field(args.p, args.a);
    CountQuery query{&field, parse_domain(field, args.domain_spec), args.k,
                     args.resolved_gammas(), r};
    Engine engine = engine_from_name(args.engine);
    if (engine == Engine::Theorem5) {
        EstimateResult est = theorem5_estimate(query);
        std::cout << estimate_result_json(query, est).dump(2) << "\n";
        return 0;
    }
    CountOutcome outcome = run_N(query, engine, args.budget());
    std::cout << count_result_json(query, outcome.engine, outcome.value).dump(2) << "\n";
    return 0;
}

int cmd_distribution(const QueryArgs& args) {
    Field field(args.p, args.a);
    CountQuery query{&field, parse_domain(field, args.domain_spec), args.k,
                     args.resolved_gammas(), 0};
    DistanceHistogram hist = distance_distribution(query, args.budget());
    std::cout << histogram_to_json(hist).dump(2) << "\n";
    return 0;
}

// One sweep row per (leading-coefficient tuple, r); rows are computed in
// --partitions chunks (in parallel when OpenMP is on) and merged in index
// order, so the output is identical for every partition count.
int cmd_table(const QueryArgs& args, std::int64_t r_min, std::optional<std::int64_t> r_max_opt,
              const std::string& format, int partitions) {
    Field field(args.p, args.a);
    DomainSet domain = parse_domain(field, args.domain_spec);
    // Unlike the other subcommands, --ell without --gamma means "sweep every
    // coefficient tuple", so resolve the flags here instead of zero-filling.
    std::vector<Fe> fixed(args.gammas.begin(), args.gammas.end());
    std::uint32_t ell = args.ell ? *args.ell : static_cast<std::uint32_t>(fixed.size());
    if (!fixed.empty() && fixed.size() != ell)
        throw PreconditionError("--ell disagrees with the number of --gamma flags");

    std::vector<std::vector<Fe>> tuples;
    if (!fixed.empty() || ell == 0) {
        tuples.push_back(fixed);
    } else {
        for (std::uint64_t idx = 0; idx < class_count(field, ell); ++idx)
            tuples.push_back(class_from_index(field, ell, idx).lead);
    }
    std::int64_t r_max = r_max_opt ? *r_max_opt : args.k + static_cast<std::int64_t>(ell);
    if (r_max < r_min) throw PreconditionError("--r-max is below --r-min");

    struct Cell { std::size_t tuple; std::int64_t r; };
    std::vector<Cell> cells;
    for (std::size_t t = 0; t < tuples.size(); ++t)
        for (std::int64_t r = r_min; r <= r_max; ++r) cells.push_back({t, r});

    Engine engine = engine_from_name(args.engine);
    Budget budget = args.budget();
    std::vector<std::string> csv_rows(cells.size());
    std::vector<Json> json_rows(cells.size());
    bool as_csv = format == "csv";
    if (!as_csv && format != "json") throw PreconditionError("--format must be json or csv");

    std::int64_t total = static_cast<std::int64_t>(cells.size());
    std::int64_t parts = std::max(1, partitions);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parts > 1)
#endif
    for (std::int64_t part = 0; part < parts; ++part) {
        std::int64_t lo = total / parts * part + std::min<std::int64_t>(part, total % parts);
        std::int64_t len = total / parts + (part < total % parts ? 1 : 0);
        for (std::int64_t i = lo; i < lo + len; ++i) {
            const Cell& cell = cells[static_cast<std::size_t>(i)];
            CountQuery query{&field, domain, args.k, tuples[cell.tuple], cell.r};
            std::string engine_label, value;
            Json row;
            if (engine == Engine::Theorem5) {
                EstimateResult est = theorem5_estimate(query);
                engine_label = engine_name(Engine::Theorem5);
                value = rat_to_string(est.main);
                row = estimate_result_json(query, est);
            } else {
                CountOutcome outcome = run_N(query, engine, budget);
                engine_label = engine_name(outcome.engine);
                value = outcome.value.str();
                row = count_result_json(query, outcome.engine, outcome.value);
            }
            if (as_csv) {
                const auto& g = tuples[cell.tuple];
                std::string line = (g.size() > 0 ? std::to_string(g[0]) : "");
                line += "," + (g.size() > 1 ? std::to_string(g[1]) : "");
                line += "," + std::to_string(cell.r) + "," + engine_label + "," + value;
                csv_rows[static_cast<std::size_t>(i)] = line;
            } else {
                json_rows[static_cast<std::size_t>(i)] = row;
            }
        }
    }

    if (as_csv) {
        std::cout << "gamma1,gamma2,r,engine,value\n";
        for (const auto& line : csv_rows) std::cout << line << "\n";
    } else {
        Json out = json_rows;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_moments(std::uint32_t p, std::uint32_t a, std::uint64_t n, std::int64_t k,
                std::uint32_t ell, bool check, std::optional<std::uint64_t> budget_steps) {
    Field field(p, a);
    MomentReport closed = moments_closed(field.q(), n);
    if (!check) {
        std::cout << moment_report_json(closed).dump(2) << "\n";
        return 0;
    }
    if (n > field.q()) throw PreconditionError("domain size exceeds the field size");
    std::vector<Fe> pts;
    for (Fe x = 0; x < n; ++x) pts.push_back(x);
    CountQuery query{&field, domain_explicit(field, pts), k, std::vector<Fe>(ell, 0), 0};
    Budget budget = Budget::from_env();
    if (budget_steps) budget.max_steps = *budget_steps;
    MomentReport fact = moments_factorial(query);
    MomentReport emp = moments_empirical(query, budget);
    Json out;
    out["closed"] = moment_report_json(closed);
    out["factorial"] = moment_report_json(fact);
    out["empirical"] = moment_report_json(emp);
    out["agree"] = closed.mean == fact.mean && closed.variance == fact.variance &&
                   closed.mean == emp.mean && closed.variance == emp.variance;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t max_q, int partitions, bool inject_defect,
               std::optional<std::uint64_t> budget_steps) {
    VerifyOptions options;
    options.max_q = max_q;
    options.partitions = partitions;
    options.inject_defect = inject_defect;
    if (budget_steps) options.budget.max_steps = *budget_steps;

    std::vector<SuiteResult> results;
    if (suite.empty()) {
        results = run_all_suites(options);
    } else {
        results.push_back(run_suite(suite, options));
    }
    Json out = Json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        out.push_back(suite_result_json(r));
        all_pass = all_pass && r.pass();
    }
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distance-distribution calculator for evaluation codes with "
                 "prescribed leading coefficients"};
    app.require_subcommand(1);

    QueryArgs count_args;
    std::int64_t count_r = 0;
    CLI::App* count = app.add_subcommand("count", "codewords at one distance from a received word");
    count_args.attach(count);
    count->add_option("--r", count_r, "distinct evaluation-point roots (distance n - r)")->required();

    QueryArgs table_args;
    std::int64_t r_min = 0;
    std::optional<std::int64_t> r_max;
    std::string format = "json";
    int table_partitions = 1;
    CLI::App* table = app.add_subcommand("table", "sweep of counts over coefficients and r");
    table_args.attach(table);
    table->add_option("--r-min", r_min, "lowest root count");
    table->add_option("--r-max", r_max, "highest root count (default k + ell)");
    table->add_option("--format", format, "json|csv");
    table->add_option("--partitions", table_partitions, "chunks for parallel evaluation");

    QueryArgs dist_args;
    CLI::App* dist = app.add_subcommand("distribution", "full distance histogram of one class");
    dist_args.attach(dist, /*with_engine=*/false);

    std::uint32_t m_p = 0, m_a = 1, m_ell = 1;
    std::uint64_t m_n = 0;
    std::int64_t m_k = 2;
    bool m_check = false;
    std::optional<std::uint64_t> m_budget;
    CLI::App* moments = app.add_subcommand("moments", "distance mean and variance");
    moments->add_option("--p", m_p, "field characteristic")->required();
    moments->add_option("--a", m_a, "extension degree");
    moments->add_option("--n", m_n, "evaluation-set size")->required();
    moments->add_option("--k", m_k, "code dimension for the cross-check routes");
    moments->add_option("--ell", m_ell, "prescribed coefficients for the cross-check routes");
    moments->add_flag("--check", m_check, "also derive the moments by series and by enumeration");
    moments->add_option("--budget", m_budget, "enumeration step limit");

    std::string v_suite;
    std::uint64_t v_max_q = 0;
    int v_partitions = 4;
    bool v_inject = false;
    std::optional<std::uint64_t> v_budget;
    CLI::App* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->add_option("--suite", v_suite, "suite name (default: all)");
    verify->add_option("--max-q", v_max_q, "skip grid rows over larger fields");
    verify->add_option("--partitions", v_partitions, "chunks for the determinism sweep");
    verify->add_flag("--inject-defect", v_inject, "flip one known cell to prove detection");
    verify->add_option("--budget", v_budget, "enumeration step limit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return cmd_count(count_args, count_r);
        if (table->parsed())
            return cmd_table(table_args, r_min, r_max, format, table_partitions);
        if (dist->parsed()) return cmd_distribution(dist_args);
        if (moments->parsed())
            return cmd_moments(m_p, m_a, m_n, m_k, m_ell, m_check, m_budget);
        if (verify->parsed())
            return cmd_verify(v_suite, v_max_q, v_partitions, v_inject, v_budget);
    } catch (const rsw::BudgetError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const rsw::PreconditionError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
