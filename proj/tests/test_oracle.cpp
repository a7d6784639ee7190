#include "rsweight/counting.hpp"
#include "rsweight/oracle.hpp"

#include "doctest.h"

using namespace rsw;

namespace {
const Budget kBudget;
}

TEST_CASE("exhaustive counts ground truth") {
    Field f3(3, 1);
    DomainSet full = domain_full(f3);
    // q=3, k=1, gamma=0: the class of x^2 + cx contains x^2 (root 0), x^2+x
    // (roots 0,2), x^2+2x (roots 0,1): one member per root count.
    for (std::int64_t r = 0; r <= 2; ++r)
        CHECK(oracle_N(CountQuery{&f3, full, 1, {0}, r}, kBudget) == 1);
    // r beyond the degree is empty.
    CHECK(oracle_N(CountQuery{&f3, full, 1, {0}, 5}, kBudget) == 0);
    // M(f, 0) counts the whole class.
    for (Fe gamma = 0; gamma < 3; ++gamma)
        for (std::int64_t k = 0; k <= 3; ++k)
            CHECK(oracle_M(CountQuery{&f3, full, k, {gamma}, 0}, kBudget) ==
                  pow_big(BigInt(3), static_cast<std::uint64_t>(k)));
}

TEST_CASE("at-least and exact vectors are sieve partners") {
    Field f4(2, 2);
    for (const DomainSet& domain : {domain_full(f4), domain_explicit(f4, {0, 1, 2})}) {
        for (std::int64_t k = 0; k <= 3; ++k) {
            for (Fe gamma = 0; gamma < 4; ++gamma) {
                CountQuery query{&f4, domain, k, {gamma}, 0};
                auto exact = oracle_N_vector(query, kBudget);
                auto atleast = oracle_M_vector(query, kBudget);
                CHECK(atleast == sieve_atleast_from_exact(exact));
                CHECK(exact == sieve_exact_from_atleast(atleast));
            }
        }
    }
}

TEST_CASE("partitioned and serial walks agree") {
    Field f9(3, 2);
    for (std::uint32_t ell : {1u, 2u}) {
        std::vector<Fe> gammas(ell, 1);
        CountQuery query{&f9, domain_full(f9), 3, gammas, 0};
        CHECK(oracle_N_vector(query, kBudget) == oracle_N_vector_serial(query, kBudget));
        DistanceHistogram par = distance_distribution(query, kBudget);
        DistanceHistogram ser = distance_distribution_serial(query, kBudget);
        CHECK(par.counts == ser.counts);
        CHECK(par.total == ser.total);
    }
}

TEST_CASE("distance histogram properties") {
    Field f9(3, 2);
    DomainSet domain = domain_subfield(f9, 3);
    CountQuery query{&f9, domain, 2, {1, 0}, 0};
    DistanceHistogram hist = distance_distribution(query, kBudget);
    CHECK(hist.total == 81);   // q^k class members
    BigInt mass = 0;
    for (const auto& [d, c] : hist.counts) {
        CHECK(d >= 0);
        CHECK(d <= 3);
        CHECK(c > 0);
        mass += c;
    }
    CHECK(mass == hist.total);
    // Histogram slots are the per-root-count exact counts, re-keyed by n - r.
    for (std::int64_t r = 0; r <= 4; ++r) {
        query.r = r;
        BigInt at = oracle_N(query, kBudget);
        auto it = hist.counts.find(3 - r);
        CHECK((it == hist.counts.end() ? BigInt(0) : it->second) == at);
    }
}

TEST_CASE("empirical moments of a known histogram") {
    DistanceHistogram hist;
    hist.counts[1] = 3;
    hist.counts[3] = 1;
    hist.total = 4;
    auto [mean, var] = empirical_moments(hist);
    CHECK(mean == BigRat(3, 2));
    CHECK(var == BigRat(3, 4));
    CHECK_THROWS(empirical_moments(DistanceHistogram{}));
}

TEST_CASE("budget guards fire before heavy walks") {
    Field f9(3, 2);
    Budget tiny;
    tiny.max_steps = 1000;
    CountQuery query{&f9, domain_full(f9), 9, {0}, 0};
    CHECK_THROWS_AS(oracle_N(query, tiny), BudgetError);
    CHECK_THROWS_AS(distance_distribution(query, tiny), BudgetError);
    try {
        oracle_N(query, tiny);
    } catch (const BudgetError& e) {
        CHECK(e.limit() == 1000);
        CHECK(e.required() > e.limit());
    }
}

TEST_CASE("dispatcher resolves engines and reports them") {
    Field f9(3, 2);
    CountQuery sub{&f9, domain_subfield(f9, 3), 2, {1}, 1};
    CountOutcome out = run_N(sub, Engine::Auto, kBudget);
    CHECK(out.engine == Engine::Theorem2);
    CHECK(out.value == closed_N(sub, Engine::Theorem2, kBudget));
    CountOutcome forced = run_N(sub, Engine::Oracle, kBudget);
    CHECK(forced.engine == Engine::Oracle);
    CHECK(forced.value == out.value);
    CountOutcome series = run_N(sub, Engine::Series, kBudget);
    CHECK(series.engine == Engine::Series);
    CHECK(series.value == out.value);
}
