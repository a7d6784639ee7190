#include "rsweight/moments.hpp"

#include "doctest.h"

using namespace rsw;

namespace {
const Budget kBudget;
}

TEST_CASE("closed moment formulas") {
    CHECK(expected_distance(4, 3) == BigRat(9, 4));
    CHECK(variance_distance(4, 3) == BigRat(9, 16));
    CHECK(expected_distance(9, 9) == 8);
    CHECK(variance_distance(9, 9) == BigRat(8, 9));
    CHECK(expected_distance(5, 0) == 0);
    CHECK(variance_distance(5, 0) == 0);
    CHECK_THROWS_AS(expected_distance(4, 5), PreconditionError);
    CHECK_THROWS_AS(expected_distance(1, 0), PreconditionError);
    MomentReport report = moments_closed(4, 3);
    CHECK(report.mean == BigRat(9, 4));
    CHECK(report.variance == BigRat(9, 16));
    CHECK(report.source == "closed_form");
}

TEST_CASE("series route reproduces the raw factorial moments") {
    Field f(3, 1);
    DomainSet domain = domain_explicit(f, {0, 2});
    for (std::int64_t k : {1, 2, 3}) {
        for (std::uint32_t ell : {1u, 2u}) {
            CountQuery query{&f, domain, k, std::vector<Fe>(ell, 1), 0};
            FactorialMoments fm = factorial_moments_via_series(query);
            // Sum over the class of (root count) and (root count)(root count - 1).
            CHECK(fm.first == BigRat(2) * pow_rat(BigRat(3), k - 1));
            if (k >= 2) {
                REQUIRE(fm.second.has_value());
                CHECK(*fm.second == BigRat(2) * pow_rat(BigRat(3), k - 2));
            } else {
                CHECK(!fm.second.has_value());
            }
        }
    }
    CHECK_THROWS_AS(factorial_moments_via_series(CountQuery{&f, domain, 0, {1}, 0}),
                    PreconditionError);
    CHECK_THROWS_AS(factorial_moments_via_series(CountQuery{&f, domain, 2, {}, 0}),
                    PreconditionError);
}

TEST_CASE("three moment routes coincide") {
    Field f4(2, 2);
    Field f5(5, 1);
    struct Row { const Field* f; std::vector<Fe> pts; };
    std::vector<Row> rows = {
        {&f4, {0, 1, 2}},
        {&f4, {1, 3}},
        {&f5, {0, 1, 2, 3, 4}},
        {&f5, {2, 4}},
    };
    for (const auto& row : rows) {
        DomainSet domain = domain_explicit(*row.f, row.pts);
        MomentReport closed = moments_closed(row.f->q(), domain.n());
        for (std::int64_t k : {2, 3}) {
            for (std::uint32_t ell : {1u, 2u}) {
                CountQuery query{row.f, domain, k, std::vector<Fe>(ell, row.f->one()), 0};
                MomentReport fact = moments_factorial(query);
                MomentReport emp = moments_empirical(query, kBudget);
                CAPTURE(row.f->q());
                CAPTURE(domain.n());
                CAPTURE(k);
                CAPTURE(ell);
                CHECK(fact.mean == closed.mean);
                CHECK(fact.variance == closed.variance);
                CHECK(emp.mean == closed.mean);
                CHECK(emp.variance == closed.variance);
                CHECK(fact.source == "factorial_moment_path");
                CHECK(emp.source == "empirical");
            }
        }
    }
    // The variance route needs the second factorial moment.
    CHECK_THROWS_AS(moments_factorial(CountQuery{&f4, domain_full(f4), 1, {0}, 0}),
                    PreconditionError);
}
