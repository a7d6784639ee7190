#include "rsweight/counting.hpp"
#include "rsweight/oracle.hpp"

#include "doctest.h"

using namespace rsw;

namespace {
const Budget kBudget;   // default step limit
}

TEST_CASE("unconstrained closed form") {
    Field f(3, 1);
    DomainSet full = domain_full(f);
    // Monic linear polynomials over F_3: each has exactly one root.
    CHECK(n_closed_ell0(CountQuery{&f, full, 1, {}, 0}) == 0);
    CHECK(n_closed_ell0(CountQuery{&f, full, 1, {}, 1}) == 3);
    // More roots than the degree allows.
    CHECK(n_closed_ell0(CountQuery{&f, full, 2, {}, 3}) == 0);
    CHECK(leading_sum(BigInt(3), 3, 2, 3) == 0);
    // The alternating sum is integral for every grid point.
    for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t r = 0; r <= k; ++r)
            CHECK(is_integer(leading_sum(BigInt(4), 4, k, r)));
}

TEST_CASE("tuple sums over subgroup domains match enumeration") {
    Field f9(3, 2);
    Field f4(2, 2);
    struct Row { const Field* f; DomainSet d; };
    std::vector<Row> rows;
    rows.push_back({&f9, domain_subfield(f9, 3)});
    rows.push_back({&f9, domain_full(f9)});
    rows.push_back({&f9, domain_subgroup_minus_zero(f9, {f9.one()})});
    rows.push_back({&f4, domain_subfield(f4, 2)});
    rows.push_back({&f4, domain_subgroup_minus_zero(f4, {f4.one()})});
    for (const auto& row : rows) {
        for (std::int64_t m = 0; m <= 5; ++m) {
            for (Fe gamma = 0; gamma < row.f->q(); ++gamma) {
                CAPTURE(row.f->q());
                CAPTURE(row.d.n());
                CAPTURE(m);
                CAPTURE(gamma);
                CHECK(U_m(m, gamma, *row.f, row.d) == oracle_U(m, gamma, *row.f, row.d, kBudget));
                CHECK(Ubar_m(m, gamma, *row.f, row.d) ==
                      oracle_Ubar(m, gamma, *row.f, row.d, kBudget));
            }
        }
    }
    // Worked value: the only 3-subset of F_3 is {0,1,2}, with sum 0.
    DomainSet f3sub = domain_subfield(f9, 3);
    CHECK(Ubar_m(3, 0, f9, f3sub) == 6);
    CHECK(Ubar_m(3, 1, f9, f3sub) == 0);
    // Tuple sums need a subgroup or punctured-subgroup structure.
    DomainSet ragged = domain_explicit(f9, {0, 1, 3});
    CHECK_THROWS_AS(U_m(2, 0, f9, ragged), PreconditionError);
    CHECK_THROWS_AS(Ubar_m(2, 0, f9, ragged), PreconditionError);
}

TEST_CASE("subgroup-domain closed form") {
    Field f9(3, 2);
    DomainSet sub = domain_subfield(f9, 3);
    for (std::int64_t k = 0; k <= 3; ++k) {
        for (Fe gamma = 0; gamma < f9.q(); ++gamma) {
            CountQuery query{&f9, sub, k, {gamma}, 0};
            auto expect = oracle_N_vector(query, kBudget);
            for (std::int64_t r = 0; r <= k + 1; ++r) {
                query.r = r;
                CAPTURE(k);
                CAPTURE(gamma);
                CAPTURE(r);
                BigInt closed = theorem2_N(query);
                CHECK(closed == expect[static_cast<std::size_t>(r)]);
                // Same value through the tuple-sum identity.
                BigRat viasum = leading_sum(BigInt(f9.q()), 3, k, r);
                std::int64_t sign_exp = k + 1 - r;
                BigRat corr = BigRat(binomial(BigInt(k + 1), r)) *
                              BigRat(Ubar_m(k + 1, gamma, f9, sub)) / BigRat(factorial(k + 1));
                viasum += (sign_exp % 2 == 0 ? corr : -corr);
                CHECK(BigRat(closed) == viasum);
            }
        }
    }
    // Worked cells: q=3, k=1, gamma=0 gives one polynomial per root count.
    Field f3(3, 1);
    for (std::int64_t r = 0; r <= 2; ++r)
        CHECK(theorem2_N(CountQuery{&f3, domain_full(f3), 1, {0}, r}) == 1);
    // Wrong domain structure is rejected.
    CHECK_THROWS_AS(theorem2_N(CountQuery{&f3, domain_subgroup_minus_zero(f3, {1}), 1, {0}, 0}),
                    PreconditionError);
}

TEST_CASE("punctured-subgroup closed form") {
    Field f3(3, 1);
    DomainSet punct3 = domain_subgroup_minus_zero(f3, {1});
    for (std::int64_t k = 0; k <= 3; ++k) {
        for (Fe gamma = 0; gamma < 3; ++gamma) {
            CountQuery query{&f3, punct3, k, {gamma}, 0};
            auto expect = oracle_N_vector(query, kBudget);
            for (std::int64_t r = 0; r <= k + 1; ++r) {
                query.r = r;
                CHECK(theorem3_N(query) == expect[static_cast<std::size_t>(r)]);
            }
        }
    }
    // A gamma outside D union {0} over a bigger field.
    Field f9(3, 2);
    DomainSet punct9 = domain_subgroup_minus_zero(f9, {f9.one()});
    for (Fe gamma : {Fe(0), Fe(1), Fe(3), Fe(4)}) {
        for (std::int64_t r = 0; r <= 2; ++r) {
            CountQuery query{&f9, punct9, 1, {gamma}, r};
            CHECK(theorem3_N(query) == oracle_N(query, kBudget));
        }
    }
    CHECK_THROWS_AS(theorem3_N(CountQuery{&f3, domain_full(f3), 1, {0}, 0}), PreconditionError);
}

TEST_CASE("punctured-domain display defect is pinned") {
    // At k=0, domain {1,2} in F_3, gamma=0, r=0 the count is 1 (the received
    // word x itself has no root in the domain).  The stated display uses a
    // wrong denominator in its middle term and evaluates to 2/3; the repaired
    // display is the count.
    Field f3(3, 1);
    CountQuery query{&f3, domain_subgroup_minus_zero(f3, {1}), 0, {0}, 0};
    CHECK(theorem3_case_display(query, DisplayForm::Stated) == BigRat(2, 3));
    CHECK(theorem3_case_display(query, DisplayForm::Repaired) == BigRat(1));
    CHECK(theorem3_N(query) == 1);
    CHECK(oracle_N(query, kBudget) == 1);
    // Away from gamma = 0 the two forms agree.
    for (Fe gamma : {Fe(1), Fe(2)}) {
        for (std::int64_t r = 0; r <= 1; ++r) {
            CountQuery other{&f3, domain_subgroup_minus_zero(f3, {1}), 0, {gamma}, r};
            CHECK(theorem3_case_display(other, DisplayForm::Stated) ==
                  theorem3_case_display(other, DisplayForm::Repaired));
        }
    }
}

TEST_CASE("engine selection and dispatch") {
    Field f9(3, 2);
    CHECK(engine_from_name("auto") == Engine::Auto);
    CHECK(engine_from_name("theorem3") == Engine::Theorem3);
    CHECK(engine_name(Engine::Series) == std::string("series"));
    CHECK_THROWS_AS(engine_from_name("nonsense"), PreconditionError);

    CountQuery sub{&f9, domain_subfield(f9, 3), 2, {1}, 1};
    CHECK(engine_auto(sub, kBudget) == Engine::Theorem2);
    CountQuery punct{&f9, domain_subgroup_minus_zero(f9, {f9.one()}), 2, {1}, 1};
    CHECK(engine_auto(punct, kBudget) == Engine::Theorem3);
    CountQuery pair{&f9, domain_full(f9), 1, {0, 0}, 1};
    CHECK(engine_auto(pair, kBudget) == Engine::Theorem4);
    CountQuery ragged{&f9, domain_explicit(f9, {0, 1, 3}), 1, {0}, 1};
    CHECK(engine_auto(ragged, kBudget) == Engine::Theorem1);

    // closed_N refuses engines that do not produce exact closed counts.
    CHECK_THROWS_AS(closed_N(sub, Engine::Oracle, kBudget), PreconditionError);
    CHECK_THROWS_AS(closed_N(sub, Engine::Theorem5, kBudget), PreconditionError);
    // Mismatched engine preconditions surface as errors, not wrong numbers.
    CHECK_THROWS_AS(closed_N(punct, Engine::Theorem2, kBudget), PreconditionError);
}

TEST_CASE("series engine agrees with the oracle off-structure") {
    Field f5(5, 1);
    DomainSet ragged = domain_explicit(f5, {0, 2, 3});
    for (std::int64_t k = 0; k <= 2; ++k) {
        for (Fe gamma = 0; gamma < 5; ++gamma) {
            for (std::int64_t r = 0; r <= k + 1; ++r) {
                CountQuery query{&f5, ragged, k, {gamma}, r};
                CHECK(series_N(query, kBudget) == oracle_N(query, kBudget));
                CHECK(theorem1_N(query, kBudget) == oracle_N(query, kBudget));
            }
        }
    }
}
