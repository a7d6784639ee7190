#include "rsweight/combinatorics.hpp"

#include "doctest.h"

#include <set>

using namespace rsw;

TEST_CASE("factorials and integer binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(BigInt(7), 3) == 35);
    CHECK(binomial(BigInt(3), 5) == 0);
    CHECK(binomial(BigInt(5), -1) == 0);
    CHECK(binomial(BigInt(5), 0) == 1);
    // Negative upper argument: C(-3, 2) = (-3)(-4)/2 = 6.
    CHECK(binomial(BigInt(-3), 2) == 6);
    CHECK(binomial(BigInt(-1), 5) == -1);
}

TEST_CASE("generalized binomials") {
    CHECK(gen_binomial(BigRat(1, 2), 2) == BigRat(-1, 8));
    CHECK(gen_binomial(BigRat(-3, 2), 0) == 1);
    // Quadratic argument: C(sqrt(2), 2) = sqrt(2)(sqrt(2)-1)/2 = 1 - sqrt(2)/2.
    QuadExt root2 = QuadExt::sqrt_of(2);
    CHECK(gen_binomial(root2, 2) == QuadExt(BigRat(1), BigRat(-1, 2), 2));
}

TEST_CASE("quadratic-extension arithmetic is exact") {
    QuadExt r = QuadExt::sqrt_of(2);
    CHECK(r * r == QuadExt(BigRat(2)));
    CHECK((r - QuadExt(BigRat(1))).sign() > 0);
    CHECK((QuadExt(BigRat(1)) - r).sign() < 0);
    CHECK(QuadExt(0, 1, 9) == QuadExt(BigRat(3)));   // perfect squares collapse
    CHECK((QuadExt(BigRat(1)) / (r + QuadExt(BigRat(1)))) * (r + QuadExt(BigRat(1))) ==
          QuadExt(BigRat(1)));
    CHECK(pow(r, 4) == QuadExt(BigRat(4)));
    CHECK(QuadExt(BigRat(-5, 3)).abs() == QuadExt(BigRat(5, 3)));
    CHECK(QuadExt(BigRat(1), BigRat(1), 2).to_string() == "1 + (1)*sqrt(2)");
}

TEST_CASE("exact and at-least sieves invert each other") {
    std::vector<BigInt> exact = {BigInt(4), BigInt(0), BigInt(7), BigInt(1), BigInt(2)};
    auto atleast = sieve_atleast_from_exact(exact);
    CHECK(sieve_exact_from_atleast(atleast) == exact);
    // Hand value: atleast[1] = sum_r C(r,1) exact[r] = 0*4 + 1*0 + 2*7 + 3*1 + 4*2 = 25.
    CHECK(atleast[1] == 25);
    CHECK(atleast[0] == 14);   // plain total
}

TEST_CASE("cycle types enumerate the symmetric group") {
    auto types = cycle_types(4);
    CHECK(types.size() == 5);
    BigInt total = 0;
    for (const auto& t : types) {
        CHECK(t.total() == 4);
        total += t.permutation_count();
    }
    CHECK(total == 24);
    // Signed count over the whole group vanishes for m >= 2.
    for (std::uint32_t m : {2u, 3u, 5u}) {
        BigRat signed_sum = distinct_sieve_sum(m, [](const CycleType&) { return BigRat(1); });
        CHECK(signed_sum == 0);
    }
    CHECK(distinct_sieve_sum(1, [](const CycleType&) { return BigRat(1); }) == 1);
}

TEST_CASE("cycle-index average matches the direct group sum") {
    for (std::uint32_t p : {3u, 5u}) {
        QuadExt u(BigRat(-4));
        QuadExt w(BigRat(1, 2));
        for (std::uint64_t m = 0; m <= 6; ++m) {
            QuadExt direct(BigRat(0));
            for (const auto& t : cycle_types(static_cast<std::uint32_t>(m))) {
                QuadExt term(BigRat(t.permutation_count()));
                term = term * pow(u, t.cycles()) * pow(w, t.cycles_coprime(p));
                direct = direct + term;
            }
            direct = direct / QuadExt(BigRat(factorial(m)));
            CHECK(cycle_index_avg(m, u, w, p) == direct);
        }
    }
}

TEST_CASE("cycle-index average specializations") {
    for (std::uint32_t p : {3u, 5u}) {
        QuadExt u(BigRat(-7));
        for (std::uint64_t m = 0; m <= 10; ++m) {
            // w = 1 forgets the coprime marking entirely.
            QuadExt plain = gen_binomial(QuadExt(BigRat(7)), m);
            if (m % 2) plain = -plain;
            CHECK(cycle_index_avg(m, u, QuadExt(BigRat(1)), p) == plain);
            // w = 0 keeps only permutations all of whose cycles have length
            // divisible by p.
            QuadExt zero(BigRat(0));
            if (m % p == 0) {
                zero = gen_binomial(QuadExt(BigRat(7, static_cast<std::int64_t>(p))), m / p);
                if ((m / p) % 2) zero = -zero;
            }
            CHECK(cycle_index_avg(m, u, QuadExt(BigRat(0)), p) == zero);
        }
    }
}

TEST_CASE("cycle-index values used by the square-field closed forms") {
    // m = 2 has the closed value (n -+ sqrt(n))/2 at u = -n, w = +-1/sqrt(n).
    for (std::uint64_t n : {9ull, 25ull}) {
        std::uint32_t p = n == 9 ? 3 : 5;
        QuadExt u(BigRat(-static_cast<std::int64_t>(n)));
        QuadExt wplus(0, BigRat(1, static_cast<std::int64_t>(n)), n);
        QuadExt wminus = -wplus;
        QuadExt root = QuadExt::sqrt_of(n);
        CHECK(cycle_index_avg(2, u, wplus, p) == (QuadExt(BigRat(n)) - root) / QuadExt(BigRat(2)));
        CHECK(cycle_index_avg(2, u, wminus, p) == (QuadExt(BigRat(n)) + root) / QuadExt(BigRat(2)));
    }
    // Frozen values entering the two-coefficient special cases at n = 9;
    // 1/sqrt(9) collapses to the rational 1/3.
    QuadExt u9(BigRat(-9));
    QuadExt w9(0, BigRat(1, 9), 9);
    CHECK(w9 == QuadExt(BigRat(1, 3)));
    CHECK(cycle_index_avg(3, u9, w9, 3) == QuadExt(BigRat(-3)));
    CHECK(cycle_index_avg(3, u9, -w9, 3) == QuadExt(BigRat(6)));
}

TEST_CASE("combination and tuple visitors") {
    std::vector<std::vector<std::size_t>> combos;
    for_each_combination(5, 3, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        if (!combos.empty()) {
            // dirty marks the first changed slot relative to the previous call.
            for (std::int64_t i = 0; i < dirty; ++i)
                CHECK(idx[static_cast<std::size_t>(i)] == combos.back()[static_cast<std::size_t>(i)]);
        }
        combos.push_back(idx);
    });
    CHECK(combos.size() == 10);
    CHECK(combos.front() == std::vector<std::size_t>{0, 1, 2});
    CHECK(combos.back() == std::vector<std::size_t>{2, 3, 4});
    CHECK(std::set(combos.begin(), combos.end()).size() == combos.size());

    int tuples = 0;
    for_each_tuple(3, 2, [&](const std::vector<std::size_t>&, std::int64_t) { ++tuples; });
    CHECK(tuples == 9);
    for_each_combination(3, 5, [&](const std::vector<std::size_t>&, std::int64_t) { ++tuples; });
    CHECK(tuples == 9);   // m > n visits nothing
    for_each_tuple(3, 0, [&](const std::vector<std::size_t>& idx, std::int64_t) {
        CHECK(idx.empty());
        ++tuples;
    });
    CHECK(tuples == 10);   // the single empty tuple
}
