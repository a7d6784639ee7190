#include "rsweight/field.hpp"

#include "doctest.h"

#include <set>

using namespace rsw;

TEST_CASE("moduli are deterministic and minimal") {
    // Lexicographically smallest monic irreducibles, constant term first.
    CHECK(Field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});        // x^2 + 1
    CHECK(Field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});        // x^2 + x + 1
    CHECK(Field(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});     // x^3 + x + 1
    CHECK(Field(3, 2).modulus() == Field(3, 2).modulus());
}

TEST_CASE("field axioms hold exhaustively on small orders") {
    for (auto [p, a] : {std::pair{2u, 2u}, {3u, 1u}, {3u, 2u}, {2u, 3u}, {5u, 1u}}) {
        Field f(p, a);
        std::uint64_t q = f.q();
        for (Fe x = 0; x < q; ++x) {
            CHECK(f.add(x, 0) == x);
            CHECK(f.mul(x, 1) == x);
            CHECK(f.add(x, f.neg(x)) == 0);
            if (x != 0) {
                CHECK(f.mul(x, f.inv(x)) == 1);
                // Fermat: x^q = x, x^(q-1) = 1.
                CHECK(f.pow(x, BigInt(q)) == x);
                CHECK(f.pow(x, BigInt(q - 1)) == 1);
            }
            for (Fe y = 0; y < q; ++y) {
                CHECK(f.add(x, y) == f.add(y, x));
                CHECK(f.mul(x, y) == f.mul(y, x));
                CHECK(f.sub(x, y) == f.add(x, f.neg(y)));
                for (Fe z = 0; z < q; ++z) {
                    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }
}

TEST_CASE("prime-field scalars embed by residue") {
    Field f(3, 2);
    CHECK(f.scalar(0) == 0);
    CHECK(f.scalar(1) == 1);
    CHECK(f.scalar(3) == 0);
    CHECK(f.scalar(-1) == f.neg(1));
    CHECK(f.scalar(7) == f.scalar(1));
}

TEST_CASE("coefficient round trip") {
    Field f(3, 2);
    for (Fe x = 0; x < f.q(); ++x) CHECK(f.from_coeffs(f.to_coeffs(x)) == x);
}

TEST_CASE("quadratic character of the full field") {
    Field f(3, 2);
    CHECK(f.eta(0) == 0);
    int sum = 0;
    std::set<Fe> squares;
    for (Fe x = 1; x < f.q(); ++x) squares.insert(f.mul(x, x));
    for (Fe x = 1; x < f.q(); ++x) {
        CHECK(f.eta(x) == (squares.count(x) ? 1 : -1));
        sum += f.eta(x);
    }
    CHECK(sum == 0);
    // q = 9 is 1 mod 4, so -1 is a square.
    CHECK(f.eta(f.neg(1)) == 1);
    CHECK_THROWS_AS(Field(2, 2).eta(1), PreconditionError);
}

TEST_CASE("quadratic character of a subfield ignores the ambient field") {
    Field f9(3, 2);
    // Inside F_3: 2 = -1 is not a square (3 is 3 mod 4).
    CHECK(f9.eta_in(1, 3) == 1);
    CHECK(f9.eta_in(2, 3) == -1);
    CHECK(f9.eta_in(0, 3) == 0);
    // Over the full F_9 every prime-subfield unit is a square.
    CHECK(f9.eta_in(1, 9) == 1);
    CHECK(f9.eta_in(2, 9) == 1);
    // x must actually lie in the order-n subfield.
    Fe outside = 3;   // first element beyond the prime subfield
    CHECK(f9.pow(outside, BigInt(3)) != outside);
    CHECK_THROWS_AS(f9.eta_in(outside, 3), PreconditionError);
    CHECK_THROWS_AS(Field(2, 2).eta_in(1, 2), PreconditionError);
}
