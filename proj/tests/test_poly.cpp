#include "rsweight/poly.hpp"

#include "doctest.h"

#include <set>

using namespace rsw;

TEST_CASE("evaluation and root counting") {
    Field f(3, 1);
    // (x - 1)(x - 2) = x^2 + 2 over F_3.
    MonicPoly g{{0, 2}};
    CHECK(eval(f, g, 0) == 2);
    CHECK(eval(f, g, 1) == 0);
    CHECK(eval(f, g, 2) == 0);
    CHECK(count_distinct_roots(f, g, domain_full(f)) == 2);
    CHECK(count_distinct_roots(f, g, domain_explicit(f, {0, 1})) == 1);
    // The constant 1 has degree 0 and no roots.
    CHECK(count_distinct_roots(f, MonicPoly{}, domain_full(f)) == 0);
}

TEST_CASE("classes of linear factors and padding") {
    Field f(3, 1);
    CHECK(class_of_linear(f, 2, 1) == LeadClass{1, {2}});
    // Degree below ell: missing coefficients read as zero.
    CHECK(class_of_linear(f, 2, 2) == LeadClass{2, {2, 0}});
    CHECK(leading_coeffs(MonicPoly{}, 2) == LeadClass{2, {0, 0}});
    CHECK(leading_coeffs(MonicPoly{{1, 2, 0}}, 2) == LeadClass{2, {1, 2}});
}

TEST_CASE("class product matches polynomial product") {
    for (auto [p, a] : {std::pair{3u, 1u}, {2u, 2u}, {3u, 2u}}) {
        Field f(p, a);
        for (std::uint32_t ell : {1u, 2u}) {
            // Exhaust products of pairs of quadratics via explicit polynomials.
            for (std::uint64_t i = 0; i < class_count(f, ell); ++i) {
                LeadClass ci = class_from_index(f, ell, i);
                for (std::uint64_t j = 0; j < class_count(f, ell); ++j) {
                    LeadClass cj = class_from_index(f, ell, j);
                    MonicPoly gi = ClassMembers(f, ci, 2).member(0);
                    MonicPoly gj = ClassMembers(f, cj, 2).member(0);
                    // Multiply the two monic quadratics directly.
                    std::vector<Fe> full(5, 0);
                    auto coeff = [&](const MonicPoly& g, std::size_t t) {
                        return t == 0 ? f.one() : g.coeffs[t - 1];
                    };
                    for (std::size_t s = 0; s <= 2; ++s)
                        for (std::size_t t = 0; t <= 2; ++t)
                            full[s + t] = f.add(full[s + t], f.mul(coeff(gi, s), coeff(gj, t)));
                    MonicPoly product{{full[1], full[2], full[3], full[4]}};
                    CHECK(leading_coeffs(product, ell) == class_mul(f, ci, cj));
                }
            }
        }
    }
}

TEST_CASE("class inverse worked example") {
    Field f(3, 1);
    LeadClass c{2, {1, 1}};
    CHECK(class_inv(f, c) == LeadClass{2, {2, 0}});
    CHECK(class_mul(f, c, class_inv(f, c)) == class_identity(2));
}

TEST_CASE("dense class indexing round trip") {
    Field f(3, 2);
    for (std::uint32_t ell : {0u, 1u, 2u}) {
        CHECK(class_count(f, ell) == (ell == 0 ? 1 : ell == 1 ? 9 : 81));
        for (std::uint64_t idx = 0; idx < class_count(f, ell); ++idx)
            CHECK(class_index(f, class_from_index(f, ell, idx)) == idx);
    }
}

TEST_CASE("class member enumeration") {
    Field f(3, 2);
    LeadClass c{2, {4, 7}};
    for (std::uint32_t d : {2u, 3u, 4u}) {
        ClassMembers members(f, c, d);
        CHECK(members.count() == pow_big(BigInt(9), d - 2));
        std::set<std::vector<Fe>> seen;
        for (std::uint64_t t = 0; t < members.count(); ++t) {
            MonicPoly g = members.member(t);
            CHECK(g.degree() == d);
            CHECK(leading_coeffs(g, 2) == c);
            seen.insert(g.coeffs);
        }
        CHECK(seen.size() == members.count());
    }
}

TEST_CASE("low-degree members exist only for vanishing tails") {
    // Degree d < ell: the single candidate is x^d plus the prescribed
    // coefficients, which must all be zero below position d.
    CHECK(class_has_low_degree_member(LeadClass{2, {0, 0}}, 0));
    CHECK(!class_has_low_degree_member(LeadClass{2, {1, 0}}, 0));
    CHECK(!class_has_low_degree_member(LeadClass{2, {0, 1}}, 0));
    CHECK(class_has_low_degree_member(LeadClass{2, {5, 0}}, 1));
    CHECK(!class_has_low_degree_member(LeadClass{2, {5, 1}}, 1));
    // From ell upward the enumerator takes over.
    CHECK_THROWS_AS(class_has_low_degree_member(LeadClass{2, {5, 1}}, 2), PreconditionError);
}
