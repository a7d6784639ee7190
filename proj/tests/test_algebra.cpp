#include "rsweight/algebra.hpp"

#include "doctest.h"

using namespace rsw;

namespace {

// Degree-d coefficient count of class c among monics divisible by the product
// of (x + point) over pts, by direct enumeration.
BigInt divisible_members(const Field& f, const LeadClass& c, std::uint32_t d,
                         const std::vector<Fe>& pts) {
    BigInt hits = 0;
    if (d < c.ell) {
        if (!class_has_low_degree_member(c, d)) return 0;
        // The single member is x^d with the prescribed tail; reconstruct it.
        MonicPoly g{std::vector<Fe>(c.lead.begin(), c.lead.begin() + d)};
        for (Fe pt : pts)
            if (eval(f, g, f.neg(pt)) != 0) return 0;
        return 1;
    }
    ClassMembers members(f, c, d);
    for (std::uint64_t t = 0; t < members.count(); ++t) {
        MonicPoly g = members.member(t);
        bool all = true;
        for (Fe pt : pts)
            if (eval(f, g, f.neg(pt)) != 0) all = false;
        if (all) ++hits;
    }
    return hits;
}

}   // namespace

TEST_CASE("algebra element basics") {
    Field f(3, 1);
    AlgebraElement zero = alg_zero(1);
    CHECK(zero.is_zero());
    AlgebraElement x = alg_single(f, LeadClass{1, {2}}, BigRat(3, 2));
    CHECK(x.coeff(2) == BigRat(3, 2));
    CHECK(x.coeff(0) == 0);
    CHECK(alg_equal(alg_add(x, alg_scale(x, -1)), zero));
    // Product of basis elements is the basis element of the product class.
    AlgebraElement y = alg_single(f, LeadClass{1, {1}});
    CHECK(alg_equal(alg_mul(f, x, y), alg_single(f, LeadClass{1, {0}}, BigRat(3, 2))));
}

TEST_CASE("monic degree census matches enumeration") {
    for (auto [p, a] : {std::pair{3u, 1u}, {2u, 2u}}) {
        Field f(p, a);
        for (std::uint32_t ell : {0u, 1u, 2u}) {
            for (std::uint32_t d = 0; d <= 4; ++d) {
                AlgebraElement census = monic_degree_sum(f, ell, d);
                BigRat mass = 0;
                for (std::uint64_t idx = 0; idx < class_count(f, ell); ++idx)
                    mass += census.coeff(idx);
                CHECK(mass == BigRat(pow_big(BigInt(f.q()), d)));
                if (d >= ell)
                    for (std::uint64_t idx = 0; idx < class_count(f, ell); ++idx)
                        CHECK(census.coeff(idx) == BigRat(pow_big(BigInt(f.q()), d - ell)));
            }
        }
    }
}

TEST_CASE("full monic series coefficients are the degree censuses") {
    Field f(3, 1);
    TruncatedSeries s = series_monic(f, 2, 5);
    for (std::uint32_t d = 0; d <= 5; ++d)
        CHECK(alg_equal(s.coeffs[d], monic_degree_sum(f, 2, d)));
}

TEST_CASE("multiples series counts divisible polynomials") {
    for (auto [p, a] : {std::pair{3u, 1u}, {2u, 2u}}) {
        Field f(p, a);
        for (std::uint32_t ell : {1u, 2u}) {
            for (const std::vector<Fe>& pts :
                 {std::vector<Fe>{0}, std::vector<Fe>{1}, std::vector<Fe>{0, 1}}) {
                TruncatedSeries s = series_multiples(f, pts, ell, 4);
                for (std::uint32_t d = 0; d <= 4; ++d) {
                    for (std::uint64_t idx = 0; idx < class_count(f, ell); ++idx) {
                        LeadClass c = class_from_index(f, ell, idx);
                        CHECK(s.coeffs[d].coeff(idx) == BigRat(divisible_members(f, c, d, pts)));
                    }
                }
            }
        }
    }
}

TEST_CASE("exact-roots series counts polynomials with that exact root set") {
    Field f(3, 1);
    std::uint32_t ell = 1;
    for (const std::vector<Fe>& pts : {std::vector<Fe>{}, std::vector<Fe>{1}, std::vector<Fe>{1, 2}}) {
        TruncatedSeries s = series_exact_roots(f, pts, ell, 4);
        for (std::uint32_t d = pts.empty() ? 1u : static_cast<std::uint32_t>(pts.size()); d <= 4;
             ++d) {
            for (std::uint64_t idx = 0; idx < class_count(f, ell); ++idx) {
                LeadClass c = class_from_index(f, ell, idx);
                // Direct census: members of class c, degree d, whose distinct
                // roots in the whole field are exactly pts.
                BigInt direct = 0;
                ClassMembers members(f, c, d);
                for (std::uint64_t t = 0; t < members.count(); ++t) {
                    MonicPoly g = members.member(t);
                    bool match = true;
                    for (Fe x = 0; x < f.q(); ++x) {
                        bool root = eval(f, g, x) == 0;
                        bool wanted = false;
                        for (Fe pt : pts) wanted = wanted || f.neg(pt) == x;
                        if (root != wanted) match = false;
                    }
                    if (match) ++direct;
                }
                CHECK(series_extract(f, s, d, c) == BigRat(direct));
            }
        }
    }
}

TEST_CASE("series multiplication is consistent with coefficient convolution") {
    Field f(3, 1);
    TruncatedSeries m = series_monic(f, 1, 3);
    TruncatedSeries sq = series_mul(f, m, m);
    for (std::uint32_t d = 0; d <= 3; ++d) {
        AlgebraElement direct = alg_zero(1);
        for (std::uint32_t i = 0; i <= d; ++i)
            direct = alg_add(direct, alg_mul(f, m.coeffs[i], m.coeffs[d - i]));
        CHECK(alg_equal(sq.coeffs[d], direct));
    }
}
