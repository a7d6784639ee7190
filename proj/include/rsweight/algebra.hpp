#pragma once

#include "rsweight/bigint.hpp"
#include "rsweight/domain.hpp"
#include "rsweight/poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace rsw {

/// Formal rational combination of leading-coefficient classes, keyed by dense
/// class index. Multiplication extends truncated class product bilinearly.
struct AlgebraElement {
    std::uint32_t ell = 0;
    std::map<std::uint64_t, BigRat> terms;  // index -> coefficient, zeros erased

    bool is_zero() const { return terms.empty(); }
    BigRat coeff(std::uint64_t idx) const;
    void add_term(std::uint64_t idx, const BigRat& c);
};

AlgebraElement alg_zero(std::uint32_t ell);
AlgebraElement alg_single(const Field& f, const LeadClass& c, const BigRat& coeff = 1);
AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_scale(const AlgebraElement& x, const BigRat& c);
AlgebraElement alg_mul(const Field& f, const AlgebraElement& x, const AlgebraElement& y);
bool alg_equal(const AlgebraElement& x, const AlgebraElement& y);

// Averaging idempotent (all classes, weight q^-ell) and its complement to the
// identity class. They satisfy E*E = E, J*J = J, E*J = 0 and E absorbs every class.
AlgebraElement idempotent_avg(const Field& f, std::uint32_t ell);
AlgebraElement idempotent_comp(const Field& f, std::uint32_t ell);

// Sum of the classes of all monic polynomials of one degree (weighted by
// multiplicity), i.e. the degree-d coefficient of the class generating series.
AlgebraElement monic_degree_sum(const Field& f, std::uint32_t ell, std::uint32_t d);

/// Power-series with algebra coefficients, truncated above degree dmax.
struct TruncatedSeries {
    std::uint32_t ell = 0;
    std::vector<AlgebraElement> coeffs;  // index = degree

    std::uint32_t dmax() const { return static_cast<std::uint32_t>(coeffs.size()) - 1; }
};

TruncatedSeries series_mul(const Field& f, const TruncatedSeries& x, const TruncatedSeries& y);

// Class generating series of all monic polynomials, coefficients by degree.
TruncatedSeries series_monic(const Field& f, std::uint32_t ell, std::uint32_t dmax);

// Same series restricted to multiples of prod_{x in pts} (x + point): the
// degree-d coefficient enumerates monic degree-d polynomials divisible by that
// product, by class.
TruncatedSeries series_multiples(const Field& f, const std::vector<Fe>& pts, std::uint32_t ell,
                                 std::uint32_t dmax);

// Series of monic polynomials whose set of roots inside the whole field is
// exactly `pts` (not a point more): multiples series times prod over the
// complement of (1 - <x + point> z).
TruncatedSeries series_exact_roots(const Field& f, const std::vector<Fe>& pts, std::uint32_t ell,
                                   std::uint32_t dmax);

// Number of monic degree-d polynomials in class c enumerated by the series
// coefficient; integrality is enforced.
BigRat series_extract(const Field& f, const TruncatedSeries& s, std::uint32_t d, const LeadClass& c);

}  // namespace rsw
