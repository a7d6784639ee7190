#include "rsweight/moments.hpp"

#include "rsweight/algebra.hpp"

#include <stdexcept>

namespace rsw {

namespace {

void require(bool ok, const std::string& reason) {
    if (!ok) throw PreconditionError(reason);
}

}   // namespace

BigRat expected_distance(std::uint64_t q, std::uint64_t n) {
    require(q >= 2, "field size must be at least 2");
    require(n <= q, "domain cannot exceed the field");
    return BigRat(BigInt(q - 1) * BigInt(n), BigInt(q));
}

BigRat variance_distance(std::uint64_t q, std::uint64_t n) {
    require(q >= 2, "field size must be at least 2");
    require(n <= q, "domain cannot exceed the field");
    return BigRat(BigInt(q - 1) * BigInt(n), BigInt(q) * BigInt(q));
}

FactorialMoments factorial_moments_via_series(const CountQuery& query) {
    query.validate();
    const Field& field = *query.field;
    const std::uint32_t ell = query.ell();
    require(ell >= 1, "derivative route needs at least one prescribed coefficient");
    require(query.k >= 1, "derivative route needs k >= 1");
    const std::uint32_t dmax = static_cast<std::uint32_t>(query.k) + ell;
    const BigInt q(field.q());
    const BigInt n(static_cast<std::int64_t>(query.domain.n()));

    AlgebraElement x_sum = alg_zero(ell);
    AlgebraElement x_squares = alg_zero(ell);
    for (Fe alpha : query.domain.elements) {
        const LeadClass c = class_of_linear(field, field.neg(alpha), ell);
        x_sum = alg_add(x_sum, alg_single(field, c));
        x_squares = alg_add(x_squares, alg_single(field, class_mul(field, c, c)));
    }

    const TruncatedSeries monic = series_monic(field, ell, dmax);
    const LeadClass target = query.lead_class();

    TruncatedSeries first_factor;
    first_factor.ell = ell;
    first_factor.coeffs.assign(dmax + 1, alg_zero(ell));
    first_factor.coeffs[1] = x_sum;
    const BigRat first = series_extract(field, series_mul(field, monic, first_factor), dmax, target);
    if (first != BigRat(n * pow_big(q, static_cast<std::uint64_t>(query.k - 1))))
        throw std::logic_error("first factorial moment extraction disagrees with its predicted value");

    FactorialMoments out{first, std::nullopt};
    if (query.k >= 2) {
        TruncatedSeries second_factor;
        second_factor.ell = ell;
        second_factor.coeffs.assign(dmax + 1, alg_zero(ell));
        second_factor.coeffs[2] = alg_add(alg_mul(field, x_sum, x_sum), alg_scale(x_squares, BigRat(-1)));
        const BigRat second = series_extract(field, series_mul(field, monic, second_factor), dmax, target);
        if (second != BigRat((n * n - n) * pow_big(q, static_cast<std::uint64_t>(query.k - 2))))
            throw std::logic_error("second factorial moment extraction disagrees with its predicted value");
        out.second = second;
    }
    return out;
}

MomentReport moments_closed(std::uint64_t q, std::uint64_t n) {
    return {expected_distance(q, n), variance_distance(q, n), "closed_form"};
}

MomentReport moments_factorial(const CountQuery& query) {
    require(query.k >= 2, "factorial moment variance needs k >= 2");
    const FactorialMoments fm = factorial_moments_via_series(query);
    const BigRat size(pow_big(BigInt(query.field->q()), static_cast<std::uint64_t>(query.k)));
    const BigRat mu = fm.first / size;                 // expected distinct roots
    const BigRat paired = *fm.second / size;           // expected roots*(roots-1)
    const BigRat n(BigInt(static_cast<std::int64_t>(query.domain.n())));
    MomentReport report;
    report.mean = n - mu;
    report.variance = paired + mu - mu * mu;
    report.source = "factorial_moment_path";
    return report;
}

MomentReport moments_empirical(const CountQuery& query, const Budget& budget) {
    const DistanceHistogram hist = distance_distribution(query, budget);
    const auto [mean, variance] = empirical_moments(hist);
    return {mean, variance, "empirical"};
}

}   // namespace rsw
