#include "rsweight/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsw {

namespace {

void guard_steps(const Budget& budget, const BigInt& steps) {
    const BigInt cap(std::numeric_limits<std::uint64_t>::max());
    if (steps > cap) throw BudgetError(std::numeric_limits<std::uint64_t>::max(), budget.max_steps);
    budget.check(steps.convert_to<std::uint64_t>());
}

void require(bool ok, const std::string& reason) {
    if (!ok) throw PreconditionError(reason);
}

void census_range(const Field& field, const DomainSet& domain, const ClassMembers& members,
                  std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& byroots) {
    for (std::uint64_t t = lo; t < hi; ++t)
        ++byroots[count_distinct_roots(field, members.member(t), domain)];
}

// Walks every degree-(k+ell) member of the class and tallies how many have
// each possible number of distinct roots in the domain.
std::vector<std::uint64_t> roots_census(const CountQuery& query, const Budget& budget, bool parallel) {
    query.validate();
    const Field& field = *query.field;
    const std::uint32_t top = static_cast<std::uint32_t>(query.k) + query.ell();
    guard_steps(budget, pow_big(BigInt(field.q()), static_cast<std::uint64_t>(query.k)));

    const LeadClass cls = query.lead_class();
    const ClassMembers members(field, cls, top);
    const std::uint64_t total = members.count();
    std::vector<std::uint64_t> byroots(top + 1, 0);

#ifdef _OPENMP
    if (parallel && total > 1) {
        const int parts = std::max(1, omp_get_max_threads());
        std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(parts), byroots);
#pragma omp parallel for schedule(static)
        for (int part = 0; part < parts; ++part) {
            const std::uint64_t lo = total / parts * part + std::min<std::uint64_t>(part, total % parts);
            const std::uint64_t len = total / parts + (static_cast<std::uint64_t>(part) < total % parts ? 1 : 0);
            const ClassMembers chunk_members(field, cls, top);
            census_range(field, query.domain, chunk_members, lo, lo + len, local[static_cast<std::size_t>(part)]);
        }
        for (const auto& chunk : local)
            for (std::size_t i = 0; i < byroots.size(); ++i) byroots[i] += chunk[i];
        return byroots;
    }
#else
    (void)parallel;
#endif
    census_range(field, query.domain, members, 0, total, byroots);
    return byroots;
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) {
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (std::uint64_t x : v) out.emplace_back(x);
    return out;
}

}   // namespace

std::vector<BigInt> oracle_N_vector(const CountQuery& query, const Budget& budget) {
    return to_big(roots_census(query, budget, true));
}

std::vector<BigInt> oracle_N_vector_serial(const CountQuery& query, const Budget& budget) {
    return to_big(roots_census(query, budget, false));
}

std::vector<BigInt> oracle_M_vector(const CountQuery& query, const Budget& budget) {
    const std::vector<std::uint64_t> byroots = roots_census(query, budget, true);
    std::vector<BigInt> out(byroots.size(), BigInt(0));
    for (std::size_t j = 0; j < out.size(); ++j)
        for (std::size_t r = j; r < byroots.size(); ++r)
            out[j] += BigInt(byroots[r]) * binomial(BigInt(static_cast<std::int64_t>(r)),
                                                    static_cast<std::int64_t>(j));
    return out;
}

BigInt oracle_N(const CountQuery& query, const Budget& budget) {
    const std::int64_t top = query.k + static_cast<std::int64_t>(query.ell());
    if (query.r > top) return 0;
    return oracle_N_vector(query, budget)[static_cast<std::size_t>(query.r)];
}

BigInt oracle_M(const CountQuery& query, const Budget& budget) {
    const std::int64_t top = query.k + static_cast<std::int64_t>(query.ell());
    if (query.r > top) return 0;
    return oracle_M_vector(query, budget)[static_cast<std::size_t>(query.r)];
}

BigInt oracle_U(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain, const Budget& budget) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(m)));
    std::vector<Fe> prefix(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t hits = 0;
    for_each_tuple(n, m, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        for (std::int64_t i = dirty; i < m; ++i)
            prefix[static_cast<std::size_t>(i) + 1] =
                field.add(prefix[static_cast<std::size_t>(i)], domain.elements[idx[static_cast<std::size_t>(i)]]);
        if (prefix[static_cast<std::size_t>(m)] == gamma) ++hits;
    });
    return BigInt(hits);
}

BigInt oracle_Ubar(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain, const Budget& budget) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(m)));
    if (m > n) return 0;
    std::vector<Fe> prefix(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t hits = 0;
    for_each_combination(n, m, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        for (std::int64_t i = dirty; i < m; ++i)
            prefix[static_cast<std::size_t>(i) + 1] =
                field.add(prefix[static_cast<std::size_t>(i)], domain.elements[idx[static_cast<std::size_t>(i)]]);
        if (prefix[static_cast<std::size_t>(m)] == gamma) ++hits;
    });
    return BigInt(hits) * factorial(static_cast<std::uint64_t>(m));
}

BigInt oracle_Vbar(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain,
                   const Budget& budget) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(m)));
    if (m > n) return 0;
    std::vector<Fe> e1(static_cast<std::size_t>(m) + 1, 0);   // running coordinate sum
    std::vector<Fe> e2(static_cast<std::size_t>(m) + 1, 0);   // running sum of pair products
    std::uint64_t hits = 0;
    for_each_combination(n, m, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        for (std::int64_t i = dirty; i < m; ++i) {
            const Fe x = domain.elements[idx[static_cast<std::size_t>(i)]];
            e2[static_cast<std::size_t>(i) + 1] =
                field.add(e2[static_cast<std::size_t>(i)], field.mul(e1[static_cast<std::size_t>(i)], x));
            e1[static_cast<std::size_t>(i) + 1] = field.add(e1[static_cast<std::size_t>(i)], x);
        }
        if (e1[static_cast<std::size_t>(m)] == gamma1 && e2[static_cast<std::size_t>(m)] == gamma2) ++hits;
    });
    return BigInt(hits) * factorial(static_cast<std::uint64_t>(m));
}

BigInt oracle_Wbar(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain,
                   const Budget& budget) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(m)) * BigInt(field.q()));
    if (m > n) return 0;
    std::vector<Fe> e1(static_cast<std::size_t>(m) + 1, 0);
    std::vector<Fe> e2(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t hits = 0;
    for_each_combination(n, m, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        for (std::int64_t i = dirty; i < m; ++i) {
            const Fe x = domain.elements[idx[static_cast<std::size_t>(i)]];
            e2[static_cast<std::size_t>(i) + 1] =
                field.add(e2[static_cast<std::size_t>(i)], field.mul(e1[static_cast<std::size_t>(i)], x));
            e1[static_cast<std::size_t>(i) + 1] = field.add(e1[static_cast<std::size_t>(i)], x);
        }
        const Fe s1 = e1[static_cast<std::size_t>(m)];
        const Fe s2 = e2[static_cast<std::size_t>(m)];
        for (Fe y = 0; y < field.q(); ++y)
            if (field.add(y, s1) == gamma1 && field.add(field.mul(y, s1), s2) == gamma2) ++hits;
    });
    return BigInt(hits) * factorial(static_cast<std::uint64_t>(m));
}

BigInt oracle_V_system(const std::vector<std::int64_t>& weights, Fe a0, Fe b0, const Field& field,
                       const DomainSet& domain, const Budget& budget) {
    const std::int64_t m = static_cast<std::int64_t>(weights.size());
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(m)));
    std::vector<Fe> scaled(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) scaled[j] = field.scalar(weights[j]);
    std::vector<Fe> s1(static_cast<std::size_t>(m) + 1, 0);   // running weighted sum
    std::vector<Fe> s2(static_cast<std::size_t>(m) + 1, 0);   // running weighted sum of squares
    std::uint64_t hits = 0;
    for_each_tuple(n, m, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        for (std::int64_t i = dirty; i < m; ++i) {
            const Fe x = domain.elements[idx[static_cast<std::size_t>(i)]];
            const Fe wx = field.mul(scaled[static_cast<std::size_t>(i)], x);
            s1[static_cast<std::size_t>(i) + 1] = field.add(s1[static_cast<std::size_t>(i)], wx);
            s2[static_cast<std::size_t>(i) + 1] =
                field.add(s2[static_cast<std::size_t>(i)], field.mul(wx, x));
        }
        if (s2[static_cast<std::size_t>(m)] == a0 && s1[static_cast<std::size_t>(m)] == b0) ++hits;
    });
    return BigInt(hits);
}

namespace {

DistanceHistogram histogram_from_census(const CountQuery& query, const std::vector<std::uint64_t>& byroots) {
    DistanceHistogram hist;
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    hist.total = 0;
    for (std::size_t r = 0; r < byroots.size(); ++r) {
        if (byroots[r] == 0) continue;
        hist.counts[n - static_cast<std::int64_t>(r)] += BigInt(byroots[r]);
        hist.total += BigInt(byroots[r]);
    }
    return hist;
}

}   // namespace

DistanceHistogram distance_distribution(const CountQuery& query, const Budget& budget) {
    return histogram_from_census(query, roots_census(query, budget, true));
}

DistanceHistogram distance_distribution_serial(const CountQuery& query, const Budget& budget) {
    return histogram_from_census(query, roots_census(query, budget, false));
}

std::pair<BigRat, BigRat> empirical_moments(const DistanceHistogram& hist) {
    require(hist.total > 0 && !hist.counts.empty(), "empty histogram has no moments");
    BigRat mean(0);
    BigRat second(0);
    for (const auto& [d, c] : hist.counts) {
        mean += BigRat(BigInt(d) * c, hist.total);
        second += BigRat(BigInt(d) * BigInt(d) * c, hist.total);
    }
    return {mean, second - mean * mean};
}

CountOutcome run_N(const CountQuery& query, Engine engine, const Budget& budget) {
    const Engine resolved = engine == Engine::Auto ? engine_auto(query, budget) : engine;
    if (resolved == Engine::Oracle) return {resolved, oracle_N(query, budget)};
    return {resolved, closed_N(query, resolved, budget)};
}

}   // namespace rsw
