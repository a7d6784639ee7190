#include "rsweight/counting.hpp"

#include "rsweight/algebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace rsw {

namespace {

int parity_sign(std::int64_t x) { return x % 2 == 0 ? 1 : -1; }

void require(bool ok, const std::string& reason) {
    if (!ok) throw PreconditionError(reason);
}

// Work estimates are exact big integers; saturate before consulting the budget.
void guard_steps(const Budget& budget, const BigInt& steps) {
    const BigInt cap(std::numeric_limits<std::uint64_t>::max());
    if (steps > cap) throw BudgetError(std::numeric_limits<std::uint64_t>::max(), budget.max_steps);
    budget.check(steps.convert_to<std::uint64_t>());
}

bool fits_budget(const Budget& budget, const BigInt& steps) {
    return steps <= BigInt(budget.max_steps);
}

std::uint64_t isqrt_u64(std::uint64_t v) {
    std::uint64_t s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

bool is_perfect_square(std::uint64_t v) {
    const std::uint64_t s = isqrt_u64(v);
    return s * s == v;
}

// Number of m-subsets S of the domain whose residual class
// target * prod_{a in S} <x - a>^{-1} contains a monic polynomial of degree d.
BigInt subset_residual_count(const Field& field, const DomainSet& domain, const LeadClass& target,
                             std::int64_t m, std::uint32_t d) {
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    if (m < 0 || m > n) return 0;
    const std::uint32_t ell = target.ell;
    if (m == 0) return class_has_low_degree_member(target, d) ? 1 : 0;

    std::vector<LeadClass> inv_linear;
    inv_linear.reserve(domain.elements.size());
    for (Fe alpha : domain.elements)
        inv_linear.push_back(class_inv(field, class_of_linear(field, field.neg(alpha), ell)));

    std::vector<LeadClass> partial(static_cast<std::size_t>(m) + 1, class_identity(ell));
    BigInt count = 0;
    for_each_combination(n, m, [&](const std::vector<std::size_t>& idx, std::int64_t dirty) {
        for (std::int64_t i = dirty; i < m; ++i)
            partial[static_cast<std::size_t>(i) + 1] =
                class_mul(field, partial[static_cast<std::size_t>(i)], inv_linear[idx[static_cast<std::size_t>(i)]]);
        if (class_has_low_degree_member(class_mul(field, target, partial[static_cast<std::size_t>(m)]), d)) ++count;
    });
    return count;
}

bool subfield_pair_applies(const CountQuery& query) {
    const Field& field = *query.field;
    if (query.ell() != 2 || field.p() == 2) return false;
    if (!query.domain.is_subfield(field)) return false;
    if (!is_perfect_square(query.domain.n())) return false;
    return query.domain.contains(query.gammas[0]) && query.domain.contains(query.gammas[1]);
}

// Cost of the subset enumerations behind theorem1_N, as an exact step count.
BigInt theorem1_cost(const CountQuery& query) {
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const BigInt q(query.field->q());
    const std::uint32_t ell = query.ell();
    BigInt total = 0;
    for (std::uint32_t i = 1; i <= ell; ++i) {
        const std::int64_t m = query.k + static_cast<std::int64_t>(i);
        if (query.r > m || m > n) continue;
        total += pow_big(BigInt(n), static_cast<std::uint64_t>(m)) * pow_big(q, ell - i);
    }
    return total;
}

QuadExt inverse_root(std::int64_t n, int sign) {
    // sign / sqrt(n) written as sign * sqrt(n) / n; collapses when n is a square
    return QuadExt(BigRat(0), BigRat(BigInt(sign), BigInt(n)), static_cast<std::uint64_t>(n));
}

// Distinct-coordinate tuple count over the subfield F_n with prescribed first
// and second elementary symmetric sums, divided by m!.  Splits on whether the
// characteristic divides m; exact in Q(sqrt n) and rational once n is an even
// power.  Callers have already checked the domain/characteristic context.
QuadExt vbar_over_factorial(std::int64_t m, Fe g1, Fe g2, const Field& field, const DomainSet& domain) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    const std::uint32_t p = field.p();
    const QuadExt root = QuadExt::sqrt_of(static_cast<std::uint64_t>(n));
    const QuadExt a_pos = cycle_index_avg(static_cast<std::uint64_t>(m), QuadExt(BigRat(-n)), inverse_root(n, +1), p);
    const QuadExt a_neg = cycle_index_avg(static_cast<std::uint64_t>(m), QuadExt(BigRat(-n)), inverse_root(n, -1), p);
    const int msign = parity_sign(m);

    if (m % static_cast<std::int64_t>(p) == 0) {
        const BigInt small = binomial(BigInt(n / p), m / p);
        QuadExt value(BigRat(binomial(BigInt(n), m) - small, BigInt(n) * n));
        if (g1 == 0) {
            value += QuadExt(BigRat(small, BigInt(n)));
            const BigRat gate(BigInt(g2 == 0 ? n : 0) - 1);
            const QuadExt spread = QuadExt(BigRat(field.eta_in(g2, static_cast<std::uint64_t>(n)))) * root;
            const QuadExt scale(BigRat(BigInt(msign), BigInt(2 * n)));
            value += scale * ((QuadExt(gate) + spread) * a_pos + (QuadExt(gate) - spread) * a_neg);
        }
        return value;
    }

    // constant separating the character cases: (m-1) g1^2 - 2 m g2
    const Fe c = field.sub(field.mul(field.scalar(m - 1), field.mul(g1, g1)),
                           field.mul(field.scalar(2 * m), g2));
    const BigRat gate(BigInt(c == 0 ? n : 0) - 1);
    const QuadExt spread = QuadExt(BigRat(field.eta_in(c, static_cast<std::uint64_t>(n)))) * root;
    QuadExt value(BigRat(binomial(BigInt(n), m), BigInt(n) * n));
    const QuadExt scale = QuadExt(BigRat(BigInt(msign), BigInt(2 * n))) * inverse_root(n, +1);
    value += scale * ((spread + QuadExt(gate)) * a_pos + (spread - QuadExt(gate)) * a_neg);
    return value;
}

// Companion count with one extra unconstrained coordinate folded into the
// power sums; splits on whether the characteristic divides m + 1.
QuadExt wbar_over_factorial(std::int64_t m, Fe g1, Fe g2, const Field& field, const DomainSet& domain) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    const std::uint32_t p = field.p();
    const QuadExt root = QuadExt::sqrt_of(static_cast<std::uint64_t>(n));
    const QuadExt a_pos = cycle_index_avg(static_cast<std::uint64_t>(m), QuadExt(BigRat(-n)), inverse_root(n, +1), p);
    const QuadExt a_neg = cycle_index_avg(static_cast<std::uint64_t>(m), QuadExt(BigRat(-n)), inverse_root(n, -1), p);
    const int msign = parity_sign(m);

    QuadExt value(BigRat(binomial(BigInt(n), m), BigInt(n)));
    if ((m + 1) % static_cast<std::int64_t>(p) == 0) {
        if (g1 != 0) return value;
        const BigRat gate(BigInt(g2 == 0 ? n : 0) - 1);
        const QuadExt spread = QuadExt(BigRat(field.eta_in(g2, static_cast<std::uint64_t>(n)))) * root;
        const QuadExt scale = QuadExt(BigRat(BigInt(msign), BigInt(2))) * inverse_root(n, +1);
        value += scale * ((spread + QuadExt(gate)) * a_pos + (spread - QuadExt(gate)) * a_neg);
        return value;
    }

    // constant separating the character cases: m g1^2 - 2 (m+1) g2
    const Fe c = field.sub(field.mul(field.scalar(m), field.mul(g1, g1)),
                           field.mul(field.scalar(2 * (m + 1)), g2));
    const BigRat gate(BigInt(c == 0 ? n : 0) - 1);
    const QuadExt spread = QuadExt(BigRat(field.eta_in(c, static_cast<std::uint64_t>(n)))) * root;
    const QuadExt scale(BigRat(BigInt(msign), BigInt(2 * n)));
    value += scale * ((QuadExt(gate) + spread) * a_pos + (QuadExt(gate) - spread) * a_neg);
    return value;
}

void require_pair_context(const CountQuery& query, const char* who) {
    require(query.ell() == 2, std::string(who) + " needs exactly two prescribed coefficients");
    require(query.field->p() > 2, std::string(who) + " requires odd characteristic");
    require(query.domain.is_subfield(*query.field), std::string(who) + " needs a subfield domain");
}

bool is_small_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}   // namespace

LeadClass CountQuery::lead_class() const {
    LeadClass c;
    c.ell = ell();
    c.lead = gammas;
    return c;
}

MonicPoly CountQuery::received_word() const {
    MonicPoly f;
    f.coeffs.assign(static_cast<std::size_t>(k) + gammas.size(), 0);
    std::copy(gammas.begin(), gammas.end(), f.coeffs.begin());
    return f;
}

void CountQuery::validate() const {
    require(field != nullptr, "query has no field");
    require(k >= 0, "code dimension must be nonnegative");
    require(r >= 0, "root count must be nonnegative");
    require(!domain.elements.empty(), "domain is empty");
    for (Fe x : domain.elements)
        require(x < field->q(), "domain element is outside the field");
    std::vector<Fe> sorted = domain.elements;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "domain elements must be distinct");
    for (Fe g : gammas)
        require(g < field->q(), "prescribed coefficient is outside the field");
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Auto: return "auto";
        case Engine::Theorem1: return "theorem1";
        case Engine::Theorem2: return "theorem2";
        case Engine::Theorem3: return "theorem3";
        case Engine::Theorem4: return "theorem4";
        case Engine::Theorem5: return "theorem5";
        case Engine::Series: return "series";
        case Engine::Oracle: return "oracle";
    }
    throw std::logic_error("unknown engine");
}

Engine engine_from_name(const std::string& name) {
    for (Engine e : {Engine::Auto, Engine::Theorem1, Engine::Theorem2, Engine::Theorem3,
                     Engine::Theorem4, Engine::Theorem5, Engine::Series, Engine::Oracle})
        if (name == engine_name(e)) return e;
    throw PreconditionError("unknown engine '" + name + "'");
}

BigRat leading_sum(const BigInt& q, std::int64_t n, std::int64_t k, std::int64_t r) {
    if (r < 0 || r > k) return BigRat(0);
    BigInt acc = 0;
    for (std::int64_t j = 0; j <= k - r; ++j) {
        const BigInt term = pow_big(q, static_cast<std::uint64_t>(k - r - j)) * binomial(BigInt(n - r), j);
        acc += j % 2 == 0 ? term : -term;
    }
    return BigRat(acc * binomial(BigInt(n), r));
}

BigInt n_closed_ell0(const CountQuery& query) {
    query.validate();
    require(query.ell() == 0, "closed form without prescribed coefficients needs ell = 0");
    return require_integer(
        leading_sum(BigInt(query.field->q()), static_cast<std::int64_t>(query.domain.n()), query.k, query.r),
        "unconstrained count");
}

BigInt theorem1_M(const CountQuery& query, const Budget& budget) {
    query.validate();
    const Field& field = *query.field;
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;
    const std::uint32_t ell = query.ell();
    const BigInt q(field.q());

    if (r <= k) return pow_big(q, static_cast<std::uint64_t>(k - r)) * binomial(BigInt(n), r);
    if (r > k + static_cast<std::int64_t>(ell)) return 0;
    guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(r)) *
                            pow_big(q, static_cast<std::uint32_t>(k + static_cast<std::int64_t>(ell) - r)));
    return subset_residual_count(field, query.domain, query.lead_class(), r,
                                 static_cast<std::uint32_t>(k + static_cast<std::int64_t>(ell) - r));
}

BigInt theorem1_N(const CountQuery& query, const Budget& budget) {
    query.validate();
    const Field& field = *query.field;
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;
    const std::uint32_t ell = query.ell();
    const BigInt q(field.q());

    BigRat acc = leading_sum(q, n, k, r);
    for (std::uint32_t i = 1; i <= ell; ++i) {
        const std::int64_t m = k + static_cast<std::int64_t>(i);
        if (r > m || m > n) continue;
        guard_steps(budget, pow_big(BigInt(n), static_cast<std::uint64_t>(m)) * pow_big(q, ell - i));
        const BigInt hits = subset_residual_count(field, query.domain, query.lead_class(), m, ell - i);
        const BigInt term = binomial(BigInt(m), r) * hits;
        acc += BigRat(parity_sign(m - r) > 0 ? term : -term);
    }
    return require_integer(acc, "prescribed-coefficient count");
}

BigInt U_m(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain) {
    require(m >= 0, "tuple length must be nonnegative");
    if (m == 0) return gamma == 0 ? 1 : 0;
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    if (domain.is_additive_subgroup(field))
        return domain.contains(gamma) ? pow_big(BigInt(n), static_cast<std::uint64_t>(m - 1)) : BigInt(0);
    if (domain.is_punctured_subgroup(field)) {
        if (gamma != 0 && !domain.contains(gamma)) return 0;
        const BigInt swing((gamma == 0 ? n + 1 : 0) - 1);
        const BigInt num = pow_big(BigInt(n), static_cast<std::uint64_t>(m)) +
                           BigInt(parity_sign(m)) * swing;
        return require_integer(BigRat(num, BigInt(n + 1)), "tuple sum count");
    }
    throw PreconditionError("tuple sum count needs an additive subgroup or a subgroup with zero removed");
}

BigInt Ubar_m(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain) {
    require(m >= 0, "tuple length must be nonnegative");
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    const std::int64_t p = static_cast<std::int64_t>(field.p());
    if (domain.is_additive_subgroup(field)) {
        if (!domain.contains(gamma)) return 0;   // coordinate sums stay inside the subgroup
        BigRat value(binomial(BigInt(n), m), BigInt(n));
        if (m % p == 0) {
            const std::int64_t mp = m / p;
            const BigRat gate(BigInt(gamma == 0 ? n : 0) - 1, BigInt(n));
            value += BigRat(parity_sign(m + mp)) * gate * gen_binomial(BigRat(BigInt(n), BigInt(p)), static_cast<std::uint64_t>(mp));
        }
        return require_integer(value * BigRat(factorial(static_cast<std::uint64_t>(m))), "distinct tuple sum count");
    }
    if (domain.is_punctured_subgroup(field)) {
        if (gamma != 0 && !domain.contains(gamma)) return 0;
        const std::int64_t full = n + 1;   // order of the subgroup before removing zero
        BigRat value(binomial(BigInt(n), m), BigInt(full));
        BigInt alt = 0;
        for (std::int64_t j = 0; j * p <= m; ++j)
            alt += BigInt(parity_sign(j)) * binomial(BigInt(full / p), j);
        const BigRat gate(BigInt(gamma == 0 ? full : 0) - 1, BigInt(full));
        value += gate * BigRat(BigInt(parity_sign(m)) * alt);
        return require_integer(value * BigRat(factorial(static_cast<std::uint64_t>(m))), "distinct tuple sum count");
    }
    throw PreconditionError("distinct tuple sum count needs an additive subgroup or a subgroup with zero removed");
}

BigInt theorem2_N(const CountQuery& query) {
    query.validate();
    require(query.ell() == 1, "subgroup closed form needs exactly one prescribed coefficient");
    const Field& field = *query.field;
    require(query.domain.is_additive_subgroup(field), "subgroup closed form needs an additive subgroup domain");
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;
    const std::int64_t p = static_cast<std::int64_t>(field.p());
    const Fe gamma = query.gammas[0];

    BigRat acc = leading_sum(BigInt(field.q()), n, k, r);
    if (query.domain.contains(gamma)) {
        acc += BigRat(BigInt(parity_sign(k + 1 - r)) * binomial(BigInt(n), r) * binomial(BigInt(n - r), k + 1 - r),
                      BigInt(n));
        if ((k + 1) % p == 0) {
            const std::int64_t kp = (k + 1) / p;
            const BigRat gate(BigInt(gamma == 0 ? n : 0) - 1, BigInt(n));
            acc += BigRat(BigInt(parity_sign(r + kp)) * binomial(BigInt(k + 1), r)) * gate *
                   gen_binomial(BigRat(BigInt(n), BigInt(p)), static_cast<std::uint64_t>(kp));
        }
    }
    return require_integer(acc, "subgroup one-coefficient count");
}

BigRat theorem3_case_display(const CountQuery& query, DisplayForm form) {
    query.validate();
    require(query.ell() == 1, "punctured-subgroup closed form needs exactly one prescribed coefficient");
    const Field& field = *query.field;
    require(query.domain.is_punctured_subgroup(field),
            "punctured-subgroup closed form needs a subgroup domain with zero removed");
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;
    const std::int64_t p = static_cast<std::int64_t>(field.p());
    const Fe gamma = query.gammas[0];

    BigRat acc = leading_sum(BigInt(field.q()), n, k, r);
    if (gamma != 0 && !query.domain.contains(gamma)) return acc;

    BigInt alt = 0;   // alternating truncated column of the (n+1)/p row
    for (std::int64_t j = 0; j * p <= k + 1; ++j)
        alt += BigInt(parity_sign(j)) * binomial(BigInt((n + 1) / p), j);
    const BigInt second = BigInt(parity_sign(k + 1 - r)) * binomial(BigInt(n), r) * binomial(BigInt(n - r), k + 1 - r);

    if (query.domain.contains(gamma)) {
        acc += BigRat(second, BigInt(n + 1));
        acc -= BigRat(BigInt(parity_sign(r)) * binomial(BigInt(k + 1), r) * alt, BigInt(n + 1));
    } else {
        // gamma = 0: the stated variant divides the middle term by n, which
        // fails integrality; the repaired variant divides by n + 1.
        acc += form == DisplayForm::Stated ? BigRat(second, BigInt(n)) : BigRat(second, BigInt(n + 1));
        acc += BigRat(BigInt(n) * BigInt(parity_sign(r)) * binomial(BigInt(k + 1), r) * alt, BigInt(n + 1));
    }
    return acc;
}

BigInt theorem3_N(const CountQuery& query) {
    return require_integer(theorem3_case_display(query, DisplayForm::Repaired),
                           "punctured-subgroup one-coefficient count");
}

BigInt Vbar_m(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain) {
    require(field.p() > 2, "pair tuple count requires odd characteristic");
    require(domain.is_subfield(field), "pair tuple count needs a subfield domain");
    require(is_perfect_square(domain.n()), "pair tuple count needs an even-power subfield");
    require(domain.contains(gamma1) && domain.contains(gamma2),
            "pair tuple count needs prescribed sums inside the domain");
    const QuadExt value = vbar_over_factorial(m, gamma1, gamma2, field, domain) *
                          QuadExt(BigRat(factorial(static_cast<std::uint64_t>(m))));
    require(value.is_rational(), "pair tuple count collapsed to an irrational value");
    return require_integer(value.as_rational(), "distinct pair tuple count");
}

BigInt Wbar_m(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain) {
    require(field.p() > 2, "pair tuple count requires odd characteristic");
    require(domain.is_subfield(field), "pair tuple count needs a subfield domain");
    require(is_perfect_square(domain.n()), "pair tuple count needs an even-power subfield");
    require(domain.contains(gamma1) && domain.contains(gamma2),
            "pair tuple count needs prescribed sums inside the domain");
    const QuadExt value = wbar_over_factorial(m, gamma1, gamma2, field, domain) *
                          QuadExt(BigRat(factorial(static_cast<std::uint64_t>(m))));
    require(value.is_rational(), "pair tuple count collapsed to an irrational value");
    return require_integer(value.as_rational(), "augmented pair tuple count");
}

BigRat R_m_formula(std::int64_t m, const std::vector<std::int64_t>& weights, Fe a0, Fe b0,
                   const Field& field, const DomainSet& domain) {
    require(m >= 1, "weighted system needs at least one coordinate");
    require(static_cast<std::size_t>(m) == weights.size(), "weight count must match tuple length");
    require(field.p() > 2, "weighted system analysis requires odd characteristic");
    require(domain.is_subfield(field), "weighted system analysis needs a subfield domain");
    require(is_perfect_square(domain.n()), "exact weighted system formula needs an even-power subfield");
    require(domain.contains(a0) && domain.contains(b0), "weighted system targets must lie in the domain");
    const std::int64_t p = static_cast<std::int64_t>(field.p());
    std::int64_t weight_sum = 0;
    for (std::int64_t a : weights) {
        require(a % p != 0, "weights must be nonzero modulo the characteristic");
        weight_sum += a;
    }
    const std::int64_t n = static_cast<std::int64_t>(domain.n());
    const std::uint64_t un = domain.n();
    const bool p_divides_sum = weight_sum % p == 0;
    const Fe b = field.scalar(weight_sum);

    if (m % 2 == 0) {
        BigInt inner = 0;
        if (b0 == 0 && p_divides_sum) inner += BigInt((a0 == 0 ? n : 0) - 1);
        if (!p_divides_sum) inner += BigInt(field.eta_in(field.sub(field.mul(b0, b0), field.mul(b, a0)), un));
        return BigRat(pow_big(BigInt(n), static_cast<std::uint64_t>((m - 2) / 2)) * inner);
    }
    BigRat inner(0);
    if (b0 == 0 && p_divides_sum) inner += BigRat(BigInt(field.eta_in(a0, un)));
    if (!p_divides_sum) {
        const bool match = field.mul(b0, b0) == field.mul(b, a0);
        inner += BigRat(BigInt((match ? n : 0) - 1), BigInt(n));
    }
    return BigRat(pow_big(BigInt(n), static_cast<std::uint64_t>((m - 1) / 2))) * inner;
}

BigInt theorem4_N(const CountQuery& query) {
    query.validate();
    require_pair_context(query, "subfield pair closed form");
    require(is_perfect_square(query.domain.n()), "subfield pair closed form needs an even-power subfield");
    require(query.domain.contains(query.gammas[0]) && query.domain.contains(query.gammas[1]),
            "subfield pair closed form needs prescribed coefficients inside the domain");
    const Field& field = *query.field;
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;

    const QuadExt vbar = vbar_over_factorial(k + 2, query.gammas[0], query.gammas[1], field, query.domain);
    const QuadExt wbar = wbar_over_factorial(k + 1, query.gammas[0], query.gammas[1], field, query.domain);
    QuadExt total(leading_sum(BigInt(field.q()), n, k, r));
    total += QuadExt(BigRat(BigInt(parity_sign(k + 2 - r)) * binomial(BigInt(k + 2), r))) * vbar;
    total += QuadExt(BigRat(BigInt(parity_sign(k + 1 - r)) * binomial(BigInt(k + 1), r))) * wbar;
    require(total.is_rational(), "subfield pair count collapsed to an irrational value");
    return require_integer(total.as_rational(), "subfield pair count");
}

QuadExt theorem4_case_display(const CountQuery& query, DisplayForm form) {
    query.validate();
    require_pair_context(query, "subfield pair display");
    require(is_perfect_square(query.domain.n()), "subfield pair display needs an even-power subfield");
    const Field& field = *query.field;
    const Fe g1 = query.gammas[0];
    const Fe g2 = query.gammas[1];
    require(g1 == 0 || g1 == field.one(), "display cases cover coefficients 0 and 1 only");
    require(g2 == 0 || g2 == field.one(), "display cases cover coefficients 0 and 1 only");
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;
    const std::int64_t p = static_cast<std::int64_t>(field.p());

    const QuadExt root = QuadExt::sqrt_of(query.domain.n());
    const QuadExt a1p = cycle_index_avg(static_cast<std::uint64_t>(k + 1), QuadExt(BigRat(-n)), inverse_root(n, +1),
                                        static_cast<std::uint32_t>(p));
    const QuadExt a1m = cycle_index_avg(static_cast<std::uint64_t>(k + 1), QuadExt(BigRat(-n)), inverse_root(n, -1),
                                        static_cast<std::uint32_t>(p));
    const QuadExt a2p = cycle_index_avg(static_cast<std::uint64_t>(k + 2), QuadExt(BigRat(-n)), inverse_root(n, +1),
                                        static_cast<std::uint32_t>(p));
    const QuadExt a2m = cycle_index_avg(static_cast<std::uint64_t>(k + 2), QuadExt(BigRat(-n)), inverse_root(n, -1),
                                        static_cast<std::uint32_t>(p));
    const BigInt c1 = binomial(BigInt(k + 1), r);
    const BigInt c2 = binomial(BigInt(k + 2), r);
    const int rsign = parity_sign(r);

    QuadExt acc(leading_sum(BigInt(field.q()), n, k, r));
    acc += QuadExt(BigRat(BigInt(parity_sign(k - r)) * binomial(BigInt(n), r) *
                              (binomial(BigInt(n - r), k + 2 - r) - BigInt(n) * binomial(BigInt(n - r), k + 1 - r)),
                          BigInt(n) * n));

    const bool div2 = (k + 2) % p == 0;
    const auto corner_term = [&]() {
        // divisibility corner: the stated variant drops the gate that flips
        // the sign at g1 = 0, failing integrality there
        const BigInt gate = form == DisplayForm::Stated ? BigInt(-1) : BigInt((g1 == 0 ? n : 0) - 1);
        const std::int64_t kp = (k + 2) / p;
        return QuadExt(BigRat(BigInt(parity_sign(r + kp)) * gate * c2 * binomial(BigInt(n / p), kp),
                              BigInt(n) * n));
    };

    if (g1 == 0 && g2 == 0) {
        if (!div2) {
            acc += QuadExt(BigRat(BigInt(rsign) * BigInt(n - 1) * c1, BigInt(2 * n))) * (a1p + a1m);
            acc += QuadExt(BigRat(BigInt(rsign) * BigInt(n - 1) * c2, BigInt(2) * BigInt(n) * n)) * root * (a2p - a2m);
        } else {
            acc += corner_term();
            acc += QuadExt(BigRat(BigInt(rsign) * BigInt(n - 1) * c1, BigInt(2 * n))) * root * (a1p - a1m);
            acc += QuadExt(BigRat(BigInt(rsign) * BigInt(n - 1) * c2, BigInt(2 * n))) * (a2p + a2m);
        }
        return acc;
    }

    const auto generic_lines = [&]() {
        acc += QuadExt(BigRat(BigInt(rsign) * c1, BigInt(2 * n))) *
               ((root - QuadExt(BigRat(1))) * a1p - (root + QuadExt(BigRat(1))) * a1m);
        acc += QuadExt(BigRat(BigInt(rsign) * c2, BigInt(2) * BigInt(n) * n)) *
               ((QuadExt(BigRat(n)) - root) * a2p + (QuadExt(BigRat(n)) + root) * a2m);
    };
    const auto balanced_lines = [&]() {
        acc += QuadExt(BigRat(BigInt(rsign) * BigInt(n - 1) * c1, BigInt(2 * n))) * (a1p + a1m);
        acc += QuadExt(BigRat(BigInt(rsign) * BigInt(n - 1) * c2, BigInt(2) * BigInt(n) * n)) * root * (a2p - a2m);
    };

    if (g1 != 0 && g2 == 0) {
        if (div2) acc += corner_term();
        else if ((k + 1) % p == 0) balanced_lines();
        else generic_lines();
        return acc;
    }

    if (g1 == 0) {   // g2 = 1
        if (!div2) {
            generic_lines();
        } else {
            acc += corner_term();
            acc += QuadExt(BigRat(BigInt(rsign) * c1, BigInt(2 * n))) *
                   ((QuadExt(BigRat(n)) - root) * a1p + (QuadExt(BigRat(n)) + root) * a1m);
            if (form == DisplayForm::Stated) {
                acc -= QuadExt(BigRat(BigInt(rsign) * c2, BigInt(2) * BigInt(n) * n)) *
                       ((root + QuadExt(BigRat(1))) * a2p - (root - QuadExt(BigRat(1))) * a2m);
            } else {
                acc += QuadExt(BigRat(BigInt(rsign) * c2, BigInt(2 * n))) *
                       ((root - QuadExt(BigRat(1))) * a2p - (root + QuadExt(BigRat(1))) * a2m);
            }
        }
        return acc;
    }

    // g1 = g2 = 1
    if (div2) acc += corner_term();
    else if ((k + 3) % p == 0) balanced_lines();
    else generic_lines();
    return acc;
}

EstimateResult theorem5_estimate(const CountQuery& query) {
    query.validate();
    require_pair_context(query, "subfield pair estimate");
    require(query.domain.contains(query.gammas[0]) && query.domain.contains(query.gammas[1]),
            "subfield pair estimate needs prescribed coefficients inside the domain");
    const Field& field = *query.field;
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t r = query.r;
    const std::uint32_t p = field.p();

    BigRat main = leading_sum(BigInt(field.q()), n, k, r);
    main += BigRat(BigInt(parity_sign(k + 1 - r)) * binomial(BigInt(n), r) * binomial(BigInt(n - r), k + 1 - r),
                   BigInt(n));
    main += BigRat(BigInt(parity_sign(k + 2 - r)) * binomial(BigInt(n), r) * binomial(BigInt(n - r), k + 2 - r),
                   BigInt(n) * n);

    const QuadExt a2 = cycle_index_avg(static_cast<std::uint64_t>(k + 2), QuadExt(BigRat(n)), inverse_root(n, +1), p);
    const QuadExt a1 = cycle_index_avg(static_cast<std::uint64_t>(k + 1), QuadExt(BigRat(n)), inverse_root(n, +1), p);
    const QuadExt bound = QuadExt(BigRat(binomial(BigInt(k + 2), r))) * a2 +
                          QuadExt::sqrt_of(query.domain.n()) * QuadExt(BigRat(binomial(BigInt(k + 1), r))) * a1;

    EstimateResult result{main, bound, std::nullopt};
    if (is_perfect_square(query.domain.n())) result.exact_value = theorem4_N(query);
    return result;
}

ErrorComparison error_comparison(std::uint32_t p, std::int64_t r) {
    require(p > 2 && is_small_prime(p), "error comparison needs an odd prime characteristic");
    const std::int64_t pp = static_cast<std::int64_t>(p);
    require(r >= 0 && r <= pp - 1, "root count exceeds the received-word degree");

    const BigInt e = binomial(BigInt(pp - 1), r) * binomial(BigInt(2 * pp - 2), pp - 1) +
                     BigInt(pp) * binomial(BigInt(pp - 2), r) * binomial(BigInt(2 * pp - 3), pp - 2);
    const BigRat e_product = (BigRat(1) + BigRat(BigInt(pp) * BigInt(pp - 1 - r), BigInt(2 * (pp - 1)))) *
                             BigRat(binomial(BigInt(pp - 1), r) * binomial(BigInt(2 * pp - 2), pp - 1));
    if (BigRat(e) != e_product) throw std::logic_error("sum and product forms of the estimate error disagree");

    const BigInt e_prime = binomial(BigInt(pp - 1), r) * binomial(BigInt(4 * pp - 1), pp - 1) +
                           BigInt(pp) * binomial(BigInt(pp - 2), r) * binomial(BigInt(4 * pp - 2), pp - 2);
    const BigRat e_prime_product = (BigRat(1) + BigRat(BigInt(pp) * BigInt(pp - 1 - r), BigInt(4 * pp - 1))) *
                                   BigRat(binomial(BigInt(pp - 1), r) * binomial(BigInt(4 * pp - 1), pp - 1));
    if (BigRat(e_prime) != e_prime_product)
        throw std::logic_error("sum and product forms of the reference error disagree");

    // at n = p^2, k = p - 3 the two cycle averages collapse to single binomials
    const std::int64_t n = pp * pp;
    const QuadExt a2 = cycle_index_avg(static_cast<std::uint64_t>(pp - 1), QuadExt(BigRat(n)), inverse_root(n, +1), p);
    const QuadExt a1 = cycle_index_avg(static_cast<std::uint64_t>(pp - 2), QuadExt(BigRat(n)), inverse_root(n, +1), p);
    if (!a2.is_rational() || a2.as_rational() != BigRat(binomial(BigInt(2 * pp - 2), pp - 1)))
        throw std::logic_error("cycle average disagrees with its binomial specialization");
    if (!a1.is_rational() || a1.as_rational() != BigRat(binomial(BigInt(2 * pp - 3), pp - 2)))
        throw std::logic_error("cycle average disagrees with its binomial specialization");

    ErrorComparison out;
    out.e = e;
    out.e_prime = e_prime;
    out.ratio = BigRat(e, e_prime);
    return out;
}

BigInt series_N(const CountQuery& query, const Budget& budget) {
    query.validate();
    const Field& field = *query.field;
    const std::uint32_t ell = query.ell();
    const std::int64_t n = static_cast<std::int64_t>(query.domain.n());
    const std::int64_t k = query.k;
    const std::int64_t top = k + static_cast<std::int64_t>(ell);
    if (query.r > top) return 0;
    const std::uint32_t dmax = static_cast<std::uint32_t>(top);

    BigInt subsets = 0;
    for (std::int64_t j = 0; j <= std::min(top, n); ++j) subsets += binomial(BigInt(n), j);
    guard_steps(budget, subsets * pow_big(BigInt(field.q()), ell) * BigInt(top + 1));

    const LeadClass target = query.lead_class();
    std::vector<BigInt> atleast(static_cast<std::size_t>(top) + 1, BigInt(0));
    for (std::int64_t j = 0; j <= top; ++j) {
        if (j > n) break;
        BigInt total = 0;
        for_each_combination(n, j, [&](const std::vector<std::size_t>& idx, std::int64_t) {
            std::vector<Fe> pts;
            pts.reserve(idx.size());
            for (std::size_t t : idx) pts.push_back(field.neg(query.domain.elements[t]));
            const TruncatedSeries s = series_multiples(field, pts, ell, dmax);
            total += require_integer(series_extract(field, s, dmax, target), "series coefficient");
        });
        atleast[static_cast<std::size_t>(j)] = total;
    }
    return sieve_exact_from_atleast(atleast)[static_cast<std::size_t>(query.r)];
}

Engine engine_auto(const CountQuery& query, const Budget& budget) {
    query.validate();
    const Field& field = *query.field;
    const std::uint32_t ell = query.ell();
    if (ell == 1) {
        if (query.domain.is_additive_subgroup(field)) return Engine::Theorem2;
        if (query.domain.is_punctured_subgroup(field)) return Engine::Theorem3;
    }
    if (subfield_pair_applies(query)) return Engine::Theorem4;
    if (fits_budget(budget, theorem1_cost(query))) return Engine::Theorem1;
    return Engine::Oracle;
}

BigInt closed_N(const CountQuery& query, Engine engine, const Budget& budget) {
    switch (engine) {
        case Engine::Auto: {
            const Engine picked = engine_auto(query, budget);
            if (picked == Engine::Oracle)
                throw PreconditionError("no closed form fits; run the oracle engine");
            return closed_N(query, picked, budget);
        }
        case Engine::Theorem1: return theorem1_N(query, budget);
        case Engine::Theorem2: return theorem2_N(query);
        case Engine::Theorem3: return theorem3_N(query);
        case Engine::Theorem4: return theorem4_N(query);
        case Engine::Theorem5:
            throw PreconditionError("the estimate engine reports a main term and bound, not an exact count");
        case Engine::Series: return series_N(query, budget);
        case Engine::Oracle:
            throw PreconditionError("exhaustive evaluation lives in the oracle module");
    }
    throw std::logic_error("unknown engine");
}

}   // namespace rsw
