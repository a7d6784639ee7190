#pragma once

#include "rsweight/bigint.hpp"
#include "rsweight/combinatorics.hpp"
#include "rsweight/domain.hpp"
#include "rsweight/errors.hpp"
#include "rsweight/field.hpp"
#include "rsweight/poly.hpp"
#include "rsweight/quadext.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsw {

/// One counting instance over GF(q).  The received word is the monic
/// polynomial x^(k+ell) + gammas[0] x^(k+ell-1) + ... + gammas[ell-1] x^k
/// (all lower coefficients zero; they never matter).  The code evaluates
/// polynomials of degree < k on the n domain points, so a codeword at
/// distance n - r from the received word corresponds to a monic polynomial
/// of degree k + ell that shares the ell prescribed leading coefficients
/// and has exactly r distinct roots in the domain.  All engines below
/// compute that codeword count N(r); theorem1_M computes the companion
/// "at least" count M(r) over r-subsets of the domain.
struct CountQuery {
    const Field* field = nullptr;
    DomainSet domain;
    std::int64_t k = 0;
    std::vector<Fe> gammas;   // prescribed leading coefficients, highest power first
    std::int64_t r = 0;

    std::uint32_t ell() const { return static_cast<std::uint32_t>(gammas.size()); }
    LeadClass lead_class() const;
    MonicPoly received_word() const;
    void validate() const;    // throws PreconditionError on malformed input
};

enum class Engine : std::uint8_t {
    Auto,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Theorem5,
    Series,
    Oracle,
};

const char* engine_name(Engine e);
Engine engine_from_name(const std::string& name);

// Shared bulk term q^(k-r) C(n,r) sum_{j=0..k-r} (-q)^(-j) C(n-r,j).
// Always an integer; zero when r > k.  With no prescribed coefficients
// (ell = 0) it is the entire answer.
BigRat leading_sum(const BigInt& q, std::int64_t n, std::int64_t k, std::int64_t r);

// ell = 0 closed form: N(r) = leading_sum as an integer.
BigInt n_closed_ell0(const CountQuery& query);

// General engine, any domain and any ell.  M(r) counts pairs (S, g) with S
// an r-subset of the domain and g a degree-(k+ell) member of the class
// whose roots include S; for r <= k that is q^(k-r) C(n,r), and for
// k < r <= k+ell it enumerates r-subsets and asks whether the residual
// class target * prod_{a in S} <x-a>^-1 has a member of degree k+ell-r.
// Feasibility guard for the enumeration: n^r q^(k+ell-r) <= budget.
BigInt theorem1_M(const CountQuery& query, const Budget& budget);

// Exact-count companion via the alternating subset sieve:
// N(r) = leading_sum + sum_{i=1..ell} (-1)^(k+i-r) C(k+i,r) T_i where T_i
// counts (k+i)-subsets whose residual class has a member of degree ell-i.
// Feasibility guard per active term: n^(k+i) q^(ell-i) <= budget.
BigInt theorem1_N(const CountQuery& query, const Budget& budget);

// Number of m-tuples over the domain with coordinate sum gamma, closed
// form; requires the domain to be an additive subgroup or a subgroup with
// zero removed.  m = 0 gives [gamma = 0].
BigInt U_m(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain);

// Same count restricted to tuples with pairwise distinct coordinates.
BigInt Ubar_m(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain);

// One prescribed coefficient, domain an additive subgroup of order n:
// N(r) = leading_sum
//        + [gamma in D] (-1)^(k+1-r) C(n,r) C(n-r,k+1-r) / n
//        + [gamma in D][p | k+1] (-1)^(r+(k+1)/p) (n[gamma=0]-1)/n
//          * C(k+1,r) C(n/p,(k+1)/p).
BigInt theorem2_N(const CountQuery& query);

// One prescribed coefficient, domain a subgroup of order n+1 with zero
// removed.  Three cases: gamma in D, gamma outside D and nonzero, gamma = 0.
BigInt theorem3_N(const CountQuery& query);

// The same three-case expression in display form.  The stated variant keeps
// a defective second-term coefficient in the gamma = 0 case (1/n where only
// 1/(n+1) yields integers; kept verbatim so tests can demonstrate the
// defect); the repaired variant fixes exactly that coefficient and is what
// theorem3_N evaluates.
enum class DisplayForm : std::uint8_t { Stated, Repaired };
BigRat theorem3_case_display(const CountQuery& query, DisplayForm form);

// Distinct-coordinate tuple counts behind the two-coefficient closed forms.
// Domain must be the subfield F_n inside GF(q) = GF(n^(2s)), p odd.
// Vbar_m counts m-tuples of distinct domain elements with elementary
// symmetric sums e1 = gamma1, e2 = gamma2 (equivalently power sums
// s1 = gamma1, s2 = gamma1^2 - 2 gamma2); Wbar_m additionally allows one
// unconstrained repeated coordinate absorbed into the power sums.
BigInt Vbar_m(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain);
BigInt Wbar_m(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain);

// Closed form for the centered count of solutions of the weighted system
//   sum_j a_j x_j^2 = a0,  sum_j a_j x_j = b0   over x in D^m,
// where D = F_n is the subfield, n an even power of the odd prime p, and
// each weight a_j is a nonzero element of the prime field (given as an
// integer in [1, p)).  Returns V_m - n^(m-2) exactly; requires m >= 1.
// The brute-force companion count lives in the oracle module.
BigRat R_m_formula(std::int64_t m, const std::vector<std::int64_t>& weights, Fe a0, Fe b0,
                   const Field& field, const DomainSet& domain);

// Two prescribed coefficients, domain the subfield F_n with q an even power
// of an odd prime:
// N(r) = leading_sum + (-1)^(k+2-r) C(k+2,r) Vbar_{k+2}/(k+2)!
//        + (-1)^(k+1-r) C(k+1,r) Wbar_{k+1}/(k+1)!.
BigInt theorem4_N(const CountQuery& query);

// Case-expanded display forms of theorem4_N for gamma pairs with entries in
// {0, 1}, split on which of k+1, k+2, k+3 the characteristic divides.  The
// stated variant keeps three defective coefficients in the p | (k+2)
// branches (they produce non-integer values at some cells); the repaired
// variant fixes exactly those coefficients and agrees with theorem4_N.
QuadExt theorem4_case_display(const CountQuery& query, DisplayForm form);

// Main-plus-bound estimate for two prescribed coefficients over an
// arbitrary-power subfield domain (p odd).  |N - main| <= bound, with bound
// expressed exactly in Q(sqrt n).  When q is an even power the exact count
// is also available and is filled in.
struct EstimateResult {
    BigRat main;
    QuadExt bound;
    std::optional<BigInt> exact_value;
};
EstimateResult theorem5_estimate(const CountQuery& query);

// Worst-case estimate error E at q = p^2, k = p-3 versus the coarser
// reference bound E' at the same point, together with their exact ratio;
// both shrink the reference by a factor tending to 4 as p grows.
struct ErrorComparison {
    BigInt e;
    BigInt e_prime;
    BigRat ratio;   // e / e_prime
};
ErrorComparison error_comparison(std::uint32_t p, std::int64_t r);

// Independent evaluation through the class-algebra power series: computes
// every M(j) by extracting the degree-(k+ell) coefficient of the
// multiples-of-pi_S series per j-subset S, then sieves down to N(r).
// Feasibility guard: (k+ell+1) q^ell sum_j C(n,j) <= budget.
BigInt series_N(const CountQuery& query, const Budget& budget);

// Pick the most specific closed form that applies: subgroup or punctured
// subgroup with one coefficient, then the even-power subfield pair form,
// then the general engine if it fits the budget, then the oracle.
Engine engine_auto(const CountQuery& query, const Budget& budget);

// Evaluate N(r) with the given closed-form engine (everything except
// Oracle; Auto resolves via engine_auto first and may still land on
// Oracle, which the caller must run itself).
BigInt closed_N(const CountQuery& query, Engine engine, const Budget& budget);

}   // namespace rsw
