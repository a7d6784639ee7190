#pragma once

#include "rsweight/counting.hpp"
#include "rsweight/oracle.hpp"

#include <optional>
#include <string>

namespace rsw {

/// Mean and variance of the distance between any received word and a
/// uniformly random codeword.  Both depend only on the field size and the
/// domain size: mean (q-1)n/q, variance (q-1)n/q^2.  Requires n <= q.
BigRat expected_distance(std::uint64_t q, std::uint64_t n);
BigRat variance_distance(std::uint64_t q, std::uint64_t n);

struct FactorialMoments {
    BigRat first;                    // sum of root counts over all class members
    std::optional<BigRat> second;    // sum of roots*(roots-1); needs k >= 2
};

/// Derivative route: differentiating the root-marked class series at the
/// unmarked point turns the first two factorial moments into coefficient
/// extractions, z X F(z) and z^2 (X^2 - X_2) F(z) with X the sum of the
/// domain's linear-factor classes and X_2 the sum of their squares.  The
/// extractions are asserted against their predicted values n q^(k-1) and
/// (n^2 - n) q^(k-2).  Requires ell >= 1 and k >= 1 (k >= 2 for the second).
FactorialMoments factorial_moments_via_series(const CountQuery& query);

struct MomentReport {
    BigRat mean;
    BigRat variance;
    std::string source;   // closed_form | factorial_moment_path | empirical
};

MomentReport moments_closed(std::uint64_t q, std::uint64_t n);
MomentReport moments_factorial(const CountQuery& query);   // needs k >= 2
MomentReport moments_empirical(const CountQuery& query, const Budget& budget);

}   // namespace rsw
