#pragma once

#include "rsweight/counting.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rsw {

/// Exhaustive reference engines.  Every count here is produced by direct
/// enumeration: the class walk visits all q^k degree-(k+ell) members of the
/// prescribed-coefficient class, the tuple walks visit domain tuples.  The
/// walks exist in a serial form and an OpenMP-partitioned form that splits
/// the index range into contiguous chunks merged in chunk order, so both
/// produce identical results; tests compare them and the benchmark tool
/// times them.  Feasibility guards are exact: the class walk requires
/// q^k <= budget, the tuple walks n^m <= budget (times q when one
/// coordinate ranges over the whole field).

BigInt oracle_N(const CountQuery& query, const Budget& budget);
BigInt oracle_M(const CountQuery& query, const Budget& budget);

// All root counts in one pass: entry r holds the number of class members
// with exactly r distinct roots in the domain (r = 0..k+ell).
std::vector<BigInt> oracle_N_vector(const CountQuery& query, const Budget& budget);
std::vector<BigInt> oracle_N_vector_serial(const CountQuery& query, const Budget& budget);
std::vector<BigInt> oracle_M_vector(const CountQuery& query, const Budget& budget);

// Tuple-system reference counts over the domain.
BigInt oracle_U(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain, const Budget& budget);
BigInt oracle_Ubar(std::int64_t m, Fe gamma, const Field& field, const DomainSet& domain, const Budget& budget);
BigInt oracle_Vbar(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain,
                   const Budget& budget);
// The augmented count deliberately lets the extra coordinate range over the
// whole field, confirming that only domain values can contribute.
BigInt oracle_Wbar(std::int64_t m, Fe gamma1, Fe gamma2, const Field& field, const DomainSet& domain,
                   const Budget& budget);
BigInt oracle_V_system(const std::vector<std::int64_t>& weights, Fe a0, Fe b0, const Field& field,
                       const DomainSet& domain, const Budget& budget);

/// Distance histogram of the received word against the whole code: counts[d]
/// is the number of codewords at Hamming distance d on the domain, total is
/// q^k.  Support always lies in [n-k-ell, n].
struct DistanceHistogram {
    std::map<std::int64_t, BigInt> counts;
    BigInt total;
};

DistanceHistogram distance_distribution(const CountQuery& query, const Budget& budget);
DistanceHistogram distance_distribution_serial(const CountQuery& query, const Budget& budget);

// Exact mean and variance of a histogram; errors on an empty one.
std::pair<BigRat, BigRat> empirical_moments(const DistanceHistogram& hist);

/// Resolves Auto to the most specific applicable engine, then evaluates.
struct CountOutcome {
    Engine engine;
    BigInt value;
};
CountOutcome run_N(const CountQuery& query, Engine engine, const Budget& budget);

}   // namespace rsw
