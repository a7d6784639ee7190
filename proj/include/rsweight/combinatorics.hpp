#pragma once

#include "rsweight/bigint.hpp"
#include "rsweight/quadext.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rsw {

BigInt factorial(std::uint64_t m);

// C(n, k) for arbitrary integer n (negative upper arguments included), zero for k < 0.
BigInt binomial(const BigInt& n, std::int64_t k);

// Generalized binomial prod_{i<k} (x - i) / k! for rational or quadratic x.
BigRat gen_binomial(const BigRat& x, std::uint64_t k);
QuadExt gen_binomial(const QuadExt& x, std::uint64_t k);

/// Exact-count vector from at-least-count vector and back:
///   exact[r] = sum_{j>=r} (-1)^(j-r) C(j,r) atleast[j]
///   atleast[j] = sum_{r>=j} C(r,j) exact[r]
/// Both transforms act on full vectors indexed from 0 and are mutually inverse.
std::vector<BigInt> sieve_exact_from_atleast(const std::vector<BigInt>& atleast);
std::vector<BigInt> sieve_atleast_from_exact(const std::vector<BigInt>& exact);

/// Cycle type of a permutation of m symbols: part lengths with multiplicities.
struct CycleType {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parts;  // (length, count), ascending

    std::uint32_t total() const;                      // m
    std::uint32_t cycles() const;                     // number of cycles
    std::uint32_t cycles_coprime(std::uint32_t p) const;  // cycles of length not divisible by p
    BigInt permutation_count() const;                 // m! / prod(len^cnt * cnt!)
};

std::vector<CycleType> cycle_types(std::uint32_t m);

/// Signed permutation sum turning unrestricted-tuple counts into
/// distinct-coordinate counts: sum over cycle types of
/// (-1)^(m - cycles) * permutation_count * h(type).
BigRat distinct_sieve_sum(std::uint32_t m, const std::function<BigRat(const CycleType&)>& h);

/// Average over the symmetric group S_m of u^cycles * w^(cycles of length coprime to p),
/// evaluated through its closed binomial-sum form
///   sum_{0<=j<=m/p} C(u w + m - j p - 1, m - j p) * C((u - u w)/p + j - 1, j).
QuadExt cycle_index_avg(std::uint64_t m, const QuadExt& u, const QuadExt& w, std::uint32_t p);

/// Visits every m-subset of {0,...,n-1} as a sorted index vector, in
/// lexicographic order.  The callback also receives the first position that
/// changed since the previous subset, enabling partial-product reuse.
template <class Fn>
void for_each_combination(std::int64_t n, std::int64_t m, Fn&& fn) {
    if (m < 0 || m > n) return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    std::int64_t dirty = 0;
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(idx), dirty);
        std::int64_t i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<std::size_t>(n - m + i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < m; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        dirty = i;
    }
}

/// Visits every element of {0,...,n-1}^m (odometer order, last coordinate
/// fastest).  The callback receives the first position that changed.
template <class Fn>
void for_each_tuple(std::int64_t n, std::int64_t m, Fn&& fn) {
    if (n <= 0 || m < 0) return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    std::int64_t dirty = 0;
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(idx), dirty);
        std::int64_t i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<std::size_t>(n - 1)) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        dirty = i;
    }
}

}  // namespace rsw
