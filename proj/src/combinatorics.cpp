#include "rsweight/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsw {

BigInt factorial(std::uint64_t m) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= m; ++i) r *= i;
    return r;
}

BigInt binomial(const BigInt& n, std::int64_t k) {
    if (k < 0) return 0;
    // Incremental product stays integral: after i steps it is C(n, i) * (i+1 .. k terms pending).
    BigInt num = 1;
    for (std::int64_t i = 0; i < k; ++i) num *= n - i;
    return num / factorial(static_cast<std::uint64_t>(k));
}

BigRat gen_binomial(const BigRat& x, std::uint64_t k) {
    BigRat num = 1;
    for (std::uint64_t i = 0; i < k; ++i) num *= x - BigRat(i);
    return num / BigRat(factorial(k));
}

QuadExt gen_binomial(const QuadExt& x, std::uint64_t k) {
    QuadExt num(1);
    for (std::uint64_t i = 0; i < k; ++i) num *= x - QuadExt(BigRat(i));
    return num / QuadExt(BigRat(factorial(k)));
}

std::vector<BigInt> sieve_exact_from_atleast(const std::vector<BigInt>& atleast) {
    std::size_t len = atleast.size();
    std::vector<BigInt> exact(len, 0);
    for (std::size_t r = 0; r < len; ++r)
        for (std::size_t j = r; j < len; ++j) {
            BigInt term = binomial(BigInt(j), static_cast<std::int64_t>(r)) * atleast[j];
            if ((j - r) % 2) exact[r] -= term;
            else exact[r] += term;
        }
    return exact;
}

std::vector<BigInt> sieve_atleast_from_exact(const std::vector<BigInt>& exact) {
    std::size_t len = exact.size();
    std::vector<BigInt> atleast(len, 0);
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t r = j; r < len; ++r)
            atleast[j] += binomial(BigInt(r), static_cast<std::int64_t>(j)) * exact[r];
    return atleast;
}

std::uint32_t CycleType::total() const {
    std::uint32_t m = 0;
    for (auto [len, cnt] : parts) m += len * cnt;
    return m;
}

std::uint32_t CycleType::cycles() const {
    std::uint32_t c = 0;
    for (auto [len, cnt] : parts) c += cnt;
    return c;
}

std::uint32_t CycleType::cycles_coprime(std::uint32_t p) const {
    std::uint32_t c = 0;
    for (auto [len, cnt] : parts)
        if (len % p != 0) c += cnt;
    return c;
}

BigInt CycleType::permutation_count() const {
    BigInt denom = 1;
    for (auto [len, cnt] : parts) denom *= pow_big(BigInt(len), cnt) * factorial(cnt);
    return factorial(total()) / denom;
}

namespace {

void partitions_rec(std::uint32_t rest, std::uint32_t max_part, CycleType& cur,
                    std::vector<CycleType>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t len = 1; len <= std::min(rest, max_part); ++len) {
        std::uint32_t cnt_max = rest / len;
        for (std::uint32_t cnt = 1; cnt <= cnt_max; ++cnt) {
            cur.parts.emplace_back(len, cnt);
            partitions_rec(rest - len * cnt, len - 1, cur, out);
            cur.parts.pop_back();
        }
    }
}

}  // namespace

std::vector<CycleType> cycle_types(std::uint32_t m) {
    std::vector<CycleType> out;
    if (m == 0) {
        out.push_back(CycleType{});
        return out;
    }
    CycleType cur;
    partitions_rec(m, m, cur, out);
    for (auto& t : out) std::sort(t.parts.begin(), t.parts.end());
    return out;
}

BigRat distinct_sieve_sum(std::uint32_t m, const std::function<BigRat(const CycleType&)>& h) {
    BigRat total = 0;
    for (const CycleType& t : cycle_types(m)) {
        BigRat term = BigRat(t.permutation_count()) * h(t);
        if ((m - t.cycles()) % 2) total -= term;
        else total += term;
    }
    return total;
}

QuadExt cycle_index_avg(std::uint64_t m, const QuadExt& u, const QuadExt& w, std::uint32_t p) {
    if (p < 2) throw std::domain_error("cycle_index_avg: p must be at least 2");
    QuadExt uw = u * w;
    QuadExt rest = (u - uw) / QuadExt(BigRat(p));
    QuadExt total(0);
    for (std::uint64_t j = 0; j * p <= m; ++j) {
        std::uint64_t t = m - j * p;
        total += gen_binomial(uw + QuadExt(BigRat(t) - 1), t) *
                 gen_binomial(rest + QuadExt(BigRat(j) - 1), j);
    }
    return total;
}

}  // namespace rsw
