#pragma once

#include "rsweight/bigint.hpp"
#include "rsweight/errors.hpp"

#include <cstdint>
#include <vector>

namespace rsw {

// Canonical element index: the base-p little-endian encoding of the element's
// coefficient vector over the prime subfield, so 0 and 1 are additive and
// multiplicative identities and prime-field elements are their own indices.
using Fe = std::uint32_t;

/// GF(p^a) with a deterministic modulus: the lexicographically smallest monic
/// irreducible of degree a, comparing coefficient vectors constant-term first.
/// Construction is pure enumeration, so equal (p, a) always yield the same field.
class Field {
public:
    static constexpr std::uint64_t kDefaultMaxQ = 1u << 20;

    Field(std::uint32_t p, std::uint32_t a, std::uint64_t max_q = kDefaultMaxQ);

    std::uint32_t p() const { return p_; }
    std::uint32_t a() const { return a_; }
    std::uint64_t q() const { return q_; }

    // Modulus coefficients c[0..a], constant term first, c[a] = 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    Fe add(Fe x, Fe y) const;
    Fe sub(Fe x, Fe y) const;
    Fe neg(Fe x) const;
    Fe mul(Fe x, Fe y) const;
    Fe inv(Fe x) const;
    Fe pow(Fe x, const BigInt& e) const;  // e >= 0; square-and-multiply

    // Image of an arbitrary integer through the prime subfield.
    Fe scalar(std::int64_t s) const;

    // Quadratic character of the full field; requires odd characteristic.
    // Returns 0 for x = 0, +1 for nonzero squares, -1 otherwise.
    int eta(Fe x) const;

    // Quadratic character of the order-n subfield containing x (x^n must equal x),
    // evaluated as x^((n-1)/2). Independent of the ambient field size.
    int eta_in(Fe x, std::uint64_t n) const;

    std::vector<std::uint32_t> to_coeffs(Fe x) const;  // length a, base-p digits
    Fe from_coeffs(const std::vector<std::uint32_t>& c) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && a_ == o.a_; }

private:
    std::uint32_t p_;
    std::uint32_t a_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;

    // Dense op tables, built whenever q is small enough that q^2 entries are cheap.
    bool tables_ = false;
    std::vector<Fe> add_table_;
    std::vector<Fe> mul_table_;
    std::vector<Fe> inv_table_;

    Fe add_generic(Fe x, Fe y) const;
    Fe mul_generic(Fe x, Fe y) const;
    void build_tables();
};

}  // namespace rsw
