#pragma once

#include "rsweight/domain.hpp"
#include "rsweight/field.hpp"

#include <cstdint>
#include <vector>

namespace rsw {

/// Monic polynomial x^d + c[0] x^(d-1) + ... + c[d-1]; the leading 1 is implicit,
/// so the zero-length vector is the constant polynomial 1.
struct MonicPoly {
    std::vector<Fe> coeffs;

    std::uint32_t degree() const { return static_cast<std::uint32_t>(coeffs.size()); }
};

Fe eval(const Field& f, const MonicPoly& g, Fe x);

// Number of roots of g inside the domain (roots at distinct points, so this is
// the count of distinct roots lying in d).
std::uint32_t count_distinct_roots(const Field& f, const MonicPoly& g, const DomainSet& d);

/// Equivalence class of monic polynomials sharing their top `ell` coefficients
/// below the leading term. Multiplication is truncated product: the top `ell`
/// coefficients of a product depend only on the factors' classes.
struct LeadClass {
    std::uint32_t ell = 0;
    std::vector<Fe> lead;  // a_1..a_ell, highest power first

    bool operator==(const LeadClass& o) const { return ell == o.ell && lead == o.lead; }
    bool operator<(const LeadClass& o) const { return lead < o.lead; }
};

LeadClass class_identity(std::uint32_t ell);
LeadClass leading_coeffs(const MonicPoly& g, std::uint32_t ell);  // pads when deg < ell
LeadClass class_of_linear(const Field& f, Fe root_negated, std::uint32_t ell);  // class of x + c
LeadClass class_mul(const Field& f, const LeadClass& x, const LeadClass& y);
LeadClass class_inv(const Field& f, const LeadClass& x);

// Dense indexing of the q^ell classes: a_1 is the most significant digit.
std::uint64_t class_index(const Field& f, const LeadClass& c);
LeadClass class_from_index(const Field& f, std::uint32_t ell, std::uint64_t idx);
std::uint64_t class_count(const Field& f, std::uint32_t ell);  // q^ell, bound-checked

/// Members of the set of monic degree-d polynomials in a class, indexed
/// canonically so enumeration ranges can be partitioned deterministically.
/// Requires d >= ell; there are q^(d-ell) members.
class ClassMembers {
public:
    ClassMembers(const Field& f, const LeadClass& c, std::uint32_t d);

    std::uint64_t count() const { return count_; }
    MonicPoly member(std::uint64_t t) const;

private:
    const Field* f_;
    LeadClass c_;
    std::uint32_t d_;
    std::uint64_t count_;
};

// Degree-d members of a class for d < ell: at most one, present exactly when the
// trailing ell-d prescribed coefficients vanish.
bool class_has_low_degree_member(const LeadClass& c, std::uint32_t d);

}  // namespace rsw
