#pragma once

#include "rsweight/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rsw {

enum class DomainKind { FullField, Subfield, AdditiveSubgroup, SubgroupMinusZero, Explicit };

std::string domain_kind_name(DomainKind k);

/// A nonempty set of distinct evaluation points, stored sorted by canonical index.
/// Structural predicates (subgroup, punctured subgroup, subfield) are checked on
/// the actual element set, not trusted from the construction kind.
struct DomainSet {
    DomainKind kind = DomainKind::Explicit;
    std::vector<Fe> elements;

    std::uint64_t n() const { return elements.size(); }
    bool contains(Fe x) const;

    bool is_additive_subgroup(const Field& f) const;        // closed under + and contains 0
    bool is_punctured_subgroup(const Field& f) const;       // 0 absent, set+{0} a subgroup
    bool is_subfield(const Field& f) const;                 // the fixed field of x -> x^n
};

DomainSet domain_full(const Field& f);
DomainSet domain_subfield(const Field& f, std::uint64_t n);
DomainSet domain_additive_subgroup(const Field& f, const std::vector<Fe>& basis);
DomainSet domain_subgroup_minus_zero(const Field& f, const std::vector<Fe>& basis);
DomainSet domain_explicit(const Field& f, const std::vector<Fe>& elements);

}  // namespace rsw
