#include "rsweight/domain.hpp"

#include <algorithm>
#include <set>

namespace rsw {

std::string domain_kind_name(DomainKind k) {
    switch (k) {
        case DomainKind::FullField: return "full";
        case DomainKind::Subfield: return "subfield";
        case DomainKind::AdditiveSubgroup: return "subgroup";
        case DomainKind::SubgroupMinusZero: return "punctured";
        case DomainKind::Explicit: return "explicit";
    }
    return "?";
}

bool DomainSet::contains(Fe x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool DomainSet::is_additive_subgroup(const Field& f) const {
    if (!contains(0)) return false;
    for (Fe x : elements)
        for (Fe y : elements)
            if (!contains(f.add(x, y))) return false;
    return true;
}

bool DomainSet::is_punctured_subgroup(const Field& f) const {
    if (contains(0)) return false;
    DomainSet closed;
    closed.elements = elements;
    closed.elements.push_back(0);
    std::sort(closed.elements.begin(), closed.elements.end());
    return closed.is_additive_subgroup(f);
}

bool DomainSet::is_subfield(const Field& f) const {
    std::uint64_t m = n();
    // Subfield orders are powers p^b with b dividing a.
    std::uint64_t t = m;
    std::uint32_t b = 0;
    while (t > 1 && t % f.p() == 0) {
        t /= f.p();
        ++b;
    }
    if (t != 1 || b == 0 || f.a() % b != 0) return false;
    for (Fe x : elements)
        if (f.pow(x, BigInt(m)) != x) return false;
    return true;  // n distinct roots of x^n - x is all of the order-n subfield
}

namespace {

DomainSet finalize(DomainKind kind, std::vector<Fe> elems) {
    std::sort(elems.begin(), elems.end());
    if (elems.empty()) throw PreconditionError("domain: empty evaluation set");
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw PreconditionError("domain: duplicate evaluation points");
    DomainSet d;
    d.kind = kind;
    d.elements = std::move(elems);
    return d;
}

std::vector<Fe> span_of(const Field& f, const std::vector<Fe>& basis) {
    for (Fe b : basis)
        if (b >= f.q()) throw PreconditionError("domain: basis element outside the field");
    std::set<Fe> span = {0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Fe> cur(span.begin(), span.end());
        for (Fe s : cur)
            for (Fe b : basis)
                if (span.insert(f.add(s, b)).second) grew = true;
    }
    return {span.begin(), span.end()};
}

}  // namespace

DomainSet domain_full(const Field& f) {
    std::vector<Fe> e(f.q());
    for (std::uint64_t i = 0; i < f.q(); ++i) e[i] = static_cast<Fe>(i);
    return finalize(DomainKind::FullField, std::move(e));
}

DomainSet domain_subfield(const Field& f, std::uint64_t n) {
    std::uint64_t t = n;
    std::uint32_t b = 0;
    while (t > 1 && t % f.p() == 0) {
        t /= f.p();
        ++b;
    }
    if (t != 1 || b == 0 || f.a() % b != 0)
        throw PreconditionError("domain: " + std::to_string(n) + " is not a subfield order here");
    std::vector<Fe> e;
    for (std::uint64_t x = 0; x < f.q(); ++x)
        if (f.pow(static_cast<Fe>(x), BigInt(n)) == static_cast<Fe>(x)) e.push_back(static_cast<Fe>(x));
    if (e.size() != n) throw std::logic_error("domain: subfield scan found the wrong count");
    return finalize(DomainKind::Subfield, std::move(e));
}

DomainSet domain_additive_subgroup(const Field& f, const std::vector<Fe>& basis) {
    return finalize(DomainKind::AdditiveSubgroup, span_of(f, basis));
}

DomainSet domain_subgroup_minus_zero(const Field& f, const std::vector<Fe>& basis) {
    std::vector<Fe> e = span_of(f, basis);
    e.erase(std::remove(e.begin(), e.end(), static_cast<Fe>(0)), e.end());
    if (e.empty()) throw PreconditionError("domain: punctured span is empty");
    return finalize(DomainKind::SubgroupMinusZero, std::move(e));
}

DomainSet domain_explicit(const Field& f, const std::vector<Fe>& elements) {
    for (Fe x : elements)
        if (x >= f.q()) throw PreconditionError("domain: element outside the field");
    return finalize(DomainKind::Explicit, elements);
}

}  // namespace rsw
