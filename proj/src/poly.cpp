#include "rsweight/poly.hpp"

namespace rsw {

Fe eval(const Field& f, const MonicPoly& g, Fe x) {
    Fe acc = 1;
    for (Fe c : g.coeffs) acc = f.add(f.mul(acc, x), c);
    return acc;
}

std::uint32_t count_distinct_roots(const Field& f, const MonicPoly& g, const DomainSet& d) {
    std::uint32_t r = 0;
    for (Fe x : d.elements)
        if (eval(f, g, x) == 0) ++r;
    return r;
}

LeadClass class_identity(std::uint32_t ell) {
    LeadClass c;
    c.ell = ell;
    c.lead.assign(ell, 0);
    return c;
}

LeadClass leading_coeffs(const MonicPoly& g, std::uint32_t ell) {
    LeadClass c = class_identity(ell);
    for (std::uint32_t i = 0; i < ell && i < g.degree(); ++i) c.lead[i] = g.coeffs[i];
    return c;
}

LeadClass class_of_linear(const Field& f, Fe constant, std::uint32_t ell) {
    (void)f;
    LeadClass c = class_identity(ell);
    if (ell > 0) c.lead[0] = constant;
    return c;
}

LeadClass class_mul(const Field& f, const LeadClass& x, const LeadClass& y) {
    if (x.ell != y.ell) throw PreconditionError("class: mixed truncation lengths");
    LeadClass r = class_identity(x.ell);
    for (std::uint32_t i = 1; i <= x.ell; ++i) {
        Fe c = f.add(x.lead[i - 1], y.lead[i - 1]);
        for (std::uint32_t u = 1; u < i; ++u)
            c = f.add(c, f.mul(x.lead[u - 1], y.lead[i - u - 1]));
        r.lead[i - 1] = c;
    }
    return r;
}

LeadClass class_inv(const Field& f, const LeadClass& x) {
    LeadClass r = class_identity(x.ell);
    for (std::uint32_t i = 1; i <= x.ell; ++i) {
        Fe c = x.lead[i - 1];
        for (std::uint32_t u = 1; u < i; ++u)
            c = f.add(c, f.mul(x.lead[u - 1], r.lead[i - u - 1]));
        r.lead[i - 1] = f.neg(c);
    }
    return r;
}

std::uint64_t class_index(const Field& f, const LeadClass& c) {
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < c.ell; ++i) idx = idx * f.q() + c.lead[i];
    return idx;
}

LeadClass class_from_index(const Field& f, std::uint32_t ell, std::uint64_t idx) {
    LeadClass c = class_identity(ell);
    for (std::uint32_t i = ell; i-- > 0;) {
        c.lead[i] = static_cast<Fe>(idx % f.q());
        idx /= f.q();
    }
    if (idx) throw PreconditionError("class: index out of range");
    return c;
}

std::uint64_t class_count(const Field& f, std::uint32_t ell) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < ell; ++i) {
        if (n > (std::uint64_t(1) << 62) / f.q()) throw PreconditionError("class: q^ell overflows");
        n *= f.q();
    }
    return n;
}

ClassMembers::ClassMembers(const Field& f, const LeadClass& c, std::uint32_t d)
    : f_(&f), c_(c), d_(d) {
    if (d < c.ell) throw PreconditionError("class members: degree below the prescribed window");
    count_ = 1;
    for (std::uint32_t i = 0; i < d - c.ell; ++i) {
        if (count_ > (std::uint64_t(1) << 62) / f.q())
            throw PreconditionError("class members: q^(d-ell) overflows");
        count_ *= f.q();
    }
}

MonicPoly ClassMembers::member(std::uint64_t t) const {
    if (t >= count_) throw PreconditionError("class members: index out of range");
    MonicPoly g;
    g.coeffs.resize(d_);
    for (std::uint32_t i = 0; i < c_.ell; ++i) g.coeffs[i] = c_.lead[i];
    for (std::uint32_t i = d_; i-- > c_.ell;) {
        g.coeffs[i] = static_cast<Fe>(t % f_->q());
        t /= f_->q();
    }
    return g;
}

bool class_has_low_degree_member(const LeadClass& c, std::uint32_t d) {
    if (d >= c.ell) throw PreconditionError("class members: use the enumerator for d >= ell");
    for (std::uint32_t i = d; i < c.ell; ++i)
        if (c.lead[i] != 0) return false;
    return true;
}

}  // namespace rsw
