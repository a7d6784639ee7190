#include "rsweight/algebra.hpp"

namespace rsw {

BigRat AlgebraElement::coeff(std::uint64_t idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? BigRat(0) : it->second;
}

void AlgebraElement::add_term(std::uint64_t idx, const BigRat& c) {
    auto [it, inserted] = terms.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    } else if (it->second == 0) {
        terms.erase(it);
    }
}

AlgebraElement alg_zero(std::uint32_t ell) {
    AlgebraElement e;
    e.ell = ell;
    return e;
}

AlgebraElement alg_single(const Field& f, const LeadClass& c, const BigRat& coeff) {
    AlgebraElement e = alg_zero(c.ell);
    e.add_term(class_index(f, c), coeff);
    return e;
}

AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.ell != y.ell) throw PreconditionError("algebra: mixed truncation lengths");
    AlgebraElement r = x;
    for (const auto& [idx, c] : y.terms) r.add_term(idx, c);
    return r;
}

AlgebraElement alg_scale(const AlgebraElement& x, const BigRat& c) {
    AlgebraElement r = alg_zero(x.ell);
    if (c == 0) return r;
    for (const auto& [idx, v] : x.terms) r.terms.emplace(idx, v * c);
    return r;
}

AlgebraElement alg_mul(const Field& f, const AlgebraElement& x, const AlgebraElement& y) {
    if (x.ell != y.ell) throw PreconditionError("algebra: mixed truncation lengths");
    AlgebraElement r = alg_zero(x.ell);
    for (const auto& [xi, xc] : x.terms) {
        LeadClass cx = class_from_index(f, x.ell, xi);
        for (const auto& [yi, yc] : y.terms) {
            LeadClass cy = class_from_index(f, y.ell, yi);
            r.add_term(class_index(f, class_mul(f, cx, cy)), xc * yc);
        }
    }
    return r;
}

bool alg_equal(const AlgebraElement& x, const AlgebraElement& y) {
    return x.ell == y.ell && x.terms == y.terms;
}

AlgebraElement idempotent_avg(const Field& f, std::uint32_t ell) {
    AlgebraElement e = alg_zero(ell);
    std::uint64_t count = class_count(f, ell);
    BigRat w(1, BigInt(count));
    for (std::uint64_t i = 0; i < count; ++i) e.terms.emplace(i, w);
    return e;
}

AlgebraElement idempotent_comp(const Field& f, std::uint32_t ell) {
    AlgebraElement one = alg_single(f, class_identity(ell));
    AlgebraElement e = idempotent_avg(f, ell);
    return alg_add(one, alg_scale(e, -1));
}

AlgebraElement monic_degree_sum(const Field& f, std::uint32_t ell, std::uint32_t d) {
    AlgebraElement r = alg_zero(ell);
    if (d >= ell) {
        // Every class occurs q^(d-ell) times among monic degree-d polynomials.
        BigRat w = pow_rat(BigRat(f.q()), static_cast<std::int64_t>(d - ell));
        std::uint64_t count = class_count(f, ell);
        for (std::uint64_t i = 0; i < count; ++i) r.terms.emplace(i, w);
        return r;
    }
    // Degree below the window: each choice of d coefficients is one class with
    // trailing zeros.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= f.q();
    for (std::uint64_t t = 0; t < count; ++t) {
        LeadClass c = class_identity(ell);
        std::uint64_t rest = t;
        for (std::uint32_t i = 0; i < d; ++i) {
            c.lead[i] = static_cast<Fe>(rest % f.q());
            rest /= f.q();
        }
        r.add_term(class_index(f, c), 1);
    }
    return r;
}

TruncatedSeries series_mul(const Field& f, const TruncatedSeries& x, const TruncatedSeries& y) {
    if (x.ell != y.ell) throw PreconditionError("series: mixed truncation lengths");
    TruncatedSeries r;
    r.ell = x.ell;
    std::uint32_t dmax = std::min(x.dmax(), y.dmax());
    r.coeffs.assign(dmax + 1, alg_zero(x.ell));
    for (std::uint32_t i = 0; i <= dmax; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (std::uint32_t j = 0; i + j <= dmax; ++j)
            r.coeffs[i + j] = alg_add(r.coeffs[i + j], alg_mul(f, x.coeffs[i], y.coeffs[j]));
    }
    return r;
}

TruncatedSeries series_monic(const Field& f, std::uint32_t ell, std::uint32_t dmax) {
    TruncatedSeries s;
    s.ell = ell;
    s.coeffs.reserve(dmax + 1);
    for (std::uint32_t d = 0; d <= dmax; ++d) s.coeffs.push_back(monic_degree_sum(f, ell, d));
    return s;
}

TruncatedSeries series_multiples(const Field& f, const std::vector<Fe>& pts, std::uint32_t ell,
                                 std::uint32_t dmax) {
    LeadClass prod = class_identity(ell);
    for (Fe x : pts) prod = class_mul(f, prod, class_of_linear(f, x, ell));
    std::uint32_t shift = static_cast<std::uint32_t>(pts.size());
    TruncatedSeries s;
    s.ell = ell;
    s.coeffs.assign(dmax + 1, alg_zero(ell));
    AlgebraElement front = alg_single(f, prod);
    for (std::uint32_t d = shift; d <= dmax; ++d)
        s.coeffs[d] = alg_mul(f, front, monic_degree_sum(f, ell, d - shift));
    return s;
}

TruncatedSeries series_exact_roots(const Field& f, const std::vector<Fe>& pts, std::uint32_t ell,
                                   std::uint32_t dmax) {
    TruncatedSeries s = series_multiples(f, pts, ell, dmax);
    for (std::uint64_t b = 0; b < f.q(); ++b) {
        Fe beta = static_cast<Fe>(b);
        bool in_pts = false;
        for (Fe x : pts)
            if (x == beta) in_pts = true;
        if (in_pts) continue;
        TruncatedSeries factor;
        factor.ell = ell;
        factor.coeffs.assign(dmax + 1, alg_zero(ell));
        factor.coeffs[0] = alg_single(f, class_identity(ell));
        if (dmax >= 1) factor.coeffs[1] = alg_single(f, class_of_linear(f, beta, ell), -1);
        s = series_mul(f, s, factor);
    }
    return s;
}

BigRat series_extract(const Field& f, const TruncatedSeries& s, std::uint32_t d,
                      const LeadClass& c) {
    if (d > s.dmax()) throw PreconditionError("series: degree beyond truncation");
    return s.coeffs[d].coeff(class_index(f, c));
}

}  // namespace rsw
