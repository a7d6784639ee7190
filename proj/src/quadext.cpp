#include "rsweight/quadext.hpp"

#include <stdexcept>

namespace rsw {
namespace {

// Largest s with s*s <= n.
std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t s = 0;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

}  // namespace

QuadExt::QuadExt(const BigRat& rat, const BigRat& irr, std::uint64_t radicand)
    : rat_(rat), irr_(irr), radicand_(radicand) {
    if (radicand_ == 0) throw std::domain_error("quadext: radicand must be positive");
    std::uint64_t s = isqrt(radicand_);
    if (s * s == radicand_) {
        rat_ += irr_ * s;
        irr_ = 0;
    }
    if (irr_ == 0) radicand_ = 1;
}

BigRat QuadExt::as_rational() const {
    if (!is_rational()) throw std::domain_error("quadext: value has an irrational part");
    return rat_;
}

std::uint64_t QuadExt::joint_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.radicand_ == b.radicand_) return a.radicand_;
    if (a.irr_ == 0) return b.radicand_;
    if (b.irr_ == 0) return a.radicand_;
    throw std::domain_error("quadext: mixed radicands");
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.rat_ = -r.rat_;
    r.irr_ = -r.irr_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    radicand_ = joint_radicand(*this, o);
    rat_ += o.rat_;
    irr_ += o.irr_;
    if (irr_ == 0) radicand_ = 1;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    std::uint64_t n = joint_radicand(*this, o);
    BigRat nr(n);
    BigRat rat = rat_ * o.rat_ + irr_ * o.irr_ * nr;
    BigRat irr = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = rat;
    irr_ = irr;
    radicand_ = irr_ == 0 ? 1 : n;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    std::uint64_t n = joint_radicand(*this, o);
    BigRat norm = o.rat_ * o.rat_ - o.irr_ * o.irr_ * BigRat(n);
    if (norm == 0) throw std::domain_error("quadext: division by zero");
    QuadExt conj;
    conj.rat_ = o.rat_ / norm;
    conj.irr_ = -o.irr_ / norm;
    conj.radicand_ = conj.irr_ == 0 ? 1 : n;
    return *this *= conj;
}

int QuadExt::sign() const {
    int sr = rat_ == 0 ? 0 : (rat_ > 0 ? 1 : -1);
    if (irr_ == 0) return sr;
    int si = irr_ > 0 ? 1 : -1;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: |rat| vs |irr|*sqrt(n), decided by squaring.
    BigRat lhs = rat_ * rat_;
    BigRat rhs = irr_ * irr_ * BigRat(radicand_);
    if (lhs == rhs) return 0;  // unreachable for a non-square radicand
    return lhs > rhs ? sr : si;
}

std::string QuadExt::to_string() const {
    if (is_rational()) return rat_to_string(rat_);
    return rat_to_string(rat_) + " + (" + rat_to_string(irr_) + ")*sqrt(" +
           std::to_string(radicand_) + ")";
}

QuadExt pow(const QuadExt& x, std::uint64_t e) {
    QuadExt acc(1), b = x;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace rsw
