#pragma once

#include "rsweight/bigint.hpp"

#include <cstdint>
#include <string>

namespace rsw {

/// Exact element of Q(sqrt(n)): rat + irr * sqrt(n) with n a positive integer.
/// Perfect-square radicands collapse to pure rationals at construction, and all
/// comparisons go through exact sign analysis, so no floating point is involved.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const BigRat& r) : rat_(r) {}  // NOLINT: implicit by design
    QuadExt(long v) : rat_(v) {}           // NOLINT
    QuadExt(const BigRat& rat, const BigRat& irr, std::uint64_t radicand);

    static QuadExt sqrt_of(std::uint64_t n) { return QuadExt(0, 1, n); }

    const BigRat& rational_part() const { return rat_; }
    const BigRat& irrational_part() const { return irr_; }
    std::uint64_t radicand() const { return radicand_; }

    bool is_rational() const { return irr_ == 0; }
    BigRat as_rational() const;  // throws unless is_rational()

    int sign() const;  // -1, 0, +1, exactly
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) { return (a - b).sign() == 0; }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() >= 0; }

    std::string to_string() const;

private:
    BigRat rat_ = 0;
    BigRat irr_ = 0;
    std::uint64_t radicand_ = 1;  // radicand 1 marks a pure rational

    // Aligns radicands before mixed arithmetic; throws on a genuine mismatch.
    static std::uint64_t joint_radicand(const QuadExt& a, const QuadExt& b);
};

QuadExt pow(const QuadExt& x, std::uint64_t e);

}  // namespace rsw
