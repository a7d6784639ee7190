#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsw {

// All counts and closed-form values are exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return denominator(r) == 1; }

// Lowest-terms "num/den" rendering; integers render without the "/1".
inline std::string rat_to_string(const BigRat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigRat rat_from_string(const std::string& s);

// Guards the final step of closed forms that must produce whole counts.
inline BigInt require_integer(const BigRat& r, const char* what) {
    if (!is_integer(r))
        throw std::logic_error(std::string(what) + ": expected an integer, got " + rat_to_string(r));
    return numerator(r);
}

inline BigInt pow_big(const BigInt& base, std::uint64_t e) {
    BigInt acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// base^e for possibly negative integer exponent, as an exact rational.
inline BigRat pow_rat(const BigRat& base, std::int64_t e) {
    if (e >= 0) {
        BigRat acc = 1, b = base;
        std::uint64_t k = static_cast<std::uint64_t>(e);
        while (k) {
            if (k & 1) acc *= b;
            b *= b;
            k >>= 1;
        }
        return acc;
    }
    if (base == 0) throw std::domain_error("pow_rat: zero to a negative power");
    return 1 / pow_rat(base, -e);
}

}  // namespace rsw
