#include "rsweight/field.hpp"

#include <algorithm>

namespace rsw {
namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using PolyP = std::vector<std::uint32_t>;  // coefficients mod p, constant first

// Degree with the convention deg(0) = -1.
int deg(const PolyP& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)]) return i;
    return -1;
}

// Remainder of f by monic g over F_p.
PolyP poly_mod(PolyP f, const PolyP& g, std::uint32_t p) {
    int dg = deg(g);
    for (int i = deg(f); i >= dg && dg >= 0; i = deg(f)) {
        std::uint32_t c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            auto& t = f[static_cast<std::size_t>(i - dg + j)];
            t = (t + static_cast<std::uint64_t>(p - 1) * c % p * g[static_cast<std::size_t>(j)]) % p;
        }
    }
    return f;
}

// Decodes m as a monic polynomial of the given degree, low coefficients base-p.
PolyP decode_monic(std::uint64_t m, std::uint32_t degree, std::uint32_t p) {
    PolyP f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(m % p);
        m /= p;
    }
    f[degree] = 1;
    return f;
}

bool is_irreducible(const PolyP& f, std::uint32_t p) {
    std::uint32_t degree = static_cast<std::uint32_t>(deg(f));
    for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            PolyP g = decode_monic(m, d, p);
            if (deg(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t a, std::uint64_t max_q) : p_(p), a_(a) {
    if (!is_prime(p)) throw PreconditionError("field: p = " + std::to_string(p) + " is not prime");
    if (a == 0) throw PreconditionError("field: extension degree must be positive");
    q_ = 1;
    for (std::uint32_t i = 0; i < a; ++i) {
        q_ *= p;
        if (q_ > max_q) throw PreconditionError("field: q exceeds the configured bound");
    }
    if (a == 1) {
        modulus_ = {0, 1};  // x
    } else {
        for (std::uint64_t m = 0; m < q_; ++m) {
            PolyP f = decode_monic(m, a, p);
            if (is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }
    if (modulus_.empty()) throw std::logic_error("field: no irreducible modulus found");
    if (q_ <= 1024) build_tables();
}

std::vector<std::uint32_t> Field::to_coeffs(Fe x) const {
    std::vector<std::uint32_t> c(a_, 0);
    for (std::uint32_t i = 0; i < a_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

Fe Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != a_) throw PreconditionError("field: coefficient vector length mismatch");
    std::uint64_t x = 0;
    for (std::uint32_t i = a_; i-- > 0;) {
        if (c[i] >= p_) throw PreconditionError("field: coefficient out of range");
        x = x * p_ + c[i];
    }
    return static_cast<Fe>(x);
}

Fe Field::add_generic(Fe x, Fe y) const {
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < a_; ++i) {
        r += mult * ((x % p_ + y % p_) % p_);
        mult *= p_;
        x /= p_;
        y /= p_;
    }
    return static_cast<Fe>(r);
}

Fe Field::mul_generic(Fe x, Fe y) const {
    std::vector<std::uint32_t> xc = to_coeffs(x), yc = to_coeffs(y);
    std::vector<std::uint32_t> prod(2 * a_ - 1, 0);
    for (std::uint32_t i = 0; i < a_; ++i) {
        if (!xc[i]) continue;
        for (std::uint32_t j = 0; j < a_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(xc[i]) * yc[j]) % p_;
    }
    // Reduce x^(a+t) by the monic modulus, highest power first.
    for (std::uint32_t i = 2 * a_ - 1; i-- > a_;) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < a_; ++j)
            prod[i - a_ + j] =
                (prod[i - a_ + j] + static_cast<std::uint64_t>(p_ - 1) * c % p_ * modulus_[j]) % p_;
    }
    std::uint64_t r = 0;
    for (std::uint32_t i = a_; i-- > 0;) r = r * p_ + prod[i];
    return static_cast<Fe>(r);
}

void Field::build_tables() {
    std::size_t n = static_cast<std::size_t>(q_);
    add_table_.resize(n * n);
    mul_table_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y <= x; ++y) {
            Fe s = add_generic(static_cast<Fe>(x), static_cast<Fe>(y));
            Fe m = mul_generic(static_cast<Fe>(x), static_cast<Fe>(y));
            add_table_[x * n + y] = add_table_[y * n + x] = s;
            mul_table_[x * n + y] = mul_table_[y * n + x] = m;
        }
    tables_ = true;
    inv_table_.assign(n, 0);
    for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y)
            if (mul_table_[x * n + y] == 1) {
                inv_table_[x] = static_cast<Fe>(y);
                break;
            }
}

Fe Field::add(Fe x, Fe y) const {
    if (tables_) return add_table_[static_cast<std::size_t>(x) * q_ + y];
    return add_generic(x, y);
}

Fe Field::neg(Fe x) const {
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < a_; ++i) {
        std::uint32_t d = x % p_;
        r += mult * (d ? p_ - d : 0);
        mult *= p_;
        x /= p_;
    }
    return static_cast<Fe>(r);
}

Fe Field::sub(Fe x, Fe y) const { return add(x, neg(y)); }

Fe Field::mul(Fe x, Fe y) const {
    if (tables_) return mul_table_[static_cast<std::size_t>(x) * q_ + y];
    return mul_generic(x, y);
}

Fe Field::pow(Fe x, const BigInt& e) const {
    if (e < 0) throw PreconditionError("field: negative exponent");
    BigInt k = e;
    Fe acc = 1, b = x;
    while (k > 0) {
        if ((k & 1) != 0) acc = mul(acc, b);
        b = mul(b, b);
        k >>= 1;
    }
    return acc;
}

Fe Field::inv(Fe x) const {
    if (x == 0) throw PreconditionError("field: inverse of zero");
    if (tables_) return inv_table_[x];
    return pow(x, BigInt(q_) - 2);
}

Fe Field::scalar(std::int64_t s) const {
    std::int64_t m = s % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<Fe>(m);
}

int Field::eta(Fe x) const { return eta_in(x, q_); }

int Field::eta_in(Fe x, std::uint64_t n) const {
    if (p_ == 2) throw PreconditionError("quadratic character needs odd characteristic");
    if (x == 0) return 0;
    if (pow(x, BigInt(n)) != x)
        throw PreconditionError("quadratic character: element is outside the order-n subfield");
    return pow(x, BigInt((n - 1) / 2)) == 1 ? 1 : -1;
}

}  // namespace rsw
