#include "versuper/gf.hpp"

namespace versuper {

uint32_t GF::modulus(int deg) {
    // Conway polynomials C(2,m) for m = 1..8.
    static const uint32_t table[9] = {
        0,
        0b11,        // x + 1
        0b111,       // x^2 + x + 1
        0b1011,      // x^3 + x + 1
        0b10011,     // x^4 + x + 1
        0b100101,    // x^5 + x^2 + 1
        0b1011011,   // x^6 + x^4 + x^3 + x + 1
        0b10000011,  // x^7 + x + 1
        0b100011101, // x^8 + x^4 + x^3 + x^2 + 1
    };
    if (deg < 1 || deg > 8)
        throw std::invalid_argument("GF: extension degree must be in 1..8");
    return table[deg];
}

GF operator*(GF a, GF b) {
    a.check(b);
    const int m = a.deg_;
    // Carry-less product, then reduce modulo the fixed irreducible.
    uint32_t prod = 0;
    uint32_t x = a.bits_, y = b.bits_;
    while (y) {
        if (y & 1)
            prod ^= x;
        x <<= 1;
        y >>= 1;
    }
    const uint32_t mod = GF::modulus(m);
    for (int i = 2 * m - 2; i >= m; --i)
        if (prod >> i)
            prod ^= mod << (i - m);
    return GF(prod, m);
}

GF GF::pow(uint64_t e) const {
    GF r = GF::one(deg_);
    GF base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

GF GF::inverse() const {
    if (is_zero())
        throw std::domain_error("GF: inverse of zero");
    // x^(2^m - 2) = x^{-1} in GF(2^m).
    return pow((uint64_t(1) << deg_) - 2);
}

GF GF::sqrt() const {
    // Frobenius has order m, so squaring m-1 times inverts it.
    GF r = *this;
    for (int i = 0; i + 1 < deg_; ++i)
        r = r.frobenius();
    return r;
}

std::string GF::str() const {
    if (deg_ == 1)
        return bits_ ? "1" : "0";
    return "g" + std::to_string(bits_) + "/" + std::to_string(deg_);
}

std::vector<GF> field_elements(int deg) {
    std::vector<GF> out;
    out.reserve(size_t(1) << deg);
    for (uint32_t b = 0; b < (uint32_t(1) << deg); ++b)
        out.push_back(GF(b, deg));
    return out;
}

} // namespace versuper
