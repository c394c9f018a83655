#ifndef VERSUPER_GF_HPP
#define VERSUPER_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace versuper {

// Elements of GF(2^m), m <= 8, as polynomials over GF(2) modulo a fixed
// irreducible of degree m (Conway polynomials, so serialized scalars are
// canonical).  An element carries its degree so mixed-field arithmetic is
// caught at run time.
class GF {
  public:
    GF() : bits_(0), deg_(1) {}
    GF(uint32_t bits, int deg) : bits_(bits), deg_(static_cast<uint8_t>(deg)) {
        if (deg < 1 || deg > 8)
            throw std::invalid_argument("GF: extension degree must be in 1..8");
        if (bits_ >> deg_)
            throw std::invalid_argument("GF: bit pattern out of range for degree");
    }

    static GF zero(int deg) { return GF(0, deg); }
    static GF one(int deg) { return GF(1, deg); }
    // Class of x, a multiplicative generator for m >= 2.
    static GF gen(int deg) { return deg == 1 ? one(1) : GF(2, deg); }

    uint32_t bits() const { return bits_; }
    int degree() const { return deg_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    // Fixed irreducible modulus for GF(2^m), bit i = coefficient of x^i.
    static uint32_t modulus(int deg);

    friend GF operator+(GF a, GF b) {
        a.check(b);
        return GF(a.bits_ ^ b.bits_, a.deg_);
    }
    friend GF operator-(GF a, GF b) { return a + b; }
    friend GF operator*(GF a, GF b);
    GF& operator+=(GF o) { return *this = *this + o; }
    GF& operator-=(GF o) { return *this = *this + o; }
    GF& operator*=(GF o) { return *this = *this * o; }

    GF inverse() const;
    GF pow(uint64_t e) const;
    // The Frobenius x -> x^2, an additive bijection in characteristic 2.
    GF frobenius() const { return *this * *this; }
    // Inverse of Frobenius (unique square root in a finite field of char 2).
    GF sqrt() const;

    friend bool operator==(GF a, GF b) { return a.bits_ == b.bits_ && a.deg_ == b.deg_; }
    friend bool operator!=(GF a, GF b) { return !(a == b); }
    friend bool operator<(GF a, GF b) { return a.bits_ < b.bits_; }

    std::string str() const;

  private:
    void check(GF o) const {
        if (deg_ != o.deg_)
            throw std::invalid_argument("GF: mixed field degrees");
    }
    uint32_t bits_;
    uint8_t deg_;
};

// All field elements in a fixed enumeration order (0, 1, x, x+1, ...).
std::vector<GF> field_elements(int deg);

} // namespace versuper

#endif
