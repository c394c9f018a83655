#ifndef VERSUPER_TRUNC_HPP
#define VERSUPER_TRUNC_HPP

#include "versuper/gf.hpp"

#include <cstdint>
#include <stdexcept>

namespace versuper {

// Elements a + b*t of R/t^N R, where R is the ramified quadratic extension of
// the Witt vectors W(k) with the uniformizer normalized so that t^2 = 2.
//
// For k = GF(2) any truncation order N is supported: a is an integer modulo
// 2^ceil(N/2) and b an integer modulo 2^floor(N/2).  For k = GF(2^m), m > 1,
// only N <= 2 is supported; there R/t^2 = k[t]/(t^2) and a, b are field
// elements.  N = 0 is the zero ring (it appears as the codomain of div_t at
// the last truncation step).
class Trunc {
  public:
    Trunc() : a_(0), b_(0), n_(1), deg_(1) {}
    Trunc(uint64_t a, uint64_t b, int n, int deg = 1);

    static Trunc zero(int n, int deg = 1) { return Trunc(0, 0, n, deg); }
    static Trunc one(int n, int deg = 1) { return n == 0 ? zero(0, deg) : Trunc(1, 0, n, deg); }
    static Trunc t(int n, int deg = 1) { return Trunc(0, n >= 2 ? 1 : 0, n, deg); }
    // Canonical multiplicative lift of a residue field element.
    static Trunc lift(GF x, int n);

    uint64_t a() const { return a_; }
    uint64_t b() const { return b_; }
    int order() const { return n_; }
    int degree() const { return deg_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend Trunc operator+(Trunc x, Trunc y);
    friend Trunc operator-(Trunc x, Trunc y);
    friend Trunc operator*(Trunc x, Trunc y);
    Trunc operator-() const;
    Trunc& operator+=(Trunc o) { return *this = *this + o; }
    Trunc& operator-=(Trunc o) { return *this = *this - o; }
    Trunc& operator*=(Trunc o) { return *this = *this * o; }

    // Reduction modulo t, a ring map onto k.
    GF mod_t() const;
    // x is divisible by t iff its mod-t reduction vanishes.
    bool div_by_t() const { return mod_t().is_zero(); }
    // y with t*y = x, well defined in R/t^(N-1).
    Trunc div_t() const;
    Trunc times_t() const { return *this * t(n_, deg_); }
    // Membership in 2R = t^2 R.
    bool in_2R() const;
    // y with 2*y = x, well defined in R/t^(N-2); requires in_2R().
    Trunc div2() const { return div_t().div_t(); }
    // Truncation R/t^N -> R/t^n for n <= N.
    Trunc truncate(int n) const;

    friend bool operator==(Trunc x, Trunc y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_ && x.deg_ == y.deg_;
    }
    friend bool operator!=(Trunc x, Trunc y) { return !(x == y); }

    std::string str() const;

  private:
    void check(const Trunc& o) const {
        if (n_ != o.n_ || deg_ != o.deg_)
            throw std::invalid_argument("Trunc: mixed truncation orders or fields");
    }
    static uint64_t mask_a(int n) { return n == 0 ? 0 : ((uint64_t(1) << ((n + 1) / 2)) - 1); }
    static uint64_t mask_b(int n) { return n <= 1 ? 0 : ((uint64_t(1) << (n / 2)) - 1); }

    uint64_t a_, b_;
    uint8_t n_;
    uint8_t deg_;
};

} // namespace versuper

#endif
