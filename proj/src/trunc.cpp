#include "versuper/trunc.hpp"

namespace versuper {

Trunc::Trunc(uint64_t a, uint64_t b, int n, int deg)
    : a_(a), b_(b), n_(static_cast<uint8_t>(n)), deg_(static_cast<uint8_t>(deg)) {
    if (n < 0 || n > 16)
        throw std::invalid_argument("Trunc: truncation order must be in 0..16");
    if (deg < 1 || deg > 8)
        throw std::invalid_argument("Trunc: field degree must be in 1..8");
    if (deg > 1) {
        if (n > 2)
            throw std::invalid_argument("Trunc: N > 2 requires k = GF(2)");
        a_ = n >= 1 ? (a & ((uint64_t(1) << deg) - 1)) : 0;
        b_ = n >= 2 ? (b & ((uint64_t(1) << deg) - 1)) : 0;
        if ((n >= 1 && a_ != a) || (n >= 2 && b_ != b) || (n < 2 && b != 0) || (n < 1 && a != 0))
            throw std::invalid_argument("Trunc: component out of range");
    } else {
        a_ = a & mask_a(n);
        b_ = b & mask_b(n);
    }
}

Trunc Trunc::lift(GF x, int n) {
    if (x.degree() == 1)
        return Trunc(x.bits(), 0, n, 1);
    return Trunc(x.bits(), 0, n, x.degree());
}

Trunc operator+(Trunc x, Trunc y) {
    x.check(y);
    if (x.deg_ > 1)
        return Trunc(x.a_ ^ y.a_, x.b_ ^ y.b_, x.n_, x.deg_);
    return Trunc((x.a_ + y.a_) & Trunc::mask_a(x.n_), (x.b_ + y.b_) & Trunc::mask_b(x.n_), x.n_, 1);
}

Trunc Trunc::operator-() const {
    if (deg_ > 1)
        return *this;
    return Trunc((~a_ + 1) & mask_a(n_), (~b_ + 1) & mask_b(n_), n_, 1);
}

Trunc operator-(Trunc x, Trunc y) { return x + (-y); }

Trunc operator*(Trunc x, Trunc y) {
    x.check(y);
    if (x.deg_ > 1) {
        // N <= 2, so t^2 = 2 = 0 and components multiply in k.
        GF a1(uint32_t(x.a_), x.deg_), b1(uint32_t(x.b_), x.deg_);
        GF a2(uint32_t(y.a_), x.deg_), b2(uint32_t(y.b_), x.deg_);
        GF a = a1 * a2;
        GF b = a1 * b2 + b1 * a2;
        return Trunc(a.bits(), x.n_ >= 2 ? b.bits() : 0, x.n_, x.deg_);
    }
    // (a1 + b1 t)(a2 + b2 t) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) t.
    uint64_t a = (x.a_ * y.a_ + 2 * x.b_ * y.b_) & Trunc::mask_a(x.n_);
    uint64_t b = (x.a_ * y.b_ + x.b_ * y.a_) & Trunc::mask_b(x.n_);
    return Trunc(a, b, x.n_, 1);
}

GF Trunc::mod_t() const {
    if (n_ == 0)
        throw std::domain_error("Trunc: mod-t reduction from the zero ring");
    if (deg_ > 1)
        return GF(uint32_t(a_), deg_);
    return GF(uint32_t(a_ & 1), 1);
}

Trunc Trunc::div_t() const {
    if (n_ == 0)
        throw std::domain_error("Trunc: div_t on the zero ring");
    if (!div_by_t())
        throw std::domain_error("Trunc: element not divisible by t");
    // t * (b + (a/2) t) = 2(a/2) + b t = a + b t.
    if (deg_ > 1)
        return Trunc(b_, 0, n_ - 1, deg_);
    return Trunc(b_ & mask_a(n_ - 1), (a_ >> 1) & mask_b(n_ - 1), n_ - 1, 1);
}

bool Trunc::in_2R() const {
    if (deg_ > 1)
        return is_zero();
    if (n_ == 1)
        return a_ == 0;
    return (a_ & 1) == 0 && (b_ & 1) == 0;
}

Trunc Trunc::truncate(int n) const {
    if (n > n_)
        throw std::invalid_argument("Trunc: cannot extend precision");
    if (deg_ > 1)
        return Trunc(n >= 1 ? a_ : 0, n >= 2 ? b_ : 0, n, deg_);
    return Trunc(a_ & mask_a(n), b_ & mask_b(n), n, 1);
}

std::string Trunc::str() const {
    return std::to_string(a_) + "+" + std::to_string(b_) + "t";
}

} // namespace versuper
