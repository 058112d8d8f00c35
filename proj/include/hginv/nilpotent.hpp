#pragma once
/// Truncated polynomial arithmetic over ℚ: the ring ℚ[P]/(P^order), used to
/// expand series coefficients whose "exponent" carries a nilpotent part.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hginv/rational.hpp"

namespace hginv {

/// Element of ℚ[P]/(P^order), stored as exactly `order` coefficients,
/// index = power of P.
class NilPoly {
  public:
    explicit NilPoly(std::size_t order) : c_(order, Rat(0)) {
        if (order == 0) throw std::invalid_argument("NilPoly: order must be >= 1");
    }
    NilPoly(std::size_t order, const Rat& constant) : NilPoly(order) { c_[0] = constant; }

    std::size_t order() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const NilPoly& o) const { return c_ == o.c_; }

    NilPoly& operator+=(const NilPoly& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    NilPoly& operator-=(const NilPoly& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend NilPoly operator+(NilPoly a, const NilPoly& b) { return a += b; }
    friend NilPoly operator-(NilPoly a, const NilPoly& b) { return a -= b; }

    friend NilPoly operator*(const NilPoly& a, const NilPoly& b) {
        a.check(b);
        NilPoly out(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < a.order(); ++j) {
                if (b.c_[j] == 0) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }
    friend NilPoly operator*(const Rat& s, NilPoly a) {
        for (Rat& x : a.c_) x *= s;
        return a;
    }

  private:
    void check(const NilPoly& o) const {
        if (c_.size() != o.c_.size()) throw std::invalid_argument("NilPoly: order mismatch");
    }
    std::vector<Rat> c_;
};

/// Multiplicative inverse; the constant term must be nonzero (a unit).
inline NilPoly nil_inverse(const NilPoly& a) {
    if (a[0] == 0) throw std::domain_error("nil_inverse: constant term is zero, not a unit");
    NilPoly inv(a.order());
    inv[0] = Rat(1) / a[0];
    for (std::size_t k = 1; k < a.order(); ++k) {
        Rat s(0);
        for (std::size_t j = 1; j <= k; ++j) s += a[j] * inv[k - j];
        inv[k] = -s / a[0];
    }
    return inv;
}

/// Evaluate the linear factor (c·P + s) in ℚ[P]/(P^order).
inline NilPoly nil_linear(std::size_t order, const Rat& c, const Rat& s) {
    NilPoly out(order, s);
    if (order > 1) out[1] = c;
    return out;
}

}  // namespace hginv
