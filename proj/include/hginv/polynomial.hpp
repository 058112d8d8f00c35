#pragma once
/// Integer polynomials in one variable: products of x^k − 1, exact division,
/// and gcds normalized to primitive form with positive leading coefficient.

#include <stdexcept>
#include <string>
#include <vector>

#include "hginv/rational.hpp"

namespace hginv {

/// Polynomial with arbitrary-precision integer coefficients, index = degree.
/// Normal form: highest-degree coefficient nonzero, except the zero
/// polynomial which is stored as the single coefficient 0.
class IntPoly {
  public:
    IntPoly() : c_{Int(0)} {}
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly one() { return IntPoly({Int(1)}); }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    std::size_t degree() const { return c_.size() - 1; }  // degree 0 for the zero polynomial
    const Int& operator[](std::size_t i) const { return c_[i]; }
    const Int& leading() const { return c_.back(); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  private:
    void trim() {
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
        if (c_.empty()) c_ = {Int(0)};
    }
    std::vector<Int> c_;
};

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> out(a.degree() + b.degree() + 1, Int(0));
    for (std::size_t i = 0; i <= a.degree(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j <= b.degree(); ++j) out[i + j] += a[i] * b[j];
    }
    return IntPoly(std::move(out));
}

/// ∏_k (x^{e_k} − 1); the characteristic-polynomial building block.
inline IntPoly prod_power_minus_one(const std::vector<int>& exponents) {
    IntPoly p = IntPoly::one();
    for (int e : exponents) {
        if (e < 1) throw std::invalid_argument("prod_power_minus_one: exponent must be >= 1");
        std::vector<Int> f(static_cast<std::size_t>(e) + 1, Int(0));
        f[0] = -1;
        f[static_cast<std::size_t>(e)] = 1;
        p = poly_mul(p, IntPoly(std::move(f)));
    }
    return p;
}

/// Exact quotient a / b; throws if b does not divide a over the integers.
inline IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("poly_divexact: not divisible");
    std::vector<Rat> rem(a.degree() + 1);
    for (std::size_t i = 0; i <= a.degree(); ++i) rem[i] = Rat(a[i]);
    std::vector<Rat> quot(a.degree() - b.degree() + 1, Rat(0));
    Rat lead(b.leading());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rat f = rem[k + b.degree()] / lead;
        quot[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= b.degree(); ++j) rem[k + j] -= f * Rat(b[j]);
    }
    for (const Rat& r : rem)
        if (r != 0) throw std::domain_error("poly_divexact: nonzero remainder");
    std::vector<Int> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (!is_integral(quot[i])) throw std::domain_error("poly_divexact: non-integer quotient");
        out[i] = quot[i].get_num();
    }
    return IntPoly(std::move(out));
}

/// gcd over ℚ, normalized to a primitive integer polynomial with positive
/// leading coefficient.  Assumes what this library feeds it: products of
/// x^k − 1, whose coefficients stay small under the Euclidean remainders.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
    std::vector<Rat> fa(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> fb(b.coeffs().begin(), b.coeffs().end());
    auto trim = [](std::vector<Rat>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    };
    auto iszero = [](const std::vector<Rat>& v) { return v.size() == 1 && v[0] == 0; };
    trim(fa);
    trim(fb);
    while (!iszero(fb)) {
        // fa mod fb
        while (fa.size() >= fb.size() && !iszero(fa)) {
            Rat f = fa.back() / fb.back();
            std::size_t sh = fa.size() - fb.size();
            for (std::size_t j = 0; j < fb.size(); ++j) fa[sh + j] -= f * fb[j];
            fa.pop_back();
            trim(fa);
            if (fa.empty()) fa = {Rat(0)};
        }
        std::swap(fa, fb);
    }
    // Clear denominators, divide by content, fix the sign.
    Int den(1);
    for (const Rat& x : fa) den = int_lcm(den, x.get_den());
    std::vector<Int> ints(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) ints[i] = Rat(fa[i] * Rat(den)).get_num();
    Int g(0);
    for (const Int& x : ints) g = int_gcd(g, x);
    if (g != 0)
        for (Int& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (ints.back() < 0)
        for (Int& x : ints) x = -x;
    return IntPoly(std::move(ints));
}

/// Render with ascending powers, e.g. "x^4 + x^3 + x^2 + x + 1" descending for
/// reports; purely cosmetic.
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Int& c = p[k];
        if (c == 0) continue;
        Int a = c > 0 ? c : Int(-c);
        if (!s.empty())
            s += (c > 0) ? " + " : " - ";
        else if (c < 0)
            s += "-";
        bool unit = (a == 1);
        if (k == 0) {
            s += to_string(a);
        } else {
            if (!unit) s += to_string(a) + "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace hginv
