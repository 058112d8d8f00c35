#pragma once
/// Exact scalar types: arbitrary-precision integers and rationals (GMP-backed).
///
/// `Rat` values are always canonical (lowest terms, positive denominator);
/// gmpxx guarantees this for every arithmetic result.  Nothing in this
/// library ever rounds.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hginv {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact string form: integers render as "n", non-integers as "p/q".
inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

/// Parse "n" or "p/q" back into a canonical rational.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    Rat x;
    if (x.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    // canonicalize() requires a nonzero denominator; it also fixes the sign.
    if (x.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    x.canonicalize();
    return x;
}

/// Canonical a/b.  The raw two-argument Rat constructor does NOT reduce the
/// fraction, which silently breaks comparisons; always build ratios here.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

/// Fractional part ⟨x⟩ = x − ⌊x⌋, always in [0, 1).
inline Rat frac_part(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rat f = x - Rat(q);
    f.canonicalize();
    return f;
}

/// True iff the rational is an integer.
inline bool is_integral(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_den() == 1;
}

/// n! as an exact integer.
inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// gcd of the absolute values; gcd(0, 0) = 0.
inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// a^e for small nonnegative exponents.
inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

}  // namespace hginv
