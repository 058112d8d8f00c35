#pragma once
/// The hypergeometric group attached to (q; d): characteristic polynomials,
/// the three monodromy generators h0, h1, h_infty in GL(Q, ℤ), the exponent
/// spectrum at t = 0, and the reduced rank.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "hginv/ci_data.hpp"
#include "hginv/matrix.hpp"
#include "hginv/polynomial.hpp"
#include "hginv/rational.hpp"

namespace hginv {

/// Coefficients of the two characteristic polynomials, 1-indexed as written:
/// ∏(T^{d_k} − 1) = T^Q + Σ_i A_i T^{Q−i},  ∏(T^{q_ν} − 1) = T^Q + Σ_i B_i T^{Q−i}.
struct CharCoefficients {
    std::vector<Int> A;  // A[i] = A_{i+1}
    std::vector<Int> B;  // B[i] = B_{i+1}
};

inline CharCoefficients char_coefficients(const CIData& data) {
    IntPoly pd = prod_power_minus_one(data.d);
    IntPoly pq = prod_power_minus_one(data.q);
    CharCoefficients c;
    c.A.resize(data.Q);
    c.B.resize(data.Q);
    for (int i = 1; i <= data.Q; ++i) {
        c.A[i - 1] = pd[static_cast<std::size_t>(data.Q - i)];
        c.B[i - 1] = pq[static_cast<std::size_t>(data.Q - i)];
    }
    return c;
}

/// Companion matrix of the monic p(T) = T^Q + A_1 T^{Q-1} + ... + A_Q:
/// ones on the first subdiagonal, last column (−A_Q, ..., −A_1) top to bottom.
inline IntMatrix companion_matrix(const IntPoly& p) {
    const std::size_t q = p.degree();
    if (q == 0) throw std::invalid_argument("companion_matrix: constant polynomial");
    IntMatrix h(q, q);
    for (std::size_t i = 1; i < q; ++i) h(i, i - 1) = 1;
    for (std::size_t i = 0; i < q; ++i) h(i, q - 1) = -p[i];
    return h;
}

struct GroupGenerators {
    IntMatrix h0;       // local monodromy at t = 0
    IntMatrix h1;       // pseudo-reflection at t = lambda
    IntMatrix h_infty;  // local monodromy at t = infinity
};

/// Build the generators: h_infty is the companion matrix of ∏(T^{d_k} − 1),
/// h0 is the exact inverse of the companion matrix of ∏(T^{q_ν} − 1), and
/// h1 = h0⁻¹ · h_infty⁻¹, so that h0 · h1 · h_infty = 1.  h1 is computed by
/// multiplication and cross-checked against its closed form (identity outside
/// the first column; (h1)_{11} = (−1)^r B_Q, (h1)_{i1} = (−1)^r (B_{Q−i+1} −
/// A_{Q−i+1}) for i ≥ 2).  A mismatch would be an implementation bug, so it
/// throws std::logic_error.
inline GroupGenerators generators(const CIData& data) {
    const std::size_t Q = static_cast<std::size_t>(data.Q);
    IntPoly pd = prod_power_minus_one(data.d);
    IntPoly pq = prod_power_minus_one(data.q);

    GroupGenerators g;
    g.h_infty = companion_matrix(pd);
    IntMatrix h0_inv = companion_matrix(pq);
    g.h0 = inverse_unimodular(h0_inv);
    g.h1 = matmul(h0_inv, inverse_unimodular(g.h_infty));

    const int sign = (data.r % 2 == 0) ? 1 : -1;
    IntMatrix closed = IntMatrix::identity(Q);
    closed(0, 0) = Int(sign) * pq[0];  // B_Q = pq[0]
    for (std::size_t i = 1; i < Q; ++i) closed(i, 0) = Int(sign) * (pq[i] - pd[i]);
    if (!(g.h1 == closed))
        throw std::logic_error("generators: multiplied h1 disagrees with its closed form");
    return g;
}

/// One exponent of the ODE at t = 0: the reduced fraction rho in [0,1), its
/// multiplicity mu in the weight spectrum, and the overlap nu with the degree
/// spectrum.
struct ExponentRecord {
    Rat rho;
    int mu = 0;
    int nu = 0;
};

struct ExponentSpectrum {
    std::vector<ExponentRecord> exponents;  // sorted by rho strictly descending; last rho = 0
    int p = 0;                              // number of distinct exponents
    std::vector<int> sigma;                 // partial sums mu_1 + ... + mu_i
    int Q_red = 0;                          // Σ (mu − nu) = Q − deg gcd(φ0, φ∞)
};

/// The five characteristic polynomials of the t-plane picture: φ0 = ∏(x^{q}−1),
/// φ∞ = ∏(x^{d}−1), their gcd η, and the reduced quotients.
struct ReducedCharpolys {
    IntPoly phi0;
    IntPoly phi_inf;
    IntPoly eta;
    IntPoly phi0_bar;
    IntPoly phi_inf_bar;
};

inline ReducedCharpolys reduced_charpolys(const CIData& data) {
    ReducedCharpolys out;
    out.phi0 = prod_power_minus_one(data.q);
    out.phi_inf = prod_power_minus_one(data.d);
    out.eta = poly_gcd(out.phi0, out.phi_inf);
    out.phi0_bar = poly_divexact(out.phi0, out.eta);
    out.phi_inf_bar = poly_divexact(out.phi_inf, out.eta);
    return out;
}

/// Exponents of the regular singular point t = 0, with multiplicities from
/// the multiset {a/q_ν mod 1 : 0 ≤ a < q_ν} and overlaps from
/// {b/d_k mod 1 : 0 ≤ b < d_k}.  Q_red is computed both as Σ(mu − nu) and as
/// Q − deg gcd(φ0, φ∞); disagreement signals a bug and throws.
inline ExponentSpectrum exponent_spectrum(const CIData& data) {
    std::map<Rat, int> mu_map, m_map;
    for (int w : data.q)
        for (int a = 0; a < w; ++a) mu_map[make_rat(Int(a), Int(w))] += 1;
    for (int e : data.d)
        for (int b = 0; b < e; ++b) m_map[make_rat(Int(b), Int(e))] += 1;

    ExponentSpectrum s;
    // std::map iterates ascending; build descending.
    for (auto it = mu_map.rbegin(); it != mu_map.rend(); ++it) {
        ExponentRecord rec;
        rec.rho = it->first;
        rec.mu = it->second;
        auto hit = m_map.find(rec.rho);
        int m = (hit == m_map.end()) ? 0 : hit->second;
        rec.nu = std::min(rec.mu, m);
        s.exponents.push_back(rec);
    }
    s.p = static_cast<int>(s.exponents.size());
    int running = 0, qred = 0;
    for (const ExponentRecord& rec : s.exponents) {
        running += rec.mu;
        s.sigma.push_back(running);
        qred += rec.mu - rec.nu;
    }
    s.Q_red = qred;

    ReducedCharpolys rc = reduced_charpolys(data);
    int qred_gcd = data.Q - static_cast<int>(rc.eta.degree());
    if (qred_gcd != s.Q_red)
        throw std::logic_error("exponent_spectrum: Q_red via spectrum disagrees with Q_red via gcd");
    return s;
}

/// Jordan structure of the monodromy at t = 0: one block per distinct
/// exponent.  The eigenvalue is kept symbolic — rho itself in the additive
/// (log-of-monodromy) reading, the root of unity with argument 2π·rho in the
/// multiplicative one.
enum class MonodromyInterpretation { multiplicative, additive };

struct JordanBlock {
    Rat rho;
    int mu = 0;
};

struct JordanBlockData {
    std::vector<JordanBlock> blocks;
    MonodromyInterpretation interpretation = MonodromyInterpretation::multiplicative;
};

inline JordanBlockData jordan_at_zero(const ExponentSpectrum& s) {
    JordanBlockData j;
    for (const ExponentRecord& rec : s.exponents) j.blocks.push_back({rec.rho, rec.mu});
    j.interpretation = MonodromyInterpretation::multiplicative;
    return j;
}

}  // namespace hginv
