#pragma once
/// Frobenius solution families at t = 0: truncated Γ-series with coefficients
/// in ℚ[P]/(P^μ), and the symbolic check that the hypergeometric operator
/// annihilates them order by order.

#include <stdexcept>
#include <vector>

#include "hginv/ci_data.hpp"
#include "hginv/hypergroup.hpp"
#include "hginv/nilpotent.hpp"
#include "hginv/polynomial.hpp"

namespace hginv {

/// Coefficients c_0..c_M of the series Σ_n c_n t^{n+rho} e^{P log t}, each an
/// element of ℚ[P]/(P^mu).  The coefficient of P^i across the family is the
/// i-th solution attached to the exponent rho.
struct FrobeniusFamily {
    Rat rho;
    int mu = 0;
    int truncation = 0;            // M: highest t-order kept
    std::vector<NilPoly> coeffs;   // size M+1
};

/// The two degree-Q polynomials in s whose difference (after substituting the
/// Euler operator θ for s) is the hypergeometric operator:
///   L0(s) = ∏_ν ∏_{a=0}^{q_ν−1} (q_ν s − a),  Linf_plus(s) = ∏_k ∏_{b=1}^{d_k} (d_k s + b).
struct ThetaPolynomials {
    IntPoly L0;
    IntPoly Linf_plus;
};

inline ThetaPolynomials theta_polynomials(const CIData& data) {
    ThetaPolynomials t;
    t.L0 = IntPoly::one();
    t.Linf_plus = IntPoly::one();
    for (int w : data.q)
        for (int a = 0; a < w; ++a) t.L0 = poly_mul(t.L0, IntPoly({Int(-a), Int(w)}));
    for (int e : data.d)
        for (int b = 1; b <= e; ++b)
            t.Linf_plus = poly_mul(t.Linf_plus, IntPoly({Int(b), Int(e)}));
    return t;
}

/// Evaluate an integer polynomial at a truncated-ring argument (Horner).
inline NilPoly nil_eval_poly(const IntPoly& p, const NilPoly& at) {
    NilPoly acc(at.order(), Rat(p.leading()));
    for (std::size_t k = p.degree(); k-- > 0;) {
        acc = acc * at;
        acc[0] += Rat(p[k]);
    }
    return acc;
}

namespace detail {

/// Product of the admissible linear factors (w·P + b) with ⟨b⟩ = ⟨rho·w⟩ and
/// 0 < b ≤ limit, accumulated into `acc`.
inline void accumulate_factors(NilPoly& acc, int w, const Rat& rho, const Rat& limit) {
    // First admissible b: the fractional part of rho·w, bumped to 1 if zero
    // (the constraint is 0 < b).
    Rat b = frac_part(Rat(w) * rho);
    if (b == 0) b = 1;
    while (b <= limit) {
        acc = acc * nil_linear(acc.order(), Rat(w), b);
        b += 1;
    }
}

}  // namespace detail

/// Build the family for one exponent: c_n is the quotient of the numerator
/// product over degrees by the denominator product over weights, the division
/// done by unit inversion in ℚ[P]/(P^mu).  Each factor has constant term
/// b > 0, hence is a unit; a non-unit would be an internal bug.
inline FrobeniusFamily build_family(const CIData& data, const Rat& rho, int mu, int truncation) {
    if (mu < 1) throw std::invalid_argument("build_family: mu must be >= 1");
    if (truncation < 1) throw std::invalid_argument("build_family: truncation must be >= 1");
    FrobeniusFamily fam;
    fam.rho = rho;
    fam.mu = mu;
    fam.truncation = truncation;
    const std::size_t order = static_cast<std::size_t>(mu);
    for (int n = 0; n <= truncation; ++n) {
        NilPoly num(order, Rat(1)), den(order, Rat(1));
        Rat shift = rho + n;
        for (int e : data.d) detail::accumulate_factors(num, e, rho, shift * e);
        for (int w : data.q) detail::accumulate_factors(den, w, rho, shift * w);
        if (den[0] == 0) throw std::logic_error("build_family: denominator is not a unit");
        fam.coeffs.push_back(num * nil_inverse(den));
    }
    return fam;
}

/// Convenience: families for every exponent of the spectrum.
inline std::vector<FrobeniusFamily> build_all_families(const CIData& data,
                                                       const ExponentSpectrum& spectrum,
                                                       int truncation) {
    std::vector<FrobeniusFamily> fams;
    for (const ExponentRecord& rec : spectrum.exponents)
        fams.push_back(build_family(data, rec.rho, rec.mu, truncation));
    return fams;
}

/// Outcome of the order-by-order operator check.
struct OdeVerification {
    bool pass = false;
    int first_failure = -1;  // t-order of the first failing identity; -1 if none
};

/// Check symbolically that the operator annihilates the family:
/// at order 0, L0(P+rho)·c_0 must vanish in ℚ[P]/(P^mu); for 1 ≤ n ≤ M,
/// L0(P+rho+n)·c_n must equal Linf_plus(P+rho+n−1)·c_{n−1}.
inline OdeVerification verify_ode(const FrobeniusFamily& fam, const CIData& data) {
    ThetaPolynomials theta = theta_polynomials(data);
    const std::size_t order = static_cast<std::size_t>(fam.mu);
    auto shifted = [&](const Rat& c) { return nil_linear(order, Rat(1), c); };  // P + c

    OdeVerification result;
    NilPoly at0 = nil_eval_poly(theta.L0, shifted(fam.rho)) * fam.coeffs[0];
    if (!at0.is_zero()) {
        result.pass = false;
        result.first_failure = 0;
        return result;
    }
    for (int n = 1; n <= fam.truncation; ++n) {
        NilPoly lhs = nil_eval_poly(theta.L0, shifted(fam.rho + n)) * fam.coeffs[n];
        NilPoly rhs = nil_eval_poly(theta.Linf_plus, shifted(fam.rho + n - 1)) * fam.coeffs[n - 1];
        if (!(lhs == rhs)) {
            result.pass = false;
            result.first_failure = n;
            return result;
        }
    }
    result.pass = true;
    return result;
}

/// The loop t ↦ e^{2πi}t multiplies the family by exp(2πi(rho + P)); on
/// ℚ[P]/(P^mu) the unipotent part differs from the identity by P times a
/// unit, so the action is a single Jordan block of size mu with (symbolic)
/// eigenvalue attached to rho.  The block size claim is verified exactly via
/// the nilpotency index of multiplication by P.
inline JordanBlock monodromy_zero_action(const FrobeniusFamily& fam) {
    const std::size_t order = static_cast<std::size_t>(fam.mu);
    NilPoly p(order);
    if (order > 1) p[1] = Rat(1);
    NilPoly power(order, Rat(1));
    for (int k = 0; k < fam.mu - 1; ++k) power = power * p;
    if (power.is_zero())
        throw std::logic_error("monodromy_zero_action: P^(mu-1) vanished; block smaller than mu");
    power = power * p;
    if (!power.is_zero())
        throw std::logic_error("monodromy_zero_action: P^mu nonzero; quotient ring inconsistent");
    return JordanBlock{fam.rho, fam.mu};
}

}  // namespace hginv
