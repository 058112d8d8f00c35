#pragma once
/// Whole-pipeline driver and exact report serialization.  run_case executes
/// every construction and every named verification for one (q; d) input; the
/// result renders to a stable text layout or to JSON whose numeric payloads
/// are exact decimal / "p/q" strings (never floats), so reports are
/// byte-deterministic and round-trip losslessly.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hginv/case_file.hpp"
#include "hginv/ci_data.hpp"
#include "hginv/euler_k.hpp"
#include "hginv/frobenius.hpp"
#include "hginv/hypergroup.hpp"
#include "hginv/invariants.hpp"
#include "hginv/matrix.hpp"
#include "hginv/verification.hpp"

namespace hginv {

using json = nlohmann::ordered_json;

struct Report {
    CaseSpec spec;
    CIData data;
    CharCoefficients coeffs;
    GroupGenerators gens;
    ExponentSpectrum spectrum;
    CollectionMatrices cm;
    RestrictedGram rg;
    IntMatrix stokes;
    InvariantSpace space;
    std::optional<Rat> scalar;  // Xbar = scalar · invariant generator, when verified
    std::size_t xbar_rank = 0;
    std::vector<VerificationReport> checks;
    bool all_pass = false;
};

namespace detail {

inline VerificationReport check_group_relation(const CIData& data, const GroupGenerators& g) {
    VerificationReport r{"group-relation", false, ""};
    r.pass = matmul(matmul(g.h0, g.h1), g.h_infty) ==
             IntMatrix::identity(static_cast<std::size_t>(data.Q));
    if (!r.pass) r.detail = "h0·h1·h_infty is not the identity";
    return r;
}

inline bool charpoly_matches(const IntMatrix& m, const IntPoly& expected) {
    std::vector<Rat> cp = charpoly(m);
    if (cp.size() != expected.coeffs().size()) return false;
    for (std::size_t i = 0; i < cp.size(); ++i)
        if (cp[i] != Rat(expected[i])) return false;
    return true;
}

inline VerificationReport check_charpolys(const CIData& data, const GroupGenerators& g) {
    VerificationReport r{"characteristic-polynomials", true, ""};
    if (!charpoly_matches(g.h_infty, prod_power_minus_one(data.d))) {
        r.pass = false;
        r.detail = "charpoly(h_infty) differs from the degree product";
        return r;
    }
    if (!charpoly_matches(inverse_unimodular(g.h0), prod_power_minus_one(data.q))) {
        r.pass = false;
        r.detail = "charpoly(h0^-1) differs from the weight product";
    }
    return r;
}

inline VerificationReport check_reflection_closed_form(const CIData& data,
                                                       const CharCoefficients& c,
                                                       const GroupGenerators& g) {
    VerificationReport r{"reflection-closed-form", true, ""};
    const std::size_t Q = static_cast<std::size_t>(data.Q);
    const Int sign = data.r % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < Q; ++i)
        for (std::size_t j = 0; j < Q; ++j) {
            Int expected;
            if (j == 0)
                expected = i == 0 ? Int(sign * c.B[Q - 1])
                                  : Int(sign * (c.B[Q - 1 - i] - c.A[Q - 1 - i]));
            else
                expected = i == j ? 1 : 0;
            if (g.h1(i, j) != expected) {
                r.pass = false;
                r.detail = "h1 closed form fails at entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")";
                return r;
            }
        }
    return r;
}

inline VerificationReport check_ode_series(const CIData& data, const ExponentSpectrum& spectrum,
                                           int truncation) {
    VerificationReport r{"ode-series", true, ""};
    for (const ExponentRecord& rec : spectrum.exponents) {
        FrobeniusFamily fam = build_family(data, rec.rho, rec.mu, truncation);
        OdeVerification v = verify_ode(fam, data);
        if (!v.pass) {
            r.pass = false;
            r.detail = "exponent " + to_string(rec.rho) + " fails at order " +
                       std::to_string(v.first_failure);
            return r;
        }
    }
    r.detail = "checked " + std::to_string(spectrum.exponents.size()) + (spectrum.exponents.size() == 1 ? " family to order " : " families to order ") +
               std::to_string(truncation);
    return r;
}

inline VerificationReport check_quadratic_invariance(const GroupGenerators& g,
                                                     const RestrictedGram& rg) {
    VerificationReport r{"quadratic-invariance", true, ""};
    const std::vector<std::pair<const IntMatrix*, const char*>> generators = {
        {&g.h0, "h0"}, {&g.h1, "h1"}, {&g.h_infty, "h_infty"}};
    for (const auto& [h, label] : generators)
        if (!(matmul(matmul(*h, rg.Xbar), h->transpose()) == rg.Xbar)) {
            r.pass = false;
            r.detail = std::string("conjugation by ") + label + " does not fix the Gram matrix";
            return r;
        }
    return r;
}

inline VerificationReport check_stokes(const CollectionMatrices& cm, const IntMatrix& stokes) {
    VerificationReport r{"stokes-unitriangular", true, ""};
    if (!(stokes == cm.S)) {
        r.pass = false;
        r.detail = "direct pairing disagrees with the conjugated Euler matrix";
        return r;
    }
    const std::size_t Q = stokes.rows();
    for (std::size_t i = 0; i < Q; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Int expected = i == j ? 1 : 0;
            if (stokes(i, j) != expected) {
                r.pass = false;
                r.detail = "not unitriangular at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")";
                return r;
            }
        }
    return r;
}

}  // namespace detail

/// Run every construction and verification for one case.
inline Report run_case(const CaseSpec& spec) {
    Report rep;
    rep.spec = spec;
    rep.data = build_data(spec.q, spec.d);
    rep.coeffs = char_coefficients(rep.data);
    rep.gens = generators(rep.data);
    rep.spectrum = exponent_spectrum(rep.data);
    rep.cm = collection_matrices(rep.data);
    rep.rg = restricted_gram(rep.data, rep.cm);
    rep.stokes = stokes_matrix(rep.data, rep.cm);
    rep.space = invariant_space(rep.gens);
    rep.xbar_rank = rank(rep.rg.Xbar);

    rep.checks.push_back(detail::check_group_relation(rep.data, rep.gens));
    rep.checks.push_back(detail::check_charpolys(rep.data, rep.gens));
    rep.checks.push_back(detail::check_reflection_closed_form(rep.data, rep.coeffs, rep.gens));
    rep.checks.push_back(detail::check_ode_series(rep.data, rep.spectrum, spec.truncation));
    rep.checks.push_back(verify_tensor_action(rep.data, rep.cm, rep.gens));
    rep.checks.push_back(verify_twist_action(rep.data, rep.rg, rep.gens));
    rep.checks.push_back(verify_cyclic_diagram(rep.data, rep.cm, rep.rg, rep.gens));
    rep.checks.push_back(verify_reduced_charpoly(rep.data, reduced_charpolys(rep.data)));
    rep.checks.push_back(detail::check_quadratic_invariance(rep.gens, rep.rg));
    TheoremVerification tv = verify_theorem(rep.space, rep.rg);
    rep.checks.push_back(tv.report);
    if (tv.report.pass) rep.scalar = tv.scalar;
    rep.checks.push_back(verify_reflection_relations(rep.gens, rep.space));
    rep.checks.push_back(detail::check_stokes(rep.cm, rep.stokes));

    rep.all_pass = true;
    for (const VerificationReport& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization.  All numeric payloads are exact strings; q/d entries and
// structural counts are plain JSON numbers.

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json report_json(const Report& rep) {
    json j;
    j["name"] = rep.spec.name;
    j["q"] = rep.data.q;
    j["d"] = rep.data.d;
    j["Q"] = rep.data.Q;
    j["N"] = rep.data.N;
    j["r"] = rep.data.r;
    j["n"] = rep.data.n;
    j["lambda"] = to_string(rep.data.lambda);
    json a = json::array(), b = json::array();
    for (const Int& x : rep.coeffs.A) a.push_back(to_string(x));
    for (const Int& x : rep.coeffs.B) b.push_back(to_string(x));
    j["A"] = std::move(a);
    j["B"] = std::move(b);
    json exponents = json::array();
    for (const ExponentRecord& rec : rep.spectrum.exponents)
        exponents.push_back(json{{"rho", to_string(rec.rho)}, {"mu", rec.mu}, {"nu", rec.nu}});
    j["exponents"] = std::move(exponents);
    j["Q_red"] = rep.spectrum.Q_red;
    j["xbar_rank"] = rep.xbar_rank;
    j["h0"] = matrix_json(rep.gens.h0);
    j["h1"] = matrix_json(rep.gens.h1);
    j["h_infty"] = matrix_json(rep.gens.h_infty);
    j["Xbar"] = matrix_json(rep.rg.Xbar);
    j["S"] = matrix_json(rep.stokes);
    json inv;
    inv["dimension"] = rep.space.dimension;
    inv["generator"] = rep.space.generator ? matrix_json(*rep.space.generator) : json(nullptr);
    inv["scalar"] = rep.scalar ? json(to_string(*rep.scalar)) : json(nullptr);
    j["invariant"] = std::move(inv);
    json checks = json::array();
    for (const VerificationReport& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["all_pass"] = rep.all_pass;
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering.

inline std::string matrix_text(const IntMatrix& m, const std::string& indent) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (const Int& x : m.data()) {
        cells.push_back(to_string(x));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& cell = cells[i * m.cols() + j];
            out << std::string(width - cell.size() + (j == 0 ? 0 : 1), ' ') << cell;
        }
        out << "]\n";
    }
    return out.str();
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string report_text(const Report& rep) {
    std::ostringstream out;
    out << "case " << rep.spec.name << ": q = (" << join_ints(rep.data.q) << "), d = ("
        << join_ints(rep.data.d) << ")\n";
    out << "  Q = " << rep.data.Q << ", N = " << rep.data.N << ", r = " << rep.data.r
        << ", n = " << rep.data.n << ", lambda = " << to_string(rep.data.lambda) << "\n";
    out << "  exponents (rho: mu, nu):";
    for (const ExponentRecord& rec : rep.spectrum.exponents)
        out << "  " << to_string(rec.rho) << ": " << rec.mu << ", " << rec.nu;
    out << "\n";
    out << "  Q_red = " << rep.spectrum.Q_red << ", rank(Xbar) = " << rep.xbar_rank << "\n";
    out << "  h0 =\n" << matrix_text(rep.gens.h0, "    ");
    out << "  h1 =\n" << matrix_text(rep.gens.h1, "    ");
    out << "  h_infty =\n" << matrix_text(rep.gens.h_infty, "    ");
    out << "  Xbar =\n" << matrix_text(rep.rg.Xbar, "    ");
    out << "  S =\n" << matrix_text(rep.stokes, "    ");
    out << "  invariant dimension = " << rep.space.dimension;
    if (rep.scalar) out << ", Xbar = " << to_string(*rep.scalar) << " * generator";
    out << "\n";
    if (rep.space.generator) out << "  generator =\n" << matrix_text(*rep.space.generator, "    ");
    out << "  checks:\n";
    for (const VerificationReport& c : rep.checks) {
        out << "    [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << " — " << c.detail;
        out << "\n";
    }
    out << (rep.all_pass ? "  all checks passed\n" : "  SOME CHECKS FAILED\n");
    return out.str();
}

}  // namespace hginv
