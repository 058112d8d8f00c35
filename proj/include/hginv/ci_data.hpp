#pragma once
/// Input record for a complete intersection of r hypersurfaces of degrees
/// d_1..d_r inside the weighted projective space with weights q_0..q_N,
/// subject to the Calabi–Yau balance Σq = Σd.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hginv/rational.hpp"

namespace hginv {

struct CIData {
    std::vector<int> q;  // weights q_0..q_N (N+1 entries)
    std::vector<int> d;  // degrees d_1..d_r (r entries)
    int Q = 0;           // common sum Σq = Σd; rank of everything downstream
    int N = 0;           // q has N+1 entries
    int r = 0;           // number of hypersurfaces
    int n = 0;           // dimension N - r of the complete intersection
    Rat lambda;          // ∏ q^q / ∏ d^d
};

/// Validate (q; d) and derive the record.  Throws std::invalid_argument on
/// empty input, non-positive entries, or Σq ≠ Σd.
inline CIData build_data(std::vector<int> q, std::vector<int> d) {
    if (q.empty() || d.empty()) throw std::invalid_argument("build_data: empty weight or degree list");
    for (int w : q)
        if (w < 1) throw std::invalid_argument("build_data: weights must be positive");
    for (int e : d)
        if (e < 1) throw std::invalid_argument("build_data: degrees must be positive");
    int sq = std::accumulate(q.begin(), q.end(), 0);
    int sd = std::accumulate(d.begin(), d.end(), 0);
    if (sq != sd)
        throw std::invalid_argument("build_data: weight sum " + std::to_string(sq) +
                                    " != degree sum " + std::to_string(sd));
    CIData data;
    data.q = std::move(q);
    data.d = std::move(d);
    data.Q = sq;
    data.N = static_cast<int>(data.q.size()) - 1;
    data.r = static_cast<int>(data.d.size());
    data.n = data.N - data.r;
    Rat num(1), den(1);
    for (int w : data.q) num *= Rat(int_pow(Int(w), static_cast<unsigned long>(w)));
    for (int e : data.d) den *= Rat(int_pow(Int(e), static_cast<unsigned long>(e)));
    data.lambda = num / den;
    data.lambda.canonicalize();
    return data;
}

}  // namespace hginv
