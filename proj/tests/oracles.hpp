#pragma once

// Independent reference computations used to check the library. None of
// these call into the code paths they are compared against.

#include "hfconc/f2linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::map<int, std::int64_t>;

// Delta(T(p,q)) = (1 - t) * sum_{s in S} t^s, S the semigroup generated by p
// and q. Every integer >= 2g lies in S, so the sum telescopes past 2g.
inline Poly torus_alexander(int p, int q)
{
    const int g = (p - 1) * (q - 1) / 2;
    std::vector<bool> in_s(2 * g + 2, false);
    for (int a = 0; a * p <= 2 * g + 1; ++a)
        for (int b = 0; a * p + b * q <= 2 * g + 1; ++b)
            in_s[a * p + b * q] = true;
    Poly raw;
    for (int s = 0; s <= 2 * g; ++s) {
        if (!in_s[s])
            continue;
        raw[s] += 1;
        raw[s + 1] -= 1;
    }
    // (1 - t) * sum_{s > 2g} t^s = t^{2g+1}.
    raw[2 * g + 1] += 1;
    Poly out;
    for (auto [e, c] : raw)
        if (c != 0)
            out[e - g] = c;
    return out;
}

// V_k of an L-space knot from its torsion coefficients:
// V_k = sum_{j >= 1} j a_{k+j} for k >= 0, and V_{-k} = V_k + k.
inline int v_single(const Poly& delta, int k)
{
    if (k < 0)
        return v_single(delta, -k) - k;
    std::int64_t v = 0;
    for (auto [e, c] : delta)
        if (e > k)
            v += (e - k) * c;
    return static_cast<int>(v);
}

// V_k of K1 # K2 for L-space knots: min over k1 + k2 = k of V_{k1} + V_{k2}.
inline int v_sum(const Poly& a, const Poly& b, int k)
{
    const int reach = a.rbegin()->first + b.rbegin()->first + std::abs(k) + 2;
    int best = v_single(a, -reach) + v_single(b, k + reach);
    for (int k1 = -reach; k1 <= reach; ++k1)
        best = std::min(best, v_single(a, k1) + v_single(b, k - k1));
    return best;
}

// dim H_g = n_g - rank(d out of degree g) - rank(d into degree g).
inline std::map<int, int> homology_by_rank(const hfconc::F2Matrix& d, const std::vector<int>& gradings)
{
    std::set<int> degrees(gradings.begin(), gradings.end());
    auto block_rank = [&](int from) {
        std::vector<std::size_t> src, dst;
        for (std::size_t k = 0; k < gradings.size(); ++k) {
            if (gradings[k] == from)
                src.push_back(k);
            if (gradings[k] == from - 1)
                dst.push_back(k);
        }
        hfconc::F2Matrix block(dst.size(), src.size());
        for (std::size_t r = 0; r < dst.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c)
                if (d.get(dst[r], src[c]))
                    block.set(r, c);
        return static_cast<int>(hfconc::rank(block));
    };
    std::map<int, int> out;
    for (int g : degrees) {
        const int n = static_cast<int>(std::count(gradings.begin(), gradings.end(), g));
        const int dim = n - block_rank(g) - block_rank(g + 1);
        if (dim != 0)
            out[g] = dim;
    }
    return out;
}

inline hfconc::F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.3)
{
    std::bernoulli_distribution bit(density);
    hfconc::F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng))
                m.set(r, c);
    return m;
}

}  // namespace oracle
