#pragma once

// Correction terms: lens spaces, the V_k / H_k invariants of a knot complex,
// and the rational surgery formula built from them.

#include "hfconc/cfk.hpp"
#include "hfconc/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hfconc {

class DInvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// floor(a / b) rounding toward negative infinity; b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// a mod b in [0, b); b > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// p/q with p, q > 0 coprime.
struct SurgerySlope {
    std::int64_t p;
    std::int64_t q;

    SurgerySlope(std::int64_t p, std::int64_t q);
    /// (p + q - 1) / 2 mod p; defined when q is even.
    std::int64_t canonical_index() const;
};

/// d(L(p,q), i) with L(p,q) the p/q surgery on the unknot, via
/// d(L(p,q),i) = (2i+1-p-q)^2/(4pq) - 1/4 - d(L(q, p mod q), i mod q).
/// The index is read mod p.
Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i);

/// Closed form for L(2r+1, 2), 0 <= j < 2r+1.
Rational d_lens_2r1_2(std::int64_t r, std::int64_t j);

/// Spin^c conjugation on the lens space labels: i -> q - 1 - i mod p.
std::int64_t conjugate_index(std::int64_t p, std::int64_t q, std::int64_t i);

/// k -> (V_k, H_k) over [k_min, k_max].
class VHProfile {
public:
    VHProfile(int k_min, std::vector<int> v, std::vector<int> h);

    int k_min() const { return k_min_; }
    int k_max() const { return k_min_ + static_cast<int>(v_.size()) - 1; }
    bool covers(int k) const { return k >= k_min() && k <= k_max(); }
    int V(int k) const;
    int H(int k) const;

    /// V_k >= V_{k+1} >= V_k - 1 across the range.
    bool v_monotone() const;

private:
    int k_min_;
    std::vector<int> v_;
    std::vector<int> h_;
};

/// The region of the plane whose translates of a cycle are quotiented out.
using PlaneRegion = std::function<bool(int i, int j)>;

/// Computes V_k and H_k of CFK^infinity = C tensor F[U, U^{-1}] for a finite
/// model C with one-dimensional homology.
///
/// gamma_m = U^{-m} z_0 for a cycle z_0 generating H(C). The class of gamma_m
/// survives in C / R (R a filtration region) iff gamma_m is not in R + dC.
/// Each Maslov grading of C[U, U^{-1}] is finite-dimensional, so the test is
/// a membership problem over F_2 restricted to a window |U-power| <= N.
/// With m_B the least surviving m for R = {i < 0} and m_A(k) the least for
/// R = {i < 0 and j < k}, V_k = m_B - m_A(k).
class TowerOracle {
public:
    explicit TowerOracle(BifilteredComplex c);

    const BifilteredComplex& complex() const { return c_; }
    /// Coefficients of the chosen generating cycle z_0.
    const BitVector& generating_cycle() const { return z0_; }
    int generating_grading() const { return z0_grading_; }

    /// Whether gamma_m survives modulo `region` using translates |t| <= window.
    bool survives(const PlaneRegion& region, int m, int window) const;

    /// Least surviving m within the window, or nullopt if none is found or
    /// the window is too narrow to see the dying range.
    std::optional<int> least_surviving(const PlaneRegion& region, int window) const;

    /// m_B: least m with gamma_m surviving in C{i >= 0}.
    int tower_bottom_b() const;
    /// m_A(k): least m with gamma_m surviving in C{i >= 0 or j >= k}.
    int tower_bottom_a(int k) const;

    int V(int k) const;

private:
    int stabilized(const std::function<std::optional<int>(int)>& at_window, int start) const;

    BifilteredComplex c_;
    BitVector z0_;
    int z0_grading_ = 0;
    int span_ = 0;
};

int vk_oracle(const BifilteredComplex& c, int k);
/// V_{-k} of the coordinate-swapped complex.
int hk_oracle(const BifilteredComplex& c, int k);
VHProfile oracle_profile(const BifilteredComplex& c, int k_min, int k_max);

/// Closed forms for the tensor squares of the T(2,2p+1) and T(3,3p+1)
/// staircases.
int vk_shortcut_family(int s, int p, int k);
int hk_shortcut_family(int s, int p, int k);
VHProfile family_profile(int s, int p, int k_min, int k_max);

/// Pairwise sums of cycle corners of the (s,p) family staircase, moved by
/// (m - g, m - g) with g the genus; for s = 2 and m = 0 they lie on i + j = 0.
std::vector<std::pair<int, int>> representative_points(int s, int p, int m);

/// True iff U^{-m} of the generating class survives in C / F_k, decided by
/// whether any representative point lies in F_k = {i < 0 and j < k}.
bool representative_criterion(int s, int p, int k, int m);

/// d(S^3_{p/q}(K), i) = d(L(p,q), i) - 2 max{V_{floor(i/q)}, H_{floor((i-p)/q)}}.
Rational d_surgery(const SurgerySlope& slope, std::int64_t i, const VHProfile& profile);

}  // namespace hfconc
