#pragma once

// Invariants of twisted Whitehead doubles D_+(K, n) and of the Matsumoto
// manifolds M_n(K) = S^3_1(D_+(K, n)).

#include "hfconc/cfk.hpp"
#include "hfconc/dinvariants.hpp"
#include "hfconc/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace hfconc {

class WhiteheadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Companion knot and twist of D_+(K, n).
struct WhiteheadParams {
    KnotSpec knot;
    std::int64_t n = 0;
};

/// HF^+ = T^+_(d) + HF_red.
struct HFPlusDesc {
    Rational d;
    GradedDims red;

    /// Rank of HF-hat: the tower bottom plus two per reduced summand.
    int hat_rank() const { return 1 + 2 * total_dim(red); }
    /// Casson invariant read off HF^+: chi(HF_red) - d/2.
    std::int64_t casson() const;

    bool operator==(const HFPlusDesc&) const = default;
};

/// Delta''(1) / 2. Throws if Delta is not symmetric with Delta(1) = 1.
std::int64_t casson_from_alexander(const LaurentPoly& delta);

/// m >= 0 with n = m(m+1), i.e. 4n+1 an odd square; nullopt otherwise.
std::optional<std::int64_t> fox_milnor_twist(std::int64_t n);

/// tau(D_+(K, n)): 0 for n >= 2 tau(K), 1 below.
int tau_whitehead(const WhiteheadParams& params);

/// d(M_n(K)): 0 for n >= 2 tau(K), -2 below.
int d_matsumoto(const WhiteheadParams& params);

/// d(M_n(F, K)) = d(S^3_{-1}(D_+(K, n))), which vanishes for every K and n.
int d_matsumoto_fig8(const WhiteheadParams& params);

/// HF^+(M_n(K)) assembled from the reduced knot filtration of K.
HFPlusDesc hf_plus_matsumoto(const WhiteheadParams& params);

/// delta(D_+(T(s, sp+1), n)) for n >= 0:
/// -4 max{p - floor(n/2), 0} for s = 2 and -4 max{2p - floor(n/3), 0} for s = 3.
int delta_whitehead(int s, int p, std::int64_t n);

/// delta(D_+(K, n)) = 2 d(S^3_{(4n+1)/2}(K # K^r), i_0) from a V/H profile of
/// K # K^r. n must be non-negative.
Rational delta_from_profile(std::int64_t n, const VHProfile& square_profile);

/// delta(D_+(K, n)) through the surgery formula with the oracle profile of
/// the staircase tensor square. Negative n use the mirror:
/// d(S^3_{-P/2}(J)) = -d(S^3_{P/2}(mJ)) at the self-conjugate structure.
Rational delta_via_surgery(const KnotSpec& knot, std::int64_t n);

struct Thresholds {
    std::int64_t t_tau = 0;
    std::int64_t t_delta = 0;
    std::int64_t t_d1 = 0;

    bool operator==(const Thresholds&) const = default;
};

/// t_tau = t_d1 = 2 tau(K); t_delta by an ascending scan over n >= 0 of the
/// closed form (family knots) or the surgery route (other torus knots).
Thresholds thresholds(const KnotSpec& knot);

/// Ascending scan of delta_via_surgery over n >= 0.
std::int64_t t_delta_via_surgery(const KnotSpec& knot);

}  // namespace hfconc
