#include "hfconc/whitehead.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hfconc {

std::int64_t HFPlusDesc::casson() const
{
    const Rational value = Rational(euler_characteristic(red)) - d / 2;
    if (value.denominator() != 1)
        throw WhiteheadError("Casson invariant from HF^+ is not an integer: " + to_string(value));
    return value.numerator();
}

std::int64_t casson_from_alexander(const LaurentPoly& delta)
{
    if (!delta.is_symmetric())
        throw WhiteheadError("Alexander polynomial " + delta.to_string() + " is not symmetric");
    if (delta.eval_at_one() != 1)
        throw WhiteheadError("Alexander polynomial " + delta.to_string() + " is not normalized to Delta(1) = 1");
    std::int64_t second = 0;
    for (const auto& [e, c] : delta.terms())
        second += c * e * (e - 1);
    if (second % 2 != 0)
        throw WhiteheadError("Delta''(1)/2 is not an integer for " + delta.to_string());
    return second / 2;
}

std::optional<std::int64_t> fox_milnor_twist(std::int64_t n)
{
    const std::int64_t disc = 4 * n + 1;
    if (disc < 0)
        return std::nullopt;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(disc)));
    while (root * root > disc)
        --root;
    while ((root + 1) * (root + 1) <= disc)
        ++root;
    if (root * root != disc)
        return std::nullopt;
    return (root - 1) / 2;
}

int tau_whitehead(const WhiteheadParams& params) { return params.n >= 2 * tau(params.knot) ? 0 : 1; }

int d_matsumoto(const WhiteheadParams& params) { return params.n >= 2 * tau(params.knot) ? 0 : -2; }

int d_matsumoto_fig8(const WhiteheadParams&) { return 0; }

HFPlusDesc hf_plus_matsumoto(const WhiteheadParams& params)
{
    const KnotSpec& knot = params.knot;
    const std::int64_t two_tau = 2 * tau(knot);
    HFPlusDesc out;
    out.d = d_matsumoto(params);

    if (params.n >= two_tau)
        add_dims(out.red, -1, static_cast<int>(params.n - two_tau));
    else
        add_dims(out.red, -2, static_cast<int>(two_tau - params.n - 1));

    // H_{*+1}: a class in grading g contributes in grading g - 1, twice.
    const int g = knot.genus();
    for (int i = -g; i <= g; ++i)
        for (const auto& [grading, dim] : reduced_filtration_homology(knot, i))
            add_dims(out.red, grading - 1, 2 * dim);
    return out;
}

int delta_whitehead(int s, int p, std::int64_t n)
{
    if (n < 0)
        throw WhiteheadError("the closed delta formula needs n >= 0, got " + std::to_string(n));
    if (p < 1)
        throw WhiteheadError("family parameter must be positive");
    std::int64_t gap = 0;
    if (s == 2)
        gap = p - floor_div(n, 2);
    else if (s == 3)
        gap = 2 * p - floor_div(n, 3);
    else
        throw WhiteheadError("family index must be 2 or 3, got " + std::to_string(s));
    return static_cast<int>(-4 * std::max<std::int64_t>(gap, 0));
}

Rational delta_from_profile(std::int64_t n, const VHProfile& square_profile)
{
    if (n < 0)
        throw WhiteheadError("delta_from_profile needs n >= 0");
    const SurgerySlope slope(4 * n + 1, 2);
    return 2 * d_surgery(slope, slope.canonical_index(), square_profile);
}

namespace {

BifilteredComplex staircase_square(const KnotSpec& knot)
{
    const BifilteredComplex c = staircase(knot).complex();
    return tensor(c, c);
}

// Profile of `c` over the V and H indices read at the canonical structure.
VHProfile canonical_profile(const BifilteredComplex& c, const SurgerySlope& slope)
{
    const std::int64_t i0 = slope.canonical_index();
    const int kv = static_cast<int>(floor_div(i0, slope.q));
    const int kh = static_cast<int>(floor_div(i0 - slope.p, slope.q));
    return oracle_profile(c, std::min(kv, kh), std::max(kv, kh));
}

}  // namespace

Rational delta_via_surgery(const KnotSpec& knot, std::int64_t n)
{
    const BifilteredComplex square = staircase_square(knot);
    if (n >= 0) {
        const SurgerySlope slope(4 * n + 1, 2);
        return delta_from_profile(n, canonical_profile(square, slope));
    }
    // S^3_{-P/2}(J) = -S^3_{P/2}(mJ); the self-conjugate structure maps to itself.
    const SurgerySlope slope(-(4 * n + 1), 2);
    const BifilteredComplex mirror = square.dual();
    return -2 * d_surgery(slope, slope.canonical_index(), canonical_profile(mirror, slope));
}

std::int64_t t_delta_via_surgery(const KnotSpec& knot)
{
    const int bound = 2 * knot.genus() + 1;
    const VHProfile profile = oracle_profile(staircase_square(knot), -bound, bound);
    for (std::int64_t n = 0; n <= bound; ++n)
        if (delta_from_profile(n, profile).numerator() == 0)
            return n;
    throw WhiteheadError("delta did not vanish for n <= " + std::to_string(bound) + " on " + knot.name());
}

Thresholds thresholds(const KnotSpec& knot)
{
    Thresholds t;
    t.t_tau = 2 * tau(knot);
    t.t_d1 = t.t_tau;
    if (auto fam = knot.family_params()) {
        const auto [s, p] = *fam;
        std::int64_t n = 0;
        while (delta_whitehead(s, p, n) != 0)
            ++n;
        t.t_delta = n;
    } else {
        t.t_delta = t_delta_via_surgery(knot);
    }
    return t;
}

}  // namespace hfconc
