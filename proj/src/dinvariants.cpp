#include "hfconc/dinvariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace hfconc {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

SurgerySlope::SurgerySlope(std::int64_t p_, std::int64_t q_) : p(p_), q(q_)
{
    if (p <= 0 || q <= 0)
        throw DInvariantError("surgery slope " + std::to_string(p) + "/" + std::to_string(q) +
                              " must have positive numerator and denominator");
    if (std::gcd(p, q) != 1)
        throw DInvariantError("surgery slope " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
}

std::int64_t SurgerySlope::canonical_index() const
{
    if (q % 2 != 0)
        throw DInvariantError("canonical index is defined here for even q only");
    return floor_mod((p + q - 1) / 2, p);
}

// ------------------------------------------------------------ lens spaces

Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i)
{
    if (p <= 0 || q <= 0)
        throw DInvariantError("lens space L(" + std::to_string(p) + "," + std::to_string(q) +
                              ") needs positive parameters");
    if (std::gcd(p, q) != 1)
        throw DInvariantError("lens space L(" + std::to_string(p) + "," + std::to_string(q) +
                              ") needs coprime parameters");
    Rational total = 0;
    int sign = 1;
    i = floor_mod(i, p);
    while (p > 1) {
        const std::int64_t a = 2 * i + 1 - p - q;
        total += sign * (Rational(a * a, 4 * p * q) - Rational(1, 4));
        const std::int64_t next_q = p % q;
        i = i % q;
        p = q;
        q = next_q;
        sign = -sign;
        if (p > 1 && q == 0)
            throw DInvariantError("lens space recursion reached a non-coprime pair");
    }
    return total;
}

Rational d_lens_2r1_2(std::int64_t r, std::int64_t j)
{
    if (r < 1 || j < 0 || j >= 2 * r + 1)
        throw DInvariantError("d_lens_2r1_2 needs r >= 1 and 0 <= j < 2r+1");
    const std::int64_t den = 2 * (2 * r + 1);
    if (j % 2 == 1) {
        const std::int64_t k = (j + 1) / 2;
        const std::int64_t a = 2 * k - r - 2;
        return {a * a, den};
    }
    const std::int64_t k = j / 2;
    return {4 * k * k - 4 * k * r - 4 * k + r * r, den};
}

std::int64_t conjugate_index(std::int64_t p, std::int64_t q, std::int64_t i) { return floor_mod(q - 1 - i, p); }

// ---------------------------------------------------------------- profile

VHProfile::VHProfile(int k_min, std::vector<int> v, std::vector<int> h)
    : k_min_(k_min), v_(std::move(v)), h_(std::move(h))
{
    if (v_.size() != h_.size() || v_.empty())
        throw DInvariantError("V/H profile needs matching, non-empty value lists");
}

int VHProfile::V(int k) const
{
    if (!covers(k))
        throw DInvariantError("V_" + std::to_string(k) + " is outside the profile range [" + std::to_string(k_min()) +
                              ", " + std::to_string(k_max()) + "]");
    return v_[static_cast<std::size_t>(k - k_min_)];
}

int VHProfile::H(int k) const
{
    if (!covers(k))
        throw DInvariantError("H_" + std::to_string(k) + " is outside the profile range [" + std::to_string(k_min()) +
                              ", " + std::to_string(k_max()) + "]");
    return h_[static_cast<std::size_t>(k - k_min_)];
}

bool VHProfile::v_monotone() const
{
    for (std::size_t k = 0; k + 1 < v_.size(); ++k)
        if (v_[k + 1] > v_[k] || v_[k + 1] < v_[k] - 1)
            return false;
    return true;
}

// ----------------------------------------------------------------- oracle

TowerOracle::TowerOracle(BifilteredComplex c) : c_(std::move(c))
{
    const GradedDims h = c_.homology();
    if (total_dim(h) != 1)
        throw DInvariantError("complex homology has dimension " + std::to_string(total_dim(h)) + ", expected 1");
    for (const auto& [grading, dim] : h)
        if (dim > 0)
            z0_grading_ = grading;

    const std::size_t n = c_.size();
    EchelonBasis boundaries(n);
    for (std::size_t col = 0; col < n; ++col)
        boundaries.insert(c_.differential().column(col));
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
        if (c_.generator(k).maslov == z0_grading_)
            cols.push_back(k);
    F2Matrix restricted(n, cols.size());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (c_.differential().get(r, cols[k]))
                restricted.set(r, k);
    for (const auto& z : kernel_basis(restricted)) {
        BitVector lifted(n);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (z.get(k))
                lifted.set(cols[k]);
        if (!boundaries.contains(lifted)) {
            z0_ = std::move(lifted);
            break;
        }
    }
    if (z0_.size() == 0)
        throw DInvariantError("no generating cycle found");

    for (const auto& x : c_.generators())
        span_ = std::max({span_, std::abs(x.i), std::abs(x.j)});
}

bool TowerOracle::survives(const PlaneRegion& region, int m, int window) const
{
    const std::size_t n = c_.size();
    const int target = z0_grading_ + 2 * m;

    // Degree `target` piece: generator x at U-power -t with t = (target - gr x)/2.
    // Rows lying in the region are quotiented out.
    std::vector<long> row_of(n, -1);
    std::size_t rows = 0;
    for (std::size_t x = 0; x < n; ++x) {
        const auto& g = c_.generator(x);
        const int diff = target - g.maslov;
        if (diff % 2 != 0)
            continue;
        const int t = diff / 2;
        if (std::abs(t) > window || region(g.i + t, g.j + t))
            continue;
        row_of[x] = static_cast<long>(rows++);
    }

    BitVector gamma(rows);
    for (std::size_t x = 0; x < n; ++x)
        if (z0_.get(x) && row_of[x] >= 0)
            gamma.set(static_cast<std::size_t>(row_of[x]));
    if (gamma.none())
        return false;

    // Boundaries of the degree target+1 piece; d preserves the U-power.
    EchelonBasis image(rows);
    for (std::size_t y = 0; y < n; ++y) {
        const int diff = target + 1 - c_.generator(y).maslov;
        if (diff % 2 != 0 || std::abs(diff / 2) > window)
            continue;
        BitVector col(rows);
        for (std::size_t x = 0; x < n; ++x)
            if (c_.differential().get(x, y) && row_of[x] >= 0)
                col.set(static_cast<std::size_t>(row_of[x]));
        image.insert(std::move(col));
    }
    return !image.contains(gamma);
}

std::optional<int> TowerOracle::least_surviving(const PlaneRegion& region, int window) const
{
    // Survival is upward closed in m: U maps the quotient to itself.
    int lo = -window, hi = window;
    if (survives(region, lo, window) || !survives(region, hi, window))
        return std::nullopt;
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (survives(region, mid, window))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

int TowerOracle::stabilized(const std::function<std::optional<int>(int)>& at_window, int start) const
{
    constexpr int max_doublings = 12;
    int window = start;
    std::optional<int> prev = at_window(window);
    for (int step = 0; step < max_doublings; ++step) {
        window *= 2;
        std::optional<int> cur = at_window(window);
        if (prev && cur && *prev == *cur)
            return *cur;
        prev = cur;
    }
    throw DInvariantError("internal error: tower bottom did not stabilize up to window " + std::to_string(window));
}

int TowerOracle::tower_bottom_b() const
{
    const PlaneRegion region = [](int i, int) { return i < 0; };
    const int start = 2 * c_.top_alexander() + span_ + 2;
    return stabilized([&](int w) { return least_surviving(region, w); }, start);
}

int TowerOracle::tower_bottom_a(int k) const
{
    const PlaneRegion region = [k](int i, int j) { return i < 0 && j < k; };
    const int start = 2 * c_.top_alexander() + std::abs(k) + span_ + 2;
    return stabilized([&](int w) { return least_surviving(region, w); }, start);
}

int TowerOracle::V(int k) const
{
    const int v = tower_bottom_b() - tower_bottom_a(k);
    if (v < 0)
        throw DInvariantError("internal error: negative V_" + std::to_string(k));
    return v;
}

int vk_oracle(const BifilteredComplex& c, int k) { return TowerOracle(c).V(k); }

int hk_oracle(const BifilteredComplex& c, int k) { return TowerOracle(c.swapped()).V(-k); }

VHProfile oracle_profile(const BifilteredComplex& c, int k_min, int k_max)
{
    if (k_max < k_min)
        throw DInvariantError("empty profile range");
    const TowerOracle straight(c);
    const TowerOracle swapped(c.swapped());
    const int b_straight = straight.tower_bottom_b();
    const int b_swapped = swapped.tower_bottom_b();
    std::vector<int> v, h;
    for (int k = k_min; k <= k_max; ++k) {
        v.push_back(b_straight - straight.tower_bottom_a(k));
        h.push_back(b_swapped - swapped.tower_bottom_a(-k));
    }
    return {k_min, std::move(v), std::move(h)};
}

// -------------------------------------------------------------- shortcuts

int vk_shortcut_family(int s, int p, int k)
{
    if (p < 1)
        throw DInvariantError("family parameter must be positive");
    if (s == 2) {
        if (k >= 2 * p)
            return 0;
        if (k <= -2 * p)
            return -k;
        return p - static_cast<int>(floor_div(k, 2));
    }
    if (s == 3) {
        if (k >= 6 * p)
            return 0;
        if (k <= -6 * p)
            return -k;
        if (k >= 0)
            return 2 * p - static_cast<int>(floor_div(k, 3));
        return 2 * p - static_cast<int>(floor_div(2 * k, 3));
    }
    throw DInvariantError("family index must be 2 or 3, got " + std::to_string(s));
}

int hk_shortcut_family(int s, int p, int k) { return vk_shortcut_family(s, p, -k); }

VHProfile family_profile(int s, int p, int k_min, int k_max)
{
    if (k_max < k_min)
        throw DInvariantError("empty profile range");
    std::vector<int> v, h;
    for (int k = k_min; k <= k_max; ++k) {
        v.push_back(vk_shortcut_family(s, p, k));
        h.push_back(hk_shortcut_family(s, p, k));
    }
    return {k_min, std::move(v), std::move(h)};
}

std::vector<std::pair<int, int>> representative_points(int s, int p, int m)
{
    const KnotSpec knot = KnotSpec::family(s, p);
    const Staircase sc = staircase(knot);
    const auto corners = sc.cycles();
    const int g = knot.genus();
    std::vector<std::pair<int, int>> pts;
    for (const auto* a : corners)
        for (const auto* b : corners)
            pts.emplace_back(a->i + b->i - g + m, a->j + b->j - g + m);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool representative_criterion(int s, int p, int k, int m)
{
    for (auto [i, j] : representative_points(s, p, m))
        if (i < 0 && j < k)
            return false;
    return true;
}

// ---------------------------------------------------------------- surgery

Rational d_surgery(const SurgerySlope& slope, std::int64_t i, const VHProfile& profile)
{
    if (i < 0 || i >= slope.p)
        throw DInvariantError("spin^c index " + std::to_string(i) + " outside [0, " + std::to_string(slope.p) + ")");
    const auto kv = floor_div(i, slope.q);
    const auto kh = floor_div(i - slope.p, slope.q);
    if (!profile.covers(static_cast<int>(kv)) || !profile.covers(static_cast<int>(kh)))
        throw DInvariantError("profile [" + std::to_string(profile.k_min()) + ", " + std::to_string(profile.k_max()) +
                              "] misses V_" + std::to_string(kv) + " or H_" + std::to_string(kh));
    const int correction = std::max(profile.V(static_cast<int>(kv)), profile.H(static_cast<int>(kh)));
    return d_lens(slope.p, slope.q, i) - Rational(2 * correction);
}

}  // namespace hfconc
