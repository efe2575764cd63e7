#include "doctest.h"

#include "hfconc/dinvariants.hpp"
#include "oracles.hpp"

#include <numeric>

using namespace hfconc;

namespace {

BifilteredComplex square_of(const KnotSpec& knot)
{
    const BifilteredComplex c = staircase(knot).complex();
    return tensor(c, c);
}

int k_reach(int s, int p) { return (s == 2 ? 2 * p : 6 * p) + 2; }

}  // namespace

TEST_CASE("floor division")
{
    CHECK(floor_div(-1, 2) == -1);
    CHECK(floor_div(-4, 2) == -2);
    CHECK(floor_div(5, 2) == 2);
    CHECK(floor_mod(-1, 5) == 4);
    CHECK(floor_mod(10, 5) == 0);
}

TEST_CASE("surgery slopes")
{
    CHECK(SurgerySlope(9, 2).canonical_index() == 5);
    CHECK(SurgerySlope(49, 2).canonical_index() == 25);
    CHECK(SurgerySlope(1, 2).canonical_index() == 0);
    CHECK_THROWS_AS(SurgerySlope(4, 2), DInvariantError);
    CHECK_THROWS_AS(SurgerySlope(0, 1), DInvariantError);
    CHECK_THROWS_AS(SurgerySlope(5, 1).canonical_index(), DInvariantError);
}

TEST_CASE("lens space d-invariants")
{
    CHECK(d_lens(1, 1, 0) == Rational(0));
    CHECK(d_lens(49, 2, 25) == Rational(0));
    CHECK(d_lens(2, 1, 0) == Rational(1, 4));
    CHECK(d_lens(2, 1, 1) == Rational(-1, 4));
    CHECK(d_lens(5, 2, 7) == d_lens(5, 2, 2));
    for (int j = 0; j < 5; ++j)
        CHECK(d_lens(5, 2, j) == d_lens_2r1_2(2, j));
    CHECK_THROWS_AS(d_lens(4, 2, 0), DInvariantError);
    CHECK_THROWS_AS(d_lens(0, 1, 0), DInvariantError);
}

TEST_CASE("lens closed form examples")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(d_lens_2r1_2(2 * n, 2 * n + 1) == Rational(0));
    // m = 2: P = 25, i_0 = 13, l = 2 gives j = 23 and the value 2 l_1^2 = 2.
    CHECK(d_lens_2r1_2(12, 23) == Rational(2));
    CHECK(d_lens_2r1_2(2, 3) == Rational(0));
    CHECK_THROWS_AS(d_lens_2r1_2(2, 5), DInvariantError);
    CHECK_THROWS_AS(d_lens_2r1_2(0, 0), DInvariantError);
}

TEST_CASE("property: lens recursion matches the L(2r+1,2) closed form")
{
    for (int r = 1; r <= 30; ++r)
        for (int j = 0; j < 2 * r + 1; ++j)
            CHECK(d_lens(2 * r + 1, 2, j) == d_lens_2r1_2(r, j));
}

TEST_CASE("property: lens conjugation symmetry")
{
    for (int p = 1; p <= 60; ++p)
        for (int q = 1; q <= p; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            for (int i = 0; i < p; ++i)
                REQUIRE(d_lens(p, q, i) == d_lens(p, q, conjugate_index(p, q, i)));
        }
}

TEST_CASE("property: L(p,1) against the explicit formula")
{
    for (int p = 1; p <= 40; ++p)
        for (int i = 0; i < p; ++i)
            CHECK(d_lens(p, 1, i) == Rational((2 * i - p) * (2 * i - p) - p, 4 * p));
}

TEST_CASE("oracle examples on the trefoil square")
{
    const BifilteredComplex sq = square_of(KnotSpec::torus(2, 3));
    CHECK(vk_oracle(sq, 0) == 1);
    CHECK(vk_oracle(sq, 2) == 0);
    CHECK(vk_oracle(sq, -2) == 2);
    CHECK(hk_oracle(sq, 0) == 1);
    CHECK(hk_oracle(sq, -2) == 0);
    CHECK(hk_oracle(sq, 1) == 2);

    const VHProfile prof = oracle_profile(sq, -3, 3);
    const std::vector<int> v{3, 2, 2, 1, 1, 0, 0};
    for (int k = -3; k <= 3; ++k)
        CHECK(prof.V(k) == v[static_cast<std::size_t>(k + 3)]);
}

TEST_CASE("oracle rejects complexes without one-dimensional homology")
{
    const BifilteredComplex two({{0, 0, 0}, {1, 1, 2}}, F2Matrix(2, 2));
    CHECK_THROWS_AS(TowerOracle{two}, DInvariantError);
}

TEST_CASE("oracle on the unknot and on mirrors")
{
    const BifilteredComplex u = staircase(KnotSpec::unknot()).complex();
    for (int k = -3; k <= 3; ++k)
        CHECK(vk_oracle(u, k) == std::max(-k, 0));
    // The mirror of an L-space knot has V_k = max(-k, 0) as well.
    const BifilteredComplex m = staircase(KnotSpec::torus(2, 5)).complex().dual();
    for (int k = -4; k <= 4; ++k)
        CHECK(vk_oracle(m, k) == std::max(-k, 0));
}

TEST_CASE("shortcut examples")
{
    CHECK(vk_shortcut_family(2, 3, 4) == 1);
    CHECK(vk_shortcut_family(3, 2, 0) == 4);
    CHECK(vk_shortcut_family(2, 1, 2) == 0);
    CHECK(hk_shortcut_family(2, 1, 1) == 2);
    CHECK_THROWS_AS(vk_shortcut_family(4, 1, 0), DInvariantError);
    CHECK_THROWS_AS(vk_shortcut_family(2, 0, 0), DInvariantError);
}

TEST_CASE("property: oracle equals the family closed forms")
{
    for (int s : {2, 3})
        for (int p = 1; p <= 3; ++p) {
            const int reach = k_reach(s, p);
            const VHProfile prof = oracle_profile(square_of(KnotSpec::family(s, p)), -reach, reach);
            for (int k = -reach; k <= reach; ++k) {
                CAPTURE(s);
                CAPTURE(p);
                CAPTURE(k);
                CHECK(prof.V(k) == vk_shortcut_family(s, p, k));
                CHECK(prof.H(k) == hk_shortcut_family(s, p, k));
            }
        }
}

TEST_CASE("property: oracle equals the torsion-coefficient convolution")
{
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs{
        {{2, 3}, {2, 3}}, {{2, 5}, {3, 4}}, {{3, 5}, {3, 5}}, {{2, 3}, {4, 5}}, {{2, 7}, {3, 4}}};
    for (auto [a, b] : pairs) {
        const BifilteredComplex ca = staircase(KnotSpec::torus(a.first, a.second)).complex();
        const BifilteredComplex cb = staircase(KnotSpec::torus(b.first, b.second)).complex();
        const auto da = oracle::torus_alexander(a.first, a.second);
        const auto db = oracle::torus_alexander(b.first, b.second);
        const int reach = da.rbegin()->first + db.rbegin()->first + 2;
        const VHProfile prof = oracle_profile(tensor(ca, cb), -reach, reach);
        for (int k = -reach; k <= reach; ++k) {
            CAPTURE(k);
            CHECK(prof.V(k) == oracle::v_sum(da, db, k));
        }
        // Single knots too.
        for (int k = -4; k <= 4; ++k)
            CHECK(vk_oracle(ca, k) == oracle::v_single(da, k));
    }
}

TEST_CASE("property: V monotonicity, H symmetry and vanishing at 2 tau")
{
    for (int s : {2, 3})
        for (int p = 1; p <= 3; ++p) {
            const KnotSpec knot = KnotSpec::family(s, p);
            const BifilteredComplex sq = square_of(knot);
            const int reach = k_reach(s, p);
            const VHProfile prof = oracle_profile(sq, -reach, reach);
            CHECK(prof.v_monotone());
            for (int k = -reach; k <= reach; ++k)
                CHECK(prof.H(k) == prof.V(-k));
            CHECK(prof.V(2 * tau(knot)) == 0);
            CHECK(prof.V(2 * tau(knot) - 1) == 1);
        }
    CHECK_FALSE(VHProfile(0, {2, 0}, {0, 0}).v_monotone());
    CHECK_FALSE(VHProfile(0, {1, 2}, {0, 0}).v_monotone());
}

TEST_CASE("representative criterion examples")
{
    const auto pts = representative_points(2, 1, 0);
    CHECK(pts == std::vector<std::pair<int, int>>{{-1, 1}, {0, 0}, {1, -1}});
    CHECK(representative_criterion(2, 1, 0, 0));
    CHECK_FALSE(representative_criterion(2, 1, 2, 0));
    CHECK(representative_criterion(3, 2, 10, 100));
}

TEST_CASE("property: representative criterion reproduces oracle survival")
{
    // Moving the square by (-g, -g) puts the corner sums on i + j = 0, so
    // the oracle's gamma_m and the criterion's shift m coincide.
    for (int s : {2, 3})
        for (int p = 1; p <= 3; ++p) {
            const KnotSpec knot = KnotSpec::family(s, p);
            const int g = knot.genus();
            const TowerOracle oracle(square_of(knot).translated(-g));
            const int reach = k_reach(s, p);
            for (int k = -reach; k <= reach; ++k) {
                const PlaneRegion fk = [k](int i, int j) { return i < 0 && j < k; };
                for (int m = -2 * g - 2; m <= 2 * g + 2; ++m) {
                    const int window = 4 * g + std::abs(k) + std::abs(m) + 8;
                    CAPTURE(s);
                    CAPTURE(p);
                    CAPTURE(k);
                    CAPTURE(m);
                    CHECK(oracle.survives(fk, m, window) == representative_criterion(s, p, k, m));
                }
            }
        }
}

TEST_CASE("surgery formula")
{
    const VHProfile tref = oracle_profile(square_of(KnotSpec::torus(2, 3)), -3, 3);
    CHECK(d_surgery(SurgerySlope(9, 2), 5, tref) == d_lens(9, 2, 5));

    const VHProfile t27 = family_profile(2, 3, -13, 13);
    CHECK(d_surgery(SurgerySlope(49, 2), 25, t27) == Rational(0));

    const VHProfile unknot = oracle_profile(staircase(KnotSpec::unknot()).complex(), -1, 0);
    CHECK(d_surgery(SurgerySlope(1, 1), 0, unknot) == Rational(0));

    CHECK_THROWS_AS(d_surgery(SurgerySlope(9, 2), 5, VHProfile(0, {0}, {0})), DInvariantError);
    CHECK_THROWS_AS(d_surgery(SurgerySlope(9, 2), 9, tref), DInvariantError);
    CHECK_THROWS_AS(tref.V(4), DInvariantError);
}
