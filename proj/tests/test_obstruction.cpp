#include "doctest.h"

#include "hfconc/obstruction.hpp"
#include "hfconc/whitehead.hpp"

#include <algorithm>

using namespace hfconc;

namespace {

const std::vector<FamilyTuple> passing_tuples{{2, 1, 2}, {2, 3, 3}, {3, 1, 3}, {3, 2, 4}};

}  // namespace

TEST_CASE("obstruct examples")
{
    const ObstructionReport pass = obstruct(2, 1, 2);
    CHECK(pass.pass);
    CHECK(pass.n == 6);
    CHECK(pass.entries.size() == 3);
    CHECK(pass.failures().empty());

    const ObstructionReport fail = obstruct(2, 1, 1);
    CHECK_FALSE(fail.pass);
    const auto witnesses = fail.failures();
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses[0].l == 1);
    CHECK(witnesses[0].d == Rational(-2));

    const ObstructionReport t37 = obstruct(3, 2, 4);
    CHECK(t37.pass);
    CHECK(t37.n == 20);

    CHECK_THROWS_AS(obstruct(2, 1, 0), DInvariantError);
}

TEST_CASE("spin indices run over the coset")
{
    const ObstructionReport r = obstruct(3, 1, 3);
    for (const auto& e : r.entries)
        CHECK(e.spin_index == 2 * 3 * 4 + 1 + e.l * 7);
}

TEST_CASE("sweep examples")
{
    CHECK(sweep({2, 3}, 6, 8) == passing_tuples);
    CHECK(sweep({2}, 1, 1).empty());
    CHECK(sweep({2, 3}, 6, 0).empty());
    CHECK(sweep({3, 2, 3}, 6, 8) == passing_tuples);
    CHECK_THROWS_AS(sweep({4}, 1, 1), DInvariantError);
}

TEST_CASE("sweep is independent of the worker count")
{
    const auto serial = sweep_reports({2, 3}, 6, 8, 1);
    const auto parallel = sweep_reports({2, 3}, 6, 8, 5);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].s == parallel[k].s);
        CHECK(serial[k].p == parallel[k].p);
        CHECK(serial[k].m == parallel[k].m);
        REQUIRE(serial[k].entries.size() == parallel[k].entries.size());
        for (std::size_t e = 0; e < serial[k].entries.size(); ++e)
            CHECK(serial[k].entries[e].d == parallel[k].entries[e].d);
    }
}

TEST_CASE("property: no new passes up to p = 10, m = 12")
{
    CHECK(sweep({2, 3}, 10, 12, 4) == passing_tuples);
}

TEST_CASE("property: piecewise values equal the lens plus oracle cross-check")
{
    for (int s : {2, 3})
        for (int p = 1; p <= 3; ++p) {
            const BifilteredComplex c = staircase(KnotSpec::family(s, p)).complex();
            const BifilteredComplex sq = tensor(c, c);
            const int reach = 42;  // floor(i/2) and floor((i - P)/2) for m <= 4
            const VHProfile prof = oracle_profile(sq, -reach, reach);
            for (int m = 1; m <= 4; ++m) {
                const ObstructionReport r = obstruct(s, p, m);
                for (const auto& e : r.entries) {
                    CAPTURE(s);
                    CAPTURE(p);
                    CAPTURE(m);
                    CAPTURE(e.l);
                    CHECK(e.d == obstruction_cross_check(m, e.l, prof));
                }
            }
        }
}

TEST_CASE("property: the l = 0 entry is half of delta")
{
    for (int s : {2, 3})
        for (int p = 1; p <= 6; ++p)
            for (int m = 1; m <= 8; ++m) {
                const ObstructionReport r = obstruct(s, p, m);
                CHECK(r.entries[0].d == Rational(-2 * vk_shortcut_family(s, p, m * (m + 1))));
                CHECK(r.entries[0].d * 2 == Rational(delta_whitehead(s, p, r.n)));
                if (r.pass)
                    CHECK(fox_milnor_twist(r.n) == m);
            }
}
