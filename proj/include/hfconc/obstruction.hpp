#pragma once

// Owens-Strle sweep: for Y = Sigma_2(D_+(T(s,sp+1), m(m+1))) with
// |H^2(Y)| = (2m+1)^2, a rational ball filling forces d(Y, i_0 + l(2m+1)) = 0
// for |l| <= m, where i_0 = 2m(m+1)+1 is the canonical structure.

#include "hfconc/dinvariants.hpp"
#include "hfconc/rational.hpp"

#include <cstdint>
#include <tuple>
#include <vector>

namespace hfconc {

struct ObstructionEntry {
    int l = 0;
    std::int64_t spin_index = 0;
    Rational d;
};

/// Entries cover l = 0..m; negative l give the same values by conjugation.
struct ObstructionReport {
    int s = 0;
    int p = 0;
    int m = 0;
    std::int64_t n = 0;
    std::vector<ObstructionEntry> entries;
    bool pass = false;

    std::vector<ObstructionEntry> failures() const;
};

using FamilyTuple = std::tuple<int, int, int>;  // (s, p, m)

/// Piecewise evaluation with l = 2 l1 - 1 or 2 l1:
/// 2 l1 (l1 - 1) - 2 V_{m(m+1-l) - l1 + 1}, resp. 2 l1^2 - 2 V_{m(m+1-l) - l1},
/// using the closed-form V of the family tensor square.
ObstructionReport obstruct(int s, int p, int m);

/// Recomputes d(Y, i_0 + l(2m+1)) from the L((2m+1)^2, 2) closed form and
/// max{V_{floor(i/2)}, H_{floor((i-P)/2)}} read from `profile`.
Rational obstruction_cross_check(int m, int l, const VHProfile& profile);

/// Reports for every (s, p, m) with s in `s_values`, 1 <= p <= p_max and
/// 1 <= m <= m_max, sorted lexicographically. Work fans out over `jobs`
/// threads.
std::vector<ObstructionReport> sweep_reports(const std::vector<int>& s_values, int p_max, int m_max, int jobs = 1);

/// The passing tuples of sweep_reports.
std::vector<FamilyTuple> sweep(const std::vector<int>& s_values, int p_max, int m_max, int jobs = 1);

}  // namespace hfconc
