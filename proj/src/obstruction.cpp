#include "hfconc/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace hfconc {

std::vector<ObstructionEntry> ObstructionReport::failures() const
{
    std::vector<ObstructionEntry> out;
    for (const auto& e : entries)
        if (e.d.numerator() != 0)
            out.push_back(e);
    return out;
}

ObstructionReport obstruct(int s, int p, int m)
{
    if (m < 1)
        throw DInvariantError("obstruct needs m >= 1, got " + std::to_string(m));
    ObstructionReport report;
    report.s = s;
    report.p = p;
    report.m = m;
    report.n = static_cast<std::int64_t>(m) * (m + 1);
    const std::int64_t i0 = 2 * report.n + 1;
    report.pass = true;
    for (int l = 0; l <= m; ++l) {
        const int l1 = (l + 1) / 2;
        std::int64_t lens = 0;
        std::int64_t index = 0;
        if (l % 2 == 1) {
            lens = 2 * l1 * (l1 - 1);
            index = static_cast<std::int64_t>(m) * (m + 1 - l) - l1 + 1;
        } else {
            lens = 2 * l1 * l1;
            index = static_cast<std::int64_t>(m) * (m + 1 - l) - l1;
        }
        const Rational d = Rational(lens - 2 * vk_shortcut_family(s, p, static_cast<int>(index)));
        report.entries.push_back({l, i0 + static_cast<std::int64_t>(l) * (2 * m + 1), d});
        if (d.numerator() != 0)
            report.pass = false;
    }
    return report;
}

Rational obstruction_cross_check(int m, int l, const VHProfile& profile)
{
    const std::int64_t order = static_cast<std::int64_t>(2 * m + 1) * (2 * m + 1);
    const std::int64_t i = 2 * static_cast<std::int64_t>(m) * (m + 1) + 1 + static_cast<std::int64_t>(l) * (2 * m + 1);
    const Rational lens = d_lens_2r1_2((order - 1) / 2, floor_mod(i, order));
    const int v = profile.V(static_cast<int>(floor_div(i, 2)));
    const int h = profile.H(static_cast<int>(floor_div(i - order, 2)));
    return lens - Rational(2 * std::max(v, h));
}

std::vector<ObstructionReport> sweep_reports(const std::vector<int>& s_values, int p_max, int m_max, int jobs)
{
    for (int s : s_values)
        if (s != 2 && s != 3)
            throw DInvariantError("family index must be 2 or 3, got " + std::to_string(s));
    std::vector<FamilyTuple> work;
    for (int s : s_values)
        for (int p = 1; p <= p_max; ++p)
            for (int m = 1; m <= m_max; ++m)
                work.emplace_back(s, p, m);
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    std::vector<ObstructionReport> reports(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < work.size(); k = next++) {
            const auto [s, p, m] = work[k];
            reports[k] = obstruct(s, p, m);
        }
    };
    const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
    if (threads == 1 || work.size() < 2) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(threads, work.size()); ++t)
            pool.emplace_back(worker);
    }
    return reports;
}

std::vector<FamilyTuple> sweep(const std::vector<int>& s_values, int p_max, int m_max, int jobs)
{
    std::vector<FamilyTuple> out;
    for (const auto& r : sweep_reports(s_values, p_max, m_max, jobs))
        if (r.pass)
            out.emplace_back(r.s, r.p, r.m);
    return out;
}

}  // namespace hfconc
