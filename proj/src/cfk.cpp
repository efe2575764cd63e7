#include "hfconc/cfk.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hfconc {

// ---------------------------------------------------------------- KnotSpec

KnotSpec KnotSpec::unknot() { return {Kind::Unknot, 1, 1}; }

KnotSpec KnotSpec::torus(int p, int q)
{
    if (p < 2 || q < 2)
        throw CfkError("torus knot parameters must be at least 2, got T(" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
    if (std::gcd(p, q) != 1)
        throw CfkError("torus knot parameters must be coprime, got T(" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
    return {Kind::Torus, p, q};
}

KnotSpec KnotSpec::family(int s, int p)
{
    if (s != 2 && s != 3)
        throw CfkError("family index must be 2 or 3, got " + std::to_string(s));
    if (p < 1)
        throw CfkError("family parameter must be positive, got " + std::to_string(p));
    return {Kind::Family, s, p};
}

std::pair<int, int> KnotSpec::torus_params() const
{
    switch (kind_) {
    case Kind::Unknot:
        return {1, 1};
    case Kind::Torus:
        return {a_, b_};
    case Kind::Family:
        return {a_, a_ * b_ + 1};
    }
    return {1, 1};
}

std::optional<std::pair<int, int>> KnotSpec::family_params() const
{
    if (kind_ == Kind::Family)
        return std::make_pair(a_, b_);
    if (kind_ == Kind::Torus) {
        for (auto [s, t] : {std::pair{a_, b_}, std::pair{b_, a_}})
            if ((s == 2 || s == 3) && t > s && (t - 1) % s == 0)
                return std::make_pair(s, (t - 1) / s);
    }
    return std::nullopt;
}

int KnotSpec::genus() const
{
    auto [p, q] = torus_params();
    return (p - 1) * (q - 1) / 2;
}

std::string KnotSpec::name() const
{
    auto [p, q] = torus_params();
    switch (kind_) {
    case Kind::Unknot:
        return "unknot";
    case Kind::Torus:
        return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Kind::Family:
        return "fam" + std::to_string(a_) + ":" + std::to_string(b_);
    }
    return {};
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms)
{
    for (const auto& [e, c] : terms)
        add(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff)
{
    LaurentPoly p;
    p.add(exponent, coeff);
    return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exponent, std::int64_t c)
{
    if (c == 0)
        return;
    auto& slot = terms_[exponent];
    slot += c;
    if (slot == 0)
        terms_.erase(exponent);
}

int LaurentPoly::top_degree() const
{
    if (terms_.empty())
        throw CfkError("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::bottom_degree() const
{
    if (terms_.empty())
        throw CfkError("degree of the zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::eval_at_one() const
{
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

bool LaurentPoly::is_symmetric() const
{
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c)
            return false;
    return true;
}

LaurentPoly LaurentPoly::shifted(int by) const
{
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e + by, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const
{
    if (divisor.is_zero())
        throw CfkError("division by the zero polynomial");
    const int lead_e = divisor.top_degree();
    const std::int64_t lead_c = divisor.coeff(lead_e);
    if (is_zero())
        return {};
    // Quotient exponents are bounded below by the difference of bottom degrees.
    const int lowest = bottom_degree() - divisor.bottom_degree();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const int e = rem.top_degree() - lead_e;
        const std::int64_t c = rem.coeff(rem.top_degree());
        if (e < lowest || c % lead_c != 0)
            break;
        LaurentPoly term = LaurentPoly::monomial(e, c / lead_c);
        quot += term;
        rem -= term * divisor;
    }
    if (!rem.is_zero())
        throw CfkError("polynomial " + divisor.to_string() + " does not divide " + to_string());
    return quot;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0)
            os << mag;
        if (e != 0) {
            os << "t";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

// --------------------------------------------------------------- Alexander

LaurentPoly alexander(const KnotSpec& knot)
{
    if (knot.kind() == KnotSpec::Kind::Unknot)
        return LaurentPoly::monomial(0);
    auto [p, q] = knot.torus_params();
    const LaurentPoly one = LaurentPoly::monomial(0);
    auto t_pow_minus_one = [&](int e) { return LaurentPoly::monomial(e) - one; };
    const LaurentPoly num = t_pow_minus_one(p * q) * t_pow_minus_one(1);
    const LaurentPoly den = t_pow_minus_one(p) * t_pow_minus_one(q);
    return num.divided_by(den).shifted(-knot.genus());
}

LaurentPoly whitehead_alexander(std::int64_t n)
{
    LaurentPoly p;
    p.add(1, -n);
    p.add(0, 2 * n + 1);
    p.add(-1, -n);
    return p;
}

// ------------------------------------------------------- BifilteredComplex

BifilteredComplex::BifilteredComplex(std::vector<FilteredGenerator> generators, F2Matrix differential)
    : generators_(std::move(generators)), differential_(std::move(differential))
{
    const std::size_t n = generators_.size();
    if (differential_.rows() != n || differential_.cols() != n)
        throw CfkError("differential is not square of the generator count");
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
            if (!differential_.get(t, s))
                continue;
            const auto& src = generators_[s];
            const auto& tgt = generators_[t];
            if (tgt.i > src.i || tgt.j > src.j)
                throw CfkError("differential edge " + std::to_string(s) + " -> " + std::to_string(t) +
                               " increases a filtration level");
            if (tgt.maslov != src.maslov - 1)
                throw CfkError("differential edge " + std::to_string(s) + " -> " + std::to_string(t) +
                               " does not lower the Maslov grading by one");
        }
    }
    if (!(differential_ * differential_).is_zero())
        throw CfkError("differential does not square to zero");
}

std::vector<int> BifilteredComplex::gradings() const
{
    std::vector<int> g;
    g.reserve(generators_.size());
    for (const auto& x : generators_)
        g.push_back(x.maslov);
    return g;
}

GradedDims BifilteredComplex::homology() const { return homology_dims(differential_, gradings()); }

BifilteredComplex BifilteredComplex::swapped() const
{
    BifilteredComplex out = *this;
    for (auto& x : out.generators_)
        std::swap(x.i, x.j);
    return out;
}

BifilteredComplex BifilteredComplex::translated(int t) const
{
    BifilteredComplex out = *this;
    for (auto& x : out.generators_) {
        x.i += t;
        x.j += t;
        x.maslov += 2 * t;
    }
    return out;
}

BifilteredComplex BifilteredComplex::dual() const
{
    std::vector<FilteredGenerator> gens;
    gens.reserve(generators_.size());
    for (const auto& x : generators_)
        gens.push_back({-x.i, -x.j, -x.maslov});
    return {std::move(gens), differential_.transpose()};
}

bool BifilteredComplex::is_swap_symmetric() const
{
    std::vector<std::pair<int, int>> pos, swp;
    for (const auto& x : generators_) {
        pos.emplace_back(x.i, x.j);
        swp.emplace_back(x.j, x.i);
    }
    std::sort(pos.begin(), pos.end());
    std::sort(swp.begin(), swp.end());
    return pos == swp;
}

int BifilteredComplex::top_alexander() const
{
    int top = 0;
    bool first = true;
    for (const auto& x : generators_) {
        if (first || x.j - x.i > top)
            top = x.j - x.i;
        first = false;
    }
    return top;
}

// --------------------------------------------------------------- Staircase

std::vector<const StaircaseGenerator*> Staircase::cycles() const
{
    std::vector<const StaircaseGenerator*> out;
    for (const auto& g : generators)
        if (g.role == StaircaseRole::Cycle)
            out.push_back(&g);
    return out;
}

BifilteredComplex Staircase::complex() const
{
    std::vector<FilteredGenerator> gens;
    for (const auto& g : generators)
        gens.push_back({g.i, g.j, g.maslov});
    F2Matrix d(gens.size(), gens.size());
    for (auto [src, tgt] : edges)
        d.set(static_cast<std::size_t>(tgt), static_cast<std::size_t>(src));
    return {std::move(gens), std::move(d)};
}

Staircase staircase_from_alexander(const LaurentPoly& delta)
{
    if (delta.is_zero() || !delta.is_symmetric())
        throw CfkError("Alexander polynomial " + delta.to_string() + " is not symmetric");
    // Exponents from the top down; coefficients must read +1, -1, +1, ...
    std::vector<int> exps;
    std::int64_t expected = 1;
    for (auto it = delta.terms().rbegin(); it != delta.terms().rend(); ++it) {
        if (it->second != expected)
            throw CfkError("Alexander polynomial " + delta.to_string() +
                           " does not have alternating +-1 coefficients; not an L-space knot");
        expected = -expected;
        exps.push_back(it->first);
    }
    if (exps.size() % 2 == 0)
        throw CfkError("Alexander polynomial " + delta.to_string() + " has an even number of terms");

    const int g = exps.front();
    Staircase sc;
    int i = 0, j = g;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (k > 0) {
            const int gap = exps[k - 1] - exps[k];
            if (k % 2 == 1)
                i += gap;  // to the source on the right
            else
                j -= gap;  // down to the next corner
        }
        const bool cycle = k % 2 == 0;
        sc.generators.push_back({static_cast<int>(k), i, j, cycle ? 0 : 1,
                                 cycle ? StaircaseRole::Cycle : StaircaseRole::Source});
        if (!cycle) {
            sc.edges.emplace_back(static_cast<int>(k), static_cast<int>(k - 1));
            sc.edges.emplace_back(static_cast<int>(k), static_cast<int>(k + 1));
        }
    }
    return sc;
}

Staircase staircase(const KnotSpec& knot) { return staircase_from_alexander(alexander(knot)); }

BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b)
{
    const std::size_t na = a.size(), nb = b.size();
    std::vector<FilteredGenerator> gens;
    gens.reserve(na * nb);
    for (const auto& x : a.generators())
        for (const auto& y : b.generators())
            gens.push_back({x.i + y.i, x.j + y.j, x.maslov + y.maslov});
    F2Matrix d(na * nb, na * nb);
    for (std::size_t xa = 0; xa < na; ++xa) {
        for (std::size_t yb = 0; yb < nb; ++yb) {
            const std::size_t src = xa * nb + yb;
            for (std::size_t ta = 0; ta < na; ++ta)
                if (a.differential().get(ta, xa))
                    d.flip(ta * nb + yb, src);
            for (std::size_t tb = 0; tb < nb; ++tb)
                if (b.differential().get(tb, yb))
                    d.flip(xa * nb + tb, src);
        }
    }
    return {std::move(gens), std::move(d)};
}

// ------------------------------------------------------------ hat complex

HatComplex hat_complex(const BifilteredComplex& c)
{
    HatComplex hat;
    const std::size_t n = c.size();
    for (const auto& x : c.generators()) {
        // U^{i} x sits at (0, j - i).
        hat.alexander.push_back(x.j - x.i);
        hat.maslov.push_back(x.maslov - 2 * x.i);
    }
    hat.differential = F2Matrix(n, n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s)
            if (c.differential().get(t, s) && c.generator(t).i == c.generator(s).i)
                hat.differential.set(t, s);
    return hat;
}

std::vector<std::size_t> HatComplex::sublevel(int level) const
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < alexander.size(); ++k)
        if (alexander[k] <= level)
            idx.push_back(k);
    return idx;
}

namespace {

F2Matrix restrict_square(const F2Matrix& m, const std::vector<std::size_t>& idx)
{
    F2Matrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            if (m.get(idx[r], idx[c]))
                out.set(r, c);
    return out;
}

}  // namespace

GradedDims HatComplex::sublevel_homology(int level) const
{
    const auto idx = sublevel(level);
    std::vector<int> g;
    for (auto k : idx)
        g.push_back(maslov[k]);
    return homology_dims(restrict_square(differential, idx), g);
}

bool HatComplex::sublevel_hits_homology(int level) const
{
    // Some cycle supported in F(level) must survive modulo the boundaries of
    // the whole hat complex.
    const auto idx = sublevel(level);
    const F2Matrix sub = restrict_square(differential, idx);
    EchelonBasis boundaries(alexander.size());
    for (std::size_t c = 0; c < differential.cols(); ++c)
        boundaries.insert(differential.column(c));
    for (const auto& z : kernel_basis(sub)) {
        BitVector lifted(alexander.size());
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (z.get(k))
                lifted.set(idx[k]);
        if (!boundaries.contains(lifted))
            return true;
    }
    return false;
}

GradedDims filtration_homology(const KnotSpec& knot, int level)
{
    return hat_complex(staircase(knot).complex()).sublevel_homology(level);
}

bool epsilon_nontrivial(const KnotSpec& knot, int level)
{
    return hat_complex(staircase(knot).complex()).sublevel_hits_homology(level);
}

GradedDims reduced_filtration_homology(const KnotSpec& knot, int level)
{
    const HatComplex hat = hat_complex(staircase(knot).complex());
    GradedDims dims = hat.sublevel_homology(level);
    if (hat.sublevel_hits_homology(level)) {
        auto it = dims.find(0);
        if (it == dims.end())
            throw CfkError("epsilon_" + std::to_string(level) + " is nonzero but H(F(" + knot.name() + "," +
                           std::to_string(level) + ")) has nothing in grading 0");
        add_dims(dims, 0, -1);
    }
    return dims;
}

int euler_characteristic(const GradedDims& dims)
{
    int chi = 0;
    for (const auto& [g, d] : dims)
        chi += (g % 2 == 0) ? d : -d;
    return chi;
}

int tau(const KnotSpec& knot)
{
    const int g = knot.genus();
    int sum = 0;
    for (int i = -g; i <= g; ++i)
        sum += euler_characteristic(reduced_filtration_homology(knot, i));
    return sum;
}

}  // namespace hfconc
