#pragma once

// Knot Floer complexes of L-space knots: staircases, their tensor products,
// and the Alexander filtration on the hat complex.

#include "hfconc/f2linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfconc {

class CfkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The unknot, a torus knot T(p,q), or one of the two families
/// T(2,2p+1) and T(3,3p+1).
class KnotSpec {
public:
    enum class Kind { Unknot, Torus, Family };

    static KnotSpec unknot();
    /// p, q >= 2 and coprime.
    static KnotSpec torus(int p, int q);
    /// s in {2,3}, p >= 1: T(s, s*p+1).
    static KnotSpec family(int s, int p);

    Kind kind() const { return kind_; }
    /// Torus parameters (p,q); (1,1) for the unknot.
    std::pair<int, int> torus_params() const;
    /// (s,p) when the knot is T(2,2p+1) or T(3,3p+1), in either presentation.
    std::optional<std::pair<int, int>> family_params() const;
    /// Seifert genus, (p-1)(q-1)/2.
    int genus() const;
    std::string name() const;

    bool operator==(const KnotSpec&) const = default;

private:
    KnotSpec(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
    Kind kind_;
    int a_;
    int b_;
};

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms);

    static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);

    std::int64_t coeff(int exponent) const;
    void add(int exponent, std::int64_t coeff);
    const std::map<int, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int top_degree() const;
    int bottom_degree() const;
    std::int64_t eval_at_one() const;
    bool is_symmetric() const;
    LaurentPoly shifted(int by) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

    /// Exact division; throws CfkError if `divisor` does not divide *this.
    LaurentPoly divided_by(const LaurentPoly& divisor) const;

    std::string to_string() const;

private:
    std::map<int, std::int64_t> terms_;
};

/// Symmetrized Alexander polynomial, Delta(1) = 1.
LaurentPoly alexander(const KnotSpec& knot);

/// -n t + (2n+1) - n t^{-1}, the Alexander polynomial of D_+(K, n).
LaurentPoly whitehead_alexander(std::int64_t n);

/// A generator of a finite bifiltered model; the full complex is this model
/// tensored with F[U, U^{-1}], U acting by (i,j) -> (i-1,j-1), maslov -2.
struct FilteredGenerator {
    int i = 0;
    int j = 0;
    int maslov = 0;

    bool operator==(const FilteredGenerator&) const = default;
};

/// Finite bifiltered complex over F_2. differential(target, source) is 1 when
/// source -> target; every such edge satisfies target.i <= source.i,
/// target.j <= source.j and target.maslov == source.maslov - 1.
class BifilteredComplex {
public:
    BifilteredComplex() = default;
    /// Validates the filtration, grading and d^2 = 0 conditions.
    BifilteredComplex(std::vector<FilteredGenerator> generators, F2Matrix differential);

    std::size_t size() const { return generators_.size(); }
    const std::vector<FilteredGenerator>& generators() const { return generators_; }
    const FilteredGenerator& generator(std::size_t k) const { return generators_[k]; }
    const F2Matrix& differential() const { return differential_; }
    std::vector<int> gradings() const;

    /// Homology of the finite model, ignoring the filtration.
    GradedDims homology() const;

    /// Coordinates exchanged, (i,j) -> (j,i).
    BifilteredComplex swapped() const;
    /// Every generator moved by (t,t) with maslov +2t, i.e. multiplied by U^{-t}.
    BifilteredComplex translated(int t) const;
    /// Dual complex: coordinates and gradings negated, differential
    /// transposed. Models CFK^infinity of the mirror knot.
    BifilteredComplex dual() const;

    /// True iff the multiset of positions is invariant under (i,j) -> (j,i).
    bool is_swap_symmetric() const;
    /// max(j - i) over generators: the top Alexander grading.
    int top_alexander() const;

private:
    std::vector<FilteredGenerator> generators_;
    F2Matrix differential_;
};

enum class StaircaseRole { Cycle, Source };

struct StaircaseGenerator {
    int id = 0;
    int i = 0;
    int j = 0;
    int maslov = 0;
    StaircaseRole role = StaircaseRole::Cycle;
};

/// Staircase model of CFK^infinity of an L-space knot. Generators run from
/// (0, g) to (g, 0); cycles sit at the corners with maslov 0 and each source
/// has maslov 1 and maps to the cycles on its left and below.
struct Staircase {
    std::vector<StaircaseGenerator> generators;
    std::vector<std::pair<int, int>> edges;  // (source id, target id)

    std::size_t size() const { return generators.size(); }
    std::vector<const StaircaseGenerator*> cycles() const;
    BifilteredComplex complex() const;
};

/// Throws CfkError if the coefficients do not alternate +1, -1, ..., +1
/// (the Alexander polynomial of an L-space knot) or are not symmetric.
Staircase staircase_from_alexander(const LaurentPoly& delta);
Staircase staircase(const KnotSpec& knot);

/// Tensor product with the Leibniz differential; generator (a, b) has index
/// a * B.size() + b.
BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b);

/// The hat complex C{i = 0} with its Alexander filtration j.
struct HatComplex {
    std::vector<int> alexander;
    std::vector<int> maslov;
    F2Matrix differential;

    /// Index set of the sublevel filtration F(i) = {alexander <= i}.
    std::vector<std::size_t> sublevel(int level) const;
    GradedDims sublevel_homology(int level) const;
    /// Whether F(level) -> hat complex is nonzero on homology.
    bool sublevel_hits_homology(int level) const;
};

HatComplex hat_complex(const BifilteredComplex& c);

/// H_*(F(K, i)).
GradedDims filtration_homology(const KnotSpec& knot, int level);

/// Whether the map F(K, i) -> F_(0) induced on homology by the inclusion
/// into the hat complex is nonzero.
bool epsilon_nontrivial(const KnotSpec& knot, int level);

/// H_* of ker(epsilon_i): the sublevel homology with the grading-0 class hit
/// by epsilon_i removed.
GradedDims reduced_filtration_homology(const KnotSpec& knot, int level);

/// Euler characteristic, odd gradings counted negatively.
int euler_characteristic(const GradedDims& dims);

/// tau(K) as the Euler sum of the reduced filtration over -g..g.
int tau(const KnotSpec& knot);

}  // namespace hfconc
