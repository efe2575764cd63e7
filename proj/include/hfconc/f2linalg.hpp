#pragma once

// Dense linear algebra over F_2 with bit-packed rows.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace hfconc {

class F2Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    /// Index of the lowest set bit, or size() if the vector is zero.
    std::size_t lowest() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector column(std::size_t c) const;

    F2Matrix transpose() const;
    bool is_zero() const;

    /// Builds the matrix whose columns are the given vectors, all of length `rows`.
    static F2Matrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);
    static F2Matrix identity(std::size_t n);

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    bool operator==(const F2Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

/// Grading -> dimension. Zero dimensions are never stored.
using GradedDims = std::map<int, int>;

void add_dims(GradedDims& into, int grading, int dim);
int total_dim(const GradedDims& dims);

std::size_t rank(const F2Matrix& m);

/// Reduced set of vectors spanning a subspace of F_2^n, kept in echelon form
/// keyed by pivot (lowest set bit). Pivots are chosen lowest-index first.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the basis. The result is zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }
    /// Adds v to the span. Returns false if it was already contained.
    bool insert(BitVector v);

private:
    std::size_t dim_;
    std::map<std::size_t, BitVector> rows_;
};

/// True iff v lies in the column span of m.
bool in_span(const BitVector& v, const F2Matrix& m);

/// Basis of the null space {x : m x = 0}.
std::vector<BitVector> kernel_basis(const F2Matrix& m);
/// A basis of the column space of m, chosen among its columns.
std::vector<BitVector> image_basis(const F2Matrix& m);

/// Homology ker(d_out) / im(d_in) of the middle space whose basis vectors
/// carry the given gradings. Every column of d_in and of d_out must be
/// homogeneous, and d_out * d_in must vanish.
GradedDims homology_dims(const F2Matrix& d_in, const F2Matrix& d_out,
                         const std::vector<int>& gradings);

/// Homology of a single complex with square differential d of degree -1.
GradedDims homology_dims(const F2Matrix& d, const std::vector<int>& gradings);

}  // namespace hfconc
