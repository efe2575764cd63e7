#include "hfconc/f2linalg.hpp"

#include <bit>
#include <set>
#include <string>

namespace hfconc {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVector::set(std::size_t i, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool BitVector::any() const
{
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

std::size_t BitVector::count() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::lowest() const
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k])
            return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw F2Error("bit vector length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
    return *this;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitVector F2Matrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].get(c))
            v.set(r);
    return v;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c))
                t.set(c, r);
    return t;
}

bool F2Matrix::is_zero() const
{
    for (const auto& r : data_)
        if (r.any())
            return false;
    return true;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns)
{
    F2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw F2Error("column length " + std::to_string(columns[c].size()) + " does not match " +
                          std::to_string(rows) + " rows");
        for (std::size_t r = 0; r < rows; ++r)
            if (columns[c].get(r))
                m.set(r, c);
    }
    return m;
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m.set(k, k);
    return m;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw F2Error("matrix product dimension mismatch");
    F2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.data_[r].get(k))
                out.data_[r] ^= b.data_[k];
    return out;
}

void add_dims(GradedDims& into, int grading, int dim)
{
    if (dim == 0)
        return;
    int& slot = into[grading];
    slot += dim;
    if (slot == 0)
        into.erase(grading);
}

int total_dim(const GradedDims& dims)
{
    int n = 0;
    for (const auto& [g, d] : dims)
        n += d;
    return n;
}

BitVector EchelonBasis::reduce(BitVector v) const
{
    if (v.size() != dim_)
        throw F2Error("vector length " + std::to_string(v.size()) + " does not match ambient dimension " +
                      std::to_string(dim_));
    // Rows are keyed by pivot and each row has no bits below its pivot, so one
    // ascending pass clears every pivot position of v.
    for (const auto& [pivot, row] : rows_)
        if (v.get(pivot))
            v ^= row;
    return v;
}

bool EchelonBasis::insert(BitVector v)
{
    v = reduce(std::move(v));
    if (v.none())
        return false;
    const std::size_t pivot = v.lowest();
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::size_t rank(const F2Matrix& m)
{
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(m.row(r));
    return basis.rank();
}

bool in_span(const BitVector& v, const F2Matrix& m)
{
    if (v.size() != m.rows())
        throw F2Error("in_span: vector has length " + std::to_string(v.size()) + " but matrix has " +
                      std::to_string(m.rows()) + " rows");
    EchelonBasis basis(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        basis.insert(m.column(c));
    return basis.contains(v);
}

std::vector<BitVector> kernel_basis(const F2Matrix& m)
{
    // Column reduction tracking the combinations: columns that reduce to zero
    // record kernel vectors.
    const std::size_t n = m.cols();
    std::map<std::size_t, std::pair<BitVector, BitVector>> pivots;  // pivot row -> (column, combination)
    std::vector<BitVector> kernel;
    for (std::size_t c = 0; c < n; ++c) {
        BitVector col = m.column(c);
        BitVector comb(n);
        comb.set(c);
        while (col.any()) {
            const std::size_t low = col.lowest();
            auto it = pivots.find(low);
            if (it == pivots.end())
                break;
            col ^= it->second.first;
            comb ^= it->second.second;
        }
        if (col.none()) {
            kernel.push_back(std::move(comb));
        } else {
            const std::size_t low = col.lowest();
            pivots.emplace(low, std::make_pair(std::move(col), std::move(comb)));
        }
    }
    return kernel;
}

std::vector<BitVector> image_basis(const F2Matrix& m)
{
    EchelonBasis basis(m.rows());
    std::vector<BitVector> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        BitVector col = m.column(c);
        if (basis.insert(col))
            out.push_back(std::move(col));
    }
    return out;
}

namespace {

// Grading of the support of v, or nullopt-like sentinel when v is zero.
// Throws if v mixes gradings.
bool homogeneous_grading(const BitVector& v, const std::vector<int>& gradings, int& out)
{
    bool found = false;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v.get(k))
            continue;
        if (!found) {
            out = gradings[k];
            found = true;
        } else if (gradings[k] != out) {
            throw F2Error("differential column is not homogeneous in the grading");
        }
    }
    return found;
}

}  // namespace

GradedDims homology_dims(const F2Matrix& d_in, const F2Matrix& d_out, const std::vector<int>& gradings)
{
    const std::size_t n = gradings.size();
    if (d_in.rows() != n || d_out.cols() != n)
        throw F2Error("homology_dims: differential shapes do not match the generator count");
    if (!(d_out * d_in).is_zero())
        throw F2Error("inconsistent complex: d_out * d_in != 0");

    std::set<int> levels(gradings.begin(), gradings.end());

    // Kernel of d_out, split by grading. The split must account for the
    // whole kernel, otherwise d_out mixes gradings.
    std::map<int, int> ker;
    int ker_total = 0;
    for (int g : levels) {
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < n; ++k)
            if (gradings[k] == g)
                cols.push_back(k);
        F2Matrix restricted(d_out.rows(), cols.size());
        for (std::size_t r = 0; r < d_out.rows(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (d_out.get(r, cols[c]))
                    restricted.set(r, c);
        const int dim = static_cast<int>(cols.size() - rank(restricted));
        ker[g] = dim;
        ker_total += dim;
    }
    if (ker_total != static_cast<int>(n - rank(d_out)))
        throw F2Error("differential is not homogeneous in the grading");

    std::map<int, EchelonBasis> im;
    for (std::size_t c = 0; c < d_in.cols(); ++c) {
        BitVector col = d_in.column(c);
        int g = 0;
        if (!homogeneous_grading(col, gradings, g))
            continue;
        im.try_emplace(g, n).first->second.insert(std::move(col));
    }

    GradedDims out;
    for (const auto& [g, k] : ker) {
        auto it = im.find(g);
        const int image = it == im.end() ? 0 : static_cast<int>(it->second.rank());
        add_dims(out, g, k - image);
    }
    return out;
}

GradedDims homology_dims(const F2Matrix& d, const std::vector<int>& gradings)
{
    if (d.rows() != gradings.size() || d.cols() != gradings.size())
        throw F2Error("homology_dims: differential shapes do not match the generator count");
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (d.get(r, c) && gradings[r] != gradings[c] - 1)
                throw F2Error("differential entry " + std::to_string(c) + " -> " + std::to_string(r) +
                              " does not lower the grading by one");
    return homology_dims(d, d, gradings);
}

}  // namespace hfconc
