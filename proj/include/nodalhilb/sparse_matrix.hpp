#ifndef NODALHILB_SPARSE_MATRIX_HPP
#define NODALHILB_SPARSE_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <nodalhilb/weight_poly.hpp>

namespace nodalhilb
{

// Square matrix over Q stored by columns; each column is a list of
// (row, value) pairs sorted by row with no explicit zeros.
class SparseMatrix
{
public:
    using Entry = std::pair<std::size_t, Rational>;
    using Column = std::vector<Entry>;

    explicit SparseMatrix(std::size_t n = 0) : cols_(n) {}

    static SparseMatrix identity(std::size_t n)
    {
        SparseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.cols_[i].emplace_back(i, Rational(1));
        }
        return m;
    }

    std::size_t size() const noexcept { return cols_.size(); }
    const Column &column(std::size_t c) const { return cols_[c]; }

    // Accepts entries in any order; duplicates are summed and zeros dropped.
    void set_column(std::size_t c, Column entries)
    {
        std::map<std::size_t, Rational> acc;
        for (auto &[r, v] : entries) {
            assert(r < size());
            acc[r] += v;
        }
        Column col;
        for (auto &[r, v] : acc) {
            if (v != 0) {
                col.emplace_back(r, std::move(v));
            }
        }
        cols_[c] = std::move(col);
    }

    Rational at(std::size_t r, std::size_t c) const
    {
        const auto &col = cols_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry &e, std::size_t x) { return e.first < x; });
        return (it != col.end() && it->first == r) ? it->second : Rational(0);
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto &c : cols_) {
            n += c.size();
        }
        return n;
    }

    friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b)
    {
        assert(a.size() == b.size());
        SparseMatrix r(a.size());
        for (std::size_t c = 0; c < b.size(); ++c) {
            Column acc;
            for (const auto &[k, bv] : b.cols_[c]) {
                for (const auto &[i, av] : a.cols_[k]) {
                    acc.emplace_back(i, av * bv);
                }
            }
            r.set_column(c, std::move(acc));
        }
        return r;
    }

    friend SparseMatrix operator-(const SparseMatrix &a, const SparseMatrix &b)
    {
        assert(a.size() == b.size());
        SparseMatrix r(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) {
            Column acc = a.cols_[c];
            for (const auto &[i, v] : b.cols_[c]) {
                acc.emplace_back(i, -v);
            }
            r.set_column(c, std::move(acc));
        }
        return r;
    }

    friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

private:
    std::vector<Column> cols_;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form over Q; returns the pivot column of each
// nonzero row (rows past the rank are zeroed and dropped).
inline std::vector<std::size_t> rref(DenseMatrix &m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][col];
        for (auto &x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col];
            for (std::size_t k = col; k < ncols; ++k) {
                if (m[row][k] != 0) {
                    m[r][k] -= f * m[row][k];
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Basis of {x : m x = 0}, one vector per free column.
inline DenseMatrix nullspace(DenseMatrix m, std::size_t ncols)
{
    const auto pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    DenseMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> v(ncols);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace nodalhilb

#endif
