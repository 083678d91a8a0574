#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "linear_program.hpp"

namespace nerverep {

using BitVector = boost::dynamic_bitset<std::uint64_t>;

/// Dense matrix over GF(2), stored row-wise.
class GF2Matrix
{
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r][c] = v; }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

    void append_row(BitVector r)
    {
        if (r.size() != cols_)
            throw DimensionError("GF2Matrix::append_row: wrong length");
        rows_.push_back(std::move(r));
    }

    /// c · M, the sum of the rows selected by c.
    BitVector left_multiply(const BitVector& c) const
    {
        if (c.size() != rows())
            throw DimensionError("left_multiply: wrong length");
        BitVector out(cols_);
        for (std::size_t r = c.find_first(); r != BitVector::npos; r = c.find_next(r))
            out ^= rows_[r];
        return out;
    }

    /// M y.
    BitVector right_multiply(const BitVector& y) const
    {
        if (y.size() != cols_)
            throw DimensionError("right_multiply: wrong length");
        BitVector out(rows());
        for (std::size_t r = 0; r < rows(); ++r)
            out[r] = (rows_[r] & y).count() % 2 == 1;
        return out;
    }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

inline bool gf2_dot(const BitVector& a, const BitVector& b)
{
    return (a & b).count() % 2 == 1;
}

/**
 * Either a row combination c with c · M = v, or a column vector y with
 * M y = 0 and v · y = 1, which proves v is outside the row space.
 */
struct Gf2Solution
{
    bool solvable = false;
    BitVector combination;  ///< over rows, when solvable
    BitVector witness;      ///< over columns, when not
    std::size_t rank = 0;   ///< rank of M
};

/// Gauss-Jordan elimination over GF(2) with row-provenance tracking.
inline Gf2Solution gf2_solve(const GF2Matrix& m, const BitVector& v)
{
    if (v.size() != m.cols())
        throw DimensionError("gf2_solve: right-hand side has " + std::to_string(v.size()) + " entries, matrix has " +
                             std::to_string(m.cols()) + " columns");
    std::vector<BitVector> basis;
    std::vector<BitVector> origin;
    std::vector<std::size_t> pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BitVector r = m.row(i);
        BitVector t(m.rows());
        t[i] = true;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (r[pivot[k]]) {
                r ^= basis[k];
                t ^= origin[k];
            }
        const std::size_t p = r.find_first();
        if (p == BitVector::npos)
            continue;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k][p]) {
                basis[k] ^= r;
                origin[k] ^= t;
            }
        basis.push_back(std::move(r));
        origin.push_back(std::move(t));
        pivot.push_back(p);
    }

    Gf2Solution sol;
    sol.rank = basis.size();
    BitVector residual = v;
    BitVector combination(m.rows());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (residual[pivot[k]]) {
            residual ^= basis[k];
            combination ^= origin[k];
        }
    if (residual.none()) {
        sol.solvable = true;
        sol.combination = std::move(combination);
        return sol;
    }
    // The residual vanishes on pivot columns; any free column f where it is 1
    // yields a kernel vector pairing to 1 with v.
    const std::size_t f = residual.find_first();
    BitVector y(m.cols());
    y[f] = true;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k][f])
            y[pivot[k]] = true;
    sol.witness = std::move(y);
    return sol;
}

} // namespace nerverep
