#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

template <class F>
struct Entry {
    std::uint32_t col;
    typename F::Element value;
};

template <class F>
using SparseRow = std::vector<Entry<F>>;

template <class F>
struct Triplet {
    std::size_t row;
    std::size_t col;
    typename F::Element value;
};

/// Immutable row-compressed sparse matrix over an exact field.
/// Each row is sorted by column, holds no zeros and no repeated columns.
template <class F>
class SparseMatrix {
public:
    using Element = typename F::Element;

    SparseMatrix(F field, std::size_t nrows, std::size_t ncols, std::vector<SparseRow<F>> rows)
        : field_(std::move(field)), nrows_(nrows), ncols_(ncols), rows_(std::move(rows))
    {
        if (rows_.size() != nrows_)
            throw std::invalid_argument("row count does not match nrows");
        for (const auto& row : rows_) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k].col >= ncols_)
                    throw std::invalid_argument("column index out of range");
                if (field_.is_zero(row[k].value))
                    throw std::invalid_argument("explicit zero stored in sparse matrix");
                if (k > 0 && row[k - 1].col >= row[k].col)
                    throw std::invalid_argument("row entries unsorted or duplicated");
            }
        }
    }

    /// Sums duplicate positions and drops resulting zeros.
    static SparseMatrix from_triplets(F field, std::size_t nrows, std::size_t ncols,
                                      std::vector<Triplet<F>> triplets)
    {
        std::vector<SparseRow<F>> rows(nrows);
        for (auto& t : triplets) {
            if (t.row >= nrows || t.col >= ncols)
                throw std::invalid_argument("triplet index out of range");
            rows[t.row].push_back({static_cast<std::uint32_t>(t.col), std::move(t.value)});
        }
        for (auto& row : rows)
            row = normalize_row(field, std::move(row));
        return SparseMatrix(std::move(field), nrows, ncols, std::move(rows));
    }

    static SparseMatrix identity(F field, std::size_t n)
    {
        std::vector<SparseRow<F>> rows(n);
        for (std::size_t i = 0; i < n; ++i)
            rows[i].push_back({static_cast<std::uint32_t>(i), field.one()});
        return SparseMatrix(std::move(field), n, n, std::move(rows));
    }

    static SparseMatrix zero(F field, std::size_t nrows, std::size_t ncols)
    {
        return SparseMatrix(std::move(field), nrows, ncols, std::vector<SparseRow<F>>(nrows));
    }

    /// Sorts by column, merges duplicates, removes zeros.
    static SparseRow<F> normalize_row(const F& field, SparseRow<F> row)
    {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        SparseRow<F> out;
        out.reserve(row.size());
        for (auto& e : row) {
            if (!out.empty() && out.back().col == e.col)
                out.back().value = field.add(out.back().value, e.value);
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [&](const auto& e) { return field.is_zero(e.value); });
        return out;
    }

    const F& field() const { return field_; }
    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    std::span<const Entry<F>> row(std::size_t i) const { return rows_[i]; }
    const std::vector<SparseRow<F>>& rows() const { return rows_; }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            n += r.size();
        return n;
    }

    bool is_zero() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
    }

    Element at(std::size_t i, std::size_t j) const
    {
        const auto& r = rows_.at(i);
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& e, std::size_t c) { return e.col < c; });
        if (it != r.end() && it->col == j)
            return it->value;
        return field_.zero();
    }

    SparseMatrix transpose() const
    {
        std::vector<SparseRow<F>> out(ncols_);
        for (std::size_t i = 0; i < nrows_; ++i)
            for (const auto& e : rows_[i])
                out[e.col].push_back({static_cast<std::uint32_t>(i), e.value});
        return SparseMatrix(field_, ncols_, nrows_, std::move(out));
    }

    /// this * other, with this of shape (m x k) and other of shape (k x n).
    SparseMatrix multiply(const SparseMatrix& other) const
    {
        if (ncols_ != other.nrows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        std::vector<SparseRow<F>> out(nrows_);
        std::vector<Element> acc(other.ncols_, field_.zero());
        std::vector<char> touched(other.ncols_, 0);
        std::vector<std::uint32_t> cols;
        for (std::size_t i = 0; i < nrows_; ++i) {
            cols.clear();
            for (const auto& a : rows_[i]) {
                for (const auto& b : other.rows_[a.col]) {
                    if (!touched[b.col]) {
                        touched[b.col] = 1;
                        cols.push_back(b.col);
                    }
                    acc[b.col] = field_.add(acc[b.col], field_.mul(a.value, b.value));
                }
            }
            std::sort(cols.begin(), cols.end());
            for (auto c : cols) {
                if (!field_.is_zero(acc[c]))
                    out[i].push_back({c, acc[c]});
                acc[c] = field_.zero();
                touched[c] = 0;
            }
        }
        return SparseMatrix(field_, nrows_, other.ncols_, std::move(out));
    }

    bool operator==(const SparseMatrix& o) const
    {
        if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
            return false;
        for (std::size_t i = 0; i < nrows_; ++i) {
            if (rows_[i].size() != o.rows_[i].size())
                return false;
            for (std::size_t k = 0; k < rows_[i].size(); ++k)
                if (rows_[i][k].col != o.rows_[i][k].col || !(rows_[i][k].value == o.rows_[i][k].value))
                    return false;
        }
        return true;
    }

private:
    F field_;
    std::size_t nrows_;
    std::size_t ncols_;
    std::vector<SparseRow<F>> rows_;
};

} // namespace koszul
