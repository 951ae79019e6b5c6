#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "koszul/sparse_matrix.hpp"

namespace koszul {

/// Indices sorted by ascending count, ties broken by the lower index.
std::vector<std::uint32_t> order_by_count(std::span<const std::size_t> counts);

/// Incremental row echelon builder. Rows are fed one at a time and reduced
/// against the pivot rows found so far, scanning columns in a fixed order.
/// Only the rank and the pivot rows are kept, so a differential can be
/// streamed block by block without ever materializing it.
template <class F>
class RankAccumulator;

template <>
class RankAccumulator<PrimeField> {
public:
    using Element = PrimeField::Element;

    /// column_order lists every column once; position 0 is scanned first.
    /// Empty means the natural order.
    RankAccumulator(PrimeField field, std::size_t ncols, std::vector<std::uint32_t> column_order = {})
        : field_(field), ncols_(ncols), position_of_(ncols), column_at_(std::move(column_order)),
          pivots_(ncols), work_(ncols, 0)
    {
        if (column_at_.empty()) {
            column_at_.resize(ncols);
            std::iota(column_at_.begin(), column_at_.end(), 0u);
        }
        if (column_at_.size() != ncols)
            throw std::invalid_argument("column order must be a permutation");
        std::vector<char> seen(ncols, 0);
        for (std::size_t pos = 0; pos < ncols; ++pos) {
            auto c = column_at_[pos];
            if (c >= ncols || seen[c])
                throw std::invalid_argument("column order must be a permutation");
            seen[c] = 1;
            position_of_[c] = static_cast<std::uint32_t>(pos);
        }
    }

    /// Returns true iff the row was independent of everything added before.
    bool add_row(std::span<const Entry<PrimeField>> row)
    {
        if (row.empty())
            return false;
        std::size_t first = ncols_;
        for (const auto& e : row) {
            auto pos = position_of_[e.col];
            work_[pos] = field_.add(work_[pos], e.value);
            first = std::min<std::size_t>(first, pos);
        }
        const auto p = field_.characteristic();
        for (std::size_t pos = first; pos < ncols_; ++pos) {
            const Element v = work_[pos];
            if (v == 0)
                continue;
            const auto& pivot = pivots_[pos];
            if (pivot.empty()) {
                const Element scale = field_.inv(v);
                std::vector<Slot> stored;
                for (std::size_t q = pos; q < ncols_; ++q) {
                    if (work_[q] != 0) {
                        stored.push_back({static_cast<std::uint32_t>(q), field_.mul(work_[q], scale)});
                        work_[q] = 0;
                    }
                }
                pivots_[pos] = std::move(stored);
                ++rank_;
                return true;
            }
            const Element f = p - v; // subtract v * pivot row (lead coefficient 1)
            for (const auto& s : pivot)
                work_[s.pos] = field_.add(work_[s.pos], field_.mul(f, s.value));
        }
        return false;
    }

    std::size_t rank() const { return rank_; }
    std::size_t ncols() const { return ncols_; }

    /// Pivot rows in original column indices, ordered by pivot position,
    /// each normalized to leading coefficient 1.
    std::vector<SparseRow<PrimeField>> pivot_rows() const
    {
        std::vector<SparseRow<PrimeField>> out;
        for (std::size_t pos = 0; pos < ncols_; ++pos) {
            if (pivots_[pos].empty())
                continue;
            SparseRow<PrimeField> row;
            for (const auto& s : pivots_[pos])
                row.push_back({column_at_[s.pos], s.value});
            out.push_back(SparseMatrix<PrimeField>::normalize_row(field_, std::move(row)));
        }
        return out;
    }

    /// Original column index of each pivot, in pivot-position order.
    std::vector<std::uint32_t> pivot_columns() const
    {
        std::vector<std::uint32_t> out;
        for (std::size_t pos = 0; pos < ncols_; ++pos)
            if (!pivots_[pos].empty())
                out.push_back(column_at_[pos]);
        return out;
    }

    std::size_t stored_entries() const
    {
        std::size_t n = 0;
        for (const auto& p : pivots_)
            n += p.size();
        return n;
    }

private:
    struct Slot {
        std::uint32_t pos;
        Element value;
    };

    PrimeField field_;
    std::size_t ncols_;
    std::vector<std::uint32_t> position_of_;
    std::vector<std::uint32_t> column_at_;
    std::vector<std::vector<Slot>> pivots_;
    std::vector<Element> work_;
    std::size_t rank_ = 0;
};

/// Fraction-free variant over Q: rows are scaled to primitive integer
/// vectors and eliminated by cross-multiplication, dividing out the row
/// content whenever a new pivot is stored.
template <>
class RankAccumulator<RationalField> {
public:
    RankAccumulator(RationalField field, std::size_t ncols, std::vector<std::uint32_t> column_order = {});

    bool add_row(std::span<const Entry<RationalField>> row);

    std::size_t rank() const { return rank_; }
    std::size_t ncols() const { return ncols_; }
    std::vector<SparseRow<RationalField>> pivot_rows() const;
    std::vector<std::uint32_t> pivot_columns() const;
    std::size_t stored_entries() const;

private:
    struct Slot {
        std::uint32_t pos;
        mpz_class value;
    };

    RationalField field_;
    std::size_t ncols_;
    std::vector<std::uint32_t> position_of_;
    std::vector<std::uint32_t> column_at_;
    std::vector<std::vector<Slot>> pivots_;
    std::vector<mpz_class> work_;
    std::size_t rank_ = 0;
};

/// Sparsity-driven elimination order: columns by ascending structural
/// count, rows by ascending length; ties go to the lower index.
template <class F>
std::vector<std::uint32_t> markowitz_column_order(const SparseMatrix<F>& m)
{
    std::vector<std::size_t> counts(m.ncols(), 0);
    for (const auto& row : m.rows())
        for (const auto& e : row)
            ++counts[e.col];
    return order_by_count(counts);
}

template <class F>
std::size_t rank(const SparseMatrix<F>& m)
{
    RankAccumulator<F> acc(m.field(), m.ncols(), markowitz_column_order(m));
    std::vector<std::size_t> row_len(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        row_len[i] = m.row(i).size();
    for (auto i : order_by_count(row_len))
        acc.add_row(m.row(i));
    return acc.rank();
}

template <class F>
std::size_t kernel_dim(const SparseMatrix<F>& m)
{
    return m.nrows() - rank(m);
}

template <class F>
struct EchelonForm {
    /// Pivot columns, strictly increasing.
    std::vector<std::uint32_t> pivots;
    /// Reduced row echelon form: one row per pivot, leading 1, every pivot
    /// column cleared in all other rows.
    SparseMatrix<F> reduced;
};

/// Reduced row echelon form under the leftmost-pivot rule. The pivot set is
/// the lexicographically first set of independent columns, hence canonical.
template <class F>
EchelonForm<F> row_echelon(const SparseMatrix<F>& m)
{
    const F& field = m.field();
    RankAccumulator<F> acc(field, m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        acc.add_row(m.row(i));
    auto pivots = acc.pivot_columns();
    auto rows = acc.pivot_rows();

    // back substitution, last pivot first
    std::vector<std::size_t> pivot_row_of(m.ncols(), SIZE_MAX);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        pivot_row_of[pivots[k]] = k;
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const auto& pivot_row = rows[k];
        for (std::size_t i = 0; i < k; ++i) {
            auto& row = rows[i];
            auto it = std::lower_bound(row.begin(), row.end(), pivots[k],
                                       [](const auto& e, std::uint32_t c) { return e.col < c; });
            if (it == row.end() || it->col != pivots[k])
                continue;
            const auto factor = field.neg(it->value);
            SparseRow<F> merged = row;
            for (const auto& e : pivot_row)
                merged.push_back({e.col, field.mul(factor, e.value)});
            row = SparseMatrix<F>::normalize_row(field, std::move(merged));
        }
    }
    const std::size_t r = rows.size();
    return {std::move(pivots), SparseMatrix<F>(field, r, m.ncols(), std::move(rows))};
}

} // namespace koszul
