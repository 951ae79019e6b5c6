#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/graded_ring.hpp"
#include "koszul/wedge.hpp"

namespace koszul {

/// Koszul complex  ... -> ∧^{p+1}V ⊗ R_{q-1} -> ∧^p V ⊗ R_q -> ∧^{p-1}V ⊗ R_{q+1} -> ...
/// over a truncated coordinate ring. Matrices use the row convention: the
/// row of e_S ⊗ f holds the coordinates of d(e_S ⊗ f), with
///   d(e_{i_0} ∧ ... ∧ e_{i_{p-1}} ⊗ f) = Σ_j (-1)^j e_{S \ i_j} ⊗ x_{i_j} f
/// and S enumerated colexicographically.
template <class F>
class KoszulComplex {
public:
    explicit KoszulComplex(const CoordinateRing<F>& ring) : ring_(ring), n_(ring.nvars()) {}

    const CoordinateRing<F>& ring() const { return ring_; }

    /// dim ∧^p V ⊗ R_q.
    std::size_t term_dim(std::int64_t p, std::int64_t q) const
    {
        if (p < 0 || q < 0 || static_cast<std::size_t>(p) > n_)
            return 0;
        return static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n_), p)) * ring_.dim(q);
    }

    SparseMatrix<F> differential(std::int64_t p, std::int64_t q) const
    {
        const auto rows = term_dim(p, q);
        const auto cols = term_dim(p - 1, q + 1);
        std::vector<SparseRow<F>> out;
        out.reserve(rows);
        if (rows > 0)
            check_degree(q + 1);
        for_each_block(p, q, [&](std::vector<SparseRow<F>>& block) {
            for (auto& r : block)
                out.push_back(std::move(r));
        });
        out.resize(rows);
        return SparseMatrix<F>(ring_.field(), rows, cols, std::move(out));
    }

    /// Rank of d_{p,q}, streaming one wedge generator at a time into the
    /// eliminator. Columns are ordered by their structural counts.
    std::size_t differential_rank(std::int64_t p, std::int64_t q) const
    {
        const auto rows = term_dim(p, q);
        const auto cols = term_dim(p - 1, q + 1);
        if (rows == 0 || cols == 0)
            return 0;
        check_degree(q + 1);
        RankAccumulator<F> acc(ring_.field(), cols, order_by_count(column_counts(p, q)));
        for_each_block(p, q, [&](std::vector<SparseRow<F>>& block) {
            for (const auto& r : block)
                acc.add_row(r);
        });
        return acc.rank();
    }

    /// Upper bound on the entries held by the eliminator for d_{p,q}.
    std::size_t elimination_footprint(std::int64_t p, std::int64_t q) const
    {
        const auto rows = term_dim(p, q);
        const auto cols = term_dim(p - 1, q + 1);
        return std::min(rows, cols) * cols;
    }

    /// dim K_{p,q} = dim ker d_{p,q} - rank d_{p+1,q-1}.
    std::size_t kpq(std::int64_t p, std::int64_t q) const
    {
        return term_dim(p, q) - differential_rank(p, q) - differential_rank(p + 1, q - 1);
    }

private:
    void check_degree(std::int64_t m) const
    {
        if (m > static_cast<std::int64_t>(ring_.top_degree()))
            throw std::out_of_range("coordinate ring truncated below degree " + std::to_string(m));
    }

    std::vector<std::size_t> column_counts(std::int64_t p, std::int64_t q) const
    {
        const auto target_dim = ring_.dim(q + 1);
        std::vector<std::vector<std::size_t>> per_var(n_, std::vector<std::size_t>(target_dim, 0));
        for (std::size_t i = 0; i < n_; ++i)
            for (const auto& row : ring_.mult(static_cast<std::size_t>(q), i).rows())
                for (const auto& e : row)
                    ++per_var[i][e.col];
        const WedgeIndex target(n_, static_cast<std::size_t>(p - 1));
        std::vector<std::size_t> counts(target.size() * target_dim, 0);
        std::vector<char> in_subset(n_);
        for (std::size_t w = 0; w < target.size(); ++w) {
            std::fill(in_subset.begin(), in_subset.end(), 0);
            for (auto s : target.unrank(w))
                in_subset[s] = 1;
            for (std::size_t i = 0; i < n_; ++i) {
                if (in_subset[i])
                    continue;
                for (std::size_t b = 0; b < target_dim; ++b)
                    counts[w * target_dim + b] += per_var[i][b];
            }
        }
        return counts;
    }

    template <class Sink>
    void for_each_block(std::int64_t p, std::int64_t q, Sink&& sink) const
    {
        const auto src_dim = ring_.dim(q);
        const auto dst_dim = ring_.dim(q + 1);
        if (p <= 0 || src_dim == 0 || static_cast<std::size_t>(p) > n_)
            return;
        const F& field = ring_.field();
        const WedgeIndex source(n_, static_cast<std::size_t>(p));
        const WedgeIndex target(n_, static_cast<std::size_t>(p - 1));
        std::vector<SparseRow<F>> block(src_dim);
        std::vector<std::uint32_t> face;
        for (std::size_t w = 0; w < source.size(); ++w) {
            const auto subset = source.unrank(w);
            for (auto& r : block)
                r.clear();
            for (std::size_t j = 0; j < subset.size(); ++j) {
                face.assign(subset.begin(), subset.end());
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                const auto offset = static_cast<std::uint32_t>(target.rank(face) * dst_dim);
                const bool negative = (j % 2) == 1;
                const auto& mult = ring_.mult(static_cast<std::size_t>(q), subset[j]);
                for (std::size_t b = 0; b < src_dim; ++b)
                    for (const auto& e : mult.row(b))
                        block[b].push_back({offset + e.col, negative ? field.neg(e.value) : e.value});
            }
            for (auto& r : block)
                r = SparseMatrix<F>::normalize_row(field, std::move(r));
            sink(block);
        }
    }

    const CoordinateRing<F>& ring_;
    std::size_t n_;
};

/// Graded Betti numbers dim K_{p,q}(X;L) over a rectangular range.
/// A missing value is a hole: the cell was skipped under the memory budget.
struct BettiTable {
    std::string model;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    std::optional<std::uint64_t> seed;
    std::size_t p_max = 0;
    std::size_t q_max = 0;
    std::size_t nvars = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::uint64_t>> entries;
    /// dim R_m for m = 0..q_max+1.
    std::vector<std::uint64_t> hilbert;

    std::optional<std::uint64_t> at(std::size_t p, std::size_t q) const;
    bool has(std::size_t p, std::size_t q) const { return at(p, q).has_value(); }
    std::vector<std::pair<std::size_t, std::size_t>> holes() const;

    nlohmann::json to_json() const;
    static BettiTable from_json(const nlohmann::json& doc);
    /// Conventional diagram: columns p, rows q, "." for zero, "?" for holes.
    std::string render() const;
};

struct BettiOptions {
    std::size_t p_max = 0;
    std::size_t q_max = 3;
    /// Cells whose eliminator footprint exceeds this many MiB are left as holes.
    std::optional<std::size_t> budget_mb;
    const PieceCache* cache = nullptr;
    std::optional<std::uint64_t> seed;
    /// When non-empty only these cells are computed; the rest are holes.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
};

BettiTable betti_table(const Presentation& P, const BettiOptions& options);

std::uint64_t kpq_dim(const Presentation& P, std::size_t p, std::size_t q, const PieceCache* cache = nullptr);

/// Alternating-sum identity on one total-degree strand of a table:
/// Σ_p (-1)^p K_{p,m-p} = Σ_p (-1)^p C(n,p) dim R_{m-p}.
struct StrandCheck {
    std::size_t degree;
    std::int64_t betti_side;
    std::int64_t ring_side;
    bool holds() const { return betti_side == ring_side; }
};

/// Checks every strand the table covers completely.
std::vector<StrandCheck> hilbert_consistency(const BettiTable& table);

} // namespace koszul
