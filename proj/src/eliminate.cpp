#include "koszul/eliminate.hpp"

namespace koszul {

std::vector<std::uint32_t> order_by_count(std::span<const std::size_t> counts)
{
    std::vector<std::uint32_t> order(counts.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return counts[a] < counts[b]; });
    return order;
}

RankAccumulator<RationalField>::RankAccumulator(RationalField field, std::size_t ncols,
                                                std::vector<std::uint32_t> column_order)
    : field_(field), ncols_(ncols), position_of_(ncols), column_at_(std::move(column_order)),
      pivots_(ncols), work_(ncols)
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

bool RankAccumulator<RationalField>::add_row(std::span<const Entry<RationalField>> row)
{
    if (row.empty())
        return false;
    // clear denominators
    mpz_class lcm = 1;
    for (const auto& e : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.get_den_mpz_t());
    std::size_t first = ncols_;
    for (const auto& e : row) {
        auto pos = position_of_[e.col];
        work_[pos] += e.value.get_num() * (lcm / e.value.get_den());
        first = std::min<std::size_t>(first, pos);
    }
    mpz_class g, a_scale, w_scale;
    for (std::size_t pos = first; pos < ncols_; ++pos) {
        if (work_[pos] == 0)
            continue;
        const auto& pivot = pivots_[pos];
        if (pivot.empty()) {
            mpz_class content = 0;
            for (std::size_t q = pos; q < ncols_; ++q)
                if (work_[q] != 0)
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), work_[q].get_mpz_t());
            if (work_[pos] < 0)
                content = -content;
            std::vector<Slot> stored;
            for (std::size_t q = pos; q < ncols_; ++q) {
                if (work_[q] != 0) {
                    mpz_divexact(work_[q].get_mpz_t(), work_[q].get_mpz_t(), content.get_mpz_t());
                    stored.push_back({static_cast<std::uint32_t>(q), std::move(work_[q])});
                    work_[q] = 0;
                }
            }
            pivots_[pos] = std::move(stored);
            ++rank_;
            return true;
        }
        // work <- (lead/g) * work - (w/g) * pivot
        const mpz_class& lead = pivot.front().value;
        mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), work_[pos].get_mpz_t());
        mpz_divexact(a_scale.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(w_scale.get_mpz_t(), work_[pos].get_mpz_t(), g.get_mpz_t());
        if (a_scale != 1)
            for (std::size_t q = pos; q < ncols_; ++q)
                if (work_[q] != 0)
                    work_[q] *= a_scale;
        for (const auto& s : pivot)
            work_[s.pos] -= w_scale * s.value;
    }
    return false;
}

std::vector<SparseRow<RationalField>> RankAccumulator<RationalField>::pivot_rows() const
{
    std::vector<SparseRow<RationalField>> out;
    for (std::size_t pos = 0; pos < ncols_; ++pos) {
        if (pivots_[pos].empty())
            continue;
        const mpz_class& lead = pivots_[pos].front().value;
        SparseRow<RationalField> row;
        for (const auto& s : pivots_[pos]) {
            mpq_class v(s.value, lead);
            v.canonicalize();
            row.push_back({column_at_[s.pos], v});
        }
        out.push_back(SparseMatrix<RationalField>::normalize_row(field_, std::move(row)));
    }
    return out;
}

std::vector<std::uint32_t> RankAccumulator<RationalField>::pivot_columns() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t pos = 0; pos < ncols_; ++pos)
        if (!pivots_[pos].empty())
            out.push_back(column_at_[pos]);
    return out;
}

std::size_t RankAccumulator<RationalField>::stored_entries() const
{
    std::size_t n = 0;
    for (const auto& p : pivots_)
        n += p.size();
    return n;
}

} // namespace koszul
