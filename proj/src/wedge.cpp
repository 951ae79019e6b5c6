#include "koszul/wedge.hpp"

#include <stdexcept>

#include "koszul/polynomial.hpp"

namespace koszul {

WedgeIndex::WedgeIndex(std::size_t n, std::size_t p)
    : n_(n), p_(p), size_(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(p))))
{
}

std::uint64_t WedgeIndex::rank(std::span<const std::uint32_t> subset) const
{
    if (subset.size() != p_)
        throw std::invalid_argument("subset has wrong size");
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset[j] >= n_ || (j > 0 && subset[j - 1] >= subset[j]))
            throw std::invalid_argument("subset must be strictly increasing and in range");
        r += binomial(subset[j], static_cast<std::int64_t>(j + 1));
    }
    return r;
}

std::vector<std::uint32_t> WedgeIndex::unrank(std::uint64_t r) const
{
    if (r >= size_)
        throw std::out_of_range("wedge rank out of range");
    std::vector<std::uint32_t> subset(p_);
    std::int64_t s = static_cast<std::int64_t>(n_) - 1;
    for (std::size_t j = p_; j-- > 0;) {
        while (binomial(s, static_cast<std::int64_t>(j + 1)) > r)
            --s;
        subset[j] = static_cast<std::uint32_t>(s);
        r -= binomial(s, static_cast<std::int64_t>(j + 1));
        --s;
    }
    return subset;
}

} // namespace koszul
