#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace koszul {

/// Colexicographic ranking of the p-subsets of {0..n-1}, i.e. a basis
/// indexing of the exterior power of an n-dimensional space.
class WedgeIndex {
public:
    WedgeIndex(std::size_t n, std::size_t p);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    std::size_t size() const { return size_; }

    /// subset must be strictly increasing.
    std::uint64_t rank(std::span<const std::uint32_t> subset) const;
    std::vector<std::uint32_t> unrank(std::uint64_t r) const;

private:
    std::size_t n_;
    std::size_t p_;
    std::size_t size_;
};

} // namespace koszul
