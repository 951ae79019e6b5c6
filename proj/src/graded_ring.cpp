#include "koszul/graded_ring.hpp"

namespace koszul {

std::vector<std::uint64_t> hilbert_function(const Presentation& P, std::size_t top, const PieceCache* cache)
{
    return visit_field(P.field(), [&](const auto& field) {
        CoordinateRing ring(P, field, top, cache);
        std::vector<std::uint64_t> h;
        for (std::size_t m = 0; m <= top; ++m)
            h.push_back(ring.dim(static_cast<std::int64_t>(m)));
        return h;
    });
}

std::vector<HilbertMismatch> check_hilbert(const Presentation& P, const std::vector<std::uint64_t>& declared,
                                           const PieceCache* cache)
{
    std::vector<HilbertMismatch> out;
    if (declared.empty())
        return out;
    auto h = hilbert_function(P, declared.size() - 1, cache);
    for (std::size_t m = 0; m < declared.size(); ++m)
        if (h[m] != declared[m])
            out.push_back({m, declared[m], h[m]});
    return out;
}

} // namespace koszul
