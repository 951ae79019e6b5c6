#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/cache.hpp"
#include "koszul/eliminate.hpp"
#include "koszul/presentation.hpp"

namespace koszul {

/// Graded-lex indexing of the monomials of one degree.
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, std::size_t degree)
        : degree_(degree), monomials_(monomials_of_degree(nvars, degree))
    {
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            index_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
    }

    std::size_t degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
    std::uint32_t index_of(const Exponents& e) const { return index_.at(e); }

private:
    std::size_t degree_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::uint32_t> index_;
};

/// R_m = Sym^m V / I_m, described by the standard monomials (non-pivot
/// columns of the echelonized ideal piece) and, for every ambient monomial,
/// its normal form in that basis.
template <class F>
struct GradedPiece {
    std::size_t degree = 0;
    std::size_t ambient_monomial_count = 0;
    std::size_t ideal_dim = 0;
    /// Ambient monomial indices of the quotient basis, increasing.
    std::vector<std::uint32_t> quotient_basis;
    /// One row per ambient monomial; columns index quotient_basis.
    std::vector<SparseRow<F>> reduction;

    std::size_t dim() const { return quotient_basis.size(); }
};

/// Echelonized basis of I_m inside Sym^m V: every generator multiplied by
/// every monomial of complementary degree.
template <class F>
EchelonForm<F> ideal_degree_piece(const Presentation& P, const F& field, const MonomialBasis& basis)
{
    const std::size_t m = basis.degree();
    std::vector<Triplet<F>> triplets;
    std::size_t row = 0;
    for (const auto& g : P.generators()) {
        const auto d = static_cast<std::size_t>(g.homogeneous_degree());
        if (d > m)
            continue;
        std::vector<std::pair<Exponents, typename F::Element>> coeffs;
        for (const auto& [e, c] : g.terms()) {
            auto v = field.from_rational(c);
            if (!field.is_zero(v))
                coeffs.emplace_back(e, std::move(v));
        }
        for (const auto& mu : monomials_of_degree(P.nvars(), m - d)) {
            for (const auto& [e, c] : coeffs) {
                Exponents prod = e;
                for (std::size_t i = 0; i < prod.size(); ++i)
                    prod[i] = static_cast<std::uint16_t>(prod[i] + mu[i]);
                triplets.push_back({row, basis.index_of(prod), c});
            }
            ++row;
        }
    }
    auto span = SparseMatrix<F>::from_triplets(field, row, basis.size(), std::move(triplets));
    return row_echelon(span);
}

template <class F>
GradedPiece<F> build_graded_piece(const Presentation& P, const F& field, const MonomialBasis& basis)
{
    auto echelon = ideal_degree_piece(P, field, basis);
    GradedPiece<F> piece;
    piece.degree = basis.degree();
    piece.ambient_monomial_count = basis.size();
    piece.ideal_dim = echelon.pivots.size();

    std::vector<std::int64_t> quotient_index(basis.size(), -1);
    std::vector<char> is_pivot(basis.size(), 0);
    for (auto c : echelon.pivots)
        is_pivot[c] = 1;
    for (std::uint32_t c = 0; c < basis.size(); ++c) {
        if (!is_pivot[c]) {
            quotient_index[c] = static_cast<std::int64_t>(piece.quotient_basis.size());
            piece.quotient_basis.push_back(c);
        }
    }
    piece.reduction.resize(basis.size());
    for (std::uint32_t c = 0; c < basis.size(); ++c)
        if (!is_pivot[c])
            piece.reduction[c].push_back({static_cast<std::uint32_t>(quotient_index[c]), field.one()});
    // pivot monomial + sum(row_j * standard_j) lies in I, so it reduces to -sum(...)
    for (std::size_t k = 0; k < echelon.pivots.size(); ++k) {
        SparseRow<F> nf;
        for (const auto& e : echelon.reduced.row(k)) {
            if (e.col == echelon.pivots[k])
                continue;
            nf.push_back({static_cast<std::uint32_t>(quotient_index[e.col]), field.neg(e.value)});
        }
        piece.reduction[echelon.pivots[k]] = std::move(nf);
    }
    return piece;
}

template <class F>
nlohmann::json piece_to_json(const GradedPiece<F>& piece, const F& field)
{
    nlohmann::json doc;
    doc["degree"] = piece.degree;
    doc["ambient"] = piece.ambient_monomial_count;
    doc["ideal_dim"] = piece.ideal_dim;
    doc["quotient_basis"] = piece.quotient_basis;
    auto rows = nlohmann::json::array();
    for (const auto& row : piece.reduction) {
        auto r = nlohmann::json::array();
        for (const auto& e : row)
            r.push_back({e.col, field.to_string(e.value)});
        rows.push_back(std::move(r));
    }
    doc["reduction"] = std::move(rows);
    return doc;
}

template <class F>
GradedPiece<F> piece_from_json(const nlohmann::json& doc, const F& field)
{
    GradedPiece<F> piece;
    piece.degree = doc.at("degree").get<std::size_t>();
    piece.ambient_monomial_count = doc.at("ambient").get<std::size_t>();
    piece.ideal_dim = doc.at("ideal_dim").get<std::size_t>();
    piece.quotient_basis = doc.at("quotient_basis").get<std::vector<std::uint32_t>>();
    for (const auto& r : doc.at("reduction")) {
        SparseRow<F> row;
        for (const auto& e : r)
            row.push_back({e.at(0).get<std::uint32_t>(), field.parse(e.at(1).get<std::string>())});
        piece.reduction.push_back(std::move(row));
    }
    if (piece.reduction.size() != piece.ambient_monomial_count ||
        piece.ideal_dim + piece.quotient_basis.size() != piece.ambient_monomial_count)
        throw std::runtime_error("inconsistent cached graded piece");
    return piece;
}

/// Truncated coordinate ring R_0..R_top of a presentation, together with
/// multiplication by each variable R_a -> R_{a+1}. Built eagerly and
/// immutable afterwards.
template <class F>
class CoordinateRing {
public:
    CoordinateRing(const Presentation& P, F field, std::size_t top_degree, const PieceCache* cache = nullptr)
        : presentation_(P), field_(std::move(field)), top_degree_(top_degree)
    {
        for (std::size_t m = 0; m <= top_degree_; ++m) {
            bases_.emplace_back(P.nvars(), m);
            pieces_.push_back(load_or_build(m, cache));
        }
        for (std::size_t a = 0; a < top_degree_; ++a)
            mult_.push_back(build_mult(a));
    }

    const Presentation& presentation() const { return presentation_; }
    const F& field() const { return field_; }
    std::size_t nvars() const { return presentation_.nvars(); }
    std::size_t top_degree() const { return top_degree_; }

    const GradedPiece<F>& piece(std::size_t m) const { return pieces_.at(m); }
    const MonomialBasis& monomials(std::size_t m) const { return bases_.at(m); }

    /// dim R_m; 0 for negative degrees.
    std::size_t dim(std::int64_t m) const
    {
        if (m < 0)
            return 0;
        return pieces_.at(static_cast<std::size_t>(m)).dim();
    }

    /// Multiplication by x_i as a map R_a -> R_{a+1}: row b is the normal
    /// form of x_i times the b-th basis monomial of R_a.
    const SparseMatrix<F>& mult(std::size_t a, std::size_t i) const { return mult_.at(a).at(i); }

    /// Normal form of an arbitrary monomial of degree <= top_degree.
    SparseRow<F> reduce(const Exponents& e) const
    {
        const auto m = total_degree(e);
        return pieces_.at(m).reduction[bases_.at(m).index_of(e)];
    }

private:
    GradedPiece<F> load_or_build(std::size_t m, const PieceCache* cache) const
    {
        std::string key;
        if (cache) {
            key = PieceCache::key(presentation_.content_hash(), spec_of(field_), m);
            if (auto doc = cache->load(key)) {
                try {
                    return piece_from_json(*doc, field_);
                } catch (const std::exception&) {
                    // unreadable entry: rebuild and overwrite
                }
            }
        }
        auto piece = build_graded_piece(presentation_, field_, bases_[m]);
        if (cache)
            cache->store(key, piece_to_json(piece, field_));
        return piece;
    }

    std::vector<SparseMatrix<F>> build_mult(std::size_t a) const
    {
        std::vector<SparseMatrix<F>> maps;
        const auto& src = pieces_[a];
        const auto& dst = pieces_[a + 1];
        for (std::size_t i = 0; i < nvars(); ++i) {
            std::vector<SparseRow<F>> rows;
            rows.reserve(src.dim());
            for (auto mono_index : src.quotient_basis) {
                Exponents e = bases_[a][mono_index];
                ++e[i];
                rows.push_back(dst.reduction[bases_[a + 1].index_of(e)]);
            }
            maps.emplace_back(field_, src.dim(), dst.dim(), std::move(rows));
        }
        return maps;
    }

    Presentation presentation_;
    F field_;
    std::size_t top_degree_;
    std::vector<MonomialBasis> bases_;
    std::vector<GradedPiece<F>> pieces_;
    std::vector<std::vector<SparseMatrix<F>>> mult_;
};

/// dim R_m for m = 0..top, over the presentation's own field.
std::vector<std::uint64_t> hilbert_function(const Presentation& P, std::size_t top,
                                            const PieceCache* cache = nullptr);

struct HilbertMismatch {
    std::size_t degree;
    std::uint64_t declared;
    std::uint64_t computed;
};

/// Compares dim R_m against a declared Hilbert function; empty means agreement.
std::vector<HilbertMismatch> check_hilbert(const Presentation& P, const std::vector<std::uint64_t>& declared,
                                           const PieceCache* cache = nullptr);

} // namespace koszul
