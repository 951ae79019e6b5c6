#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "koszul/sparse_matrix.hpp"

namespace koszul {

// Coordinate triplet dump, 1-based indices. Values are written as canonical
// residues for GF(p) and as "a/b" for Q; the field is recorded in a comment.

template <class F>
void write_matrix_market(std::ostream& out, const SparseMatrix<F>& m)
{
    out << "%%MatrixMarket matrix coordinate " << (spec_of(m.field()).is_prime() ? "integer" : "rational")
        << " general\n";
    out << "% field " << spec_of(m.field()).to_string() << "\n";
    out << m.nrows() << " " << m.ncols() << " " << m.nnz() << "\n";
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (const auto& e : m.row(i))
            out << (i + 1) << " " << (e.col + 1) << " " << m.field().to_string(e.value) << "\n";
}

template <class F>
SparseMatrix<F> read_matrix_market(std::istream& in, const F& field)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw std::invalid_argument("missing %%MatrixMarket header");
    while (std::getline(in, line) && !line.empty() && line[0] == '%') {
    }
    std::istringstream dims(line);
    std::size_t nrows = 0, ncols = 0, nnz = 0;
    if (!(dims >> nrows >> ncols >> nnz))
        throw std::invalid_argument("bad MatrixMarket size line");
    std::vector<Triplet<F>> triplets;
    triplets.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t i = 0, j = 0;
        std::string value;
        if (!(in >> i >> j >> value) || i == 0 || j == 0)
            throw std::invalid_argument("bad MatrixMarket entry");
        triplets.push_back({i - 1, j - 1, field.parse(value)});
    }
    return SparseMatrix<F>::from_triplets(field, nrows, ncols, std::move(triplets));
}

} // namespace koszul
