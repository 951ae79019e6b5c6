#include "koszul/bott.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace koszul {

namespace {

mpz_class binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return c;
}

/// chi(P^r, O(a)) = C(a + r, r) read as a polynomial in a.
mpz_class chi_projective(std::size_t r, std::int64_t a)
{
    const auto rr = static_cast<std::int64_t>(r);
    if (a >= 0)
        return binom(a + rr, rr);
    if (a >= -rr)
        return 0;
    mpz_class v = binom(-a - 1, rr);
    return rr % 2 == 0 ? v : mpz_class(-v);
}

std::string join(const Weight& w, std::size_t from, std::size_t to)
{
    std::string out;
    for (std::size_t p = from; p < to; ++p)
        out += (p > from ? "," : "") + std::to_string(w[p]);
    return out;
}

} // namespace

FlagSignature FlagSignature::grassmannian(std::size_t n, std::size_t k)
{
    FlagSignature s{n, {k}};
    s.validate();
    return s;
}

FlagSignature FlagSignature::incidence(std::size_t i, std::size_t r)
{
    if (i < 1 || i > r)
        throw std::invalid_argument("incidence variety needs 1 <= i <= r");
    FlagSignature s{r + 1, {1}};
    if (i > 1)
        s.quotient_blocks.push_back(i - 1);
    s.validate();
    return s;
}

std::vector<std::size_t> FlagSignature::blocks() const
{
    std::vector<std::size_t> out = quotient_blocks;
    const auto used = std::accumulate(quotient_blocks.begin(), quotient_blocks.end(), std::size_t{0});
    if (used < n)
        out.push_back(n - used);
    return out;
}

std::size_t FlagSignature::dimension() const
{
    const auto b = blocks();
    std::size_t d = 0;
    for (std::size_t s = 0; s < b.size(); ++s)
        for (std::size_t t = s + 1; t < b.size(); ++t)
            d += b[s] * b[t];
    return d;
}

void FlagSignature::validate() const
{
    std::size_t used = 0;
    for (auto b : quotient_blocks) {
        if (b == 0)
            throw std::invalid_argument("quotient blocks must be positive");
        used += b;
    }
    if (used > n)
        throw std::invalid_argument("quotient blocks exceed dim V");
}

void validate_weight(const FlagSignature& sig, const Weight& w)
{
    sig.validate();
    if (w.size() != sig.n)
        throw std::invalid_argument("weight has " + std::to_string(w.size()) + " entries, expected " +
                                    std::to_string(sig.n));
    std::size_t start = 0;
    for (auto b : sig.blocks()) {
        for (std::size_t p = start + 1; p < start + b; ++p)
            if (w[p - 1] < w[p])
                throw std::invalid_argument("weight must be weakly decreasing inside each block");
        start += b;
    }
}

Weight parse_weight(const std::string& text, std::vector<std::size_t>* block_sizes)
{
    Weight w;
    std::vector<std::size_t> sizes;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, '|')) {
        if (block.empty() || block.front() == ',' || block.back() == ',')
            throw std::invalid_argument("empty weight entry in '" + text + "'");
        std::stringstream entries(block);
        std::string item;
        std::size_t count = 0;
        while (std::getline(entries, item, ',')) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad weight entry '" + item + "'");
            }
            while (used < item.size() && item[used] == ' ')
                ++used;
            if (used != item.size())
                throw std::invalid_argument("bad weight entry '" + item + "'");
            w.push_back(v);
            ++count;
        }
        if (count == 0)
            throw std::invalid_argument("empty weight block");
        sizes.push_back(count);
    }
    if (w.empty())
        throw std::invalid_argument("empty weight");
    if (block_sizes)
        *block_sizes = sizes;
    return w;
}

std::string format_weight(const FlagSignature& sig, const Weight& w)
{
    std::string out;
    std::size_t start = 0;
    for (auto b : sig.blocks()) {
        if (start > 0)
            out += "|";
        out += join(w, start, start + b);
        start += b;
    }
    return out;
}

nlohmann::json BottResult::to_json() const
{
    if (zero)
        return {{"zero", true}};
    nlohmann::json d = dim.fits_slong_p() ? nlohmann::json(dim.get_si()) : nlohmann::json(dim.get_str());
    return {{"degree", degree}, {"weight", weight}, {"dim", d}};
}

mpz_class weyl_dim(const Weight& lambda)
{
    for (std::size_t p = 1; p < lambda.size(); ++p)
        if (lambda[p - 1] < lambda[p])
            throw std::invalid_argument("Weyl dimension needs a weakly decreasing weight");
    mpz_class num = 1, den = 1;
    const auto n = static_cast<std::int64_t>(lambda.size());
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            num *= mpz_class(std::to_string(lambda[i] - lambda[j] + j - i));
            den *= mpz_class(std::to_string(j - i));
        }
    return num / den;
}

BottResult bott_cohomology(const FlagSignature& sig, const Weight& w)
{
    validate_weight(sig, w);
    const auto n = static_cast<std::int64_t>(sig.n);
    Weight shifted(w.size());
    for (std::int64_t p = 0; p < n; ++p)
        shifted[p] = w[p] + (n - 1 - p);
    // inversions = number of transpositions bubble sort needs for a descending order
    std::size_t inversions = 0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = a + 1; b < n; ++b) {
            if (shifted[a] == shifted[b])
                return {};
            if (shifted[a] < shifted[b])
                ++inversions;
        }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    BottResult out;
    out.zero = false;
    out.degree = inversions;
    out.weight.resize(w.size());
    for (std::int64_t p = 0; p < n; ++p)
        out.weight[p] = shifted[p] - (n - 1 - p);
    out.dim = weyl_dim(out.weight);
    return out;
}

Weight canonical_weight(const FlagSignature& sig)
{
    const auto b = sig.blocks();
    Weight w;
    std::int64_t before = 0;
    const auto total = static_cast<std::int64_t>(sig.n);
    for (auto size : b) {
        const auto s = static_cast<std::int64_t>(size);
        const std::int64_t after = total - before - s;
        for (std::int64_t t = 0; t < s; ++t)
            w.push_back(before - after);
        before += s;
    }
    return w;
}

Weight dual_weight(const FlagSignature& sig, const Weight& w)
{
    validate_weight(sig, w);
    Weight out(w.size());
    std::size_t start = 0;
    for (auto b : sig.blocks()) {
        for (std::size_t t = 0; t < b; ++t)
            out[start + t] = -w[start + b - 1 - t];
        start += b;
    }
    return out;
}

Weight serre_dual(const FlagSignature& sig, const Weight& w)
{
    auto out = dual_weight(sig, w);
    const auto k = canonical_weight(sig);
    for (std::size_t p = 0; p < out.size(); ++p)
        out[p] += k[p];
    return out;
}

RelativeBottResult relative_bott(const FlagSignature& sig, const Weight& w)
{
    validate_weight(sig, w);
    if (sig.quotient_blocks.empty())
        throw std::invalid_argument("relative Bott needs at least one quotient block");
    const auto head = sig.quotient_blocks.front();
    FlagSignature fibre{sig.n - head, {sig.quotient_blocks.begin() + 1, sig.quotient_blocks.end()}};
    RelativeBottResult out;
    out.base_weight.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(head));
    out.fibre = bott_cohomology(fibre, Weight(w.begin() + static_cast<std::ptrdiff_t>(head), w.end()));
    return out;
}

Weight wedge_quotient_weight(std::size_t n, std::size_t k, std::size_t j)
{
    if (j > k || k > n)
        throw std::invalid_argument("wedge power out of range");
    Weight w(n, 0);
    std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j), 1);
    return w;
}

Weight wedge_sub_dual_weight(std::size_t n, std::size_t k, std::size_t j)
{
    if (k > n || j > n - k)
        throw std::invalid_argument("wedge power out of range");
    Weight w(n, 0);
    std::fill(w.end() - static_cast<std::ptrdiff_t>(j), w.end(), -1);
    return w;
}

nlohmann::json TermCheck::to_json() const
{
    nlohmann::json pieces_doc = nlohmann::json::array();
    for (const auto& p : pieces) {
        pieces_doc.push_back({{"bundle", p.bundle},
                              {"weight", p.weight},
                              {"cohomology", p.global.to_json()},
                              {"base_twist", p.relative.base_weight},
                              {"direct_image", p.relative.fibre.to_json()}});
    }
    return {{"kind", kind},
            {"j", j},
            {"term", description},
            {"status", status},
            {"expected", expected.get_str()},
            {"computed", computed.get_str()},
            {"direct_image_rank", relative_rank.get_str()},
            {"direct_image_concentrated", relative_concentrated},
            {"pieces", pieces_doc}};
}

bool Theorem25Report::product_terms_green() const
{
    return std::all_of(terms.begin(), terms.end(),
                       [](const TermCheck& t) { return t.kind != "product" || t.status == "exact"; });
}

bool Theorem25Report::all_consistent() const
{
    return std::none_of(terms.begin(), terms.end(), [](const TermCheck& t) { return t.status == "fail"; });
}

nlohmann::json Theorem25Report::to_json() const
{
    nlohmann::json t = nlohmann::json::array();
    for (const auto& term : terms)
        t.push_back(term.to_json());
    return {{"i", i},
            {"r", r},
            {"product_terms_green", product_terms_green()},
            {"all_consistent", all_consistent()},
            {"terms", t}};
}

Theorem25Report verify_theorem25_terms(std::size_t i, std::size_t r)
{
    if (i < 1 || i > r)
        throw std::invalid_argument("need 1 <= i <= r");
    const std::size_t n = r + 1;
    Theorem25Report report{i, r, {}};

    // O(-j) (x) Lambda^{n-j} S^dual on P^r x Grass_i(V), j = i..n
    const auto grass = FlagSignature::grassmannian(n, i);
    for (std::size_t j = i; j <= n; ++j) {
        TermCheck t;
        t.kind = "product";
        t.j = j;
        t.description = "O(-" + std::to_string(j) + ") x wedge^" + std::to_string(n - j) + " S^dual";
        PieceCheck piece;
        piece.bundle = "wedge^" + std::to_string(n - j) + " S^dual";
        piece.weight = wedge_sub_dual_weight(n, i, n - j);
        piece.global = bott_cohomology(grass, piece.weight);
        piece.relative.base_weight = {-static_cast<std::int64_t>(j)};
        piece.relative.fibre = piece.global;
        t.pieces.push_back(piece);
        t.expected = binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(j));
        t.computed = piece.global.zero ? mpz_class(0) : piece.global.dim;
        t.relative_rank = t.computed;
        t.relative_concentrated = piece.global.zero || piece.global.degree == 0;
        t.status = (t.relative_concentrated && t.computed == t.expected) ? "exact" : "fail";
        report.terms.push_back(std::move(t));
    }

    // O(-j) (x) Lambda^j Q on the incidence variety, j = 0..i-1, filtered by
    // Lambda^j K and Lambda^{j-1} K (x) O(1) where K = ker(Q -> O(1)).
    const auto inc = FlagSignature::incidence(i, r);
    for (std::size_t j = 0; j < i; ++j) {
        TermCheck t;
        t.kind = "incidence";
        t.j = j;
        t.description = "O(-" + std::to_string(j) + ") x wedge^" + std::to_string(j) + " Q on I";
        const auto sj = static_cast<std::int64_t>(j);
        {
            PieceCheck a;
            a.bundle = "O(-" + std::to_string(j) + ") x wedge^" + std::to_string(j) + " K";
            a.weight.assign(n, 0);
            a.weight[0] = -sj;
            for (std::size_t p = 0; p < j; ++p)
                a.weight[1 + p] = 1;
            t.pieces.push_back(a);
        }
        if (j >= 1) {
            PieceCheck b;
            b.bundle = "O(" + std::to_string(1 - sj) + ") x wedge^" + std::to_string(j - 1) + " K";
            b.weight.assign(n, 0);
            b.weight[0] = 1 - sj;
            for (std::size_t p = 0; p + 1 < j; ++p)
                b.weight[1 + p] = 1;
            t.pieces.push_back(b);
        }
        mpz_class chi = 0;
        std::optional<std::size_t> common_degree;
        bool single_degree = true;
        t.relative_rank = 0;
        for (auto& piece : t.pieces) {
            piece.global = bott_cohomology(inc, piece.weight);
            piece.relative = relative_bott(inc, piece.weight);
            if (!piece.global.zero) {
                chi += piece.global.degree % 2 == 0 ? piece.global.dim : mpz_class(-piece.global.dim);
                if (common_degree && *common_degree != piece.global.degree)
                    single_degree = false;
                common_degree = piece.global.degree;
            }
            if (!piece.relative.fibre.zero) {
                t.relative_rank += piece.relative.fibre.dim;
                if (piece.relative.fibre.degree != 0)
                    t.relative_concentrated = false;
            }
        }
        const auto rank = binom(static_cast<std::int64_t>(n), sj);
        t.expected = rank * chi_projective(r, -sj);
        t.computed = chi;
        const bool relative_ok = t.relative_concentrated && t.relative_rank == rank;
        if (!relative_ok || chi != t.expected)
            t.status = "fail";
        else if (single_degree)
            t.status = "exact";
        else
            t.status = "euler";
        report.terms.push_back(std::move(t));
    }
    return report;
}

RestrictionCheck check_section_restriction(std::size_t i, std::size_t r, std::size_t k, std::int64_t twist)
{
    if (k + 1 > i)
        throw std::invalid_argument("restriction statement needs k <= i - 1");
    const std::size_t n = r + 1;
    RestrictionCheck out{i, r, k, twist, 0, 0, true};

    const auto on_grass = bott_cohomology(FlagSignature::grassmannian(n, i), wedge_quotient_weight(n, i, k));
    if (!on_grass.zero && on_grass.degree != 0)
        out.higher_vanish = false;
    const mpz_class h0_twist = twist >= 0 ? chi_projective(r, twist) : mpz_class(0);
    out.grassmannian_side = h0_twist * (on_grass.zero ? mpz_class(0) : on_grass.dim);

    const auto inc = FlagSignature::incidence(i, r);
    Weight a(n, 0), b(n, 0);
    a[0] = twist;
    for (std::size_t p = 0; p < k; ++p)
        a[1 + p] = 1;
    b[0] = twist + 1;
    for (std::size_t p = 0; p + 1 < k; ++p)
        b[1 + p] = 1;
    std::vector<Weight> pieces{a};
    if (k >= 1)
        pieces.push_back(b);
    for (const auto& w : pieces) {
        auto res = bott_cohomology(inc, w);
        if (res.zero)
            continue;
        if (res.degree != 0)
            out.higher_vanish = false;
        else
            out.incidence_side += res.dim;
    }
    return out;
}

} // namespace koszul
