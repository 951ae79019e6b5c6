#include "koszul/koszul.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace koszul {

std::optional<std::uint64_t> BettiTable::at(std::size_t p, std::size_t q) const
{
    auto it = entries.find({p, q});
    if (it == entries.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> BettiTable::holes() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [cell, value] : entries)
        if (!value)
            out.push_back(cell);
    return out;
}

nlohmann::json BettiTable::to_json() const
{
    nlohmann::json doc;
    doc["model"] = model;
    doc["field"] = field.to_string();
    doc["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    doc["p_max"] = p_max;
    doc["q_max"] = q_max;
    doc["nvars"] = nvars;
    auto cells = nlohmann::json::array();
    auto missing = nlohmann::json::array();
    for (const auto& [cell, value] : entries) {
        if (value)
            cells.push_back({cell.first, cell.second, *value});
        else
            missing.push_back({cell.first, cell.second});
    }
    doc["entries"] = std::move(cells);
    doc["holes"] = std::move(missing);
    doc["hilbert"] = hilbert;
    return doc;
}

BettiTable BettiTable::from_json(const nlohmann::json& doc)
{
    BettiTable t;
    t.model = doc.at("model").get<std::string>();
    t.field = FieldSpec::parse(doc.at("field").get<std::string>());
    if (doc.contains("seed") && !doc["seed"].is_null())
        t.seed = doc["seed"].get<std::uint64_t>();
    t.p_max = doc.value("p_max", std::size_t{0});
    t.q_max = doc.value("q_max", std::size_t{0});
    t.nvars = doc.value("nvars", std::size_t{0});
    for (const auto& e : doc.at("entries"))
        t.entries[{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()}] = e.at(2).get<std::uint64_t>();
    if (doc.contains("holes"))
        for (const auto& h : doc["holes"])
            t.entries[{h.at(0).get<std::size_t>(), h.at(1).get<std::size_t>()}] = std::nullopt;
    if (doc.contains("hilbert"))
        t.hilbert = doc["hilbert"].get<std::vector<std::uint64_t>>();
    return t;
}

std::string BettiTable::render() const
{
    auto cell_text = [&](std::size_t p, std::size_t q) -> std::string {
        auto it = entries.find({p, q});
        if (it == entries.end() || !it->second)
            return "?";
        return *it->second == 0 ? "." : std::to_string(*it->second);
    };
    std::vector<std::string> totals;
    for (std::size_t p = 0; p <= p_max; ++p) {
        std::uint64_t sum = 0;
        bool known = true;
        for (std::size_t q = 0; q <= q_max; ++q) {
            auto v = at(p, q);
            if (!v)
                known = false;
            else
                sum += *v;
        }
        totals.push_back(known ? std::to_string(sum) : "?");
    }
    std::size_t width = 1;
    for (std::size_t p = 0; p <= p_max; ++p) {
        width = std::max(width, totals[p].size());
        width = std::max(width, std::to_string(p).size());
        for (std::size_t q = 0; q <= q_max; ++q)
            width = std::max(width, cell_text(p, q).size());
    }
    std::ostringstream out;
    const std::string label_pad(6, ' ');
    out << label_pad;
    for (std::size_t p = 0; p <= p_max; ++p)
        out << ' ' << std::setw(static_cast<int>(width)) << p;
    out << "\ntotal:";
    for (std::size_t p = 0; p <= p_max; ++p)
        out << ' ' << std::setw(static_cast<int>(width)) << totals[p];
    out << '\n';
    for (std::size_t q = 0; q <= q_max; ++q) {
        out << std::setw(5) << q << ':';
        for (std::size_t p = 0; p <= p_max; ++p)
            out << ' ' << std::setw(static_cast<int>(width)) << cell_text(p, q);
        out << '\n';
    }
    return out.str();
}

namespace {

template <class F>
constexpr std::size_t bytes_per_entry()
{
    if constexpr (std::is_same_v<F, PrimeField>)
        return 16;
    else
        return 48;
}

template <class F>
BettiTable compute_table(const Presentation& P, const F& field, const BettiOptions& opt)
{
    BettiTable table;
    table.model = P.label();
    table.field = spec_of(field);
    table.seed = opt.seed;
    table.p_max = opt.p_max;
    table.q_max = opt.q_max;
    table.nvars = P.nvars();

    CoordinateRing<F> ring(P.with_field(spec_of(field)), field, opt.q_max + 1, opt.cache);
    for (std::size_t m = 0; m <= opt.q_max + 1; ++m)
        table.hilbert.push_back(ring.dim(static_cast<std::int64_t>(m)));
    KoszulComplex<F> complex(ring);

    // each differential rank is shared by the two homology groups it borders
    std::map<std::pair<std::int64_t, std::int64_t>, std::optional<std::size_t>> ranks;
    auto rank_of = [&](std::int64_t p, std::int64_t q) -> std::optional<std::size_t> {
        if (p <= 0 || q < 0)
            return 0;
        auto it = ranks.find({p, q});
        if (it != ranks.end())
            return it->second;
        std::optional<std::size_t> r;
        const auto bytes = complex.elimination_footprint(p, q) * bytes_per_entry<F>();
        if (!opt.budget_mb || bytes <= *opt.budget_mb * (std::size_t{1} << 20))
            r = complex.differential_rank(p, q);
        ranks[{p, q}] = r;
        return r;
    };

    auto wanted = [&](std::size_t p, std::size_t q) {
        if (opt.cells.empty())
            return true;
        return std::find(opt.cells.begin(), opt.cells.end(), std::make_pair(p, q)) != opt.cells.end();
    };

    for (std::size_t q = 0; q <= opt.q_max; ++q) {
        for (std::size_t p = 0; p <= opt.p_max; ++p) {
            if (!wanted(p, q)) {
                table.entries[{p, q}] = std::nullopt;
                continue;
            }
            const auto pi = static_cast<std::int64_t>(p);
            const auto qi = static_cast<std::int64_t>(q);
            const auto out_rank = rank_of(pi, qi);
            const auto in_rank = rank_of(pi + 1, qi - 1);
            if (!out_rank || !in_rank) {
                table.entries[{p, q}] = std::nullopt;
                continue;
            }
            table.entries[{p, q}] = complex.term_dim(pi, qi) - *out_rank - *in_rank;
        }
    }
    return table;
}

} // namespace

BettiTable betti_table(const Presentation& P, const BettiOptions& options)
{
    return visit_field(P.field(), [&](const auto& field) { return compute_table(P, field, options); });
}

std::uint64_t kpq_dim(const Presentation& P, std::size_t p, std::size_t q, const PieceCache* cache)
{
    return visit_field(P.field(), [&](const auto& field) -> std::uint64_t {
        using F = std::decay_t<decltype(field)>;
        CoordinateRing<F> ring(P, field, q + 1, cache);
        return KoszulComplex<F>(ring).kpq(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
    });
}

std::vector<StrandCheck> hilbert_consistency(const BettiTable& table)
{
    std::vector<StrandCheck> out;
    const auto n = static_cast<std::int64_t>(table.nvars);
    for (std::size_t m = 0; m <= table.p_max + table.q_max; ++m) {
        if (m >= table.hilbert.size())
            break;
        const auto top_p = std::min<std::int64_t>(static_cast<std::int64_t>(m), n);
        bool complete = true;
        std::int64_t betti = 0;
        std::int64_t ring = 0;
        for (std::int64_t p = 0; p <= top_p && complete; ++p) {
            const auto q = static_cast<std::size_t>(static_cast<std::int64_t>(m) - p);
            auto v = table.at(static_cast<std::size_t>(p), q);
            if (!v) {
                complete = false;
                break;
            }
            const std::int64_t sign = p % 2 == 0 ? 1 : -1;
            betti += sign * static_cast<std::int64_t>(*v);
            ring += sign * static_cast<std::int64_t>(binomial(n, p)) * static_cast<std::int64_t>(table.hilbert[q]);
        }
        if (complete)
            out.push_back({m, betti, ring});
    }
    return out;
}

} // namespace koszul
