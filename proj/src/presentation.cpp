#include "koszul/presentation.hpp"

#include <stdexcept>

namespace koszul {

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

bool vanishes_in(const Polynomial& g, const FieldSpec& field)
{
    if (field.is_rational())
        return g.is_zero();
    PrimeField f(field.characteristic());
    for (const auto& [e, c] : g.terms())
        if (f.from_rational(c) != 0)
            return false;
    return true;
}

} // namespace

Presentation::Presentation(std::size_t ambient_dim, std::vector<Polynomial> generators, FieldSpec field,
                           std::string label, std::vector<std::string> variables,
                           std::optional<std::vector<std::uint64_t>> hilbert_hint)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)), field_(field), label_(std::move(label)),
      variables_(std::move(variables)), hilbert_hint_(std::move(hilbert_hint))
{
    if (variables_.empty())
        variables_ = default_variable_names(nvars());
    if (variables_.size() != nvars())
        throw std::invalid_argument("expected " + std::to_string(nvars()) + " variable names");
    for (const auto& g : generators_) {
        if (g.nvars() != nvars())
            throw std::invalid_argument("generator has wrong number of variables");
        if (vanishes_in(g, field_))
            throw std::invalid_argument("zero generator over " + field_.to_string());
        const int d = g.homogeneous_degree();
        if (d < 0)
            throw std::invalid_argument("generator is not homogeneous: " + g.to_string(variables_));
        if (d == 0)
            throw std::invalid_argument("constant generator defines the empty set");
        if (d == 1)
            has_linear_ = true;
    }
}

Presentation Presentation::with_field(FieldSpec field) const
{
    return Presentation(ambient_dim_, generators_, field, label_, variables_, hilbert_hint_);
}

nlohmann::json Presentation::to_json() const
{
    nlohmann::json doc;
    doc["label"] = label_;
    doc["ambient_dim"] = ambient_dim_;
    doc["variables"] = variables_;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators_)
        gens.push_back(g.to_string(variables_));
    doc["generators"] = gens;
    doc["field"] = field_.to_string();
    if (hilbert_hint_)
        doc["hilbert_hint"] = *hilbert_hint_;
    return doc;
}

Presentation Presentation::from_json(const nlohmann::json& doc)
{
    const auto r = doc.at("ambient_dim").get<std::size_t>();
    std::vector<std::string> names = doc.contains("variables") ? doc["variables"].get<std::vector<std::string>>()
                                                               : default_variable_names(r + 1);
    if (names.size() != r + 1)
        throw std::invalid_argument("variables list must have ambient_dim + 1 entries");
    std::vector<Polynomial> gens;
    for (const auto& g : doc.at("generators"))
        gens.push_back(parse_polynomial(g.get<std::string>(), names));
    FieldSpec field = doc.contains("field") ? FieldSpec::parse(doc["field"].get<std::string>())
                                            : FieldSpec::prime(kDefaultPrime);
    std::optional<std::vector<std::uint64_t>> hint;
    if (doc.contains("hilbert_hint"))
        hint = doc["hilbert_hint"].get<std::vector<std::uint64_t>>();
    std::string label = doc.value("label", std::string("input"));
    return Presentation(r, std::move(gens), field, std::move(label), std::move(names), std::move(hint));
}

std::uint64_t Presentation::content_hash() const
{
    auto doc = to_json();
    doc.erase("label");
    return fnv1a64(doc.dump());
}

} // namespace koszul
