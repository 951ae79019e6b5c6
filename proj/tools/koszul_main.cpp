#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "koszul/bott.hpp"
#include "koszul/cache.hpp"
#include "koszul/chowrr.hpp"
#include "koszul/koszul.hpp"
#include "koszul/models.hpp"
#include "koszul/verify.hpp"

using namespace koszul;

namespace {

enum Exit : int { kPass = 0, kAssertion = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
    std::string model;
    std::string input;
    std::string field = "gfp:65537";
    std::uint64_t seed = 0;
    std::size_t seeds = 5;
    std::size_t p_max = 0;
    bool p_max_set = false;
    std::size_t q_max = 3;
    std::string json_path;
    std::string cache_dir;
    std::optional<std::size_t> budget_mb;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit_json(const nlohmann::json& doc, const std::string& path)
{
    if (path.empty())
        return;
    const std::string text = doc.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot write " + path);
}

/// Text goes to stdout unless the JSON report itself does.
std::ostream& text_out(const RunConfig& cfg)
{
    static std::ostringstream sink;
    if (cfg.json_path == "-") {
        sink.str("");
        return sink;
    }
    return std::cout;
}

std::unique_ptr<PieceCache> open_cache(const RunConfig& cfg)
{
    if (!cfg.cache_dir.empty())
        return std::make_unique<PieceCache>(cfg.cache_dir);
    if (const char* env = std::getenv("KOSZUL_CACHE_DIR"); env && *env)
        return std::make_unique<PieceCache>(PieceCache::default_root());
    return nullptr;
}

Presentation load_presentation(const RunConfig& cfg, const FieldSpec& field)
{
    if (cfg.model.empty() == cfg.input.empty())
        throw UsageError("give exactly one of --model or an input presentation file");
    if (!cfg.model.empty())
        return build(ModelSpec::parse(cfg.model, field, cfg.seed));
    std::ifstream in(cfg.input);
    if (!in)
        throw UsageError("cannot read " + cfg.input);
    return Presentation::from_json(nlohmann::json::parse(in)).with_field(field);
}

void print_report(std::ostream& out, const VerificationReport& r)
{
    out << r.claim << " on " << r.model << " over " << r.field.to_string() << "\n";
    for (const auto& e : r.entries) {
        out << "  [" << e.status << "] " << e.assertion;
        if (e.seed)
            out << " (seed " << *e.seed << ")";
        if (!e.expected.empty())
            out << ": expected " << e.expected << ", computed " << e.computed;
        else if (!e.computed.empty())
            out << ": " << e.computed;
        out << "\n";
    }
    for (const auto& n : r.notes)
        out << "  note: " << n << "\n";
    out << (r.all_pass() ? "PASS" : "FAIL") << "\n";
}

void print_report(std::ostream& out, const ChernReport& r)
{
    out << r.check << " k=" << r.k << " sigma=" << r.sigma << "\n";
    for (const auto& a : r.assertions)
        out << "  [" << (a.pass ? "pass" : "fail") << "] " << a.claim << ": " << a.lhs << " vs " << a.rhs << "\n";
    out << (r.all_pass() ? "PASS" : "FAIL") << "\n";
}

std::vector<std::uint64_t> seed_range(const RunConfig& cfg)
{
    if (cfg.seeds == 0)
        throw UsageError("--seeds must be positive");
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < cfg.seeds; ++i)
        out.push_back(cfg.seed + i);
    return out;
}

int run_betti(const RunConfig& cfg)
{
    const auto field = FieldSpec::parse(cfg.field);
    const auto P = load_presentation(cfg, field);
    auto cache = open_cache(cfg);
    BettiOptions opt;
    opt.p_max = cfg.p_max_set ? cfg.p_max : P.ambient_dim();
    opt.q_max = cfg.q_max;
    opt.budget_mb = cfg.budget_mb;
    opt.cache = cache.get();
    if (!cfg.model.empty())
        opt.seed = cfg.seed;
    const auto table = betti_table(P, opt);
    text_out(cfg) << table.render();
    emit_json(table.to_json(), cfg.json_path);
    if (!table.holes().empty()) {
        std::cerr << nlohmann::json{{"warning", "cells over the memory budget were left as holes"},
                                    {"holes", table.to_json()["holes"]}}
                         .dump()
                  << "\n";
        return kResource;
    }
    return kPass;
}

int finish(const RunConfig& cfg, const VerificationReport& r)
{
    print_report(text_out(cfg), r);
    emit_json(r.to_json(), cfg.json_path);
    return r.all_pass() ? kPass : kAssertion;
}

int run_verify(const std::string& claim, const RunConfig& cfg, int k)
{
    const auto field = FieldSpec::parse(cfg.field);
    if (claim == "thm45")
        return finish(cfg, verify_theorem45(k, field, seed_range(cfg)));
    if (claim == "rem46")
        return finish(cfg, verify_remark46(field, seed_range(cfg)));
    if (claim == "duality") {
        auto cache = open_cache(cfg);
        const auto P = load_presentation(cfg, field);
        BettiOptions opt;
        opt.p_max = cfg.p_max_set ? cfg.p_max : P.ambient_dim();
        opt.q_max = std::max<std::size_t>(cfg.q_max, 2);
        opt.cache = cache.get();
        opt.seed = cfg.seed;
        return finish(cfg, verify_duality(betti_table(P, opt)));
    }
    if (claim == "hyperplane") {
        if (cfg.model.empty())
            throw UsageError("verify hyperplane needs --model");
        const auto spec = ModelSpec::parse(cfg.model, field, cfg.seed);
        std::optional<std::size_t> p_max;
        if (cfg.p_max_set)
            p_max = cfg.p_max;
        return finish(cfg, verify_hyperplane_principle(spec, cfg.seed, p_max, cfg.q_max));
    }
    throw UsageError("unknown claim '" + claim + "'; expected thm45, rem46, duality or hyperplane");
}

int run_bott(const RunConfig& cfg, std::size_t n, const std::vector<std::size_t>& quotient, const std::string& weight,
             const std::vector<std::size_t>& terms)
{
    if (!terms.empty()) {
        if (terms.size() != 2)
            throw UsageError("--terms takes i,r");
        const auto report = verify_theorem25_terms(terms[0], terms[1]);
        const auto doc = report.to_json();
        text_out(cfg) << doc.dump(2) << "\n";
        emit_json(doc, cfg.json_path);
        return report.all_consistent() ? kPass : kAssertion;
    }
    if (n == 0 || quotient.empty() || weight.empty())
        throw UsageError("bott needs --n, --quotient and --weight (or --terms)");
    const FlagSignature sig{n, quotient};
    sig.validate();
    std::vector<std::size_t> sizes;
    const auto w = parse_weight(weight, &sizes);
    if (sizes != sig.blocks())
        throw UsageError("weight blocks do not match --n and --quotient");
    const auto doc = bott_cohomology(sig, w).to_json();
    text_out(cfg) << doc.dump() << "\n";
    emit_json(doc, cfg.json_path);
    return kPass;
}

int run_chern(const RunConfig& cfg, int k, int sigma, const std::string& check)
{
    ChernReport report;
    if (check == "tango") {
        if (sigma != 0)
            throw UsageError("the Tango check is stated for sigma = 0");
        report = verify_tango_constraints(k);
    } else if (check == "thm44") {
        report = verify_theorem44_dims(k, sigma);
    } else if (check == "ladder") {
        report = verify_ladder_complex(k, sigma);
    } else if (check == "counts") {
        report = exterior_power_counts(k, sigma);
    } else {
        throw UsageError("unknown check '" + check + "'; expected tango, thm44, ladder or counts");
    }
    print_report(text_out(cfg), report);
    emit_json(report.to_json(), cfg.json_path);
    return report.all_pass() ? kPass : kAssertion;
}

int run_model_list(const RunConfig& cfg)
{
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& m : list_models()) {
        text_out(cfg) << m.example << "\n    " << m.description << "\n";
        doc.push_back({{"spec", m.example}, {"description", m.description}});
    }
    emit_json(doc, cfg.json_path);
    return kPass;
}

int run_model_export(const RunConfig& cfg)
{
    const auto field = FieldSpec::parse(cfg.field);
    const auto doc = load_presentation(cfg, field).to_json();
    if (cfg.json_path.empty())
        std::cout << doc.dump(2) << "\n";
    emit_json(doc, cfg.json_path);
    return kPass;
}

int error_exit(const char* kind, const std::string& message, int code)
{
    std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
    return code;
}

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--field", cfg.field, "gfp:<p> or qq")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    cmd->add_option("--json", cfg.json_path, "write the JSON report here ('-' for stdout)");
}

void add_table_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--model", cfg.model, "model spec, see 'model list'");
    cmd->add_option("input", cfg.input, "presentation JSON file");
    cmd->add_option_function<std::size_t>(
        "--pmax", [&cfg](std::size_t v) { cfg.p_max = v, cfg.p_max_set = true; }, "largest p (default: r)");
    cmd->add_option("--qmax", cfg.q_max, "largest q")->capture_default_str();
    cmd->add_option("--cache", cfg.cache_dir, "graded-piece cache directory (default: $KOSZUL_CACHE_DIR if set)");
    cmd->add_option("--budget-mb", cfg.budget_mb, "leave cells over this eliminator footprint as holes");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Koszul cohomology, Bott and Riemann-Roch computations for K3 surfaces"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* betti = app.add_subcommand("betti", "compute a Betti table");
    add_common(betti, cfg);
    add_table_options(betti, cfg);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string claim;
    int verify_k = 2;
    verify->add_option("claim", claim, "thm45 | rem46 | duality | hyperplane")->required();
    verify->add_option("--k", verify_k, "k for thm45 (2, 3 or 4)")->capture_default_str();
    verify->add_option("--seeds", cfg.seeds, "number of seeds, starting at --seed")->capture_default_str();
    add_common(verify, cfg);
    add_table_options(verify, cfg);

    auto* bott = app.add_subcommand("bott", "cohomology of a homogeneous bundle");
    std::size_t bott_n = 0;
    std::vector<std::size_t> quotient, terms;
    std::string weight;
    bott->add_option("--n", bott_n, "dim V");
    bott->add_option("--quotient", quotient, "quotient block sizes, e.g. 2 or 1,2")->delimiter(',');
    bott->add_option("--weight", weight, "weight, blocks separated by '|', e.g. \"1,0|0,0,0\"");
    bott->add_option("--terms", terms, "i,r: term-by-term check of the geometric Koszul complex")->delimiter(',');
    bott->add_option("--json", cfg.json_path, "write the JSON result here ('-' for stdout)");

    auto* chern = app.add_subcommand("chern", "Chern character and Riemann-Roch reports");
    int chern_k = 2, sigma = 0;
    std::string check = "thm44";
    chern->add_option("--k", chern_k, "k >= 2")->capture_default_str();
    chern->add_option("--sigma", sigma, "0 or 1")->capture_default_str();
    chern->add_option("--check", check, "tango | thm44 | ladder | counts")->capture_default_str();
    chern->add_option("--json", cfg.json_path, "write the JSON report here ('-' for stdout)");

    auto* model = app.add_subcommand("model", "bundled models");
    model->require_subcommand(1);
    auto* list = model->add_subcommand("list", "list model specs");
    list->add_option("--json", cfg.json_path, "write the list here ('-' for stdout)");
    auto* exp = model->add_subcommand("export", "write a model's presentation as JSON");
    add_common(exp, cfg);
    exp->add_option("--model", cfg.model, "model spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (betti->parsed())
            return run_betti(cfg);
        if (verify->parsed())
            return run_verify(claim, cfg, verify_k);
        if (bott->parsed())
            return run_bott(cfg, bott_n, quotient, weight, terms);
        if (chern->parsed())
            return run_chern(cfg, chern_k, sigma, check);
        if (list->parsed())
            return run_model_list(cfg);
        if (exp->parsed())
            return run_model_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << app.help() << "\n";
        return error_exit("usage", e.what(), kUsage);
    } catch (const std::invalid_argument& e) {
        return error_exit("invalid_argument", e.what(), kUsage);
    } catch (const std::out_of_range& e) {
        return error_exit("out_of_range", e.what(), kUsage);
    } catch (const nlohmann::json::exception& e) {
        return error_exit("bad_json", e.what(), kUsage);
    } catch (const std::bad_alloc&) {
        return error_exit("resource", "out of memory", kResource);
    } catch (const RegenerateSeed& e) {
        return error_exit("degenerate_model", e.what(), kResource);
    } catch (const std::exception& e) {
        return error_exit("computation", e.what(), kAssertion);
    }
    return kUsage;
}
