// irrmeasure: command-line front end. Every command prints one JSON document
// (or CSV for `profile`) and exits 0 on success, 1 on a domain error and 2
// when an exact comparison hit the precision cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "irrmeasure/certificates.hpp"
#include "irrmeasure/theorems.hpp"

namespace {

using irrmeasure::Error;
using irrmeasure::ErrorCode;
using irrmeasure::Integer;
using nlohmann::json;

struct RunConfig {
    unsigned digits = 12;
    unsigned long precision_cap_bits = irrmeasure::kDefaultPrecisionCapBits;
    std::size_t max_depth = 200;
    std::optional<std::string> output;

    std::string number;
    std::string alpha;
    std::string beta;
    std::string t = "1";
    std::string from = "1";
    std::optional<std::string> bound;
    std::string epsilon = "0.06";
    std::optional<std::string> slack;
    std::size_t count = 10;

    irrmeasure::RenderOptions render() const { return {digits, precision_cap_bits}; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_json(const RunConfig& cfg, const std::string& command) {
    if (cfg.output && *cfg.output != "json") {
        throw Error(ErrorCode::InvalidArgument, "'" + command + "' only writes json");
    }
}

Integer bound_or(const RunConfig& cfg, const char* fallback) {
    return irrmeasure::parse_integer(cfg.bound.value_or(fallback));
}

void cmd_expand(const RunConfig& cfg) {
    require_json(cfg, "expand");
    auto n = irrmeasure::parse_number(cfg.number);
    json convs = json::array();
    for (const auto& c : irrmeasure::convergents(n.cf, std::min<std::size_t>(cfg.max_depth, 10))) {
        convs.push_back({{"index", c.index}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
    }
    emit({{"kind", "expansion"},
          {"number", cfg.number},
          {"cf", n.cf.to_string()},
          {"exact_value", n.value.to_string()},
          {"decimal", irrmeasure::render_decimal(irrmeasure::Expr(n.value), cfg.digits, cfg.precision_cap_bits)},
          {"convergents", convs}});
}

void cmd_psi(const RunConfig& cfg) {
    require_json(cfg, "psi");
    auto n = irrmeasure::parse_irrational(cfg.number);
    auto v = irrmeasure::psi(n.cf, irrmeasure::parse_integer(cfg.t));
    json j = irrmeasure::to_json(v, cfg.render());
    j["t"] = cfg.t;
    emit(j);
}

void cmd_profile(const RunConfig& cfg) {
    auto alpha = irrmeasure::parse_irrational(cfg.alpha);
    auto beta = irrmeasure::parse_irrational(cfg.beta);
    auto profile = irrmeasure::breakpoint_profile(alpha, beta, irrmeasure::parse_integer(cfg.from),
                                                  bound_or(cfg, "1000"));
    const std::string format = cfg.output.value_or("csv");
    if (format == "csv") {
        std::ostringstream out;
        irrmeasure::write_profile_csv(out, profile, cfg.digits, cfg.precision_cap_bits);
        std::cout << out.str();
        return;
    }
    json entries = json::array();
    for (const auto& e : profile.entries) {
        entries.push_back({{"t", e.t.get_str()},
                           {"indices", {{"r_alpha", e.r_alpha}, {"r_beta", e.r_beta}}},
                           {"exact_values",
                            {{"inv_psi_alpha", e.inv_psi_alpha.to_string()},
                             {"inv_psi_beta", e.inv_psi_beta.to_string()}}},
                           {"d", e.d().decimal(cfg.digits, cfg.precision_cap_bits)}});
    }
    json flips = json::array();
    for (const auto& t : irrmeasure::sign_changes(profile, cfg.precision_cap_bits)) flips.push_back(t.get_str());
    emit({{"kind", "profile"}, {"entries", entries}, {"sign_changes", flips}});
}

void cmd_witness(const RunConfig& cfg) {
    require_json(cfg, "witness");
    auto alpha = irrmeasure::parse_irrational(cfg.alpha);
    auto beta = irrmeasure::parse_irrational(cfg.beta);
    auto w = irrmeasure::find_witness(alpha, beta, irrmeasure::parse_integer(cfg.from),
                                      bound_or(cfg, "1000000000000"), cfg.precision_cap_bits);
    emit(irrmeasure::to_json(w, cfg.render()));
}

void cmd_word(const RunConfig& cfg) {
    require_json(cfg, "word");
    auto alpha = irrmeasure::parse_irrational(cfg.alpha);
    auto beta = irrmeasure::parse_irrational(cfg.beta);
    emit(irrmeasure::to_json(irrmeasure::merged_word(alpha, beta, cfg.count)));
}

void cmd_lemmas(const RunConfig& cfg) {
    require_json(cfg, "lemmas");
    auto alpha = irrmeasure::parse_irrational(cfg.alpha);
    auto beta = irrmeasure::parse_irrational(cfg.beta);
    const auto opt = cfg.render();
    json conseq = json::array();
    for (const auto& c : irrmeasure::scan_lemma_conseq(alpha, beta, cfg.max_depth)) conseq.push_back(to_json(c, "conseq"));
    json conseq1 = json::array();
    for (const auto& c : irrmeasure::scan_lemma_conseq1(alpha, beta, cfg.max_depth)) {
        conseq1.push_back(to_json(c, "conseq1"));
    }
    json gaps = json::array();
    for (const auto& c : irrmeasure::scan_interleave_gap(alpha, beta, cfg.max_depth, cfg.precision_cap_bits)) {
        gaps.push_back(to_json(c, opt));
    }
    json dichotomy = json::array();
    for (const auto& r : irrmeasure::scan_dichotomy(alpha, beta, cfg.max_depth, cfg.precision_cap_bits)) {
        dichotomy.push_back(to_json(r, opt));
    }
    emit({{"kind", "lemmas"},
          {"max_depth", cfg.max_depth},
          {"conseq", conseq},
          {"conseq1", conseq1},
          {"interleave_gap", gaps},
          {"dichotomy", dichotomy}});
}

irrmeasure::Rat epsilon_of(const RunConfig& cfg) { return irrmeasure::parse_rat(cfg.epsilon); }

void cmd_construct(const RunConfig& cfg) {
    require_json(cfg, "construct-optimal");
    emit(irrmeasure::to_json(irrmeasure::construct_optimal(epsilon_of(cfg), cfg.precision_cap_bits), cfg.render()));
}

void cmd_verify(const RunConfig& cfg) {
    require_json(cfg, "verify-optimal");
    irrmeasure::Rat eps = epsilon_of(cfg);
    auto pair = irrmeasure::construct_optimal(eps, cfg.precision_cap_bits);
    irrmeasure::Rat slack = cfg.slack ? irrmeasure::parse_rat(*cfg.slack) : irrmeasure::Rat(5 * eps);
    Integer from = irrmeasure::parse_integer(cfg.from == "1" ? "1000000" : cfg.from);
    auto report = irrmeasure::verify_near_optimality(pair, from, bound_or(cfg, "1000000000000"), slack,
                                                    cfg.precision_cap_bits);
    json j = irrmeasure::to_json(report, cfg.render());
    j["pair"] = irrmeasure::to_json(pair, cfg.render());
    j["slack"] = slack.get_str();
    emit(j);
}

void cmd_constants(const RunConfig& cfg) {
    require_json(cfg, "constants");
    using namespace irrmeasure::constants;
    auto dec = [&](const irrmeasure::Expr& e) {
        return irrmeasure::render_decimal(e, cfg.digits, cfg.precision_cap_bits);
    };
    emit({{"kind", "constants"},
          {"digits", cfg.digits},
          {"tau", dec(expr(Name::Tau))},
          {"phi", dec(expr(Name::Phi))},
          {"K", dec(K())},
          {"C", dec(C())},
          {"2C+1", dec(irrmeasure::Expr(2L) * C() + irrmeasure::Expr(1L))}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irrationality measure functions of quadratic irrationals"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--digits", cfg.digits, "Decimal digits in rendered values")->check(CLI::PositiveNumber);
    app.add_option("--precision-cap-bits", cfg.precision_cap_bits, "Precision cap for exact comparisons")
        ->check(CLI::Range(64UL, 1UL << 24));
    app.add_option("--max-depth", cfg.max_depth, "Index depth for lemma scans")->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* expand = app.add_subcommand("expand", "Continued fraction of a number");
    expand->add_option("--number", cfg.number)->required();
    auto* psi = app.add_subcommand("psi", "psi_x(t) and 1/psi_x(t)");
    psi->add_option("--number", cfg.number)->required();
    psi->add_option("--t", cfg.t);

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha)->required();
        sub->add_option("--beta", cfg.beta)->required();
    };
    auto* profile = app.add_subcommand("profile", "Breakpoint profile of d(t)");
    add_pair(profile);
    profile->add_option("--from", cfg.from);
    profile->add_option("--bound", cfg.bound);
    auto* witness = app.add_subcommand("witness", "Smallest t >= from with |d(t)| >= C t");
    add_pair(witness);
    witness->add_option("--from", cfg.from);
    witness->add_option("--bound", cfg.bound);
    auto* word = app.add_subcommand("word", "Merged denominator word");
    add_pair(word);
    word->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
    auto* lemmas = app.add_subcommand("lemmas", "Coincidence, dichotomy and interleave scans");
    add_pair(lemmas);
    auto* construct = app.add_subcommand("construct-optimal", "Near-optimal pair (tau, theta)");
    construct->add_option("--epsilon", cfg.epsilon);
    auto* verify = app.add_subcommand("verify-optimal", "Check max |d(t)|/t for the near-optimal pair");
    verify->add_option("--epsilon", cfg.epsilon);
    verify->add_option("--from", cfg.from);
    verify->add_option("--bound", cfg.bound);
    verify->add_option("--slack", cfg.slack);
    auto* constants = app.add_subcommand("constants", "tau, phi, K, C");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*expand) cmd_expand(cfg);
        else if (*psi) cmd_psi(cfg);
        else if (*profile) cmd_profile(cfg);
        else if (*witness) cmd_witness(cfg);
        else if (*word) cmd_word(cfg);
        else if (*lemmas) cmd_lemmas(cfg);
        else if (*construct) cmd_construct(cfg);
        else if (*verify) cmd_verify(cfg);
        else if (*constants) cmd_constants(cfg);
    } catch (const Error& e) {
        emit(irrmeasure::to_json(e));
        return e.code() == ErrorCode::UndecidedSign ? 2 : 1;
    }
    return 0;
}
