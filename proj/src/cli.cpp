#include "wz/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wz/cert_discovery.hpp"
#include "wz/errors.hpp"
#include "wz/proof_trace_json.hpp"
#include "wz/selftest.hpp"
#include "wz/term_dsl.hpp"
#include "wz/wz_core.hpp"

namespace wz {

namespace {

using nlohmann::json;

// Malformed input is a usage problem; everything else is a failed check.
int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnsupportedShift:
    case ErrorCode::NonAffineExponent:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::IncompatibleShifts:
    case ErrorCode::BaseNotParameterOnly:
    case ErrorCode::DegenerateBinomial:
        return exit_usage;
    default:
        return exit_failure;
    }
}

struct Io {
    std::ostream& out;
    std::ostream& err;
};

void emit(const Io& io, const json& doc)
{
    io.out << doc.dump(2) << '\n';
}

int cmd_verify(const CliConfig& cfg, const Io& io)
{
    const HyperTerm f = dsl::term_from_source(*cfg.term_src);
    const RationalFunction r = dsl::parse_cert(*cfg.cert_src);
    const RationalFunction residual = verify_pair(f, r);
    const NumericCheck numeric = verify_pair_numeric(f, r, cfg.samples, cfg.seed);
    const bool ok = residual.is_zero() && numeric.pass;
    if (cfg.output_format == OutputFormat::json) {
        json witness = nullptr;
        if (numeric.witness) {
            witness = {{"x", (*numeric.witness)[0].to_string()},
                       {"n", (*numeric.witness)[1].to_string()},
                       {"k", (*numeric.witness)[2].to_string()},
                       {"residual", numeric.witness_value.to_string()}};
        }
        emit(io, {{"term_src", *cfg.term_src},
                  {"certificate", r.to_string()},
                  {"residual", residual.to_string()},
                  {"numeric", {{"pass", numeric.pass}, {"samples", numeric.samples_checked}, {"seed", cfg.seed},
                               {"witness", witness}}},
                  {"wz_pair", ok}});
    } else {
        io.out << "term:        " << *cfg.term_src << '\n'
               << "certificate: " << r.to_string() << '\n'
               << "residual:    " << residual.to_string() << '\n'
               << "numeric:     " << (numeric.pass ? "pass" : "FAIL") << " (" << numeric.message << ")\n"
               << "verdict:     " << (ok ? "WZ pair" : "not a WZ pair") << '\n';
    }
    return ok ? exit_success : exit_failure;
}

int cmd_discover(const CliConfig& cfg, const Io& io)
{
    const HyperTerm f = dsl::term_from_source(*cfg.term_src);
    const Ansatz ansatz = default_ansatz(f, cfg.degree, cfg.span);
    const DiscoveryResult found = discover(f, ansatz);
    if (cfg.output_format == OutputFormat::json) {
        emit(io, {{"term_src", *cfg.term_src},
                  {"degree", cfg.degree},
                  {"span", cfg.span},
                  {"denominator", ansatz.denominator.to_string()},
                  {"numerator_degree_bound", ansatz.degree_bound},
                  {"unknowns", found.unknowns},
                  {"equations", found.equations},
                  {"certificate", found.found() ? json(found.certificate->to_string()) : json(nullptr)}});
    } else {
        io.out << "term:        " << *cfg.term_src << '\n'
               << "denominator: " << ansatz.denominator.to_string() << '\n'
               << "unknowns:    " << found.unknowns << " (numerator degree <= " << ansatz.degree_bound << ")\n"
               << "equations:   " << found.equations << '\n';
        if (found.found()) {
            io.out << "certificate: " << found.certificate->to_string() << '\n';
        }
    }
    if (!found.found()) {
        io.err << found.message << '\n';
        return exit_failure;
    }
    return exit_success;
}

int cmd_telescope(const CliConfig& cfg, const Io& io)
{
    if (cfg.term_src.has_value() != cfg.cert_src.has_value()) {
        io.err << "telescope: give both --term and --cert, or neither for the built-in pair\n";
        return exit_usage;
    }
    const std::string term_src = cfg.term_src.value_or(std::string(chaundy_bullard_term_source));
    const std::string cert_src = cfg.cert_src.value_or(std::string(chaundy_bullard_cert_source));
    const WZPair pair = WZPair::make(dsl::term_from_source(term_src), dsl::parse_cert(cert_src), term_src, cert_src);
    const TelescopeResult t = telescope_check(pair, *cfg.m, *cfg.n);
    std::string lhs = t.lhs.to_string();
    std::string rhs = t.rhs.to_string();
    bool holds = t.holds();
    if (cfg.x_val) {
        const std::array<BigRational, 3> pt{*cfg.x_val, BigRational(0), BigRational(0)};
        const BigRational l = t.lhs.evaluate(pt);
        const BigRational r = t.rhs.evaluate(pt);
        lhs = l.to_string();
        rhs = r.to_string();
        holds = holds && l == r;
    }
    if (cfg.output_format == OutputFormat::json) {
        json doc = {{"term_src", term_src}, {"cert_src", cert_src}, {"m", *cfg.m}, {"n", *cfg.n},
                    {"lhs", lhs},           {"rhs", rhs},           {"holds", holds}};
        if (cfg.x_val) {
            doc["x"] = cfg.x_val->to_string();
        }
        emit(io, doc);
    } else {
        io.out << "m = " << *cfg.m << ", n = " << *cfg.n;
        if (cfg.x_val) {
            io.out << ", x = " << cfg.x_val->to_string();
        }
        io.out << '\n'
               << "lhs: " << lhs << '\n'
               << "rhs: " << rhs << '\n'
               << "verdict: " << (holds ? "lhs = rhs" : "lhs != rhs") << '\n';
    }
    return holds ? exit_success : exit_failure;
}

std::string text_of(const std::optional<RationalFunction>& v)
{
    return v ? v->to_string() : "(step failed)";
}

int cmd_prove(const CliConfig& cfg, const Io& io)
{
    const ProofTrace trace = build_proof_trace(*cfg.m, *cfg.n);
    const json doc = trace_to_json(trace);
    if (cfg.trace_path) {
        std::ofstream file(*cfg.trace_path);
        if (!file) {
            io.err << "cannot write trace file " << *cfg.trace_path << '\n';
            return exit_usage;
        }
        file << doc.dump(2) << '\n';
    }
    if (cfg.output_format == OutputFormat::json) {
        emit(io, doc);
    } else {
        const auto mark = [](bool ok) { return ok ? "ok  " : "FAIL"; };
        const bool wz_ok = trace.wz_residual && trace.wz_residual->is_zero();
        const bool row_ok = trace.initial_row_got && *trace.initial_row_got == trace.initial_row_expected;
        const bool tel_ok = trace.telescope_lhs && trace.telescope_rhs && *trace.telescope_lhs == *trace.telescope_rhs;
        const bool ps_ok = trace.partial_sum && trace.partial_closed && *trace.partial_sum == *trace.partial_closed;
        const bool id_ok = trace.final_identity && *trace.final_identity == MultiPoly(1);
        io.out << "pair:           F = " << trace.term_src << ", R = " << trace.cert_src << '\n'
               << "m = " << trace.m << ", n = " << trace.n << '\n'
               << "[" << mark(wz_ok) << "] WZ equation residual: " << text_of(trace.wz_residual) << '\n'
               << "[" << mark(trace.boundary) << "] G(j,0) = 0\n"
               << "[" << mark(row_ok) << "] sum_k F(0,k) = " << text_of(trace.initial_row_got) << '\n'
               << "[" << mark(tel_ok) << "] telescoping sum: " << text_of(trace.telescope_lhs) << '\n'
               << "[" << mark(ps_ok) << "] partial sum closed form: " << text_of(trace.partial_closed) << '\n'
               << "[" << mark(id_ok) << "] identity expansion: "
               << (trace.final_identity ? trace.final_identity->to_string() : "(step failed)") << '\n';
        io.out << (trace.valid() ? "proof complete" : "proof FAILED") << '\n';
    }
    for (const auto& f : trace.failures) {
        io.err << f << '\n';
    }
    return trace.valid() ? exit_success : exit_failure;
}

int cmd_selftest(const CliConfig& cfg, const Io& io)
{
    SelftestOptions options;
    options.max_grid = cfg.max_grid;
    options.seed = cfg.seed;
    options.property_cases = cfg.property_cases;
    const SelftestReport report = run_selftest(options);
    const SelftestRow* identity = report.find("identity");
    const std::size_t instances = identity ? identity->checked : 0;
    if (cfg.output_format == OutputFormat::json) {
        // No timings, so identical invocations give identical documents.
        json rows = json::array();
        for (const auto& r : report.rows) {
            rows.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}});
        }
        emit(io, {{"max_grid", cfg.max_grid},
                  {"seed", cfg.seed},
                  {"rows", rows},
                  {"identity_instances", instances},
                  {"passed", report.passed()}});
    } else {
        io.out << std::left << std::setw(38) << "check" << std::right << std::setw(9) << "checked" << std::setw(8)
               << "failed" << std::setw(11) << "seconds" << '\n';
        for (const auto& r : report.rows) {
            io.out << std::left << std::setw(38) << r.name << std::right << std::setw(9) << r.checked << std::setw(8)
                   << r.failed << std::setw(11) << std::fixed << std::setprecision(3) << r.seconds << '\n';
        }
        io.out << "seed " << cfg.seed << ", grid 0.." << cfg.max_grid << ", " << instances
               << " identity instances checked\n"
               << "total runtime " << std::fixed << std::setprecision(3) << report.total_seconds << " s\n"
               << (report.passed() ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
    }
    for (const auto& r : report.rows) {
        for (const auto& f : r.failures) {
            io.err << r.name << ": " << f << '\n';
        }
    }
    return report.passed() ? exit_success : exit_failure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Wilf-Zeilberger pair checker and Chaundy-Bullard identity prover", "wzproof"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string x_text;
    bool json_output = false;
    unsigned m = 0, n = 0;

    const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json_output, "Emit JSON instead of text"); };
    const auto add_term = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--term", cfg.term_src, "Hypergeometric term, e.g. \"binom(n+k,k)*x^k*(1-x)^(n+1)\"");
        if (required) {
            opt->required();
        }
    };

    auto* verify = app.add_subcommand("verify", "Check the WZ equation for a term and certificate");
    add_term(verify, true);
    verify->add_option("--cert", cfg.cert_src, "Rational certificate R(n,k), e.g. \"-k/(n+1)\"")->required();
    verify->add_option("--samples", cfg.samples, "Random points for the numeric cross-check")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Seed for the numeric cross-check")->capture_default_str();
    add_json(verify);

    auto* disc = app.add_subcommand("discover", "Search for a rational certificate by linear ansatz");
    add_term(disc, true);
    disc->add_option("--deg", cfg.degree, "Numerator total degree bound")->capture_default_str();
    disc->add_option("--span", cfg.span, "Extra k-shifts of the denominator factors")->capture_default_str();
    add_json(disc);

    auto* tel = app.add_subcommand("telescope", "Evaluate both sides of the telescoping sum identity");
    tel->add_option("--m", m, "Upper summation index")->required();
    tel->add_option("--n", n, "Row index")->required();
    add_term(tel, false);
    tel->add_option("--cert", cfg.cert_src, "Certificate (defaults to the built-in pair together with --term)");
    tel->add_option("--x", x_text, "Evaluate both sides at this rational x (\"p/q\")");
    add_json(tel);

    auto* prove = app.add_subcommand("prove", "Replay the Chaundy-Bullard proof for concrete m, n");
    prove->add_option("--m", m, "m >= 0")->required();
    prove->add_option("--n", n, "n >= 0")->required();
    prove->add_option("--trace", cfg.trace_path, "Write the JSON proof trace to this file");
    add_json(prove);

    auto* self = app.add_subcommand("selftest", "Run the property suites and the (m, n) grid checks");
    self->add_option("--max", cfg.max_grid, "Grid bound for m and n")->capture_default_str();
    self->add_option("--seed", cfg.seed, "Seed for the randomized suites")->capture_default_str();
    self->add_option("--cases", cfg.property_cases, "Cases per property suite")->capture_default_str();
    add_json(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (e.get_exit_code() != 0) {
            err << "run with --help for usage\n";
        }
        return exit_usage;
    }

    cfg.output_format = json_output ? OutputFormat::json : OutputFormat::text;
    const Io io{out, err};
    try {
        if (!x_text.empty()) {
            cfg.x_val = BigRational::parse(x_text);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, io);
        }
        if (disc->parsed()) {
            cfg.command = "discover";
            return cmd_discover(cfg, io);
        }
        cfg.m = m;
        cfg.n = n;
        if (tel->parsed()) {
            cfg.command = "telescope";
            return cmd_telescope(cfg, io);
        }
        if (prove->parsed()) {
            cfg.command = "prove";
            return cmd_prove(cfg, io);
        }
        cfg.command = "selftest";
        return cmd_selftest(cfg, io);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"wzproof"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace wz
