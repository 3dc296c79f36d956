#include "digitroot/cli.hpp"

#include <cstdint>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitroot/complexity.hpp"
#include "digitroot/oracle.hpp"
#include "digitroot/tableau.hpp"

namespace digitroot::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t default_verify_seed = 42424242;

ordered_json counters_to_json(const OpCounters& counters) {
    ordered_json j;
    j["M"] = counters.multiplications;
    j["A"] = counters.additions;
    j["D"] = counters.divisions;
    j["S"] = counters.subtractions;
    j["lookups"] = counters.lookups;
    return j;
}

ordered_json trace_to_json(const std::vector<TraceEvent>& trace) {
    ordered_json array = ordered_json::array();
    for (const TraceEvent& event : trace) {
        ordered_json e;
        e["kind"] = std::string(trace_event_kind_name(event.kind));
        e["position"] = event.position;
        ordered_json operands = ordered_json::array();
        for (const DecimalNatural& operand : event.operands) {
            operands.push_back(operand.to_string());
        }
        e["operands"] = std::move(operands);
        e["result"] = event.result.to_string();
        array.push_back(std::move(e));
    }
    return array;
}

std::string format_event(const TraceEvent& event) {
    std::string line{trace_event_kind_name(event.kind)};
    line += " @" + std::to_string(event.position);
    if (!event.operands.empty()) {
        line += " ";
        for (std::size_t i = 0; i < event.operands.size(); ++i) {
            if (i > 0) {
                line += ", ";
            }
            line += event.operands[i].to_string();
        }
    }
    line += " -> " + event.result.to_string();
    return line;
}

struct ExtractOptions {
    std::string number;
    bool tableau = false;
    bool trace = false;
    bool count_ops = false;
    bool json = false;
};

int run_extract(RootKind kind, const ExtractOptions& options, std::ostream& out,
                std::ostream& err) {
    DecimalNatural input;
    try {
        input = DecimalNatural::from_decimal_string(options.number);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const RootResult result = extract_root(input, kind);

    if (options.json) {
        ordered_json envelope;
        envelope["input"] = input.to_string();
        envelope["k"] = exponent(kind);
        envelope["root"] = result.root.to_string();
        envelope["remainder"] = result.remainder.to_string();
        envelope["iterations"] = result.iterations;
        envelope["adjustments"] = count_adjustments(result.trace);
        if (options.trace) {
            envelope["trace"] = trace_to_json(result.trace);
        }
        if (options.count_ops) {
            const ComplexityReport report = compare(result, kind);
            envelope["counters"] = counters_to_json(report.measured);
            envelope["predicted"] = counters_to_json(report.predicted);
        }
        out << envelope.dump(2) << "\n";
        return 0;
    }

    out << result.root.to_string();
    if (!result.remainder.is_zero()) {
        out << " r " << result.remainder.to_string();
    }
    out << "\n";
    if (options.tableau) {
        out << render_text(result, input, kind);
    }
    if (options.trace) {
        for (const TraceEvent& event : result.trace) {
            out << format_event(event) << "\n";
        }
    }
    if (options.count_ops) {
        out << render_text(compare(result, kind));
    }
    return 0;
}

struct VerifyOptions {
    int k = 0;
    std::string max;
    std::uint64_t random_count = 0;
    std::size_t digits = 0;
    std::uint64_t seed = default_verify_seed;
    bool has_max = false;
    bool has_random = false;
};

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    const RootKind kind = options.k == 2 ? RootKind::square : RootKind::cube;

    oracle::VerifyReport report;
    if (options.has_max) {
        DecimalNatural max;
        try {
            max = DecimalNatural::from_decimal_string(options.max);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        report = oracle::verify_range(DecimalNatural{}, max, kind);
    } else {
        report = oracle::verify_random(options.random_count, options.digits, kind, options.seed);
    }

    if (report.ok()) {
        out << "ok: " << report.checked << " values checked (k=" << options.k << ")\n";
        return 0;
    }
    const oracle::Mismatch& m = *report.smallest_mismatch;
    out << "mismatch at " << m.input.to_string() << ": engine root=" << m.engine_root.to_string()
        << " remainder=" << m.engine_remainder.to_string()
        << ", oracle root=" << m.oracle_root.to_string()
        << " remainder=" << m.oracle_remainder.to_string() << "\n";
    return 3;
}

void add_extract_flags(CLI::App* sub, ExtractOptions& options) {
    sub->add_option("number", options.number, "non-negative decimal integer")->required();
    CLI::Option* tableau =
        sub->add_flag("--tableau", options.tableau, "render the worked long-form layout");
    sub->add_flag("--trace", options.trace, "list every engine action");
    sub->add_flag("--count-ops", options.count_ops, "predicted vs. measured operation counts");
    CLI::Option* json =
        sub->add_flag("--json", options.json, "machine-readable envelope on stdout");
    tableau->excludes(json);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"digit-by-digit integer square and cube roots, with traces, "
                 "operation counts and differential verification"};
    app.require_subcommand(1);

    ExtractOptions sqrt_options;
    CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "floor square root of a decimal integer");
    add_extract_flags(sqrt_cmd, sqrt_options);

    ExtractOptions cbrt_options;
    CLI::App* cbrt_cmd = app.add_subcommand("cbrt", "floor cube root of a decimal integer");
    add_extract_flags(cbrt_cmd, cbrt_options);

    VerifyOptions verify_options;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare the engine against the brute-force oracle");
    verify_cmd->add_option("--k", verify_options.k, "root exponent (2 or 3)")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    CLI::Option* max_opt =
        verify_cmd->add_option("--max", verify_options.max, "exhaustively check [0, max]");
    CLI::Option* random_opt = verify_cmd->add_option("--random", verify_options.random_count,
                                                     "number of random inputs to check");
    CLI::Option* digits_opt = verify_cmd->add_option(
        "--digits", verify_options.digits, "maximum digit length of random inputs (>= 1)");
    verify_cmd->add_option("--seed", verify_options.seed, "random generator seed");
    max_opt->excludes(random_opt);
    random_opt->needs(digits_opt);
    digits_opt->needs(random_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (sqrt_cmd->parsed()) {
            return run_extract(RootKind::square, sqrt_options, out, err);
        }
        if (cbrt_cmd->parsed()) {
            return run_extract(RootKind::cube, cbrt_options, out, err);
        }
        verify_options.has_max = max_opt->count() > 0;
        verify_options.has_random = random_opt->count() > 0;
        if (!verify_options.has_max && !verify_options.has_random) {
            err << "error: verify requires --max or --random\n";
            return 1;
        }
        if (verify_options.has_random && verify_options.digits == 0) {
            err << "error: --digits must be >= 1\n";
            return 1;
        }
        return run_verify(verify_options, out, err);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace digitroot::cli
