#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "skeinkit/bounds.hpp"
#include "skeinkit/constructors.hpp"
#include "skeinkit/diagram.hpp"
#include "skeinkit/homfly.hpp"
#include "skeinkit/pd_io.hpp"
#include "skeinkit/report_io.hpp"
#include "skeinkit/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

// Engine node ceiling: built-in default, overridden by KNOT_BUDGET, overridden
// in turn by an explicit --budget.
std::uint64_t default_budget() {
    const char* raw = std::getenv("KNOT_BUDGET");
    if (!raw) return 8'000'000;
    std::string text(raw);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("KNOT_BUDGET must be a nonnegative integer, got \"" + text +
                                    "\"");
    return std::stoull(text);
}

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_stream(in);
}

struct InvariantArgs {
    std::string spec;
    std::string pd_path;
    bool from_stdin = false;
    std::uint64_t budget = 0;
    bool budget_set = false;
    std::string emit_poly = "json";
};

int run_invariant(const InvariantArgs& args) {
    int sources = !args.spec.empty() + !args.pd_path.empty() + args.from_stdin;
    if (sources != 1)
        throw std::invalid_argument("invariant needs exactly one of --spec, --pd, --stdin");
    skeinkit::Diagram d;
    if (!args.spec.empty()) {
        d = skeinkit::build_from_spec(args.spec);
    } else if (args.from_stdin) {
        d = skeinkit::parse_pd_text(read_stream(std::cin));
    } else {
        d = skeinkit::parse_pd_text(read_file(args.pd_path));
    }
    skeinkit::EngineOptions opt;
    opt.budget = args.budget_set ? args.budget : default_budget();
    skeinkit::InvariantReport report = skeinkit::invariant_report(d, opt);
    std::cout << skeinkit::report_to_json(report, args.emit_poly == "json") << '\n';
    return 0;
}

struct DoubleArgs {
    std::string spec;
    std::string kind;
    std::string clasp;
    int twists = 0;
    int site = 0;
    bool hidden = false;
};

int run_double(const DoubleArgs& args) {
    skeinkit::Diagram d = skeinkit::build_from_spec(args.spec);
    skeinkit::DoubleOptions opt;
    opt.twists = args.twists;
    opt.site_arc = args.site;
    opt.hidden_twists = args.hidden;
    skeinkit::Diagram result;
    if (args.kind == "flat") {
        if (!args.clasp.empty())
            throw std::invalid_argument("--clasp only applies to --kind wh");
        result = skeinkit::flat_double(d, opt);
    } else {
        if (args.clasp.empty())
            throw std::invalid_argument("--kind wh needs --clasp + or --clasp -");
        result = skeinkit::whitehead_double(d, args.clasp == "+" ? 1 : -1, opt);
    }
    std::cout << skeinkit::to_pd_text(result);
    return 0;
}

struct LedgerArgs {
    int c = 0;
    bool degraded = false;
    bool split_component = false;
    std::string tree_path;
    bool emit_dot = false;
    bool as_json = false;
};

skeinkit::SkeinTree ledger_fixture(const LedgerArgs& args) {
    if (args.split_component) return skeinkit::split_component_fixture(args.c);
    return skeinkit::ladder_fixture(args.c, args.degraded);
}

int run_ledger(const LedgerArgs& args) {
    if (!args.tree_path.empty()) {
        skeinkit::SkeinTree tree = skeinkit::skein_tree_from_json(read_file(args.tree_path));
        auto bounds = skeinkit::propagate(tree);
        if (args.emit_dot) {
            std::cout << skeinkit::to_dot(tree, bounds);
        } else if (args.as_json) {
            std::cout << skeinkit::bounds_to_json(bounds) << '\n';
        } else {
            for (const auto& [node, bound] : bounds)
                std::cout << node << ' ' << skeinkit::to_text(bound) << '\n';
        }
        return 0;
    }
    if (args.c == 0) throw std::invalid_argument("ledger needs --c N or --tree FILE");
    if (args.emit_dot) {
        skeinkit::SkeinTree tree = ledger_fixture(args);
        std::cout << skeinkit::to_dot(tree, skeinkit::propagate(tree));
        return 0;
    }
    if (args.split_component) {
        auto bounds = skeinkit::propagate(skeinkit::split_component_fixture(args.c));
        if (args.as_json) {
            std::cout << skeinkit::bounds_to_json(bounds) << '\n';
        } else {
            for (const char* node : {"K_g", "root"})
                std::cout << node << ' ' << skeinkit::to_text(bounds.at(node)) << '\n';
        }
        bool ok = bounds.at("root") == skeinkit::DegreeBound::exact(2 * args.c - 1);
        return ok ? 0 : kExitVerification;
    }
    if (args.degraded) {
        auto bounds = skeinkit::propagate(skeinkit::ladder_fixture(args.c, true));
        if (args.as_json) {
            std::cout << skeinkit::bounds_to_json(bounds) << '\n';
        } else {
            for (const char* node : {"K_h", "root"})
                std::cout << node << ' ' << skeinkit::to_text(bounds.at(node)) << '\n';
        }
        bool ok = bounds.at("root") == skeinkit::DegreeBound::upper(2 * args.c - 3);
        return ok ? 0 : kExitVerification;
    }
    skeinkit::LedgerReport report = skeinkit::ledger_check(args.c);
    if (args.as_json) {
        std::cout << skeinkit::ledger_report_to_json(report) << '\n';
    } else {
        std::cout << report.transcript;
        if (!report.ok) {
            for (const auto& line : report.lines) {
                if (!line.ok)
                    std::cout << "mismatch " << line.node << ": got " << to_text(line.got)
                              << ", want " << to_text(line.expected) << '\n';
            }
        }
    }
    return report.ok ? 0 : kExitVerification;
}

struct VerifyArgs {
    std::string suite = "paper";
    std::uint64_t budget = 0;
    bool budget_set = false;
    std::uint64_t extended_budget = 64'000'000;
};

int run_verify(const VerifyArgs& args) {
    if (args.suite != "paper")
        throw std::invalid_argument("unknown suite \"" + args.suite + "\" (available: paper)");
    std::uint64_t budget = args.budget_set ? args.budget : default_budget();
    skeinkit::SuiteResult result = skeinkit::run_acceptance_suite(budget, args.extended_budget);
    std::cout << skeinkit::format_suite(result);
    return result.ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact skein engine for oriented link diagrams"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "emit a constructor spec as diagram text");
    std::string build_spec;
    build->add_option("--spec", build_spec, "constructor spec, e.g. pretzel:3,1,1")->required();

    InvariantArgs inv;
    auto* invariant = app.add_subcommand("invariant", "compute the invariant report as JSON");
    invariant->add_option("--spec", inv.spec, "constructor spec");
    invariant->add_option("--pd", inv.pd_path, "diagram text file");
    invariant->add_flag("--stdin", inv.from_stdin, "read diagram text from stdin");
    invariant->add_option("--budget", inv.budget, "engine expansion ceiling")
        ->check(CLI::NonNegativeNumber);
    invariant->add_option("--emit-poly", inv.emit_poly, "polynomial rendering in the report")
        ->check(CLI::IsMember({"text", "json"}));

    DoubleArgs dbl;
    auto* dbl_cmd = app.add_subcommand("double", "double a companion knot, emit diagram text");
    dbl_cmd->add_option("--spec", dbl.spec, "companion constructor spec")->required();
    dbl_cmd->add_option("--kind", dbl.kind, "flat (2-component) or wh (clasped knot)")
        ->required()
        ->check(CLI::IsMember({"flat", "wh"}));
    dbl_cmd->add_option("--clasp", dbl.clasp, "clasp sign for --kind wh")
        ->check(CLI::IsMember({"+", "-"}));
    dbl_cmd->add_option("--n", dbl.twists, "signed full-twist count");
    dbl_cmd->add_option("--site", dbl.site, "companion arc hosting the twist/clasp site");
    dbl_cmd->add_flag("--hidden", dbl.hidden, "park twists inside a doubled-crossing square");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", ver.suite, "suite name (paper)");
    verify->add_option("--budget", ver.budget, "engine expansion ceiling")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--extended-budget", ver.extended_budget,
                       "ceiling for the deep whitehead runs");

    LedgerArgs led;
    auto* ledger = app.add_subcommand("ledger", "degree-bound ladder propagation");
    ledger->add_option("--c", led.c, "companion crossing count (>= 3)");
    auto* degraded_flag =
        ledger->add_flag("--degraded", led.degraded, "use the degraded top-leaf fixture");
    ledger
        ->add_flag("--split-component", led.split_component,
                   "use the unknotted-split-component leaf fixture")
        ->excludes(degraded_flag);
    ledger->add_option("--tree", led.tree_path, "propagate a skein-tree JSON file instead");
    ledger->add_flag("--emit-dot", led.emit_dot, "emit Graphviz with propagated bounds");
    ledger->add_flag("--json", led.as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
        if (invariant->count("--budget")) inv.budget_set = true;
        if (verify->count("--budget")) ver.budget_set = true;
        if (app.got_subcommand(build)) {
            std::cout << skeinkit::to_pd_text(skeinkit::build_from_spec(build_spec));
            return 0;
        }
        if (app.got_subcommand(invariant)) return run_invariant(inv);
        if (app.got_subcommand(dbl_cmd)) return run_double(dbl);
        if (app.got_subcommand(verify)) return run_verify(ver);
        return run_ledger(led);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    } catch (const skeinkit::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (" << e.stats.expansions << " expansions, "
                  << e.stats.memo_entries << " memo entries)\n";
        return kExitBudget;
    } catch (const skeinkit::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
