// nnpoly: command-line front end.
//
//   nnpoly [--output json|text] [--config file] <command> ...
//
// Settings are applied in order: defaults, the config file, NNPOLY_* environment
// variables, then --output.

#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

/// Splits argv into global flags and the command vector.
struct Globals {
    std::string output;
    std::string config;
    std::vector<std::string> rest;
};

Globals split_globals(int argc, char** argv)
{
    Globals g;
    int i = 1;
    for (; i < argc; ++i) {
        const std::string a = argv[i];
        auto take = [&](std::string& dst) {
            if (i + 1 >= argc)
                throw nnpoly::parse_error(a + " needs a value");
            dst = argv[++i];
        };
        if (a == "--output")
            take(g.output);
        else if (a.rfind("--output=", 0) == 0)
            g.output = a.substr(9);
        else if (a == "--config")
            take(g.config);
        else if (a.rfind("--config=", 0) == 0)
            g.config = a.substr(9);
        else
            break;
    }
    g.rest.assign(argv + i, argv + argc);
    return g;
}

void print_help()
{
    std::cout << "usage: nnpoly [--output json|text] [--config <file>] <command> [args]\n\n"
                 "commands:\n"
                 "  factor <poly>                 atom factorizations, lengths, elasticity, delta set, catenary degree\n"
                 "  atom <poly> | prime <poly>    verdict with witness\n"
                 "  encode <poly> [--base a | --mode alpha|eval|eval_N]\n"
                 "  decode <a> <b> | eta <a> <b>\n"
                 "  divisors <poly> | chains <poly>\n"
                 "  lemma3 <poly>...\n"
                 "  psi <poly> | vlambda <poly> <lambda> | valuations <poly>\n"
                 "  in-e <zpoly> | a-lambda <zpoly> <lambda> | root-closure <num> <den>\n"
                 "  weyl apply <op> <poly> | weyl mul <op> <op> | prop-m <zpoly> | delta-map <zpoly>\n"
                 "  ideal classify <gens>... | ideal member <poly> <gens>...\n"
                 "  ideal family <poly> const_ne_1|lead_ne_1|const_div_p|lead_div_p|nonunit [--p p]\n"
                 "  poset ks-demo | poset iso <file> <file> | poset aut <file>\n"
                 "  corpus run [--dir <dir>]\n\n"
                 "exit codes: 0 success, 1 other failure, 2 parse error, 3 resource limit\n";
}

} // namespace

int main(int argc, char** argv)
{
    using namespace nnpoly;
    Config cfg;
    Globals g;
    try {
        g = split_globals(argc, argv);
        if (!g.config.empty())
            cfg = load_config_file(g.config, cfg);
        apply_env(cfg);
        if (!g.output.empty())
            cfg.output = detail::parse_output(g.output);
        cfg.validate();
    } catch (const parse_error& e) {
        std::cerr << "nnpoly: " << e.what() << "\n";
        return cli::ExitCode::parse_failure;
    } catch (const std::exception& e) {
        std::cerr << "nnpoly: " << e.what() << "\n";
        return cli::ExitCode::failure;
    }
    if (g.rest.empty() || g.rest.front() == "--help" || g.rest.front() == "-h" || g.rest.front() == "help") {
        print_help();
        return g.rest.empty() ? cli::ExitCode::parse_failure : cli::ExitCode::ok;
    }

    cli::Dispatcher d(cfg);
    const cli::CommandResult r = d.run(g.rest);
    if (r.exit_code != cli::ExitCode::ok && r.value.contains("error")) {
        std::cerr << "nnpoly: " << r.value["error"]["kind"].get<std::string>() << ": "
                  << r.value["error"]["message"].get<std::string>() << "\n";
        return r.exit_code;
    }
    if (cfg.output == OutputFormat::json)
        std::cout << r.value.dump(2) << "\n";
    else
        std::cout << cli::render_text(r);
    return r.exit_code;
}
