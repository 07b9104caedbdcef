#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "indep/cli/parser.hpp"
#include "indep/cli/runner.hpp"

int main(int argc, char** argv)
{
    using namespace indep::cli;
    CLI::App app{"Evaluate independence queries over forests, function fields and differential fields"};
    std::string input = "-";
    std::string format = "json";
    RunConfig cfg;
    bool render_only = false;
    app.add_option("script", input, "script file, or - for stdin")->capture_default_str();
    app.add_option("--bound", cfg.bound, "default degree bound")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--order", cfg.order, "default differential order")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--iterations", cfg.iterations, "default closure iterations")->capture_default_str();
    app.add_option("--format", format, "output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "seed recorded with the report")->capture_default_str();
    app.add_option("--limit-vertices", cfg.limit_vertices, "forest size for axioms queries")->capture_default_str();
    app.add_flag("--parallel", cfg.parallel, "evaluate queries concurrently");
    app.add_flag("--timing", cfg.timing, "include per-query wall time");
    app.add_flag("--render", render_only, "print the canonical form of the script and exit");
    CLI11_PARSE(app, argc, argv);

    std::string source;
    if (input == "-") {
        source.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot read " << input << "\n";
            return 2;
        }
        source.assign(std::istreambuf_iterator<char>(in), {});
    }

    Script script;
    try {
        script = parse(source);
    } catch (const ParseError& e) {
        std::cerr << (input == "-" ? "<stdin>" : input) << ":" << e.what() << "\n";
        return 1;
    }
    if (render_only) {
        std::cout << render(script);
        return 0;
    }
    try {
        const Runner runner(script, cfg);
        const auto results = runner.run();
        std::cout << report(results, format == "json" ? Format::json : Format::text, cfg);
        for (const auto& r : results)
            if (r.error) return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
