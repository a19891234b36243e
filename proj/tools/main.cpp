#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char **argv)
{
    using namespace symreal;
    using namespace symreal::cli;

    CLI::App app{"Formal symplectic realizations of polynomial Poisson structures"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "json";
    std::string map = "source";
    std::vector<std::string> checks;
    std::string poisson;
    std::string out_file;

    auto *trees = app.add_subcommand("trees", "Enumerate rooted trees with their symmetry orders");
    auto *weights = app.add_subcommand("weights", "Tabulate tree weights and angle polynomials");
    for (auto *sub : {trees, weights}) {
        sub->add_option("--max-degree", config.max_degree, "Largest tree degree")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    }

    auto *realize = app.add_subcommand("realize", "Compute a realization series");
    realize->add_option("--poisson", poisson, "Poisson structure JSON file")->required();
    realize->add_option("--order", config.order, "Truncation order")->required()->check(CLI::PositiveNumber);
    realize->add_option("--map", map, "Which series")->check(CLI::IsMember({"source", "target", "karasev"}));
    realize->add_option("--out", out_file, "Write the document here instead of stdout");
    realize->add_flag("--strict", config.strict, "Refuse bivectors that fail the Jacobi identity");

    auto *verify = app.add_subcommand("verify", "Run exact identity checks");
    verify->add_option("--poisson", poisson, "Poisson structure JSON file")->required();
    verify->add_option("--order", config.order, "Truncation order")->required()->check(CLI::PositiveNumber);
    verify->add_option("--checks", checks, "bracket,compare,h1,homogeneity,pairing,linear")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"bracket", "compare", "h1", "homogeneity", "pairing", "linear"}));
    verify->add_flag("--strict", config.strict, "Refuse bivectors that fail the Jacobi identity");

    auto *jacobi = app.add_subcommand("jacobi", "Check the Jacobi identity");
    jacobi->add_option("--poisson", poisson, "Poisson structure JSON file")->required();
    jacobi->add_flag("--strict", config.strict, "Exit 1 when the identity fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (*trees) {
        config.subcommand = Subcommand::trees;
    } else if (*weights) {
        config.subcommand = Subcommand::weights;
    } else if (*realize) {
        config.subcommand = Subcommand::realize;
    } else if (*verify) {
        config.subcommand = Subcommand::verify;
    } else {
        config.subcommand = Subcommand::jacobi;
    }
    config.format = format == "csv" ? Format::csv : Format::json;
    config.map_kind = series_kind_from_string(map);
    for (const auto &c : checks) {
        config.checks.insert(check_from_string(c));
    }
    if (!poisson.empty()) {
        config.poisson_path = poisson;
    }
    if (!out_file.empty()) {
        config.out_path = out_file;
    }
    if (const char *limit = std::getenv("SYMREAL_MEMO_LIMIT")) {
        try {
            config.memo_limit = std::stoull(limit);
        } catch (const std::exception &) {
            std::cerr << "error: SYMREAL_MEMO_LIMIT must be a non-negative integer\n";
            return exit_usage;
        }
    }
    return run(config, std::cout, std::cerr);
}
