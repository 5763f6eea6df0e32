#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "lmu/cli.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lmu: λμ-terms, classical integers and their values"};
    app.require_subcommand(1, 1);

    lmu::cli::CliConfig config;
    std::string source;
    std::string expr;
    std::string method;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", source, "file holding the term (standard input when absent)");
        sub->add_option("-e,--expr", expr, "term given inline");
        sub->add_option("--max-steps", config.max_steps, "reduction fuel")->check(CLI::PositiveNumber);
    };

    auto* parse = app.add_subcommand("parse", "parse and pretty-print a term");
    auto* normalize = app.add_subcommand("normalize", "leftmost-outermost normal form");
    auto* head = app.add_subcommand("head", "head normal form");
    auto* simplify = app.add_subcommand("simplify", "normal form for the simplification rules only");
    auto* classify = app.add_subcommand("classify", "decide whether a normal term is a classical integer");
    auto* value = app.add_subcommand("value", "value of a classical integer by one method");
    auto* compare = app.add_subcommand("compare", "values by every method; fails on disagreement");
    auto* church = app.add_subcommand("church", "print the Church numeral n");

    for (auto* sub : {parse, normalize, head, simplify, classify, value, compare}) add_input(sub);
    for (auto* sub : {normalize, head, simplify, value}) sub->add_flag("--trace", config.trace, "print the reduction trace");
    normalize->add_flag("--unsafe-n-rule", config.unsafe_n_rule, "also contract N-redexes (not confluent)");
    for (auto* sub : {classify, value, compare})
        sub->add_flag("--normalize-first", config.normalize_first, "normalize the input before valuation");
    value->add_option("-m,--method", method, "spine, rep, clean, storage-t1, storage-t2 or storage-krivine")
        ->required();
    compare->add_flag("--include-krivine", config.include_krivine, "also run Krivine's operator");
    for (auto* sub : {value, compare})
        sub->add_flag("--krivine-t1", config.krivine_uses_t1, "instantiate Krivine's operator with T1 instead of T2");
    std::size_t n = 0;
    church->add_option("n", n, "the numeral")->required();

    CLI11_PARSE(app, argc, argv);

    CLI::App* chosen = app.get_subcommands().front();
    config.command = *lmu::cli::parse_command(chosen->get_name());
    if (!method.empty()) {
        config.method = lmu::cli::parse_method(method);
        if (!config.method) {
            std::cerr << "unknown method: " << method << "\n";
            return lmu::cli::exit_code::usage;
        }
    }

    std::string input;
    if (chosen == church) {
        input = std::to_string(n);
    } else if (!expr.empty()) {
        input = expr;
    } else if (!source.empty()) {
        std::ifstream in(source);
        if (!in) {
            std::cerr << "cannot read " << source << "\n";
            return lmu::cli::exit_code::usage;
        }
        input = read_all(in);
    } else {
        input = read_all(std::cin);
    }

    lmu::cli::CliResult result = lmu::cli::run(config, input);
    std::cout << result.out;
    std::cerr << result.err;
    return result.code;
}
