#include "lmu/cli.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "lmu/classical.hpp"
#include "lmu/cleaning.hpp"
#include "lmu/parser.hpp"
#include "lmu/storage.hpp"

namespace lmu::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"parse", Command::Parse},       {"normalize", Command::Normalize}, {"head", Command::Head},
    {"simplify", Command::Simplify}, {"classify", Command::Classify},   {"value", Command::Value},
    {"church", Command::Church},     {"compare", Command::Compare},
};

const std::map<std::string, Method> kMethods = {
    {"spine", Method::Spine},
    {"rep", Method::Rep},
    {"clean", Method::Clean},
    {"storage-t1", Method::StorageT1},
    {"storage-t2", Method::StorageT2},
    {"storage-krivine", Method::StorageKrivine},
};

// Carries an exit code out of the command handlers.
struct Failure {
    int code;
    std::string message;
};

Term normal_input(const CliConfig& config, const Term& t) {
    if (!config.normalize_first) return t;
    Limits limits{config.max_steps};
    limits.record = false;
    return normalize(t, limits).final;
}

IntegerShape require_shape(const Term& t) {
    if (!is_normal(t)) throw Failure{exit_code::not_integer, "term is not normal (try --normalize-first)"};
    auto shape = recognize_normal_integer_shape(t);
    if (!shape) throw Failure{exit_code::not_integer, "term is not of the form \\x. \\f. u with u in N_{x,f}"};
    return *shape;
}

StorageOperator storage_for(const CliConfig& config, Method method) {
    switch (method) {
        case Method::StorageT1: return build_t1();
        case Method::StorageT2: return build_t2();
        default: return build_krivine_t(config.krivine_uses_t1 ? build_t1() : build_t2());
    }
}

std::size_t value_by(const CliConfig& config, Method method, const Term& input, std::string* trace) {
    switch (method) {
        case Method::Spine: {
            IntegerShape shape = require_shape(normal_input(config, input));
            if (val(shape.body).size() != 1) throw Failure{exit_code::not_integer, "val is not a singleton"};
            return spine_decompose(shape.body).fictive_value;
        }
        case Method::Rep: {
            IntegerShape shape = require_shape(normal_input(config, input));
            RepSet r = rep(shape.body);
            auto n = r.singleton();
            if (!n) throw Failure{exit_code::not_integer, "rep = " + r.to_string() + " is not a singleton"};
            return *n;
        }
        case Method::Clean: {
            Term t = normal_input(config, input);
            require_shape(t);
            CleanResult r = clean_integer(t, config.max_steps);
            if (trace) *trace = serialize_cleaning_trace(r.trace);
            return r.value;
        }
        default: {
            if (!is_closed(input)) throw Failure{exit_code::not_integer, "storage operators need a closed term"};
            try {
                StorageResult r = storage_value(storage_for(config, method), input, config.max_steps);
                if (trace) *trace = "head normal form: " + print(r.head_normal) + "\n";
                return r.value;
            } catch (const StorageShapeError& e) {
                throw Failure{exit_code::not_integer, e.what()};
            }
        }
    }
}

CliResult reduce(const CliConfig& config, const Term& t) {
    Limits limits{config.max_steps};
    limits.record = config.trace;
    Trace trace = [&] {
        switch (config.command) {
            case Command::Head: return head_reduce(t, limits);
            case Command::Simplify: return simplify_trace(t);
            default: return config.unsafe_n_rule ? normalize_with_cleaning(t, limits) : normalize(t, limits);
        }
    }();
    CliResult r;
    if (config.trace) r.out += serialize_trace(trace);
    r.out += print(trace.final) + "\n";
    return r;
}

CliResult classify_command(const CliConfig& config, const Term& input) {
    Term t = normal_input(config, input);
    if (!is_normal(t)) throw Failure{exit_code::not_integer, "term is not normal (try --normalize-first)"};
    ClassificationReport report = classify(t);
    CliResult r;
    r.out = serialize_report(report);
    if (report.verdict.kind != VerdictKind::ClassicalInteger) r.code = exit_code::not_integer;
    return r;
}

CliResult compare_command(const CliConfig& config, const Term& input) {
    Term t = normal_input(config, input);
    IntegerShape shape = require_shape(t);
    std::vector<Method> methods = {Method::Spine, Method::Clean, Method::StorageT1, Method::StorageT2};
    if (config.include_krivine) methods.push_back(Method::StorageKrivine);

    CliResult r;
    std::ostringstream table;
    table << "rep " << rep(shape.body).to_string() << "\n";
    std::optional<std::size_t> agreed;
    bool agree = true;
    for (Method m : methods) {
        table << to_string(m) << ' ';
        try {
            std::size_t n = value_by(config, m, t, nullptr);
            table << n << "\n";
            if (agreed && *agreed != n) agree = false;
            agreed = agreed.value_or(n);
        } catch (const Failure& f) {
            table << "error: " << f.message << "\n";
            agree = false;
        } catch (const FuelExhausted&) {
            table << "error: fuel exhausted\n";
            agree = false;
        }
    }
    r.out = table.str();
    r.out += agree ? "agree\n" : "disagree\n";
    if (!agree) r.code = exit_code::disagreement;
    return r;
}

CliResult church_command(const std::string& input) {
    std::size_t n = 0;
    std::string text = input;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        return {exit_code::usage, "", "church expects a natural number\n"};
    return {exit_code::ok, print(church(n)) + "\n", ""};
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    auto it = kCommands.find(name);
    if (it == kCommands.end()) return std::nullopt;
    return it->second;
}

std::optional<Method> parse_method(const std::string& name) {
    auto it = kMethods.find(name);
    if (it == kMethods.end()) return std::nullopt;
    return it->second;
}

std::string to_string(Method method) {
    for (const auto& [name, m] : kMethods)
        if (m == method) return name;
    return "?";
}

CliResult run(const CliConfig& config, const std::string& input) {
    if (config.max_steps == 0) return {exit_code::usage, "", "--max-steps must be positive\n"};
    if (config.method && config.command != Command::Value)
        return {exit_code::usage, "", "--method is only valid with value\n"};
    if (config.command == Command::Value && !config.method)
        return {exit_code::usage, "", "value needs --method\n"};
    if (config.command == Command::Church) return church_command(input);

    Term t = Term::var("x");
    try {
        t = parse(input);
    } catch (const ParseError& e) {
        return {exit_code::parse_error, "", std::string("parse error: ") + e.what() + "\n"};
    }

    try {
        switch (config.command) {
            case Command::Parse: return {exit_code::ok, print(t) + "\n", ""};
            case Command::Normalize:
            case Command::Head:
            case Command::Simplify: return reduce(config, t);
            case Command::Classify: return classify_command(config, t);
            case Command::Compare: return compare_command(config, t);
            case Command::Value: {
                std::string trace;
                std::size_t n = value_by(config, *config.method, t, config.trace ? &trace : nullptr);
                return {exit_code::ok, std::to_string(n) + "\n", trace};
            }
            case Command::Church: break;
        }
    } catch (const Failure& f) {
        return {f.code, "", f.message + "\n"};
    } catch (const FuelExhausted& e) {
        CliResult r{exit_code::fuel, "", std::string(e.what()) + " after " +
                                             std::to_string(e.partial().step_count) + " steps\n"};
        if (config.trace) r.out = serialize_trace(e.partial());
        return r;
    } catch (const std::invalid_argument& e) {
        return {exit_code::not_integer, "", std::string(e.what()) + "\n"};
    }
    return {exit_code::usage, "", "unknown command\n"};
}

}  // namespace lmu::cli
