#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lmu/reduction.hpp"

namespace lmu::cli {

enum class Command { Parse, Normalize, Head, Simplify, Classify, Value, Church, Compare };
enum class Method { Spine, Rep, Clean, StorageT1, StorageT2, StorageKrivine };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse_error = 2;
inline constexpr int not_integer = 3;
inline constexpr int fuel = 4;
inline constexpr int disagreement = 5;
}  // namespace exit_code

struct CliConfig {
    Command command = Command::Parse;
    std::optional<Method> method;
    std::size_t max_steps = kDefaultFuel;
    bool trace = false;
    bool include_krivine = false;
    bool krivine_uses_t1 = false;  // the inner operator of Krivine's T; T2 otherwise
    bool unsafe_n_rule = false;    // normalize in the λμ'-calculus
    bool normalize_first = false;  // classify/value on the normal form of the input
};

struct CliResult {
    int code = exit_code::ok;
    std::string out;
    std::string err;
};

std::optional<Command> parse_command(const std::string& name);
std::optional<Method> parse_method(const std::string& name);
std::string to_string(Method method);

// Input is the term source, or the decimal n for `church`.
CliResult run(const CliConfig& config, const std::string& input);

}  // namespace lmu::cli
