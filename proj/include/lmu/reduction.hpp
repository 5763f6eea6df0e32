#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lmu/term.hpp"

namespace lmu {

// C1, C2 compute; S1..S3 simplify; N is the cleaning rule and is only ever
// produced by the cleaning module.
enum class RuleTag { C1, C2, S1, S2, S3, N };

std::string_view to_string(RuleTag rule);

struct Redex {
    RuleTag rule;
    Path path;

    friend bool operator==(const Redex&, const Redex&) = default;
};

struct ReductionStep {
    RuleTag rule;
    Path position;
    Term before;
    Term after;
};

struct Trace {
    Term initial;
    std::vector<ReductionStep> steps;  // empty when recording is off
    Term final;
    std::size_t step_count = 0;
};

inline constexpr std::size_t kDefaultFuel = 1'000'000;

struct Limits {
    std::size_t fuel = kDefaultFuel;
    // Terms growing past this many nodes abort the run like exhausted fuel.
    std::size_t max_size = std::numeric_limits<std::size_t>::max();
    bool record = true;
};

class FuelExhausted : public std::runtime_error {
public:
    explicit FuelExhausted(Trace partial, const std::string& what = "fuel exhausted")
        : std::runtime_error(what), partial_(std::move(partial)) {}

    const Trace& partial() const noexcept { return partial_; }

private:
    Trace partial_;
};

class InvalidRedex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rules that apply at the root of t, in priority order C1 > C2 > S1 > S2 > S3.
std::vector<RuleTag> redex_tags_at(const Term& t);

// Every redex in preorder (leftmost first).
std::vector<Redex> find_redexes(const Term& t);

// Contracts the redex of the given rule at the root of t.
Term contract(const Term& t, RuleTag rule, FreshSupply& supply);

// Contracts (rule, position); throws InvalidRedex when the rule does not apply
// there. The supply must have been seeded with t.
Term step(const Term& t, RuleTag rule, const Path& position, FreshSupply& supply);
Term step(const Term& t, RuleTag rule, const Path& position);

// The leftmost redex when t is not head normal.
std::optional<Redex> head_redex(const Term& t);

bool is_head_normal(const Term& t);
bool is_normal(const Term& t);

// Contracts the leftmost redex until the term is head normal. step_count is
// h(t, final).
Trace head_reduce(const Term& t, std::size_t fuel = kDefaultFuel);
Trace head_reduce(const Term& t, const Limits& limits);

// Head-reduces t until the current term is alpha-equal to target; returns the
// number of steps, or nullopt when fuel runs out or a head normal form other
// than target is reached.
std::optional<std::size_t> head_distance(const Term& t, const Term& target, std::size_t fuel);

enum class Strategy { LeftmostOutermost, RightmostInnermost };

Trace normalize(const Term& t, std::size_t fuel = kDefaultFuel,
                Strategy strategy = Strategy::LeftmostOutermost);
Trace normalize(const Term& t, const Limits& limits, Strategy strategy = Strategy::LeftmostOutermost);

// Applies S1, S2, S3 until none is left; C-redexes are untouched.
Term simplify(const Term& t);
Term simplify(const Term& t, FreshSupply& supply);
Trace simplify_trace(const Term& t);

// "<index> <rule> <path> <term after>", one line per step. The root path is
// written "-", other paths as dot-separated child indices.
std::string format_path(const Path& path);
std::string serialize_trace(const Trace& trace);

}  // namespace lmu
