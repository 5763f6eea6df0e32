#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lmu/reduction.hpp"
#include "lmu/term.hpp"

namespace lmu {

// For u = (f)^{j_{m+1}} μβ_m[γ_m](f)^{j_m} … μβ_1[γ_1](f)^{j_1} x:
// l = m and L = (j_{m+1}, …, j_1). Ordered lexicographically on (l, L).
struct CleaningMeasure {
    std::size_t l = 0;
    std::vector<std::size_t> L;

    friend auto operator<=>(const CleaningMeasure&, const CleaningMeasure&) = default;
    friend bool operator==(const CleaningMeasure&, const CleaningMeasure&) = default;
};

CleaningMeasure measure(const Term& u);

// "C=(l;j_{m+1},...,j_1)"
std::string format_measure(const CleaningMeasure& c);

// Every ↪ step under the innermost-first strategy lowers l + ΣL by at least
// one, so this many steps always suffice.
std::size_t step_bound(const CleaningMeasure& c);

// One ↪ step: contracts the innermost N-redex (f)μα[β]w, i.e. the one closest
// to x, then simplifies. nullopt when u = (f)^n x.
std::optional<Term> clean_step(const Term& u);
std::optional<Term> clean_step(const Term& u, FreshSupply& supply, Path* redex_path = nullptr);

struct CleaningTrace {
    Trace trace;                            // rule N steps; after = simplified term
    std::vector<CleaningMeasure> measures;  // measures[0] is the initial term's
};

// Iterates clean_step to (f)^n x. u must be a closed member of N_{x,f}.
CleaningTrace clean_normalize(const Term& u, std::size_t fuel = kDefaultFuel);

struct CleanResult {
    std::size_t value = 0;
    CleaningTrace trace;  // whole terms λx.λf.…, paths from the root
};

// Runs clean_normalize under the binders of a normal classical-integer shape;
// the final term is church(value).
CleanResult clean_integer(const Term& t, std::size_t fuel = kDefaultFuel);

// "<index> N <path> C=(…) <term after>"
std::string serialize_cleaning_trace(const CleaningTrace& trace);

// Leftmost reduction in the λμ'-calculus: the λμ rules plus N anywhere. Not
// confluent; exposed for exploration only.
Trace normalize_with_cleaning(const Term& t, const Limits& limits);

}  // namespace lmu
