#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmu/term.hpp"

namespace lmu {

// Fictive-value sets are always finite.
using ValSet = std::set<std::size_t>;

// Codomain of rep: a finite set of naturals or {n : n >= k}.
class RepSet {
public:
    static RepSet finite(std::set<std::size_t> elements);
    static RepSet up_from(std::size_t k);
    static RepSet naturals() { return up_from(0); }

    bool is_finite() const noexcept { return finite_; }
    const std::set<std::size_t>& elements() const { return elements_; }
    std::size_t lower_bound() const noexcept { return lower_; }

    bool contains(std::size_t n) const;
    bool empty() const noexcept { return finite_ && elements_.empty(); }
    std::optional<std::size_t> singleton() const;

    // {n+1 : n in this}
    RepSet shifted() const;
    RepSet intersect(const RepSet& other) const;
    bool subset_of(const ValSet& v) const;

    // "{a,b,...}" or ">=k"
    std::string to_string() const;

    friend bool operator==(const RepSet&, const RepSet&) = default;

private:
    bool finite_ = true;
    std::set<std::size_t> elements_;
    std::size_t lower_ = 0;
};

std::string format_set(const ValSet& s);

// A member of N_{x,f} laid out from the root down: every entry but the last
// is either (f)u' or μα[β]u', and the last is x.
struct NChain {
    std::vector<Term> nodes;
    LVarName x;
    std::optional<LVarName> f;  // absent when no application occurs

    // Path from the chain's root to nodes[index].
    Path path_to(std::size_t index) const;
};

// Infers x and f from the shape of u; nullopt when u is not in any N_{x,f}.
std::optional<NChain> flatten_nxf(const Term& u);

// Membership in N_{x,f}:  x | μα[β]x | (f)u | μα[β](f)u.
bool is_nxf(const Term& u, const LVarName& x, const LVarName& f);

struct IntegerShape {
    Term body;
    LVarName x;
    LVarName f;
};

// λx.λf.u with u ∈ N_{x,f} and no free μ-variables.
std::optional<IntegerShape> recognize_normal_integer_shape(const Term& t);

class NotInNShape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// rep(x) = {0}; rep((f)u) = rep(u)+1; rep(μα[β]u) = ⋂ rep(v) over the
// subterms [α]v of [β]u, the empty intersection being ℕ.
RepSet rep(const Term& u);

// As rep with ⋃ in place of ⋂; the empty union is ∅.
ValSet val(const Term& u);

struct FalsePart {
    Path start;        // the binder μα_j
    Path end;          // the μ-node naming α_j above the run (f)^{i_j}
    std::string text;  // e.g. "mu a.[a] (f) mu phi.[a]"
};

struct SpineDecomposition {
    std::vector<MVarName> spine_vars;  // α_1 … α_n
    std::vector<std::size_t> counts;   // i_1 … i_{n+1}
    std::size_t fictive_value = 0;     // Σ i_k
    Term true_part;                    // λx.λf.(f)^{i_{n+1}}…(f)^{i_1}x
    std::vector<FalsePart> false_parts;
};

class SpineNotFound : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scans u from x upwards: α_1 names the run ending in x, each α_j names the
// run ending in the binder of α_{j-1}, and the run above the binder of α_n
// reaches the root.
SpineDecomposition spine_decompose(const Term& u);

enum class VerdictKind { ClassicalInteger, FictiveOnly, NotInteger };

struct Verdict {
    VerdictKind kind = VerdictKind::NotInteger;
    std::size_t value = 0;  // meaningless for NotInteger

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ClassificationReport {
    bool in_n_shape = false;
    RepSet rep;
    ValSet val;
    Verdict verdict;
    std::optional<SpineDecomposition> spine;
};

class NotNormal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requires t in λμ-normal form.
ClassificationReport classify(const Term& t);

// key=value lines: shape, rep, val, verdict, value, true_part, spine, counts,
// false_parts.
std::string serialize_report(const ClassificationReport& report);

std::string_view to_string(VerdictKind kind);

}  // namespace lmu
