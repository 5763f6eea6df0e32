#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lmu {

// Variable names. λ-variables and μ-variables live in disjoint alphabets; the
// tag keeps them from being mixed up even though both are plain identifiers.
template <class Tag>
class Name {
public:
    Name() = default;
    explicit Name(std::string text) : text_(std::move(text)) {
        if (text_.empty()) throw std::invalid_argument("variable name must be nonempty");
    }

    const std::string& str() const noexcept { return text_; }

    friend bool operator==(const Name&, const Name&) = default;
    friend auto operator<=>(const Name&, const Name&) = default;

private:
    std::string text_;
};

struct LambdaAlphabet {};
struct MuAlphabet {};

using LVarName = Name<LambdaAlphabet>;
using MVarName = Name<MuAlphabet>;

enum class Kind : std::uint8_t { Var, Abs, App, Mu };

// Immutable λμ-term. Copies share structure; every constructor returns a new
// node, so a Term can be freely passed between threads.
//
// The named term [β]t only ever appears directly under a μ-binder, so it is
// fused into the Mu node: Term::mu(α, β, t) is μα[β]t.
class Term {
public:
    static Term var(LVarName name);
    static Term var(std::string name) { return var(LVarName(std::move(name))); }
    static Term abs(LVarName binder, Term body);
    static Term app(Term fun, Term arg);
    static Term mu(MVarName binder, MVarName name, Term body);

    Kind kind() const noexcept;
    bool is_var() const noexcept { return kind() == Kind::Var; }
    bool is_abs() const noexcept { return kind() == Kind::Abs; }
    bool is_app() const noexcept { return kind() == Kind::App; }
    bool is_mu() const noexcept { return kind() == Kind::Mu; }

    // Var
    const LVarName& var_name() const;
    // Abs
    const LVarName& binder() const;
    // Abs and Mu
    const Term& body() const;
    // App
    const Term& fun() const;
    const Term& arg() const;
    // Mu
    const MVarName& mu_binder() const;
    const MVarName& mu_name() const;

    // Number of nodes.
    std::size_t size() const noexcept;

    // Child by index: Abs/Mu body is 0; App fun is 0, arg is 1.
    const Term& child(int index) const;
    int child_count() const noexcept;

    bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

private:
    struct Node;
    Term() = default;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

using Path = std::vector<int>;

const Term& subterm_at(const Term& t, const Path& path);
// Rebuilds t with the subterm at path replaced by replacement.
Term replace_at(const Term& t, const Path& path, const Term& replacement);

std::set<LVarName> free_lvars(const Term& t);
// μ-variables α with a naming occurrence [α] outside the scope of a μα binder.
std::set<MVarName> free_mvars(const Term& t);

bool is_closed(const Term& t);

// Equality up to consistent renaming of bound λ- and μ-variables.
bool alpha_eq(const Term& t, const Term& u);

// True iff no variable is bound twice and no bound name also occurs free.
bool satisfies_barendregt(const Term& t);

// Emits names absent from every term it has been seeded with and from every
// name it emitted before. Not thread-safe; one supply per rewrite session.
class FreshSupply {
public:
    FreshSupply() = default;
    explicit FreshSupply(const Term& seed_term) { seed(seed_term); }

    void seed(const Term& t);
    void reserve(const LVarName& name) { used_l_.insert(name.str()); }
    void reserve(const MVarName& name) { used_m_.insert(name.str()); }

    LVarName fresh_lvar(std::string_view hint);
    MVarName fresh_mvar(std::string_view hint);

private:
    std::string next(std::string_view hint, std::unordered_set<std::string>& used);

    std::unordered_set<std::string> used_l_;
    std::unordered_set<std::string> used_m_;
    std::unordered_map<std::string, std::size_t> counters_;
};

// Renames every bound variable of t to a fresh name.
Term freshen(const Term& t, FreshSupply& supply);

// Renames only the binders that clash with a free name or with another binder,
// so the result satisfies the Barendregt convention. Free names never change.
Term establish_barendregt(const Term& t, FreshSupply& supply);
Term establish_barendregt(const Term& t);

// λx.λf.(f)^n x
Term church(std::size_t n);
// λx.λf.x
Term zero_term();
// λn.λx.λf.(f)((n)x)f
Term successor_term();

// n if t is λx.λf.(f)^n x with x ≠ f.
std::optional<std::size_t> church_value(const Term& t);

// (f)^n applied to base, i.e. f(f(...(base))).
Term iterate_app(const Term& f, std::size_t n, Term base);

}  // namespace lmu
