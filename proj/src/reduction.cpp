#include "lmu/reduction.hpp"

#include <sstream>

#include "lmu/parser.hpp"
#include "lmu/substitution.hpp"

namespace lmu {

std::string_view to_string(RuleTag rule) {
    switch (rule) {
        case RuleTag::C1: return "C1";
        case RuleTag::C2: return "C2";
        case RuleTag::S1: return "S1";
        case RuleTag::S2: return "S2";
        case RuleTag::S3: return "S3";
        case RuleTag::N: return "N";
    }
    return "?";
}

namespace {

bool occurs_free_m(const Term& t, const MVarName& alpha) {
    switch (t.kind()) {
        case Kind::Var: return false;
        case Kind::Abs: return occurs_free_m(t.body(), alpha);
        case Kind::App: return occurs_free_m(t.fun(), alpha) || occurs_free_m(t.arg(), alpha);
        case Kind::Mu:
            if (t.mu_binder() == alpha) return false;
            return t.mu_name() == alpha || occurs_free_m(t.body(), alpha);
    }
    return false;
}

// Some [α]λy.w inside t, not under a rebinding of α.
bool has_named_lambda(const Term& t, const MVarName& alpha) {
    switch (t.kind()) {
        case Kind::Var: return false;
        case Kind::Abs: return has_named_lambda(t.body(), alpha);
        case Kind::App: return has_named_lambda(t.fun(), alpha) || has_named_lambda(t.arg(), alpha);
        case Kind::Mu:
            if (t.mu_binder() == alpha) return false;
            if (t.mu_name() == alpha && t.body().is_abs()) return true;
            return has_named_lambda(t.body(), alpha);
    }
    return false;
}

bool is_s1(const Term& t) { return t.is_mu() && t.body().is_mu(); }

bool is_s2(const Term& t) {
    return t.is_mu() && t.mu_binder() == t.mu_name() && !occurs_free_m(t.body(), t.mu_binder());
}

bool is_s3(const Term& t) {
    if (!t.is_mu()) return false;
    const MVarName& a = t.mu_binder();
    if (t.mu_name() == a && t.body().is_abs()) return true;
    return has_named_lambda(t.body(), a);
}

bool applies(const Term& t, RuleTag rule) {
    switch (rule) {
        case RuleTag::C1: return t.is_app() && t.fun().is_abs();
        case RuleTag::C2: return t.is_app() && t.fun().is_mu();
        case RuleTag::S1: return is_s1(t);
        case RuleTag::S2: return is_s2(t);
        case RuleTag::S3: return is_s3(t);
        case RuleTag::N: return false;
    }
    return false;
}

std::optional<RuleTag> first_tag(const Term& t, bool simplification_only) {
    if (!simplification_only) {
        if (applies(t, RuleTag::C1)) return RuleTag::C1;
        if (applies(t, RuleTag::C2)) return RuleTag::C2;
    }
    if (!t.is_mu()) return std::nullopt;
    if (is_s1(t)) return RuleTag::S1;
    if (is_s2(t)) return RuleTag::S2;
    if (is_s3(t)) return RuleTag::S3;
    return std::nullopt;
}

void collect_redexes(const Term& t, Path& path, std::vector<Redex>& out) {
    for (RuleTag r : redex_tags_at(t)) out.push_back({r, path});
    for (int i = 0; i < t.child_count(); ++i) {
        path.push_back(i);
        collect_redexes(t.child(i), path, out);
        path.pop_back();
    }
}

std::optional<Redex> first_preorder(const Term& t, Path& path, bool simplification_only) {
    if (auto r = first_tag(t, simplification_only)) return Redex{*r, path};
    for (int i = 0; i < t.child_count(); ++i) {
        path.push_back(i);
        auto found = first_preorder(t.child(i), path, simplification_only);
        path.pop_back();
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<Redex> first_rightmost_innermost(const Term& t, Path& path) {
    for (int i = t.child_count() - 1; i >= 0; --i) {
        path.push_back(i);
        auto found = first_rightmost_innermost(t.child(i), path);
        path.pop_back();
        if (found) return found;
    }
    if (auto r = first_tag(t, false)) return Redex{*r, path};
    return std::nullopt;
}

using Finder = std::optional<Redex> (*)(const Term&);

std::optional<Redex> find_leftmost(const Term& t) {
    Path p;
    return first_preorder(t, p, false);
}

std::optional<Redex> find_rightmost_innermost(const Term& t) {
    Path p;
    return first_rightmost_innermost(t, p);
}

std::optional<Redex> find_simplification(const Term& t) {
    Path p;
    return first_preorder(t, p, true);
}

Trace run(const Term& input, const Limits& limits, Finder finder) {
    FreshSupply supply(input);
    Term cur = establish_barendregt(input, supply);
    Trace trace{cur, {}, cur, 0};
    while (auto redex = finder(cur)) {
        if (trace.step_count >= limits.fuel) {
            trace.final = cur;
            throw FuelExhausted(std::move(trace));
        }
        Term next = replace_at(cur, redex->path,
                               contract(subterm_at(cur, redex->path), redex->rule, supply));
        if (limits.record) trace.steps.push_back({redex->rule, redex->path, cur, next});
        ++trace.step_count;
        cur = std::move(next);
        if (cur.size() > limits.max_size) {
            trace.final = cur;
            throw FuelExhausted(std::move(trace), "term size limit exceeded");
        }
    }
    trace.final = cur;
    return trace;
}

}  // namespace

std::vector<RuleTag> redex_tags_at(const Term& t) {
    std::vector<RuleTag> out;
    for (RuleTag r : {RuleTag::C1, RuleTag::C2, RuleTag::S1, RuleTag::S2, RuleTag::S3})
        if (applies(t, r)) out.push_back(r);
    return out;
}

std::vector<Redex> find_redexes(const Term& t) {
    std::vector<Redex> out;
    Path p;
    collect_redexes(t, p, out);
    return out;
}

Term contract(const Term& t, RuleTag rule, FreshSupply& supply) {
    if (!applies(t, rule))
        throw InvalidRedex(std::string("no ") + std::string(to_string(rule)) + " redex at position");
    switch (rule) {
        case RuleTag::C1:
            // (λx u)v → u[v/x]
            return subst(t.fun().body(), t.fun().binder(), t.arg(), supply);
        case RuleTag::C2:
            // (μα u)v → μα u[v/*α]
            return named_mu_subst_star(t.fun(), t.fun().mu_binder(), t.arg(), supply);
        case RuleTag::S1: {
            // [α]μβ u → u[α/β], fused: μγ[α]μβ[δ]w → μγ[δ[α/β]] w[α/β]
            const MVarName& alpha = t.mu_name();
            const Term& inner = t.body();
            const MVarName& beta = inner.mu_binder();
            const MVarName& name = inner.mu_name() == beta ? alpha : inner.mu_name();
            return Term::mu(t.mu_binder(), name, rename_mvar(inner.body(), beta, alpha));
        }
        case RuleTag::S2:
            // μα[α]u → u
            return t.body();
        case RuleTag::S3: {
            // μα u → λx μα u[x/*α]
            LVarName x = supply.fresh_lvar("x");
            return Term::abs(x, named_mu_subst_star(t, t.mu_binder(), Term::var(x), supply));
        }
        case RuleTag::N: break;
    }
    throw InvalidRedex("rule N is not a λμ-calculus rule");
}

Term step(const Term& t, RuleTag rule, const Path& position, FreshSupply& supply) {
    const Term* node = &t;
    for (int i : position) {
        if (i < 0 || i >= node->child_count()) throw InvalidRedex("invalid position");
        node = &node->child(i);
    }
    return replace_at(t, position, contract(*node, rule, supply));
}

Term step(const Term& t, RuleTag rule, const Path& position) {
    FreshSupply supply(t);
    Term clean = establish_barendregt(t, supply);
    return step(clean, rule, position, supply);
}

std::optional<Redex> head_redex(const Term& t) {
    Path path;
    const Term* cur = &t;
    while (true) {
        if (auto r = first_tag(*cur, false)) return Redex{*r, path};
        if (cur->is_var()) return std::nullopt;
        path.push_back(0);  // λ body, operator, μ body
        cur = &cur->child(0);
    }
}

bool is_head_normal(const Term& t) { return !head_redex(t).has_value(); }

bool is_normal(const Term& t) { return !find_leftmost(t).has_value(); }

Trace head_reduce(const Term& t, std::size_t fuel) { return head_reduce(t, Limits{fuel}); }

Trace head_reduce(const Term& t, const Limits& limits) { return run(t, limits, &head_redex); }

std::optional<std::size_t> head_distance(const Term& t, const Term& target, std::size_t fuel) {
    FreshSupply supply(t);
    Term cur = establish_barendregt(t, supply);
    for (std::size_t n = 0; n <= fuel; ++n) {
        if (alpha_eq(cur, target)) return n;
        auto redex = head_redex(cur);
        if (!redex) return std::nullopt;
        cur = replace_at(cur, redex->path, contract(subterm_at(cur, redex->path), redex->rule, supply));
    }
    return std::nullopt;
}

Trace normalize(const Term& t, std::size_t fuel, Strategy strategy) {
    return normalize(t, Limits{fuel}, strategy);
}

Trace normalize(const Term& t, const Limits& limits, Strategy strategy) {
    return run(t, limits,
               strategy == Strategy::LeftmostOutermost ? &find_leftmost : &find_rightmost_innermost);
}

Term simplify(const Term& t, FreshSupply& supply) {
    Term cur = t;
    while (auto redex = find_simplification(cur))
        cur = replace_at(cur, redex->path, contract(subterm_at(cur, redex->path), redex->rule, supply));
    return cur;
}

Term simplify(const Term& t) {
    FreshSupply supply(t);
    return simplify(establish_barendregt(t, supply), supply);
}

Trace simplify_trace(const Term& t) {
    Limits unlimited{std::numeric_limits<std::size_t>::max()};
    return run(t, unlimited, &find_simplification);
}

std::string format_path(const Path& path) {
    if (path.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(path[i]);
    }
    return out;
}

std::string serialize_trace(const Trace& trace) {
    std::ostringstream out;
    std::size_t index = 1;
    for (const auto& s : trace.steps)
        out << index++ << ' ' << to_string(s.rule) << ' ' << format_path(s.position) << ' '
            << print(s.after) << '\n';
    return out.str();
}

}  // namespace lmu
