#include "doctest.h"

#include "lmu/parser.hpp"
#include "lmu/reduction.hpp"
#include "lmu/substitution.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lmu;

namespace {

// Textbook versions without renaming: sound when the bound names of u are
// disjoint from the free names of v, which the callers below guarantee by
// substituting closed terms into Barendregt terms.
Term naive_subst(const Term& u, const LVarName& x, const Term& v) {
    switch (u.kind()) {
        case Kind::Var: return u.var_name() == x ? v : u;
        case Kind::Abs: return u.binder() == x ? u : Term::abs(u.binder(), naive_subst(u.body(), x, v));
        case Kind::App: return Term::app(naive_subst(u.fun(), x, v), naive_subst(u.arg(), x, v));
        case Kind::Mu: return Term::mu(u.mu_binder(), u.mu_name(), naive_subst(u.body(), x, v));
    }
    return u;
}

Term naive_named(const Term& u, const MVarName& a, const Term& v, bool star) {
    switch (u.kind()) {
        case Kind::Var: return u;
        case Kind::Abs: return Term::abs(u.binder(), naive_named(u.body(), a, v, star));
        case Kind::App: return Term::app(naive_named(u.fun(), a, v, star), naive_named(u.arg(), a, v, star));
        case Kind::Mu: {
            if (u.mu_binder() == a) return u;
            Term body = naive_named(u.body(), a, v, star);
            if (u.mu_name() == a) body = star ? Term::app(body, v) : Term::app(v, body);
            return Term::mu(u.mu_binder(), u.mu_name(), body);
        }
    }
    return u;
}

const MVarName kAlpha("al");

}  // namespace

TEST_CASE("λ-substitution") {
    CHECK(alpha_eq(subst(Term::var("x"), LVarName("x"), zero_term()), zero_term()));
    CHECK(alpha_eq(subst(parse("\\y. (x) y"), LVarName("x"), parse("\\z. z")), parse("\\y. (\\z. z) y")));
    CHECK(alpha_eq(subst(parse("(f) x"), LVarName("x"), parse("(f) x")), parse("(f) ((f) x)")));
}

TEST_CASE("λ-substitution avoids capture") {
    Term r = subst(parse("\\y. (x) y"), LVarName("x"), Term::var("y"));
    REQUIRE(r.is_abs());
    CHECK(r.binder().str() != "y");
    CHECK(alpha_eq(r, parse("\\z. (y) z")));
    CHECK(satisfies_barendregt(r));
}

TEST_CASE("μ-substitution appends to named bodies") {
    Term r = mu_subst_star(parse("mu b.[al] x"), kAlpha, Term::var("f"));
    CHECK(alpha_eq(r, parse("mu b.[al] (x) f")));
    Term none = parse("mu b.[b] (x) y");
    CHECK(alpha_eq(mu_subst_star(none, kAlpha, Term::var("f")), none));

    // (μα[α](f)μβ[α]x)v: the C2 contractum rewrites both [α] positions.
    Term node = parse("mu a.[a] (f) mu b.[a] x");
    FreshSupply supply(node);
    supply.seed(Term::var("v"));
    Term out = named_mu_subst_star(node, node.mu_binder(), Term::var("v"), supply);
    CHECK(testing::count_naming(node.body(), node.mu_binder()) + 1 == 2);
    CHECK(alpha_eq(out, parse("mu a.[a] ((f) mu b.[a] (x) v) v")));
}

TEST_CASE("cleaning substitution prepends to named bodies") {
    Term r = mu_subst_double_star(parse("mu b.[al] x"), kAlpha, Term::var("f"));
    CHECK(alpha_eq(r, parse("mu b.[al] (f) x")));
    Term none = parse("mu b.[b] x");
    CHECK(alpha_eq(mu_subst_double_star(none, kAlpha, Term::var("f")), none));
    Term two = parse("mu c.[al] (f) mu d.[al] x");
    CHECK(testing::count_naming(two, kAlpha) == 2);
    CHECK(alpha_eq(mu_subst_double_star(two, kAlpha, Term::var("f")), parse("mu c.[al] (f) ((f) mu d.[al] (f) x)")));
}

TEST_CASE("μ-variable renaming") {
    CHECK(alpha_eq(rename_mvar(parse("mu c.[b] x"), MVarName("b"), MVarName("a")), parse("mu c.[a] x")));
    Term none = parse("mu c.[c] x");
    CHECK(alpha_eq(rename_mvar(none, MVarName("b"), MVarName("a")), none));
}

TEST_CASE("S1 collapses a named μ-abstraction") {
    Term t = parse("mu g.[al] mu b.[b] x");
    auto redexes = find_redexes(t);
    REQUIRE(!redexes.empty());
    CHECK(redexes.front() == Redex{RuleTag::S1, {}});
    CHECK(alpha_eq(step(t, RuleTag::S1, {}), parse("mu g.[al] x")));
}

TEST_CASE("substitutions agree with the textbook definitions") {
    testing::Rng rng(5);
    testing::TermParams up;
    up.free_mvars = {"al"};
    testing::TermParams vp;
    vp.free_lvars = {};
    vp.max_depth = 3;
    int checked = 0;
    while (checked < 500) {
        Term u = testing::random_term(rng, up);
        Term v = testing::random_term(rng, vp);
        if (!is_closed(v)) continue;
        ++checked;
        Term a = subst(u, LVarName("x"), v);
        Term b = mu_subst_star(u, kAlpha, v);
        Term c = mu_subst_double_star(u, kAlpha, v);
        CHECK(alpha_eq(a, naive_subst(u, LVarName("x"), v)));
        CHECK(alpha_eq(b, naive_named(u, kAlpha, v, true)));
        CHECK(alpha_eq(c, naive_named(u, kAlpha, v, false)));
        CHECK(satisfies_barendregt(a));
        CHECK(satisfies_barendregt(b));
        CHECK(satisfies_barendregt(c));
        // The set of rewritten positions is exactly the naming occurrences.
        std::size_t k = testing::count_naming(u, kAlpha);
        CHECK(testing::count_naming(b, kAlpha) == k);
        CHECK(b.size() == u.size() + k * (v.size() + 1));
        CHECK(c.size() == u.size() + k * (v.size() + 1));
    }
}
