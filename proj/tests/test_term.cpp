#include "doctest.h"

#include "lmu/parser.hpp"
#include "lmu/reduction.hpp"
#include "lmu/term.hpp"
#include "support/generators.hpp"

using namespace lmu;

namespace {

std::set<std::string> lnames(const std::set<LVarName>& s) {
    std::set<std::string> out;
    for (const auto& n : s) out.insert(n.str());
    return out;
}

std::set<std::string> mnames(const std::set<MVarName>& s) {
    std::set<std::string> out;
    for (const auto& n : s) out.insert(n.str());
    return out;
}

}  // namespace

TEST_CASE("names reject the empty identifier") {
    CHECK_THROWS_AS(LVarName(""), std::invalid_argument);
    CHECK_THROWS_AS(MVarName(""), std::invalid_argument);
}

TEST_CASE("free λ-variables") {
    CHECK(lnames(free_lvars(Term::var("x"))) == std::set<std::string>{"x"});
    CHECK(free_lvars(parse("\\x. x")).empty());
    CHECK(free_lvars(parse("\\x. \\f. (f) x")).empty());
    CHECK(lnames(free_lvars(parse("\\x. (y) mu a.[b] z"))) == std::set<std::string>{"y", "z"});
}

TEST_CASE("free μ-variables") {
    CHECK(free_mvars(parse("mu a.[a] x")).empty());
    CHECK(mnames(free_mvars(parse("mu a.[b] x"))) == std::set<std::string>{"b"});
    CHECK(free_mvars(parse("mu a.[a] (f) mu b.[a] x")).empty());
    // The binder scopes over its own named term.
    CHECK(mnames(free_mvars(parse("(mu a.[a] x) mu c.[a] y"))) == std::set<std::string>{"a"});
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(parse("\\x. x"), parse("\\y. y")));
    CHECK(alpha_eq(parse("mu a.[a] x"), parse("mu b.[b] x")));
    CHECK_FALSE(alpha_eq(parse("\\x. \\f. (f) x"), parse("\\x. \\f. x")));
    CHECK_FALSE(alpha_eq(parse("\\x. y"), parse("\\x. x")));
    CHECK_FALSE(alpha_eq(parse("mu a.[b] x"), parse("mu a.[a] x")));
    CHECK_FALSE(alpha_eq(parse("mu a.[c] x"), parse("mu a.[d] x")));
    CHECK(alpha_eq(parse("\\x. \\y. (x) y"), parse("\\y. \\x. (y) x")));
}

TEST_CASE("church numerals") {
    CHECK(alpha_eq(church(0), parse("\\x. \\f. x")));
    CHECK(alpha_eq(church(1), parse("\\x. \\f. (f) x")));
    CHECK(alpha_eq(church(4), parse("\\x. \\f. (f) ((f) ((f) ((f) x)))")));
    for (std::size_t n = 0; n < 12; ++n) {
        Term c = church(n);
        CHECK(is_closed(c));
        CHECK(is_normal(c));
        CHECK(church_value(c) == n);
        for (std::size_t m = 0; m < 12; ++m) CHECK(alpha_eq(c, church(m)) == (n == m));
    }
    CHECK_FALSE(church_value(parse("\\x. \\x2. x2")).has_value());
    CHECK_FALSE(church_value(parse("\\x. \\f. (f) f")).has_value());
}

TEST_CASE("zero and successor are the fixed combinators") {
    CHECK(alpha_eq(zero_term(), parse("\\x. \\f. x")));
    CHECK(alpha_eq(successor_term(), parse("\\n. \\x. \\f. (f) (((n) x) f)")));
    CHECK(is_closed(successor_term()));
}

TEST_CASE("successor iterates to Church numerals") {
    Term s = successor_term();
    Term two = Term::app(s, Term::app(s, zero_term()));
    CHECK(alpha_eq(normalize(two).final, church(2)));
    for (std::size_t n = 0; n <= 15; ++n) {
        Term chain = zero_term();
        for (std::size_t i = 0; i < n; ++i) chain = Term::app(s, chain);
        CHECK(alpha_eq(normalize(chain).final, church(n)));
    }
}

TEST_CASE("establishing the Barendregt convention") {
    Term t = Term::app(Term::abs(LVarName("x"), Term::var("x")), Term::abs(LVarName("x"), Term::var("x")));
    CHECK_FALSE(satisfies_barendregt(t));
    Term u = establish_barendregt(t);
    CHECK(satisfies_barendregt(u));
    CHECK(alpha_eq(t, u));

    // A bound name that also occurs free.
    Term v = Term::app(Term::var("x"), Term::abs(LVarName("x"), Term::var("x")));
    CHECK_FALSE(satisfies_barendregt(v));
    Term w = establish_barendregt(v);
    CHECK(satisfies_barendregt(w));
    CHECK(w.fun().var_name().str() == "x");

    testing::Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Term r = testing::random_term(rng);
        CHECK(satisfies_barendregt(r));
        FreshSupply supply(r);
        Term f = freshen(r, supply);
        CHECK(satisfies_barendregt(f));
        CHECK(alpha_eq(f, r));
    }
}

TEST_CASE("fresh names avoid the seed") {
    Term t = parse("\\x. \\x1. (x2) mu a.[a1] x");
    FreshSupply supply(t);
    for (int i = 0; i < 20; ++i) {
        auto l = supply.fresh_lvar("x").str();
        CHECK(l != "x");
        CHECK(l != "x1");
        CHECK(l != "x2");
        auto m = supply.fresh_mvar("a").str();
        CHECK(m != "a");
        CHECK(m != "a1");
    }
}

TEST_CASE("paths address and replace subterms") {
    Term t = parse("\\x. (x) mu a.[a] y");
    CHECK(subterm_at(t, {0, 1}).is_mu());
    CHECK(subterm_at(t, {0, 1, 0}).var_name().str() == "y");
    Term r = replace_at(t, {0, 1, 0}, Term::var("z"));
    CHECK(alpha_eq(r, parse("\\x. (x) mu a.[a] z")));
    CHECK(t.size() == 5);
}
