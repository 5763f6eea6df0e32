#include "doctest.h"

#include "lmu/classical.hpp"
#include "lmu/cleaning.hpp"
#include "lmu/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lmu;

namespace {

const char* kTheta =
    "\\x. \\f. (f) mu a.[a] (f) mu phi.[a] (f) mu psi.[a] (f) ((f) mu b.[phi] (f) mu d.[b] (f) mu g.[a] (f) "
    "mu r.[b] (f) x)";

Term body_of(const char* src) { return parse(src).body().body(); }

Term f_power(std::size_t n) { return iterate_app(Term::var("f"), n, Term::var("x")); }

}  // namespace

TEST_CASE("measure") {
    CHECK(measure(Term::var("x")) == CleaningMeasure{0, {0}});
    CHECK(measure(f_power(2)) == CleaningMeasure{0, {2}});
    Term theta = body_of(kTheta);
    CleaningMeasure c = measure(theta);
    auto [apps, mus] = testing::count_chain(theta);
    CHECK(c.l == mus);
    CHECK(c.L.size() == mus + 1);
    CHECK(step_bound(c) == apps + mus);
    CHECK(c == CleaningMeasure{7, {1, 1, 1, 2, 1, 1, 1, 1}});
    CHECK(format_measure(c) == "C=(7;1,1,1,2,1,1,1,1)");
    CHECK_THROWS_AS(measure(parse("\\y. y")), NotInNShape);
}

TEST_CASE("measure order is lexicographic") {
    CHECK(CleaningMeasure{1, {0, 0}} > CleaningMeasure{0, {9}});
    CHECK(CleaningMeasure{2, {1, 5, 0}} > CleaningMeasure{2, {1, 4, 9}});
    CHECK(CleaningMeasure{0, {3}} > CleaningMeasure{0, {2}});
}

TEST_CASE("one cleaning step") {
    auto r = clean_step(parse("(f) mu a.[a] x"));
    REQUIRE(r);
    CHECK(alpha_eq(*r, f_power(1)));
    CHECK_FALSE(clean_step(f_power(3)).has_value());
    CHECK_FALSE(clean_step(Term::var("x")).has_value());

    Term theta = body_of(kTheta);
    auto next = clean_step(theta);
    REQUIRE(next);
    CHECK(measure(*next) < measure(theta));
    CHECK(val(*next) == val(theta));
}

TEST_CASE("cleaning to the numeral") {
    CleaningTrace t = clean_normalize(body_of(kTheta));
    CHECK(alpha_eq(t.trace.final, f_power(4)));
    CHECK(t.measures.size() == t.trace.step_count + 1);

    CleaningTrace x = clean_normalize(Term::var("x"));
    CHECK(x.trace.step_count == 0);
    CHECK(alpha_eq(x.trace.final, Term::var("x")));

    CleaningTrace prime = clean_normalize(parse("mu a.[a] (f) mu b.[a] x"));
    CHECK(alpha_eq(prime.trace.final, Term::var("x")));
    CHECK_THROWS_AS(clean_normalize(parse("mu a.[c] x")), NotInNShape);
}

TEST_CASE("cleaning whole integers") {
    CleanResult r = clean_integer(parse(kTheta));
    CHECK(r.value == 4);
    CHECK(alpha_eq(r.trace.trace.final, church(4)));
    for (const auto& s : r.trace.trace.steps) {
        CHECK(s.rule == RuleTag::N);
        CHECK(s.position.size() >= 2);
        CHECK(s.position[0] == 0);
        CHECK(s.position[1] == 0);
    }
    for (std::size_t n = 0; n < 10; ++n) {
        CleanResult c = clean_integer(church(n));
        CHECK(c.value == n);
        CHECK(c.trace.trace.step_count == 0);
    }
    CHECK_THROWS_AS(clean_integer(parse("\\x. x")), NotInNShape);
}

TEST_CASE("cleaning trace format") {
    CleanResult r = clean_integer(parse("\\x. \\f. (f) mu a.[a] x"));
    CHECK(serialize_cleaning_trace(r.trace) ==
          "1 N 0.0 C=(0;1) \\x. \\f. (f) x\n");
}

TEST_CASE("cleaning on generated integers") {
    testing::Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        auto g = testing::random_integer(rng);
        Term cur = g.body;
        FreshSupply supply(cur);
        CleaningMeasure c = measure(cur);
        std::size_t bound = step_bound(c);
        std::size_t steps = 0;
        while (auto next = clean_step(cur, supply)) {
            ++steps;
            REQUIRE(flatten_nxf(*next).has_value());
            CHECK(free_mvars(*next).empty());
            CleaningMeasure d = measure(*next);
            CHECK(d < c);
            CHECK(val(*next) == val(cur));
            CHECK(satisfies_barendregt(*next));
            c = d;
            cur = *next;
        }
        CHECK(steps <= bound);
        CHECK(alpha_eq(cur, f_power(g.fictive_value)));
        CleanResult whole = clean_integer(g.term, bound);
        CHECK(whole.value == g.fictive_value);
    }
}

TEST_CASE("λμ'-normalization uses N anywhere") {
    Trace t = normalize_with_cleaning(parse("(f) mu a.[a] x"), Limits{});
    CHECK(t.steps.front().rule == RuleTag::N);
    CHECK(alpha_eq(t.final, f_power(1)));
    Trace c = normalize_with_cleaning(parse("(\\y. (f) y) mu a.[a] (f) mu b.[a] x"), Limits{});
    CHECK(c.steps.front().rule == RuleTag::C1);
    CHECK(alpha_eq(c.final, f_power(1)));
}
