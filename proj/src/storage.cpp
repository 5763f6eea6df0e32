#include "lmu/storage.hpp"

#include <utility>
#include <vector>

#include "lmu/parser.hpp"
#include "lmu/substitution.hpp"

namespace lmu {

std::string_view to_string(StorageKind kind) {
    switch (kind) {
        case StorageKind::T1: return "T1";
        case StorageKind::T2: return "T2";
        case StorageKind::Krivine: return "Krivine";
        case StorageKind::Custom: return "Custom";
    }
    return "?";
}

namespace {

// Parses source and plugs the named closed combinators in for its free
// variables.
Term assemble(std::string_view source, const std::vector<std::pair<std::string, Term>>& defs) {
    Term t = parse(source);
    for (const auto& [name, def] : defs) t = subst(t, LVarName(name), def);
    return establish_barendregt(t);
}

Term delta() { return assemble("\\f. (f) zero", {{"zero", zero_term()}}); }

}  // namespace

StorageOperator build_t1() {
    Term g = assemble("\\x. \\y. (x) \\z. (y) ((s) z)", {{"s", successor_term()}});
    Term t = assemble("\\n. ((n) delta) G", {{"delta", delta()}, {"G", g}});
    return {StorageKind::T1, t};
}

StorageOperator build_t2() {
    Term f = assemble("\\x. \\y. (x) ((s) y)", {{"s", successor_term()}});
    Term t = assemble("\\n. \\f. (((n) f) F) zero", {{"F", f}, {"zero", zero_term()}});
    return {StorageKind::T2, t};
}

Term build_predecessor() {
    Term fst = parse("\\x. \\y. x");
    Term snd = parse("\\x. \\y. y");
    Term init = assemble("\\c. ((c) zero) zero", {{"zero", zero_term()}});
    Term next = assemble("\\a. \\c. ((c) ((s) ((a) fst))) ((a) fst)",
                         {{"s", successor_term()}, {"fst", fst}});
    return assemble("\\n. (((n) init) next) snd", {{"init", init}, {"next", next}, {"snd", snd}});
}

StorageOperator build_krivine_t(const StorageOperator& inner) {
    Term t = assemble("\\n. ((n) delta) \\d. \\g. ((Ti) n) \\x. (g) ((s) ((p) x))",
                      {{"delta", delta()},
                       {"Ti", inner.term},
                       {"s", successor_term()},
                       {"p", build_predecessor()}});
    return {StorageKind::Krivine, t};
}

Term storage_application(const StorageOperator& op, const Term& t) {
    return establish_barendregt(Term::app(Term::app(op.term, t), Term::var("f")));
}

Term successor_chain(std::size_t n) {
    FreshSupply supply;
    Term s = successor_term();
    Term cur = zero_term();
    supply.seed(s);
    for (std::size_t i = 0; i < n; ++i) cur = Term::app(freshen(s, supply), std::move(cur));
    return establish_barendregt(cur);
}

StorageResult storage_value(const StorageOperator& op, const Term& t, std::size_t fuel) {
    if (!is_closed(t)) throw StorageShapeError("storage operators apply to closed terms");
    Term start = storage_application(op, t);
    Limits limits{fuel};
    limits.record = false;
    Trace head = head_reduce(start, limits);
    const Term& hnf = head.final;
    if (!hnf.is_app() || !hnf.fun().is_var() || hnf.fun().var_name().str() != "f")
        throw StorageShapeError("head normal form is not (f)w: " + print(hnf));
    Trace nf = normalize(hnf.arg(), limits);
    auto n = church_value(nf.final);
    if (!n) throw StorageShapeError("argument does not normalize to a Church numeral: " + print(nf.final));
    return {*n, hnf.arg(), hnf, head.step_count};
}

}  // namespace lmu
