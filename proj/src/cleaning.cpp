#include "lmu/cleaning.hpp"

#include <numeric>
#include <sstream>

#include "lmu/classical.hpp"
#include "lmu/parser.hpp"
#include "lmu/substitution.hpp"

namespace lmu {

namespace {

NChain require_chain(const Term& u) {
    auto c = flatten_nxf(u);
    if (!c) throw NotInNShape("term is not in N_{x,f}: " + print(u));
    return std::move(*c);
}

bool is_n_redex(const Term& t) { return t.is_app() && t.arg().is_mu(); }

// (u)μα v → μα v[u/**α]
Term contract_n(const Term& t, FreshSupply& supply) {
    return named_mu_subst_double_star(t.arg(), t.arg().mu_binder(), t.fun(), supply);
}

Path prefixed(Path p, const Path& prefix) {
    p.insert(p.begin(), prefix.begin(), prefix.end());
    return p;
}

}  // namespace

CleaningMeasure measure(const Term& u) {
    NChain c = require_chain(u);
    CleaningMeasure m;
    std::size_t run = 0;
    for (const Term& n : c.nodes) {
        if (n.is_app()) {
            ++run;
        } else {
            m.L.push_back(run);
            run = 0;
            if (n.is_mu()) ++m.l;
        }
    }
    return m;
}

std::string format_measure(const CleaningMeasure& c) {
    std::string out = "C=(" + std::to_string(c.l) + ";";
    for (std::size_t i = 0; i < c.L.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.L[i]);
    }
    return out + ")";
}

std::size_t step_bound(const CleaningMeasure& c) {
    return c.l + std::accumulate(c.L.begin(), c.L.end(), std::size_t{0});
}

std::optional<Term> clean_step(const Term& u, FreshSupply& supply, Path* redex_path) {
    NChain c = require_chain(u);
    for (std::size_t k = c.nodes.size() - 1; k-- > 0;) {
        if (!is_n_redex(c.nodes[k])) continue;
        Path p = c.path_to(k);
        Term next = replace_at(u, p, contract_n(c.nodes[k], supply));
        if (redex_path) *redex_path = std::move(p);
        return simplify(next, supply);
    }
    return std::nullopt;
}

std::optional<Term> clean_step(const Term& u) {
    FreshSupply supply(u);
    return clean_step(establish_barendregt(u, supply), supply);
}

CleaningTrace clean_normalize(const Term& u, std::size_t fuel) {
    require_chain(u);
    if (!free_mvars(u).empty()) throw NotInNShape("cleaning requires a term without free μ-variables");
    FreshSupply supply(u);
    Term cur = establish_barendregt(u, supply);
    CleaningTrace out{Trace{cur, {}, cur, 0}, {measure(cur)}};
    while (true) {
        Path p;
        auto next = clean_step(cur, supply, &p);
        if (!next) break;
        if (out.trace.step_count >= fuel) {
            out.trace.final = cur;
            throw FuelExhausted(std::move(out.trace), "cleaning did not terminate within fuel");
        }
        out.trace.steps.push_back({RuleTag::N, std::move(p), cur, *next});
        ++out.trace.step_count;
        out.measures.push_back(measure(*next));
        cur = std::move(*next);
    }
    out.trace.final = cur;
    return out;
}

CleanResult clean_integer(const Term& t, std::size_t fuel) {
    auto shape = recognize_normal_integer_shape(t);
    if (!shape) throw NotInNShape("not of the form λx.λf.u with u a closed member of N_{x,f}");
    CleaningTrace inner = clean_normalize(shape->body, fuel);
    auto wrap = [&](const Term& body) { return Term::abs(shape->x, Term::abs(shape->f, body)); };
    const Path under_binders{0, 0};

    CleanResult r{0, {Trace{wrap(inner.trace.initial), {}, wrap(inner.trace.final), inner.trace.step_count},
                      inner.measures}};
    for (auto& s : inner.trace.steps)
        r.trace.trace.steps.push_back({s.rule, prefixed(s.position, under_binders), wrap(s.before), wrap(s.after)});
    auto n = church_value(r.trace.trace.final);
    if (!n) throw std::logic_error("cleaning stopped before reaching a Church numeral: " + print(r.trace.trace.final));
    r.value = *n;
    return r;
}

std::string serialize_cleaning_trace(const CleaningTrace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.trace.steps.size(); ++i) {
        const auto& s = trace.trace.steps[i];
        out << i + 1 << ' ' << to_string(s.rule) << ' ' << format_path(s.position) << ' '
            << format_measure(trace.measures[i + 1]) << ' ' << print(s.after) << '\n';
    }
    return out.str();
}

namespace {

std::optional<Redex> first_with_n(const Term& t, Path& path) {
    auto tags = redex_tags_at(t);
    if (!tags.empty()) return Redex{tags.front(), path};
    if (is_n_redex(t)) return Redex{RuleTag::N, path};
    for (int i = 0; i < t.child_count(); ++i) {
        path.push_back(i);
        auto found = first_with_n(t.child(i), path);
        path.pop_back();
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace

Trace normalize_with_cleaning(const Term& t, const Limits& limits) {
    FreshSupply supply(t);
    Term cur = establish_barendregt(t, supply);
    Trace trace{cur, {}, cur, 0};
    while (true) {
        Path p;
        auto redex = first_with_n(cur, p);
        if (!redex) break;
        if (trace.step_count >= limits.fuel) {
            trace.final = cur;
            throw FuelExhausted(std::move(trace));
        }
        const Term& node = subterm_at(cur, redex->path);
        Term contractum = redex->rule == RuleTag::N ? contract_n(node, supply) : contract(node, redex->rule, supply);
        Term next = replace_at(cur, redex->path, contractum);
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

}  // namespace lmu
