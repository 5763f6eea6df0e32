#pragma once

// Random instances of the head-reduction step accounting: u ≻ v in h steps,
// then compare against the substituted pair and against (u)w̄ versus (v)w̄.

#include <cstddef>
#include <optional>

#include "lmu/reduction.hpp"
#include "lmu/substitution.hpp"
#include "support/generators.hpp"

namespace lmu::testing {

struct AccountingInstance {
    Term u, v;
    std::size_t h = 0;  // h(u, v)
    Term p, q, w;       // closed: p for x, q for *al, w applied to u and v
};

struct AccountingOutcome {
    bool substitution = true;       // h(u[p/x, q/*al], v[p/x, q/*al]) = h(u, v)
    bool application = true;        // h((u)w, n) = h((v)w, n) + h(u, v) for a common reduct n
};

inline const LVarName kSubstVar{"x"};
inline const MVarName kSubstMuVar{"al"};

inline TermParams accounting_term_params() {
    TermParams p;
    p.max_depth = 6;
    p.free_lvars = {"x", "y"};
    p.free_mvars = {"al"};
    return p;
}

inline TermParams accounting_closed_params() {
    TermParams p;
    p.max_depth = 3;
    p.free_lvars = {};
    return p;
}

// nullopt when u does not head-normalize within fuel, takes no head step, or
// a drawn argument is not closed.
inline std::optional<AccountingInstance> draw_accounting_instance(Rng& rng, const TermParams& up,
                                                                  const TermParams& cp, std::size_t fuel) {
    Term u = random_term(rng, up);
    Limits limits{fuel};
    limits.max_size = 50 * fuel;
    std::optional<Trace> trace;
    try {
        trace = head_reduce(u, limits);
    } catch (const FuelExhausted&) {
        return std::nullopt;
    }
    if (trace->step_count == 0) return std::nullopt;
    std::size_t h = uniform(rng, 1, trace->step_count);
    Term p = random_term(rng, cp), q = random_term(rng, cp), w = random_term(rng, cp);
    if (!is_closed(p) || !is_closed(q) || !is_closed(w)) return std::nullopt;
    return AccountingInstance{trace->initial, trace->steps[h - 1].after, h, p, q, w};
}

inline Term substitute_instance(const Term& t, const AccountingInstance& in) {
    return subst(mu_subst_star(t, kSubstMuVar, in.q), kSubstVar, in.p);
}

// The term reached after exactly n head steps; nullopt when a head normal
// form comes first. Head reduction is deterministic, so t ≻ u in n steps iff
// this is alpha-equal to u (periodic reductions may reach u earlier too).
inline std::optional<Term> head_after(const Term& t, std::size_t n) {
    Limits limits{n};
    limits.record = false;
    try {
        Trace tr = head_reduce(t, limits);
        if (tr.step_count == n) return tr.final;
        return std::nullopt;
    } catch (const FuelExhausted& e) {
        return e.partial().final;
    }
}

inline bool reaches_in(const Term& t, const Term& target, std::size_t n) {
    auto r = head_after(t, n);
    return r && alpha_eq(*r, target);
}

inline AccountingOutcome check_accounting(const AccountingInstance& in, std::size_t fuel) {
    AccountingOutcome out;
    out.substitution = reaches_in(substitute_instance(in.u, in), substitute_instance(in.v, in), in.h);

    // The witness is where the head reduction of (v)w stands after at most
    // fuel steps: its head normal form when it has one.
    Limits limits{fuel};
    limits.record = false;
    std::optional<Trace> b;
    try {
        b = head_reduce(Term::app(in.v, in.w), limits);
    } catch (const FuelExhausted& e) {
        b = e.partial();
    }
    out.application = reaches_in(Term::app(in.u, in.w), b->final, b->step_count + in.h);
    return out;
}

}  // namespace lmu::testing
