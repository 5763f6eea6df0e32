#include "lmu/substitution.hpp"

#include <functional>
#include <set>

namespace lmu {

namespace {

using Wrap = std::function<Term(Term)>;

Term rewrite_named(const Term& t, const MVarName& alpha, const Wrap& wrap, bool respect_binder) {
    switch (t.kind()) {
        case Kind::Var: return t;
        case Kind::Abs: {
            Term b = rewrite_named(t.body(), alpha, wrap, true);
            return b.same_node(t.body()) ? t : Term::abs(t.binder(), std::move(b));
        }
        case Kind::App: {
            Term f = rewrite_named(t.fun(), alpha, wrap, true);
            Term a = rewrite_named(t.arg(), alpha, wrap, true);
            if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
            return Term::app(std::move(f), std::move(a));
        }
        case Kind::Mu: {
            if (respect_binder && t.mu_binder() == alpha) return t;
            Term b = rewrite_named(t.body(), alpha, wrap, true);
            if (t.mu_name() == alpha) return Term::mu(t.mu_binder(), t.mu_name(), wrap(std::move(b)));
            return b.same_node(t.body()) ? t : Term::mu(t.mu_binder(), t.mu_name(), std::move(b));
        }
    }
    return t;
}

Wrap append_arg(const Term& v, FreshSupply& supply) {
    return [&v, &supply](Term w) { return Term::app(std::move(w), freshen(v, supply)); };
}

Wrap prepend_fun(const Term& u, FreshSupply& supply) {
    return [&u, &supply](Term w) { return Term::app(freshen(u, supply), std::move(w)); };
}

FreshSupply seeded(const Term& a, const Term& b) {
    FreshSupply s(a);
    s.seed(b);
    return s;
}

bool binds_any(const Term& t, const std::set<LVarName>& ls, const std::set<MVarName>& ms) {
    switch (t.kind()) {
        case Kind::Var: return false;
        case Kind::Abs: return ls.count(t.binder()) || binds_any(t.body(), ls, ms);
        case Kind::App: return binds_any(t.fun(), ls, ms) || binds_any(t.arg(), ls, ms);
        case Kind::Mu: return ms.count(t.mu_binder()) || binds_any(t.body(), ls, ms);
    }
    return false;
}

// The convenience overloads accept any inputs: u is renamed apart when one
// of its binders would capture a free name of v.
Term apart(const Term& u, const Term& v, FreshSupply& supply) {
    if (!binds_any(u, free_lvars(v), free_mvars(v))) return u;
    return freshen(u, supply);
}

}  // namespace

Term subst(const Term& u, const LVarName& x, const Term& v, FreshSupply& supply) {
    switch (u.kind()) {
        case Kind::Var: return u.var_name() == x ? freshen(v, supply) : u;
        case Kind::Abs: {
            if (u.binder() == x) return u;
            Term b = subst(u.body(), x, v, supply);
            return b.same_node(u.body()) ? u : Term::abs(u.binder(), std::move(b));
        }
        case Kind::App: {
            Term f = subst(u.fun(), x, v, supply);
            Term a = subst(u.arg(), x, v, supply);
            if (f.same_node(u.fun()) && a.same_node(u.arg())) return u;
            return Term::app(std::move(f), std::move(a));
        }
        case Kind::Mu: {
            Term b = subst(u.body(), x, v, supply);
            return b.same_node(u.body()) ? u : Term::mu(u.mu_binder(), u.mu_name(), std::move(b));
        }
    }
    return u;
}

Term subst(const Term& u, const LVarName& x, const Term& v) {
    FreshSupply s = seeded(u, v);
    return subst(apart(u, v, s), x, v, s);
}

Term mu_subst_star(const Term& u, const MVarName& alpha, const Term& v, FreshSupply& supply) {
    return rewrite_named(u, alpha, append_arg(v, supply), true);
}

Term mu_subst_star(const Term& u, const MVarName& alpha, const Term& v) {
    FreshSupply s = seeded(u, v);
    return mu_subst_star(apart(u, v, s), alpha, v, s);
}

Term mu_subst_double_star(const Term& v, const MVarName& alpha, const Term& u, FreshSupply& supply) {
    return rewrite_named(v, alpha, prepend_fun(u, supply), true);
}

Term mu_subst_double_star(const Term& v, const MVarName& alpha, const Term& u) {
    FreshSupply s = seeded(u, v);
    return mu_subst_double_star(apart(v, u, s), alpha, u, s);
}

Term named_mu_subst_star(const Term& mu_node, const MVarName& alpha, const Term& v,
                         FreshSupply& supply) {
    return rewrite_named(mu_node, alpha, append_arg(v, supply), false);
}

Term named_mu_subst_double_star(const Term& mu_node, const MVarName& alpha, const Term& u,
                                FreshSupply& supply) {
    return rewrite_named(mu_node, alpha, prepend_fun(u, supply), false);
}

Term rename_mvar(const Term& u, const MVarName& beta, const MVarName& alpha) {
    switch (u.kind()) {
        case Kind::Var: return u;
        case Kind::Abs: {
            Term b = rename_mvar(u.body(), beta, alpha);
            return b.same_node(u.body()) ? u : Term::abs(u.binder(), std::move(b));
        }
        case Kind::App: {
            Term f = rename_mvar(u.fun(), beta, alpha);
            Term a = rename_mvar(u.arg(), beta, alpha);
            if (f.same_node(u.fun()) && a.same_node(u.arg())) return u;
            return Term::app(std::move(f), std::move(a));
        }
        case Kind::Mu: {
            if (u.mu_binder() == beta) return u;
            Term b = rename_mvar(u.body(), beta, alpha);
            const MVarName& name = u.mu_name() == beta ? alpha : u.mu_name();
            if (name == u.mu_name() && b.same_node(u.body())) return u;
            return Term::mu(u.mu_binder(), name, std::move(b));
        }
    }
    return u;
}

}  // namespace lmu
