#pragma once

#include "lmu/term.hpp"

namespace lmu {

// The four substitutions used by the rewrite rules. Every inserted copy of the
// substituted term is freshened, so if the inputs jointly satisfy the
// Barendregt convention and the supply was seeded with them, so does the
// result.

// u[v/x]: replaces the free occurrences of x.
Term subst(const Term& u, const LVarName& x, const Term& v, FreshSupply& supply);
Term subst(const Term& u, const LVarName& x, const Term& v);

// u[v/*α]: every named subterm [α]w becomes [α](w)v.
Term mu_subst_star(const Term& u, const MVarName& alpha, const Term& v, FreshSupply& supply);
Term mu_subst_star(const Term& u, const MVarName& alpha, const Term& v);

// v[u/**α]: every named subterm [α]w becomes [α](u)w.
Term mu_subst_double_star(const Term& v, const MVarName& alpha, const Term& u, FreshSupply& supply);
Term mu_subst_double_star(const Term& v, const MVarName& alpha, const Term& u);

// u[α/β]: every naming occurrence [β] becomes [α]. Binders are untouched; the
// caller discards the binder of β.
Term rename_mvar(const Term& u, const MVarName& beta, const MVarName& alpha);

// Apply the substitution to the named term [β]w of a node μγ[β]w, ignoring
// the node's own binder: [β]w itself is rewritten when β = α. Rules C2 and N
// substitute for the variable their redex binds, which is exactly this case.
Term named_mu_subst_star(const Term& mu_node, const MVarName& alpha, const Term& v, FreshSupply& supply);
Term named_mu_subst_double_star(const Term& mu_node, const MVarName& alpha, const Term& u,
                                FreshSupply& supply);

}  // namespace lmu
