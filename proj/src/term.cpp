#include "lmu/term.hpp"

#include <cctype>
#include <unordered_map>

namespace lmu {

struct Term::Node {
    Kind kind;
    std::size_t size = 1;
    LVarName lvar;      // Var name, Abs binder
    MVarName mbinder;   // Mu
    MVarName mname;     // Mu
    Term first;         // Abs/Mu body, App fun
    Term second;        // App arg
};

Term Term::var(LVarName name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->lvar = std::move(name);
    return Term(std::move(n));
}

Term Term::abs(LVarName binder, Term body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Abs;
    n->size = 1 + body.size();
    n->lvar = std::move(binder);
    n->first = std::move(body);
    return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->size = 1 + fun.size() + arg.size();
    n->first = std::move(fun);
    n->second = std::move(arg);
    return Term(std::move(n));
}

Term Term::mu(MVarName binder, MVarName name, Term body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mu;
    n->size = 1 + body.size();
    n->mbinder = std::move(binder);
    n->mname = std::move(name);
    n->first = std::move(body);
    return Term(std::move(n));
}

Kind Term::kind() const noexcept { return node_->kind; }
std::size_t Term::size() const noexcept { return node_->size; }

namespace {
[[noreturn]] void wrong_kind(const char* what) {
    throw std::logic_error(std::string("term accessor used on wrong node kind: ") + what);
}
}  // namespace

const LVarName& Term::var_name() const {
    if (!is_var()) wrong_kind("var_name");
    return node_->lvar;
}
const LVarName& Term::binder() const {
    if (!is_abs()) wrong_kind("binder");
    return node_->lvar;
}
const Term& Term::body() const {
    if (!is_abs() && !is_mu()) wrong_kind("body");
    return node_->first;
}
const Term& Term::fun() const {
    if (!is_app()) wrong_kind("fun");
    return node_->first;
}
const Term& Term::arg() const {
    if (!is_app()) wrong_kind("arg");
    return node_->second;
}
const MVarName& Term::mu_binder() const {
    if (!is_mu()) wrong_kind("mu_binder");
    return node_->mbinder;
}
const MVarName& Term::mu_name() const {
    if (!is_mu()) wrong_kind("mu_name");
    return node_->mname;
}

int Term::child_count() const noexcept {
    switch (kind()) {
        case Kind::Var: return 0;
        case Kind::App: return 2;
        default: return 1;
    }
}

const Term& Term::child(int index) const {
    if (index < 0 || index >= child_count()) throw std::out_of_range("term child index");
    return index == 0 ? node_->first : node_->second;
}

const Term& subterm_at(const Term& t, const Path& path) {
    const Term* cur = &t;
    for (int i : path) cur = &cur->child(i);
    return *cur;
}

namespace {

Term with_child(const Term& t, int index, Term c) {
    switch (t.kind()) {
        case Kind::Abs: return Term::abs(t.binder(), std::move(c));
        case Kind::Mu: return Term::mu(t.mu_binder(), t.mu_name(), std::move(c));
        case Kind::App:
            return index == 0 ? Term::app(std::move(c), t.arg()) : Term::app(t.fun(), std::move(c));
        case Kind::Var: break;
    }
    throw std::out_of_range("variable has no children");
}

Term replace_from(const Term& t, const Path& path, std::size_t depth, const Term& replacement) {
    if (depth == path.size()) return replacement;
    int i = path[depth];
    return with_child(t, i, replace_from(t.child(i), path, depth + 1, replacement));
}

// Scoped binding counts, so shadowed names are handled even on terms that do
// not satisfy the Barendregt convention.
struct ScopeCount {
    std::unordered_map<std::string, int> count;
    void push(const std::string& s) { ++count[s]; }
    void pop(const std::string& s) {
        if (--count[s] == 0) count.erase(s);
    }
    bool bound(const std::string& s) const { return count.count(s) != 0; }
};

void collect_free_l(const Term& t, ScopeCount& scope, std::set<LVarName>& out) {
    switch (t.kind()) {
        case Kind::Var:
            if (!scope.bound(t.var_name().str())) out.insert(t.var_name());
            return;
        case Kind::Abs:
            scope.push(t.binder().str());
            collect_free_l(t.body(), scope, out);
            scope.pop(t.binder().str());
            return;
        case Kind::App:
            collect_free_l(t.fun(), scope, out);
            collect_free_l(t.arg(), scope, out);
            return;
        case Kind::Mu:
            collect_free_l(t.body(), scope, out);
            return;
    }
}

void collect_free_m(const Term& t, ScopeCount& scope, std::set<MVarName>& out) {
    switch (t.kind()) {
        case Kind::Var: return;
        case Kind::Abs: collect_free_m(t.body(), scope, out); return;
        case Kind::App:
            collect_free_m(t.fun(), scope, out);
            collect_free_m(t.arg(), scope, out);
            return;
        case Kind::Mu:
            scope.push(t.mu_binder().str());
            if (!scope.bound(t.mu_name().str())) out.insert(t.mu_name());
            collect_free_m(t.body(), scope, out);
            scope.pop(t.mu_binder().str());
            return;
    }
}

}  // namespace

Term replace_at(const Term& t, const Path& path, const Term& replacement) {
    return replace_from(t, path, 0, replacement);
}

std::set<LVarName> free_lvars(const Term& t) {
    std::set<LVarName> out;
    ScopeCount scope;
    collect_free_l(t, scope, out);
    return out;
}

std::set<MVarName> free_mvars(const Term& t) {
    std::set<MVarName> out;
    ScopeCount scope;
    collect_free_m(t, scope, out);
    return out;
}

bool is_closed(const Term& t) { return free_lvars(t).empty() && free_mvars(t).empty(); }

namespace {

// Bound names map to the depth of their binder; free names are absent.
class AlphaEnv {
public:
    struct Saved {
        std::string name;
        std::optional<int> previous;
    };

    Saved bind(const std::string& name, int level) {
        Saved s{name, std::nullopt};
        if (auto it = levels_.find(name); it != levels_.end()) s.previous = it->second;
        levels_[name] = level;
        return s;
    }
    void restore(const Saved& s) {
        if (s.previous) levels_[s.name] = *s.previous;
        else levels_.erase(s.name);
    }
    std::optional<int> level(const std::string& name) const {
        auto it = levels_.find(name);
        if (it == levels_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::unordered_map<std::string, int> levels_;
};

struct AlphaComparer {
    AlphaEnv left_l, right_l, left_m, right_m;
    int depth = 0;

    static bool same_var(const AlphaEnv& le, const AlphaEnv& re, const std::string& a,
                         const std::string& b) {
        auto la = le.level(a);
        auto lb = re.level(b);
        if (la || lb) return la == lb;
        return a == b;
    }

    bool eq(const Term& t, const Term& u) {
        if (t.same_node(u) && depth == 0) return true;
        if (t.kind() != u.kind() || t.size() != u.size()) return false;
        switch (t.kind()) {
            case Kind::Var: return same_var(left_l, right_l, t.var_name().str(), u.var_name().str());
            case Kind::App: return eq(t.fun(), u.fun()) && eq(t.arg(), u.arg());
            case Kind::Abs: {
                ++depth;
                auto sl = left_l.bind(t.binder().str(), depth);
                auto sr = right_l.bind(u.binder().str(), depth);
                bool r = eq(t.body(), u.body());
                left_l.restore(sl);
                right_l.restore(sr);
                --depth;
                return r;
            }
            case Kind::Mu: {
                ++depth;
                auto sl = left_m.bind(t.mu_binder().str(), depth);
                auto sr = right_m.bind(u.mu_binder().str(), depth);
                bool r = same_var(left_m, right_m, t.mu_name().str(), u.mu_name().str()) &&
                         eq(t.body(), u.body());
                left_m.restore(sl);
                right_m.restore(sr);
                --depth;
                return r;
            }
        }
        return false;
    }
};

void collect_binders(const Term& t, std::vector<std::string>& lb, std::vector<std::string>& mb) {
    switch (t.kind()) {
        case Kind::Var: return;
        case Kind::Abs:
            lb.push_back(t.binder().str());
            collect_binders(t.body(), lb, mb);
            return;
        case Kind::App:
            collect_binders(t.fun(), lb, mb);
            collect_binders(t.arg(), lb, mb);
            return;
        case Kind::Mu:
            mb.push_back(t.mu_binder().str());
            collect_binders(t.body(), lb, mb);
            return;
    }
}

void collect_all_names(const Term& t, std::unordered_set<std::string>& l,
                       std::unordered_set<std::string>& m) {
    switch (t.kind()) {
        case Kind::Var: l.insert(t.var_name().str()); return;
        case Kind::Abs:
            l.insert(t.binder().str());
            collect_all_names(t.body(), l, m);
            return;
        case Kind::App:
            collect_all_names(t.fun(), l, m);
            collect_all_names(t.arg(), l, m);
            return;
        case Kind::Mu:
            m.insert(t.mu_binder().str());
            m.insert(t.mu_name().str());
            collect_all_names(t.body(), l, m);
            return;
    }
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u) {
    AlphaComparer cmp;
    return cmp.eq(t, u);
}

bool satisfies_barendregt(const Term& t) {
    std::vector<std::string> lb, mb;
    collect_binders(t, lb, mb);
    std::unordered_set<std::string> ls, ms;
    for (const auto& b : lb)
        if (!ls.insert(b).second) return false;
    for (const auto& b : mb)
        if (!ms.insert(b).second) return false;
    for (const auto& v : free_lvars(t))
        if (ls.count(v.str())) return false;
    for (const auto& v : free_mvars(t))
        if (ms.count(v.str())) return false;
    return true;
}

void FreshSupply::seed(const Term& t) { collect_all_names(t, used_l_, used_m_); }

std::string FreshSupply::next(std::string_view hint, std::unordered_set<std::string>& used) {
    std::string base(hint);
    while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
    if (base.empty()) base = "v";
    std::size_t& counter = counters_[base];
    std::string candidate;
    do {
        candidate = base + std::to_string(++counter);
    } while (used.count(candidate));
    used.insert(candidate);
    return candidate;
}

LVarName FreshSupply::fresh_lvar(std::string_view hint) { return LVarName(next(hint, used_l_)); }
MVarName FreshSupply::fresh_mvar(std::string_view hint) { return MVarName(next(hint, used_m_)); }

namespace {

class Renamer {
public:
    Renamer(FreshSupply& supply, bool rename_all) : supply_(supply), all_(rename_all) {}

    void reserve_free(const Term& t) {
        for (const auto& v : free_lvars(t)) taken_l_.insert(v.str());
        for (const auto& v : free_mvars(t)) taken_m_.insert(v.str());
    }

    Term run(const Term& t) {
        switch (t.kind()) {
            case Kind::Var: {
                auto it = env_l_.find(t.var_name().str());
                if (it == env_l_.end() || it->second == t.var_name().str()) return t;
                return Term::var(LVarName(it->second));
            }
            case Kind::App: {
                Term f = run(t.fun());
                Term a = run(t.arg());
                if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
                return Term::app(std::move(f), std::move(a));
            }
            case Kind::Abs: {
                const std::string& old = t.binder().str();
                std::string fresh = choose(old, taken_l_, [&] { return supply_.fresh_lvar(old).str(); });
                auto saved = bind(env_l_, old, fresh);
                Term b = run(t.body());
                unbind(env_l_, old, saved);
                if (fresh == old && b.same_node(t.body())) return t;
                return Term::abs(LVarName(fresh), std::move(b));
            }
            case Kind::Mu: {
                const std::string& old = t.mu_binder().str();
                std::string fresh = choose(old, taken_m_, [&] { return supply_.fresh_mvar(old).str(); });
                auto saved = bind(env_m_, old, fresh);
                std::string name = t.mu_name().str();
                if (auto it = env_m_.find(name); it != env_m_.end()) name = it->second;
                Term b = run(t.body());
                unbind(env_m_, old, saved);
                if (fresh == old && name == t.mu_name().str() && b.same_node(t.body())) return t;
                return Term::mu(MVarName(fresh), MVarName(name), std::move(b));
            }
        }
        return t;
    }

private:
    using Env = std::unordered_map<std::string, std::string>;

    template <class Make>
    std::string choose(const std::string& old, std::unordered_set<std::string>& taken, Make make) {
        std::string result = (all_ || taken.count(old)) ? make() : old;
        taken.insert(result);
        return result;
    }

    static std::optional<std::string> bind(Env& env, const std::string& old, const std::string& fresh) {
        std::optional<std::string> prev;
        if (auto it = env.find(old); it != env.end()) prev = it->second;
        env[old] = fresh;
        return prev;
    }
    static void unbind(Env& env, const std::string& old, const std::optional<std::string>& prev) {
        if (prev) env[old] = *prev;
        else env.erase(old);
    }

    FreshSupply& supply_;
    bool all_;
    std::unordered_set<std::string> taken_l_, taken_m_;
    Env env_l_, env_m_;
};

}  // namespace

Term freshen(const Term& t, FreshSupply& supply) {
    Renamer r(supply, true);
    return r.run(t);
}

Term establish_barendregt(const Term& t, FreshSupply& supply) {
    supply.seed(t);
    Renamer r(supply, false);
    r.reserve_free(t);
    return r.run(t);
}

Term establish_barendregt(const Term& t) {
    FreshSupply supply(t);
    return establish_barendregt(t, supply);
}

Term iterate_app(const Term& f, std::size_t n, Term base) {
    for (std::size_t i = 0; i < n; ++i) base = Term::app(f, std::move(base));
    return base;
}

Term church(std::size_t n) {
    Term f = Term::var("f");
    return Term::abs(LVarName("x"), Term::abs(LVarName("f"), iterate_app(f, n, Term::var("x"))));
}

Term zero_term() { return church(0); }

Term successor_term() {
    // λn.λx.λf.(f)((n)x)f
    Term f = Term::var("f");
    Term inner = Term::app(Term::app(Term::var("n"), Term::var("x")), f);
    return Term::abs(LVarName("n"),
                     Term::abs(LVarName("x"), Term::abs(LVarName("f"), Term::app(f, inner))));
}

std::optional<std::size_t> church_value(const Term& t) {
    if (!t.is_abs() || !t.body().is_abs()) return std::nullopt;
    const LVarName& x = t.binder();
    const LVarName& f = t.body().binder();
    if (x == f) return std::nullopt;
    const Term* cur = &t.body().body();
    std::size_t n = 0;
    while (cur->is_app()) {
        if (!cur->fun().is_var() || cur->fun().var_name() != f) return std::nullopt;
        cur = &cur->arg();
        ++n;
    }
    if (!cur->is_var() || cur->var_name() != x) return std::nullopt;
    return n;
}

}  // namespace lmu
