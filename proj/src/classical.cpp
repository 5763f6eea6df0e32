#include "lmu/classical.hpp"

#include <algorithm>
#include <sstream>

#include "lmu/parser.hpp"
#include "lmu/reduction.hpp"

namespace lmu {

RepSet RepSet::finite(std::set<std::size_t> elements) {
    RepSet r;
    r.finite_ = true;
    r.elements_ = std::move(elements);
    return r;
}

RepSet RepSet::up_from(std::size_t k) {
    RepSet r;
    r.finite_ = false;
    r.lower_ = k;
    return r;
}

bool RepSet::contains(std::size_t n) const { return finite_ ? elements_.count(n) != 0 : n >= lower_; }

std::optional<std::size_t> RepSet::singleton() const {
    if (finite_ && elements_.size() == 1) return *elements_.begin();
    return std::nullopt;
}

RepSet RepSet::shifted() const {
    if (!finite_) return up_from(lower_ + 1);
    std::set<std::size_t> out;
    for (auto n : elements_) out.insert(n + 1);
    return finite(std::move(out));
}

RepSet RepSet::intersect(const RepSet& other) const {
    if (!finite_ && !other.finite_) return up_from(std::max(lower_, other.lower_));
    const RepSet& fin = finite_ ? *this : other;
    const RepSet& rest = finite_ ? other : *this;
    std::set<std::size_t> out;
    for (auto n : fin.elements_)
        if (rest.contains(n)) out.insert(n);
    return finite(std::move(out));
}

bool RepSet::subset_of(const ValSet& v) const {
    if (!finite_) return false;
    return std::includes(v.begin(), v.end(), elements_.begin(), elements_.end());
}

std::string RepSet::to_string() const {
    if (!finite_) return ">=" + std::to_string(lower_);
    return format_set(elements_);
}

std::string format_set(const ValSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto n : s) {
        if (!first) out += ',';
        out += std::to_string(n);
        first = false;
    }
    return out + "}";
}

Path NChain::path_to(std::size_t index) const {
    Path p;
    for (std::size_t k = 0; k < index && k < nodes.size(); ++k) p.push_back(nodes[k].is_app() ? 1 : 0);
    return p;
}

std::optional<NChain> flatten_nxf(const Term& u) {
    NChain c;
    const Term* cur = &u;
    while (true) {
        switch (cur->kind()) {
            case Kind::Var:
                c.x = cur->var_name();
                c.nodes.push_back(*cur);
                if (c.f && *c.f == c.x) return std::nullopt;
                return c;
            case Kind::App: {
                if (!cur->fun().is_var()) return std::nullopt;
                const LVarName& f = cur->fun().var_name();
                if (c.f && *c.f != f) return std::nullopt;
                c.f = f;
                c.nodes.push_back(*cur);
                cur = &cur->arg();
                break;
            }
            case Kind::Mu:
                if (cur->body().is_mu() || cur->body().is_abs()) return std::nullopt;
                c.nodes.push_back(*cur);
                cur = &cur->body();
                break;
            case Kind::Abs: return std::nullopt;
        }
    }
}

bool is_nxf(const Term& u, const LVarName& x, const LVarName& f) {
    if (x == f) return false;
    auto c = flatten_nxf(u);
    return c && c->x == x && (!c->f || *c->f == f);
}

std::optional<IntegerShape> recognize_normal_integer_shape(const Term& t) {
    if (!t.is_abs() || !t.body().is_abs()) return std::nullopt;
    const LVarName& x = t.binder();
    const LVarName& f = t.body().binder();
    const Term& u = t.body().body();
    if (!is_nxf(u, x, f) || !free_mvars(u).empty()) return std::nullopt;
    return IntegerShape{u, x, f};
}

namespace {

NChain require_chain(const Term& u) {
    auto c = flatten_nxf(u);
    if (!c) throw NotInNShape("term is not in N_{x,f}: " + print(u));
    return std::move(*c);
}

// Bodies v of the named subterms [α]v of the named term at nodes[i], as chain
// indices of v.
template <class Visit>
void for_each_named_body(const NChain& c, std::size_t i, Visit visit) {
    const Term& node = c.nodes[i];
    const MVarName& alpha = node.mu_binder();
    if (node.mu_name() == alpha) visit(i + 1);
    for (std::size_t j = i + 1; j + 1 < c.nodes.size(); ++j) {
        const Term& m = c.nodes[j];
        if (!m.is_mu()) continue;
        if (m.mu_binder() == alpha) break;
        if (m.mu_name() == alpha) visit(j + 1);
    }
}

}  // namespace

RepSet rep(const Term& u) {
    NChain c = require_chain(u);
    std::vector<RepSet> r(c.nodes.size());
    for (std::size_t i = c.nodes.size(); i-- > 0;) {
        const Term& node = c.nodes[i];
        if (node.is_var()) {
            r[i] = RepSet::finite({0});
        } else if (node.is_app()) {
            r[i] = r[i + 1].shifted();
        } else {
            RepSet acc = RepSet::naturals();
            for_each_named_body(c, i, [&](std::size_t v) { acc = acc.intersect(r[v]); });
            r[i] = std::move(acc);
        }
    }
    return r.front();
}

ValSet val(const Term& u) {
    NChain c = require_chain(u);
    std::vector<ValSet> r(c.nodes.size());
    for (std::size_t i = c.nodes.size(); i-- > 0;) {
        const Term& node = c.nodes[i];
        if (node.is_var()) {
            r[i] = {0};
        } else if (node.is_app()) {
            for (auto n : r[i + 1]) r[i].insert(n + 1);
        } else {
            for_each_named_body(c, i, [&](std::size_t v) { r[i].insert(r[v].begin(), r[v].end()); });
        }
    }
    return r.front();
}

namespace {

std::string segment_text(const NChain& c, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t k = from; k <= to; ++k) {
        if (!out.empty()) out += ' ';
        const Term& n = c.nodes[k];
        if (n.is_app()) out += "(" + n.fun().var_name().str() + ")";
        else out += "mu " + n.mu_binder().str() + ".[" + n.mu_name().str() + "]";
    }
    return out;
}

}  // namespace

SpineDecomposition spine_decompose(const Term& u) {
    NChain c = require_chain(u);
    if (val(u).size() != 1) throw SpineNotFound("val is not a singleton");
    SpineDecomposition d{{}, {}, 0, Term::var(c.x), {}};
    std::size_t p = c.nodes.size() - 1;
    while (true) {
        std::size_t run = 0;
        std::size_t k = p;
        while (k > 0 && c.nodes[k - 1].is_app()) {
            --k;
            ++run;
        }
        d.counts.push_back(run);
        if (k == 0) break;
        std::size_t naming = k - 1;  // a μ-node
        const MVarName& alpha = c.nodes[naming].mu_name();
        std::size_t b = naming + 1;
        while (b > 0 && !(c.nodes[b - 1].is_mu() && c.nodes[b - 1].mu_binder() == alpha)) --b;
        if (b == 0) throw SpineNotFound("spine variable " + alpha.str() + " is free");
        std::size_t binder = b - 1;
        d.spine_vars.push_back(alpha);
        d.false_parts.push_back({c.path_to(binder), c.path_to(naming), segment_text(c, binder, naming)});
        p = binder;
    }
    for (auto i : d.counts) d.fictive_value += i;
    LVarName f = c.f.value_or(LVarName(c.x.str() == "f" ? "g" : "f"));
    d.true_part = Term::abs(c.x, Term::abs(f, iterate_app(Term::var(f), d.fictive_value, Term::var(c.x))));
    return d;
}

ClassificationReport classify(const Term& t) {
    if (!is_normal(t)) throw NotNormal("term is not in λμ-normal form: " + print(t));
    ClassificationReport report;
    auto shape = recognize_normal_integer_shape(t);
    if (!shape) return report;
    report.in_n_shape = true;
    report.rep = rep(shape->body);
    report.val = val(shape->body);
    if (auto n = report.rep.singleton()) {
        report.verdict = {VerdictKind::ClassicalInteger, *n};
    } else if (report.val.size() == 1) {
        report.verdict = {VerdictKind::FictiveOnly, *report.val.begin()};
    }
    if (report.val.size() == 1) {
        SpineDecomposition d = spine_decompose(shape->body);
        // Rebuild the true part with the binders of t.
        d.true_part = Term::abs(shape->x, Term::abs(shape->f, iterate_app(Term::var(shape->f), d.fictive_value,
                                                                           Term::var(shape->x))));
        report.spine = std::move(d);
    }
    return report;
}

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::ClassicalInteger: return "classical-integer";
        case VerdictKind::FictiveOnly: return "fictive-only";
        case VerdictKind::NotInteger: return "not-integer";
    }
    return "?";
}

std::string serialize_report(const ClassificationReport& report) {
    std::ostringstream out;
    out << "shape=" << (report.in_n_shape ? "yes" : "no") << '\n';
    out << "rep=" << (report.in_n_shape ? report.rep.to_string() : "-") << '\n';
    out << "val=" << (report.in_n_shape ? format_set(report.val) : "-") << '\n';
    out << "verdict=" << to_string(report.verdict.kind) << '\n';
    out << "value=";
    if (report.verdict.kind == VerdictKind::NotInteger) out << '-';
    else out << report.verdict.value;
    out << '\n';
    out << "true_part=" << (report.spine ? print(report.spine->true_part) : "-") << '\n';
    if (report.spine) {
        const auto& s = *report.spine;
        out << "spine=";
        for (std::size_t i = 0; i < s.spine_vars.size(); ++i) out << (i ? "," : "") << s.spine_vars[i].str();
        out << "\ncounts=";
        for (std::size_t i = 0; i < s.counts.size(); ++i) out << (i ? "," : "") << s.counts[i];
        out << "\nfalse_parts=";
        for (std::size_t i = 0; i < s.false_parts.size(); ++i) out << (i ? " | " : "") << s.false_parts[i].text;
        out << '\n';
    }
    return out.str();
}

}  // namespace lmu
