#include "zlam/term.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace zlam {

TermPtr Term::var(Name name) {
    return TermPtr(new Term(Kind::Var, std::move(name), nullptr, nullptr));
}

TermPtr Term::app(TermPtr fun, TermPtr arg) {
    return TermPtr(new Term(Kind::App, {}, std::move(fun), std::move(arg)));
}

TermPtr Term::abs(Name binder, TermPtr body) {
    return TermPtr(new Term(Kind::Abs, std::move(binder), std::move(body), nullptr));
}

int term_size(const TermPtr& t) {
    switch (t->kind()) {
    case Term::Kind::Var: return 1;
    case Term::Kind::Abs: return 1 + term_size(t->body());
    case Term::Kind::App: return 1 + term_size(t->fun()) + term_size(t->arg());
    }
    return 0;
}

namespace {

void collect_free(const TermPtr& t, std::vector<Name>& bound, std::set<Name>& out) {
    switch (t->kind()) {
    case Term::Kind::Var:
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            if (*it == t->name()) return;
        out.insert(t->name());
        return;
    case Term::Kind::App:
        collect_free(t->fun(), bound, out);
        collect_free(t->arg(), bound, out);
        return;
    case Term::Kind::Abs:
        bound.push_back(t->name());
        collect_free(t->body(), bound, out);
        bound.pop_back();
        return;
    }
}

// Binder correspondence: pairs of binders in scope, innermost last.
bool alpha_eq_rec(const TermPtr& s, const TermPtr& t,
                  std::vector<std::pair<Name, Name>>& env) {
    if (s->kind() != t->kind()) return false;
    switch (s->kind()) {
    case Term::Kind::Var:
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
            bool ls = it->first == s->name();
            bool lt = it->second == t->name();
            if (ls || lt) return ls && lt;
        }
        return s->name() == t->name();
    case Term::Kind::App:
        return alpha_eq_rec(s->fun(), t->fun(), env) &&
               alpha_eq_rec(s->arg(), t->arg(), env);
    case Term::Kind::Abs: {
        env.emplace_back(s->name(), t->name());
        bool ok = alpha_eq_rec(s->body(), t->body(), env);
        env.pop_back();
        return ok;
    }
    }
    return false;
}

void alpha_key_rec(const TermPtr& t, std::vector<Name>& env, std::string& out) {
    switch (t->kind()) {
    case Term::Kind::Var: {
        for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
            if (env[static_cast<size_t>(i)] == t->name()) {
                out += 'b';
                out += std::to_string(env.size() - 1 - static_cast<size_t>(i));
                return;
            }
        }
        out += 'f';
        out += t->name();
        return;
    }
    case Term::Kind::App:
        out += '(';
        alpha_key_rec(t->fun(), env, out);
        out += ' ';
        alpha_key_rec(t->arg(), env, out);
        out += ')';
        return;
    case Term::Kind::Abs:
        out += '\\';
        env.push_back(t->name());
        alpha_key_rec(t->body(), env, out);
        env.pop_back();
        return;
    }
}

}  // namespace

std::set<Name> free_vars(const TermPtr& t) {
    std::set<Name> out;
    std::vector<Name> bound;
    collect_free(t, bound, out);
    return out;
}

bool is_fresh(const Name& x, const TermPtr& t) {
    return free_vars(t).count(x) == 0;
}

bool alpha_eq(const TermPtr& s, const TermPtr& t) {
    std::vector<std::pair<Name, Name>> env;
    return alpha_eq_rec(s, t, env);
}

std::string alpha_key(const TermPtr& t) {
    std::string out;
    std::vector<Name> env;
    alpha_key_rec(t, env, out);
    return out;
}

Name fresh_name(const std::set<Name>& avoid, const Name& base) {
    Name stem = base;
    while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back())))
        stem.pop_back();
    if (avoid.count(stem) == 0) return stem;
    for (unsigned long i = 1;; ++i) {
        Name cand = stem + std::to_string(i);
        if (avoid.count(cand) == 0) return cand;
    }
}

TermPtr subst(const TermPtr& t, const Name& x, const TermPtr& s) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return t->name() == x ? s : t;
    case Term::Kind::App:
        return Term::app(subst(t->fun(), x, s), subst(t->arg(), x, s));
    case Term::Kind::Abs: {
        const Name& y = t->name();
        if (y == x) return t;  // x shadowed, substitution stops
        if (is_fresh(x, t)) return t;
        if (is_fresh(y, s))
            return Term::abs(y, subst(t->body(), x, s));
        // Freshness constraint fails: rename the binder first.
        std::set<Name> avoid = free_vars(s);
        avoid.insert(x);
        auto fv_body = free_vars(t->body());
        avoid.insert(fv_body.begin(), fv_body.end());
        Name z = fresh_name(avoid, y);
        return Term::abs(z, subst(subst(t->body(), y, Term::var(z)), x, s));
    }
    }
    return t;
}

std::pair<TermPtr, TermPtr> substitution_lemma_sides(
    const TermPtr& t, const Name& x, const TermPtr& s,
    const Name& y, const TermPtr& u) {
    if (x == y)
        throw std::invalid_argument("substitution_lemma_sides: x and y must differ");
    if (!is_fresh(x, u))
        throw std::invalid_argument("substitution_lemma_sides: x must be fresh for u");
    TermPtr lhs = subst(subst(t, x, s), y, u);
    TermPtr rhs = subst(subst(t, y, u), x, subst(s, y, u));
    return {lhs, rhs};
}

}  // namespace zlam
