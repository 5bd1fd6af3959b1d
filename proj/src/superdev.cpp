#include "zlam/superdev.hpp"

#include <stdexcept>

namespace zlam {

namespace {

// λx.t with x renamed to a name fresh for everything in avoid (plus t's own
// free variables). Returns the new binder and body.
std::pair<Name, TermPtr> freshen_binder(const Name& y, const TermPtr& body,
                                        std::set<Name> avoid) {
    auto fv = free_vars(body);
    avoid.insert(fv.begin(), fv.end());
    avoid.insert(y);
    Name z = fresh_name(avoid, y);
    return {z, subst(body, y, Term::var(z))};
}

// Chains substitutivity along a reduction of the left side:
// p0 →* pn gives p0[x:=u] →* pn[x:=u].
ReductionSeq subst_left_chain(const ReductionSeq& seq, const Name& x, const TermPtr& u) {
    ReductionSeq out(subst(seq.front(), x, u));
    for (size_t i = 0; i + 1 < seq.terms.size(); ++i)
        out = compose_seqs(out, subst_left_step(seq.terms[i], seq.terms[i + 1], x, u));
    return out;
}

}  // namespace

TermPtr app_beta(const TermPtr& s, const TermPtr& t) {
    if (s->is_abs()) return subst(s->body(), s->name(), t);
    return Term::app(s, t);
}

TermPtr bullet(const TermPtr& t) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return t;
    case Term::Kind::Abs:
        return Term::abs(t->name(), bullet(t->body()));
    case Term::Kind::App:
        return app_beta(bullet(t->fun()), bullet(t->arg()));
    }
    return t;
}

ReductionSeq app_beta_steps(const ReductionSeq& s_seq, const ReductionSeq& t_seq) {
    if (!validate_seq(s_seq) || !validate_seq(t_seq))
        throw std::invalid_argument("app_beta_steps: input sequence does not validate");
    TermPtr target = app_beta(s_seq.back(), t_seq.back());
    if (s_seq.front()->is_abs()) {
        // Abstractions only reduce to abstractions: peel the whole sequence,
        // push the left steps through the substitution, then reduce inside
        // the substituend occurrence by occurrence.
        const Name& x = s_seq.front()->name();
        auto [body_end, body_seq] = abs_coherence(x, s_seq.front()->body(), s_seq);
        ReductionSeq w = subst_left_chain(body_seq, x, t_seq.front());
        w = compose_seqs(w, subst_right_steps(body_end, x, t_seq));
        return reanchor(std::move(w), app_beta(s_seq.front(), t_seq.front()), target);
    }
    // First argument starts as a non-abstraction; watch for it becoming one.
    size_t k = s_seq.terms.size();
    for (size_t i = 1; i < s_seq.terms.size(); ++i)
        if (s_seq.terms[i]->is_abs()) { k = i; break; }
    if (k == s_seq.terms.size()) {
        ReductionSeq w = compose_seqs(cong_app_left(s_seq, t_seq.front()),
                                      cong_app_right(s_seq.back(), t_seq));
        return reanchor(std::move(w), Term::app(s_seq.front(), t_seq.front()), target);
    }
    ReductionSeq prefix(std::vector<TermPtr>(s_seq.terms.begin(),
                                             s_seq.terms.begin() + static_cast<long>(k) + 1));
    ReductionSeq suffix(std::vector<TermPtr>(s_seq.terms.begin() + static_cast<long>(k),
                                             s_seq.terms.end()));
    ReductionSeq w = cong_app_left(prefix, t_seq.front());
    // Root step created by the first argument turning into an abstraction.
    w.terms.push_back(app_beta(s_seq.terms[k], t_seq.front()));
    if (!is_step(w.terms[w.terms.size() - 2], w.terms.back()))
        throw std::logic_error("app_beta_steps: created root step does not validate");
    w = compose_seqs(w, app_beta_steps(suffix, t_seq));
    return reanchor(std::move(w), Term::app(s_seq.front(), t_seq.front()), target);
}

ReductionSeq self_steps(const TermPtr& t) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return ReductionSeq(t);
    case Term::Kind::Abs:
        return cong_abs(t->name(), self_steps(t->body()));
    case Term::Kind::App: {
        TermPtr bf = bullet(t->fun());
        ReductionSeq w = compose_seqs(cong_app_left(self_steps(t->fun()), t->arg()),
                                      cong_app_right(bf, self_steps(t->arg())));
        if (bf->is_abs()) w.terms.push_back(app_beta(bf, bullet(t->arg())));
        return reanchor(std::move(w), t, bullet(t));
    }
    }
    return ReductionSeq(t);
}

ReductionSeq rhs_steps(const TermPtr& t, const Name& x, const TermPtr& s) {
    TermPtr bs = bullet(s);
    TermPtr source = subst(bullet(t), x, bs);
    TermPtr target = bullet(subst(t, x, s));
    switch (t->kind()) {
    case Term::Kind::Var:
        // Both sides are bullet(s) when t = x, and t itself otherwise.
        return ReductionSeq(t->name() == x ? bs : t);
    case Term::Kind::Abs: {
        std::set<Name> avoid = free_vars(s);
        auto fvb = free_vars(bs);
        avoid.insert(fvb.begin(), fvb.end());
        avoid.insert(x);
        auto [z, body] = freshen_binder(t->name(), t->body(), std::move(avoid));
        ReductionSeq w = cong_abs(z, rhs_steps(body, x, s));
        return reanchor(std::move(w), source, target);
    }
    case Term::Kind::App: {
        TermPtr b1 = bullet(t->fun());
        TermPtr b2 = bullet(t->arg());
        ReductionSeq seq1 = rhs_steps(t->fun(), x, s);
        ReductionSeq seq2 = rhs_steps(t->arg(), x, s);
        TermPtr p1 = bullet(subst(t->fun(), x, s));
        TermPtr q2 = bullet(subst(t->arg(), x, s));
        if (!b1->is_abs()) {
            ReductionSeq w = compose_seqs(cong_app_left(seq1, subst(b2, x, bs)),
                                          cong_app_right(p1, seq2));
            // bullet(t->fun()[x:=s]) may be an abstraction even though
            // bullet(t->fun()) was not (e.g. bullet(t->fun()) = x); close
            // with the reflexive root step in that case.
            if (p1->is_abs()) {
                w.terms.push_back(app_beta(p1, q2));
                if (!is_step(w.terms[w.terms.size() - 2], w.terms.back()))
                    throw std::logic_error("rhs_steps: closing root step does not validate");
            }
            return reanchor(std::move(w), source, target);
        }
        // bullet(t->fun()) = λy.u. Rename y apart from x, s and their
        // bullets, then follow the proof: the substitution lemma turns the
        // source into (u[x:=bullet s])[y := b2[x:=bullet s]]; reduce the
        // left component along the coherence-peeled IH, then the right
        // component occurrence-wise.
        std::set<Name> avoid = free_vars(s);
        for (const auto& tp : {bs, b2, p1, q2, subst(b2, x, bs)}) {
            auto fv = free_vars(tp);
            avoid.insert(fv.begin(), fv.end());
        }
        avoid.insert(x);
        auto [y, u] = freshen_binder(b1->name(), b1->body(), std::move(avoid));
        TermPtr seq1_start = Term::abs(y, subst(u, x, bs));
        auto [v, body_seq] = abs_coherence(y, subst(u, x, bs),
                                           reanchor(seq1, seq1_start, seq1.back()));
        TermPtr q = subst(b2, x, bs);
        ReductionSeq w(subst(subst(u, x, bs), y, q));
        for (size_t i = 0; i + 1 < body_seq.terms.size(); ++i)
            w = compose_seqs(w, subst_left_step(body_seq.terms[i], body_seq.terms[i + 1], y, q));
        w = compose_seqs(w, subst_right_steps(v, y, seq2));
        return reanchor(std::move(w), source, target);
    }
    }
    return ReductionSeq(t);
}

std::pair<ReductionSeq, ReductionSeq> z_steps(const TermPtr& s, const TermPtr& t) {
    TermPtr bs = bullet(s);
    TermPtr bt = bullet(t);
    // Root step: s = (λx.b) a, t = b[x:=a].
    if (s->is_app() && s->fun()->is_abs()) {
        const Name& x = s->fun()->name();
        const TermPtr& b = s->fun()->body();
        const TermPtr& a = s->arg();
        if (alpha_eq(subst(b, x, a), t)) {
            ReductionSeq w1 = subst_left_chain(self_steps(b), x, a);
            w1 = compose_seqs(w1, subst_right_steps(bullet(b), x, self_steps(a)));
            w1 = reanchor(std::move(w1), t, bs);
            ReductionSeq w2 = reanchor(rhs_steps(b, x, a), bs, bt);
            return {std::move(w1), std::move(w2)};
        }
    }
    if (s->is_abs()) {
        if (!t->is_abs())
            throw std::invalid_argument("z_steps: not a single β-step");
        const Name& x = s->name();
        // Free variables never grow along a step, so t's binder can be
        // renamed to x without capture.
        TermPtr tb = (t->name() == x) ? t->body() : subst(t->body(), t->name(), Term::var(x));
        auto [w1b, w2b] = z_steps(s->body(), tb);
        return {reanchor(cong_abs(x, w1b), t, bs),
                reanchor(cong_abs(x, w2b), bs, bt)};
    }
    if (s->is_app() && t->is_app()) {
        if (alpha_eq(t->arg(), s->arg()) && is_step(s->fun(), t->fun())) {
            auto [z1, z2] = z_steps(s->fun(), t->fun());
            TermPtr bf = bullet(s->fun());
            ReductionSeq w1 = compose_seqs(cong_app_left(z1, t->arg()),
                                           cong_app_right(bf, self_steps(t->arg())));
            if (bf->is_abs()) w1.terms.push_back(app_beta(bf, bullet(t->arg())));
            w1 = reanchor(std::move(w1), t, bs);
            ReductionSeq w2 = reanchor(app_beta_steps(z2, ReductionSeq(bullet(s->arg()))), bs, bt);
            return {std::move(w1), std::move(w2)};
        }
        if (alpha_eq(t->fun(), s->fun()) && is_step(s->arg(), t->arg())) {
            auto [z1, z2] = z_steps(s->arg(), t->arg());
            TermPtr bf = bullet(t->fun());
            ReductionSeq w1 = compose_seqs(cong_app_left(self_steps(t->fun()), t->arg()),
                                           cong_app_right(bf, z1));
            if (bf->is_abs()) w1.terms.push_back(app_beta(bf, bullet(s->arg())));
            w1 = reanchor(std::move(w1), t, bs);
            ReductionSeq w2 = reanchor(app_beta_steps(ReductionSeq(bullet(s->fun())), z2), bs, bt);
            return {std::move(w1), std::move(w2)};
        }
    }
    throw std::invalid_argument("z_steps: not a single β-step");
}

}  // namespace zlam
