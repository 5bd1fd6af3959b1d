#include "zlam/beta.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "zlam/syntax.hpp"

namespace zlam {

namespace {

void push_dedup(std::vector<TermPtr>& out, std::unordered_set<std::string>& seen,
                TermPtr t) {
    if (seen.insert(alpha_key(t)).second) out.push_back(std::move(t));
}

void require_valid(const ReductionSeq& seq, const char* who) {
    if (!validate_seq(seq))
        throw std::invalid_argument(std::string(who) + ": input sequence does not validate");
}

}  // namespace

std::vector<TermPtr> reducts(const TermPtr& t) {
    std::vector<TermPtr> out;
    std::unordered_set<std::string> seen;
    switch (t->kind()) {
    case Term::Kind::Var:
        break;
    case Term::Kind::App: {
        if (t->fun()->is_abs())
            push_dedup(out, seen, subst(t->fun()->body(), t->fun()->name(), t->arg()));
        for (const auto& r : reducts(t->fun()))
            push_dedup(out, seen, Term::app(r, t->arg()));
        for (const auto& r : reducts(t->arg()))
            push_dedup(out, seen, Term::app(t->fun(), r));
        break;
    }
    case Term::Kind::Abs:
        for (const auto& r : reducts(t->body()))
            push_dedup(out, seen, Term::abs(t->name(), r));
        break;
    }
    return out;
}

bool is_step(const TermPtr& s, const TermPtr& t) {
    std::string key = alpha_key(t);
    for (const auto& r : reducts(s))
        if (alpha_key(r) == key) return true;
    return false;
}

bool validate_seq(const ReductionSeq& seq) {
    if (seq.terms.empty()) return false;
    for (size_t i = 0; i + 1 < seq.terms.size(); ++i)
        if (!is_step(seq.terms[i], seq.terms[i + 1])) return false;
    return true;
}

std::vector<TermPtr> reachable(const TermPtr& t, int depth) {
    std::vector<TermPtr> out;
    std::unordered_set<std::string> seen;
    std::deque<std::pair<TermPtr, int>> frontier;
    seen.insert(alpha_key(t));
    out.push_back(t);
    frontier.emplace_back(t, 0);
    while (!frontier.empty()) {
        auto [cur, d] = frontier.front();
        frontier.pop_front();
        if (d >= depth) continue;
        for (const auto& r : reducts(cur)) {
            if (seen.insert(alpha_key(r)).second) {
                out.push_back(r);
                frontier.emplace_back(r, d + 1);
            }
        }
    }
    return out;
}

std::optional<ReductionSeq> reduces_to(const TermPtr& s, const TermPtr& t, int depth) {
    std::string target = alpha_key(t);
    if (alpha_key(s) == target) return ReductionSeq(s);
    std::unordered_map<std::string, std::pair<std::string, TermPtr>> parent;
    std::deque<std::pair<TermPtr, int>> frontier;
    parent.emplace(alpha_key(s), std::make_pair(std::string(), s));
    frontier.emplace_back(s, 0);
    while (!frontier.empty()) {
        auto [cur, d] = frontier.front();
        frontier.pop_front();
        if (d >= depth) continue;
        std::string cur_key = alpha_key(cur);
        for (const auto& r : reducts(cur)) {
            std::string key = alpha_key(r);
            if (parent.count(key)) continue;
            parent.emplace(key, std::make_pair(cur_key, r));
            if (key == target) {
                std::vector<TermPtr> path{r};
                std::string k = cur_key;
                while (!k.empty()) {
                    auto& entry = parent.at(k);
                    path.push_back(entry.second);
                    k = entry.first;
                }
                std::reverse(path.begin(), path.end());
                return ReductionSeq(std::move(path));
            }
            frontier.emplace_back(r, d + 1);
        }
    }
    return std::nullopt;
}

ReductionSeq cong_app_left(const ReductionSeq& seq, const TermPtr& u) {
    require_valid(seq, "cong_app_left");
    std::vector<TermPtr> out;
    out.reserve(seq.terms.size());
    for (const auto& t : seq.terms) out.push_back(Term::app(t, u));
    return ReductionSeq(std::move(out));
}

ReductionSeq cong_app_right(const TermPtr& u, const ReductionSeq& seq) {
    require_valid(seq, "cong_app_right");
    std::vector<TermPtr> out;
    out.reserve(seq.terms.size());
    for (const auto& t : seq.terms) out.push_back(Term::app(u, t));
    return ReductionSeq(std::move(out));
}

ReductionSeq cong_abs(const Name& x, const ReductionSeq& seq) {
    require_valid(seq, "cong_abs");
    std::vector<TermPtr> out;
    out.reserve(seq.terms.size());
    for (const auto& t : seq.terms) out.push_back(Term::abs(x, t));
    return ReductionSeq(std::move(out));
}

ReductionSeq subst_right_steps(const TermPtr& t, const Name& x, const ReductionSeq& seq) {
    require_valid(seq, "subst_right_steps");
    ReductionSeq out(subst(t, x, seq.front()));
    for (size_t i = 0; i + 1 < seq.terms.size(); ++i) {
        const TermPtr& s = seq.terms[i];
        const TermPtr& s2 = seq.terms[i + 1];
        // One step of seq lifted through t, one step per free occurrence of
        // x, leftmost first. Structural recursion on t.
        struct Lift {
            const Name& x;
            const TermPtr& s;
            const TermPtr& s2;
            ReductionSeq run(const TermPtr& t) const {
                switch (t->kind()) {
                case Term::Kind::Var:
                    if (t->name() == x) return ReductionSeq({s, s2});
                    return ReductionSeq(t);
                case Term::Kind::App: {
                    ReductionSeq lf = run(t->fun());
                    ReductionSeq la = run(t->arg());
                    return compose_seqs(cong_app_left(lf, subst(t->arg(), x, s)),
                                        cong_app_right(lf.back(), la));
                }
                case Term::Kind::Abs: {
                    const Name& y = t->name();
                    if (y == x || is_fresh(x, t)) return ReductionSeq(t);
                    std::set<Name> avoid = free_vars(s);
                    auto fv2 = free_vars(s2);
                    avoid.insert(fv2.begin(), fv2.end());
                    auto fvb = free_vars(t->body());
                    avoid.insert(fvb.begin(), fvb.end());
                    avoid.insert(x);
                    Name z = fresh_name(avoid, y);
                    TermPtr body = (z == y) ? t->body() : subst(t->body(), y, Term::var(z));
                    return cong_abs(z, run(body));
                }
                }
                return ReductionSeq(t);
            }
        };
        out = compose_seqs(out, Lift{x, s, s2}.run(t));
    }
    return reanchor(std::move(out), subst(t, x, seq.front()), subst(t, x, seq.back()));
}

ReductionSeq subst_left_step(const TermPtr& s, const TermPtr& t,
                             const Name& x, const TermPtr& u) {
    if (!is_step(s, t))
        throw std::invalid_argument("subst_left_step: not a single β-step");
    ReductionSeq out({subst(s, x, u), subst(t, x, u)});
    if (!validate_seq(out))
        throw std::logic_error("subst_left_step: substitutivity produced a non-step");
    return out;
}

std::pair<TermPtr, ReductionSeq> abs_coherence(const Name& x, const TermPtr& t,
                                               const ReductionSeq& seq) {
    require_valid(seq, "abs_coherence");
    if (!alpha_eq(seq.front(), Term::abs(x, t)))
        throw std::invalid_argument("abs_coherence: sequence does not start at the abstraction");
    std::vector<TermPtr> bodies;
    bodies.push_back(t);
    for (size_t i = 1; i < seq.terms.size(); ++i) {
        const TermPtr& e = seq.terms[i];
        if (!e->is_abs())
            throw std::logic_error("abs_coherence: non-abstraction in a reduction from an abstraction");
        // x is never free in e (free variables do not grow along β-steps),
        // so renaming e's binder to x is safe.
        TermPtr body = (e->name() == x) ? e->body() : subst(e->body(), e->name(), Term::var(x));
        bodies.push_back(body);
    }
    ReductionSeq body_seq(std::move(bodies));
    if (!validate_seq(body_seq))
        throw std::logic_error("abs_coherence: peeled body sequence does not validate");
    return {body_seq.back(), body_seq};
}

ReductionSeq compose_seqs(const ReductionSeq& a, const ReductionSeq& b) {
    if (a.terms.empty() || b.terms.empty())
        throw std::invalid_argument("compose_seqs: empty sequence");
    if (!alpha_eq(a.back(), b.front()))
        throw std::invalid_argument("compose_seqs: junction terms differ: " +
                                    print(a.back()) + " vs " + print(b.front()));
    ReductionSeq out = a;
    out.terms.insert(out.terms.end(), b.terms.begin() + 1, b.terms.end());
    return out;
}

ReductionSeq reanchor(ReductionSeq seq, const TermPtr& first, const TermPtr& last) {
    if (seq.terms.empty())
        throw std::invalid_argument("reanchor: empty sequence");
    if (!alpha_eq(seq.front(), first))
        throw std::logic_error("reanchor: first endpoint mismatch: " +
                               print(seq.front()) + " vs " + print(first));
    if (!alpha_eq(seq.back(), last))
        throw std::logic_error("reanchor: last endpoint mismatch: " +
                               print(seq.back()) + " vs " + print(last));
    seq.terms.front() = first;
    seq.terms.back() = last;
    return seq;
}

}  // namespace zlam
