#pragma once

#include <optional>
#include <vector>

#include "zlam/term.hpp"

namespace zlam {

/// Nonempty sequence of terms where each adjacent pair is a single β-step.
/// Length 1 encodes the empty reduction t →* t. The universal witness format.
struct ReductionSeq {
    std::vector<TermPtr> terms;

    ReductionSeq() = default;
    explicit ReductionSeq(TermPtr t) { terms.push_back(std::move(t)); }
    explicit ReductionSeq(std::vector<TermPtr> ts) : terms(std::move(ts)) {}

    const TermPtr& front() const { return terms.front(); }
    const TermPtr& back() const { return terms.back(); }
    size_t length() const { return terms.size(); }
};

/// All one-step β-reducts of t, α-deduplicated, in leftmost-outermost order:
/// root redex first, then fun-position, then arg-position, then under the
/// binder.
std::vector<TermPtr> reducts(const TermPtr& t);

/// True iff some one-step reduct of s is α-equivalent to t.
bool is_step(const TermPtr& s, const TermPtr& t);

/// True iff every adjacent pair of seq satisfies is_step.
bool validate_seq(const ReductionSeq& seq);

/// All terms reachable from t in at most depth β-steps, α-deduplicated,
/// in BFS order.
std::vector<TermPtr> reachable(const TermPtr& t, int depth);

/// BFS search for a reduction from s to (an α-equivalent of) t of at most
/// depth steps. Absence means "not found within bound", not non-reachability.
std::optional<ReductionSeq> reduces_to(const TermPtr& s, const TermPtr& t, int depth);

/// s →* s' lifted to s u →* s' u.
ReductionSeq cong_app_left(const ReductionSeq& seq, const TermPtr& u);

/// t →* t' lifted to u t →* u t'.
ReductionSeq cong_app_right(const TermPtr& u, const ReductionSeq& seq);

/// t →* t' lifted under the binder: λx.t →* λx.t'.
ReductionSeq cong_abs(const Name& x, const ReductionSeq& seq);

/// s →* s' lifted into the substituend: t[x:=s] →* t[x:=s'], one step per
/// free occurrence of x in t, leftmost occurrence first.
ReductionSeq subst_right_steps(const TermPtr& t, const Name& x, const ReductionSeq& seq);

/// Substitutivity: s →β t gives the single step s[x:=u] →β t[x:=u].
ReductionSeq subst_left_step(const TermPtr& s, const TermPtr& t,
                             const Name& x, const TermPtr& u);

/// Coherence of β with abstraction: a reduction from λx.t only passes through
/// abstractions; peel the binder to obtain (t', body_seq) with body_seq a
/// reduction from t to t' and the input's final term α-equivalent to λx.t'.
std::pair<TermPtr, ReductionSeq> abs_coherence(const Name& x, const TermPtr& t,
                                               const ReductionSeq& seq);

/// Concatenation of witnesses; requires alpha_eq(a.back(), b.front()).
ReductionSeq compose_seqs(const ReductionSeq& a, const ReductionSeq& b);

/// Swap α-equivalent representatives in at the endpoints (keeps printed
/// traces anchored at the caller's terms). Throws std::logic_error if the
/// given endpoints are not α-equivalent to the sequence's.
ReductionSeq reanchor(ReductionSeq seq, const TermPtr& first, const TermPtr& last);

}  // namespace zlam
