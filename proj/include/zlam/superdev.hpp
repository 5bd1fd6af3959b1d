#pragma once

#include "zlam/beta.hpp"
#include "zlam/term.hpp"

namespace zlam {

/// Application with built-in β-reduction at the root: if s is an abstraction
/// λx.u the result is u[x:=t], otherwise s t.
TermPtr app_beta(const TermPtr& s, const TermPtr& t);

/// Lifts s →* s' and t →* t' to app_beta(s,t) →* app_beta(s',t'), by case
/// analysis on the first argument.
ReductionSeq app_beta_steps(const ReductionSeq& s_seq, const ReductionSeq& t_seq);

/// The full-superdevelopment map: contracts all redexes of t and the
/// upward-created ones.
///   Var x    ↦ x
///   λx.u     ↦ λx. bullet(u)
///   s u      ↦ app_beta(bullet(s), bullet(u))
TermPtr bullet(const TermPtr& t);

/// Every term self-expands to its full-superdevelopment: a validated
/// reduction from t to bullet(t). Terminates for all t, including
/// non-normalizing ones.
ReductionSeq self_steps(const TermPtr& t);

/// Applying bullet to the result of a substitution does at least as much as
/// substituting the bullets: a validated reduction from
/// bullet(t)[x := bullet(s)] to bullet(t[x := s]).
ReductionSeq rhs_steps(const TermPtr& t, const Name& x, const TermPtr& s);

/// The Z-property witness for a single step s →β t: a pair of validated
/// reductions (t →* bullet(s), bullet(s) →* bullet(t)). Throws
/// std::invalid_argument if s →β t is not a single step.
std::pair<ReductionSeq, ReductionSeq> z_steps(const TermPtr& s, const TermPtr& t);

}  // namespace zlam
