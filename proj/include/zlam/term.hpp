#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace zlam {

/// Variable / binder identifier. Lexical class: [a-z][A-Za-z0-9_']*.
using Name = std::string;

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable λ-term: Var | App | Abs. Equality throughout the project is
/// α-equivalence (alpha_eq), never structural equality on binder names.
class Term {
public:
    enum class Kind { Var, App, Abs };

    static TermPtr var(Name name);
    static TermPtr app(TermPtr fun, TermPtr arg);
    static TermPtr abs(Name binder, TermPtr body);

    Kind kind() const { return kind_; }
    bool is_var() const { return kind_ == Kind::Var; }
    bool is_app() const { return kind_ == Kind::App; }
    bool is_abs() const { return kind_ == Kind::Abs; }

    /// Var name or Abs binder.
    const Name& name() const { return name_; }
    const TermPtr& fun() const { return left_; }
    const TermPtr& arg() const { return right_; }
    const TermPtr& body() const { return left_; }

private:
    Term(Kind kind, Name name, TermPtr left, TermPtr right)
        : kind_(kind), name_(std::move(name)),
          left_(std::move(left)), right_(std::move(right)) {}

    Kind kind_;
    Name name_;
    TermPtr left_;   // App fun / Abs body
    TermPtr right_;  // App arg
};

/// Constructor count: Var = 1, Abs = 1 + body, App = 1 + fun + arg.
int term_size(const TermPtr& t);

/// Variables with a free occurrence in t.
std::set<Name> free_vars(const TermPtr& t);

/// x # t: x has no free occurrence in t.
bool is_fresh(const Name& x, const TermPtr& t);

/// Decides α-equivalence by simultaneous traversal under a binder
/// correspondence.
bool alpha_eq(const TermPtr& s, const TermPtr& t);

/// Canonical string for the α-class of t (de-Bruijn-style numbering of
/// binders). alpha_key(s) == alpha_key(t) iff alpha_eq(s, t); used as a
/// hash key by visited sets and dedup.
std::string alpha_key(const TermPtr& t);

/// First name of the form base, base1, base2, ... not in avoid. Trailing
/// digits of base are stripped first so renamed binders stay readable.
Name fresh_name(const std::set<Name>& avoid, const Name& base = "a");

/// Capture-avoiding substitution t[x := s]. Total; renames the binder of an
/// abstraction exactly when the freshness constraint (binder distinct from x
/// and not free in s) fails. A binder equal to x shadows x and substitution
/// stops there.
TermPtr subst(const TermPtr& t, const Name& x, const TermPtr& s);

/// Both sides of the substitution lemma:
///   (t[x:=s])[y:=u]  and  (t[y:=u])[x := s[y:=u]]
/// Requires x != y and x fresh for u; throws std::invalid_argument otherwise.
/// Callers assert α-equality of the two components.
std::pair<TermPtr, TermPtr> substitution_lemma_sides(
    const TermPtr& t, const Name& x, const TermPtr& s,
    const Name& y, const TermPtr& u);

}  // namespace zlam
