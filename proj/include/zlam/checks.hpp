#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "zlam/ars.hpp"
#include "zlam/term.hpp"

namespace zlam {

/// Outcome of one exhaustive / randomized suite.
struct SuiteReport {
    std::string suite;
    long checked = 0;
    long violations = 0;
    std::optional<ars::Violation> first_violation;
    std::map<std::string, std::string> params;

    bool ok() const { return violations == 0; }
};

/// Substitution lemma, exhaustive: t ≤ max_size, s and u ≤ sub_size over the
/// pool, all ordered pairs x ≠ y of pool names with x fresh for u. Both
/// lemma sides must be α-equal.
SuiteReport run_subst_suite(int max_size, int vars, int sub_size);

/// Lemma Self, exhaustive: self_steps(t) validates and runs from t to
/// bullet(t).
SuiteReport run_self_suite(int max_size, int vars);

/// Lemma Rhs, exhaustive: rhs_steps(t, x, s) validates and runs from
/// bullet(t)[x := bullet(s)] to bullet(t[x := s]).
SuiteReport run_rhs_suite(int max_size, int vars, int sub_size);

/// Lemma Z, exhaustive: for every step s → t, z_steps yields validated legs
/// t →* bullet(s) and bullet(s) →* bullet(t).
SuiteReport run_z_suite(int max_size, int vars);

/// Z ⇒ confluence, exhaustive: every peak of two legs of ≤ max_leg steps
/// joins via confluence_join with validated legs to a common reduct.
SuiteReport run_join_suite(int max_size, int vars, int max_leg = 2);

/// Z ⇔ angle on seeded random finite ARSs: check_z ok iff check_angle ok on
/// the •-development relation, and whenever the angle check passes,
/// angle_implies_z passes too.
SuiteReport run_angle_suite(uint64_t seed, int count, int max_elems, int depth);

}  // namespace zlam
