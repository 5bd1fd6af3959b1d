#pragma once

#include "zlam/ars.hpp"
#include "zlam/beta.hpp"
#include "zlam/superdev.hpp"
#include "zlam/syntax.hpp"
#include "zlam/term.hpp"

namespace zlam {

/// The λβ instance of the abstract layer: successors are one-step reducts,
/// the canonical key is the α-class key, bullet is the full-superdevelopment
/// map, and Z witnesses come from z_steps rather than search.

inline ars::ArsView<TermPtr> lambda_view() {
    return {
        [](const TermPtr& t) { return reducts(t); },
        [](const TermPtr& t) { return alpha_key(t); },
        [](const TermPtr& t) { return print(t); },
    };
}

inline ars::BulletMap<TermPtr> lambda_bullet_map() {
    return {[](const TermPtr& t) { return bullet(t); }};
}

inline ars::ZWitness<TermPtr> lambda_z_witness() {
    return [](const TermPtr& s, const TermPtr& t) {
        auto [w1, w2] = z_steps(s, t);
        return std::make_pair(std::move(w1.terms), std::move(w2.terms));
    };
}

}  // namespace zlam
