#pragma once

#include <cstdint>
#include <vector>

#include "zlam/finite_ars.hpp"
#include "zlam/term.hpp"

namespace zlam {

/// Enumeration bounds. Size counts constructors: Var = 1, Abs = 1 + body,
/// App = 1 + fun + arg. Binders are drawn from the same pool as free
/// variables; α-dedup collapses the renamings.
struct EnumConfig {
    int max_size = 6;
    std::vector<Name> var_pool{"x", "y"};
};

/// All terms of size ≤ cfg.max_size over cfg.var_pool, deduplicated up to
/// α-equivalence, in deterministic size-then-structure order.
std::vector<TermPtr> enumerate_terms(const EnumConfig& cfg);

/// Deterministic seeded random term of size ≤ cfg.max_size.
TermPtr random_term(uint64_t seed, const EnumConfig& cfg);

/// Deterministic seeded random finite ARS with ≤ max_elems elements and a
/// total bullet map.
FiniteArs random_finite_ars(uint64_t seed, int max_elems);

/// First k names of the fixed pool supply x, y, z, w, u, v, ...
std::vector<Name> default_pool(int k);

}  // namespace zlam
