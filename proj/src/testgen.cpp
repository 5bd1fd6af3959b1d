#include "zlam/testgen.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

namespace zlam {

namespace {

// Raw trees per exact size, generation order: Var (size 1 only), then Abs
// over each pool name, then App over the size splits.
std::vector<TermPtr> raw_terms_of_size(int size, const std::vector<Name>& pool,
                                       std::vector<std::vector<TermPtr>>& memo) {
    if (size < static_cast<int>(memo.size())) return memo[static_cast<size_t>(size)];
    if (size != static_cast<int>(memo.size()))
        throw std::logic_error("raw_terms_of_size: sizes must be filled in order");
    std::vector<TermPtr> out;
    if (size == 1) {
        for (const auto& n : pool) out.push_back(Term::var(n));
    } else {
        for (const auto& n : pool)
            for (const auto& b : memo[static_cast<size_t>(size - 1)])
                out.push_back(Term::abs(n, b));
        for (int i = 1; i <= size - 2; ++i)
            for (const auto& f : memo[static_cast<size_t>(i)])
                for (const auto& a : memo[static_cast<size_t>(size - 1 - i)])
                    out.push_back(Term::app(f, a));
    }
    memo.push_back(out);
    return out;
}

// Platform-independent bounded draw (uniform_int_distribution is not
// bit-reproducible across standard libraries).
uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

}  // namespace

std::vector<TermPtr> enumerate_terms(const EnumConfig& cfg) {
    if (cfg.var_pool.empty())
        throw std::invalid_argument("enumerate_terms: empty variable pool");
    std::vector<std::vector<TermPtr>> memo;
    memo.emplace_back();  // size 0 unused
    std::vector<TermPtr> out;
    std::unordered_set<std::string> seen;
    for (int size = 1; size <= cfg.max_size; ++size)
        for (const auto& t : raw_terms_of_size(size, cfg.var_pool, memo))
            if (seen.insert(alpha_key(t)).second) out.push_back(t);
    return out;
}

TermPtr random_term(uint64_t seed, const EnumConfig& cfg) {
    if (cfg.var_pool.empty())
        throw std::invalid_argument("random_term: empty variable pool");
    std::mt19937_64 rng(seed);
    // Recursive descent under a size budget.
    struct Gen {
        std::mt19937_64& rng;
        const std::vector<Name>& pool;
        TermPtr run(int budget) {
            int kinds = budget >= 3 ? 3 : (budget >= 2 ? 2 : 1);
            switch (draw(rng, static_cast<uint64_t>(kinds))) {
            case 0:
                return Term::var(pool[draw(rng, pool.size())]);
            case 1:
                return Term::abs(pool[draw(rng, pool.size())], run(budget - 1));
            default: {
                uint64_t left = 1 + draw(rng, static_cast<uint64_t>(budget - 2));
                TermPtr f = run(static_cast<int>(left));
                return Term::app(std::move(f), run(budget - 1 - static_cast<int>(left)));
            }
            }
        }
    };
    return Gen{rng, cfg.var_pool}.run(cfg.max_size);
}

FiniteArs random_finite_ars(uint64_t seed, int max_elems) {
    if (max_elems < 1)
        throw std::invalid_argument("random_finite_ars: max_elems must be positive");
    std::mt19937_64 rng(seed);
    uint64_t n = 1 + draw(rng, static_cast<uint64_t>(max_elems));
    FiniteArs out;
    for (uint64_t i = 0; i < n; ++i) out.elements.push_back(std::to_string(i));
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            if (draw(rng, 2) == 1) out.edges.emplace_back(out.elements[i], out.elements[j]);
    for (uint64_t i = 0; i < n; ++i)
        out.bullet.emplace(out.elements[i], out.elements[draw(rng, n)]);
    return out;
}

std::vector<Name> default_pool(int k) {
    static const std::vector<Name> supply{"x", "y", "z", "w", "u", "v"};
    if (k < 1 || k > static_cast<int>(supply.size()))
        throw std::invalid_argument("default_pool: supported pool sizes are 1.." +
                                    std::to_string(supply.size()));
    return {supply.begin(), supply.begin() + k};
}

}  // namespace zlam
