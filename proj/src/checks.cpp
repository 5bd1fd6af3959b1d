#include "zlam/checks.hpp"

#include "zlam/beta.hpp"
#include "zlam/lambda_instance.hpp"
#include "zlam/superdev.hpp"
#include "zlam/syntax.hpp"
#include "zlam/testgen.hpp"

namespace zlam {

namespace {

void record(SuiteReport& rep, ars::Violation v) {
    ++rep.violations;
    if (!rep.first_violation) rep.first_violation = std::move(v);
}

void record(SuiteReport& rep, const TermPtr& object, const TermPtr& step_target,
            std::string failed_leg, std::string detail) {
    record(rep, ars::Violation{print(object), print(step_target),
                               std::move(failed_leg), std::move(detail)});
}

// Checks a witness sequence against its contract endpoints.
bool witness_ok(const ReductionSeq& seq, const TermPtr& from, const TermPtr& to,
                std::string* why) {
    if (!validate_seq(seq)) { *why = "sequence does not validate"; return false; }
    if (!alpha_eq(seq.front(), from)) {
        *why = "starts at " + print(seq.front()) + ", expected " + print(from);
        return false;
    }
    if (!alpha_eq(seq.back(), to)) {
        *why = "ends at " + print(seq.back()) + ", expected " + print(to);
        return false;
    }
    return true;
}

std::map<std::string, std::string> size_params(int max_size, int vars, int sub_size = -1) {
    std::map<std::string, std::string> p{{"max_size", std::to_string(max_size)},
                                         {"vars", std::to_string(vars)}};
    if (sub_size >= 0) p["sub_size"] = std::to_string(sub_size);
    return p;
}

}  // namespace

SuiteReport run_subst_suite(int max_size, int vars, int sub_size) {
    SuiteReport rep{.suite = "subst", .params = size_params(max_size, vars, sub_size)};
    auto pool = default_pool(vars);
    auto terms = enumerate_terms({max_size, pool});
    auto subs = enumerate_terms({sub_size, pool});
    for (const auto& x : pool)
        for (const auto& y : pool) {
            if (x == y) continue;
            for (const auto& u : subs) {
                if (!is_fresh(x, u)) continue;
                for (const auto& t : terms)
                    for (const auto& s : subs) {
                        ++rep.checked;
                        auto [lhs, rhs] = substitution_lemma_sides(t, x, s, y, u);
                        if (!alpha_eq(lhs, rhs))
                            record(rep, t, s, "substitution-lemma",
                                   "t=" + print(t) + " x=" + x + " s=" + print(s) +
                                       " y=" + y + " u=" + print(u) + ": " + print(lhs) +
                                       " vs " + print(rhs));
                    }
            }
        }
    return rep;
}

SuiteReport run_self_suite(int max_size, int vars) {
    SuiteReport rep{.suite = "self", .params = size_params(max_size, vars)};
    for (const auto& t : enumerate_terms({max_size, default_pool(vars)})) {
        ++rep.checked;
        std::string why;
        if (!witness_ok(self_steps(t), t, bullet(t), &why))
            record(rep, t, bullet(t), "self", why);
    }
    return rep;
}

SuiteReport run_rhs_suite(int max_size, int vars, int sub_size) {
    SuiteReport rep{.suite = "rhs", .params = size_params(max_size, vars, sub_size)};
    auto pool = default_pool(vars);
    auto terms = enumerate_terms({max_size, pool});
    auto subs = enumerate_terms({sub_size, pool});
    for (const auto& t : terms)
        for (const auto& x : pool)
            for (const auto& s : subs) {
                ++rep.checked;
                std::string why;
                if (!witness_ok(rhs_steps(t, x, s), subst(bullet(t), x, bullet(s)),
                                bullet(subst(t, x, s)), &why))
                    record(rep, t, s, "rhs",
                           "t=" + print(t) + " x=" + x + " s=" + print(s) + ": " + why);
            }
    return rep;
}

SuiteReport run_z_suite(int max_size, int vars) {
    SuiteReport rep{.suite = "z", .params = size_params(max_size, vars)};
    for (const auto& s : enumerate_terms({max_size, default_pool(vars)})) {
        TermPtr bs = bullet(s);
        for (const auto& t : reducts(s)) {
            ++rep.checked;
            auto [w1, w2] = z_steps(s, t);
            std::string why;
            if (!witness_ok(w1, t, bs, &why))
                record(rep, s, t, "z-left", why);
            else if (!witness_ok(w2, bs, bullet(t), &why))
                record(rep, s, t, "z-right", why);
        }
    }
    return rep;
}

SuiteReport run_join_suite(int max_size, int vars, int max_leg) {
    SuiteReport rep{.suite = "join", .params = size_params(max_size, vars)};
    rep.params["max_leg"] = std::to_string(max_leg);
    auto view = lambda_view();
    auto bmap = lambda_bullet_map();
    auto zw = lambda_z_witness();
    for (const auto& a : enumerate_terms({max_size, default_pool(vars)})) {
        // All reduction sequences from a of at most max_leg steps.
        std::vector<std::vector<TermPtr>> legs{{a}};
        for (size_t i = 0; i < legs.size(); ++i) {
            if (static_cast<int>(legs[i].size()) > max_leg) continue;
            auto cur = legs[i];
            for (const auto& r : reducts(cur.back())) {
                auto ext = cur;
                ext.push_back(r);
                legs.push_back(std::move(ext));
            }
        }
        for (const auto& left : legs)
            for (const auto& right : legs) {
                ++rep.checked;
                auto [e, w_b, w_c] = ars::confluence_join(view, bmap, zw, left, right);
                std::string why;
                if (!witness_ok(ReductionSeq(w_b), left.back(), e, &why))
                    record(rep, a, left.back(), "join-left-leg", why);
                else if (!witness_ok(ReductionSeq(w_c), right.back(), e, &why))
                    record(rep, a, right.back(), "join-right-leg", why);
            }
    }
    return rep;
}

SuiteReport run_angle_suite(uint64_t seed, int count, int max_elems, int depth) {
    SuiteReport rep{.suite = "angle",
                    .params = {{"seed", std::to_string(seed)},
                               {"count", std::to_string(count)},
                               {"max_elems", std::to_string(max_elems)},
                               {"depth", std::to_string(depth)}}};
    for (int i = 0; i < count; ++i) {
        ++rep.checked;
        FiniteArs fa = random_finite_ars(seed + static_cast<uint64_t>(i), max_elems);
        auto view = fa.view();
        auto bmap = fa.bullet_map();
        bool z_ok = !ars::check_z(view, bmap, fa.elements, depth);
        auto rel = ars::dev_relation(view, bmap, fa.elements, depth);
        auto angle = ars::check_angle(view, bmap, rel, fa.elements, depth);
        if (z_ok != !angle) {
            record(rep, ars::Violation{"ars seed " + std::to_string(seed + static_cast<uint64_t>(i)),
                                       "", "z-angle-equivalence",
                                       std::string("check_z says ") + (z_ok ? "ok" : "violation") +
                                           " but check_angle on dev_relation says " +
                                           (!angle ? "ok" : ("violation: " + angle->detail))});
            continue;
        }
        if (!angle) {
            if (auto v = ars::angle_implies_z(view, bmap, rel, fa.elements, depth))
                record(rep, ars::Violation{"ars seed " + std::to_string(seed + static_cast<uint64_t>(i)),
                                           v->step_target, "angle-implies-z", v->detail});
        }
    }
    return rep;
}

}  // namespace zlam
