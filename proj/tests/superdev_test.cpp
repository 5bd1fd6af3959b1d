#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zlam/superdev.hpp"
#include "zlam/syntax.hpp"
#include "zlam/testgen.hpp"

using namespace zlam;

namespace {

const char* kOmega = "(\\x. x x) (\\x. x x)";
const char* kI = "\\x. x";

bool witness_ok(const ReductionSeq& seq, const TermPtr& from, const TermPtr& to) {
    return validate_seq(seq) && alpha_eq(seq.front(), from) && alpha_eq(seq.back(), to);
}

// Independent route for the application fact: split on whether bullet of the
// fun side is an abstraction instead of going through app_beta.
TermPtr bullet_app_by_cases(const TermPtr& s, const TermPtr& u) {
    TermPtr bs = bullet(s);
    TermPtr bu = bullet(u);
    if (bs->is_abs()) return subst(bs->body(), bs->name(), bu);
    return Term::app(bs, bu);
}

}  // namespace

TEST_CASE("app_beta") {
    CHECK(alpha_eq(app_beta(parse(kI), parse("y")), parse("y")));
    CHECK(alpha_eq(app_beta(parse("y"), parse("z")), parse("y z")));
    CHECK(alpha_eq(app_beta(parse("\\x. x x"), parse("\\y. y")),
                   parse("(\\y. y) (\\y. y)")));
}

TEST_CASE("bullet clauses") {
    CHECK(alpha_eq(bullet(parse("y")), parse("y")));
    CHECK(alpha_eq(bullet(parse("\\x. (\\y. y) x")), parse("\\x. x")));
    // the superdevelopment signature: the upward-created redex is contracted
    CHECK(alpha_eq(bullet(parse("((\\x. x) (\\y. y)) z")), parse("z")));
    CHECK(alpha_eq(bullet(parse(kOmega)), parse(kOmega)));
    // the term where bullet-developments differ from classical ones
    CHECK(alpha_eq(bullet(parse("(\\y. \\x. x) ((\\x. x x) (\\x. x))")), parse(kI)));
}

TEST_CASE("bullet of an application equals the case-split route") {
    for (const auto& t : enumerate_terms({6, {"x", "y"}})) {
        if (!t->is_app()) continue;
        CHECK(alpha_eq(bullet(t), bullet_app_by_cases(t->fun(), t->arg())));
        CHECK(alpha_eq(bullet(t), app_beta(bullet(t->fun()), bullet(t->arg()))));
    }
}

TEST_CASE("bullet is α-stable") {
    for (const auto& t : enumerate_terms({5, {"x", "y"}}))
        CHECK(alpha_eq(bullet(t), bullet(parse(print(t)))));
}

TEST_CASE("app_beta_steps") {
    auto both_empty = app_beta_steps(ReductionSeq(parse("y")), ReductionSeq(parse("z")));
    CHECK(both_empty.length() == 1);
    CHECK(alpha_eq(both_empty.front(), parse("y z")));

    auto abs_first = app_beta_steps(
        ReductionSeq(parse(kI)),
        ReductionSeq({parse("(\\z. z) w"), parse("w")}));
    CHECK(witness_ok(abs_first, parse("(\\z. z) w"), parse("w")));

    // first argument becomes an abstraction mid-sequence
    auto created = app_beta_steps(
        ReductionSeq({parse("(\\z. z) (\\x. x)"), parse(kI)}),
        ReductionSeq(parse("w")));
    CHECK(witness_ok(created, parse("((\\z. z) (\\x. x)) w"), parse("w")));

    CHECK_THROWS_AS(app_beta_steps(ReductionSeq({parse("y"), parse("x")}),
                                   ReductionSeq(parse("z"))),
                    std::invalid_argument);
}

TEST_CASE("self_steps examples") {
    auto none = self_steps(parse("y"));
    CHECK(none.length() == 1);

    auto one = self_steps(parse("(\\x. x) y"));
    CHECK(witness_ok(one, parse("(\\x. x) y"), parse("y")));

    auto chain = self_steps(parse("((\\x. x) (\\y. y)) z"));
    CHECK(witness_ok(chain, parse("((\\x. x) (\\y. y)) z"), parse("z")));
    CHECK(chain.length() == 3);

    // terminates on non-normalizing terms
    auto omega = self_steps(parse(kOmega));
    CHECK(witness_ok(omega, parse(kOmega), parse(kOmega)));
}

TEST_CASE("rhs_steps examples") {
    auto hit = rhs_steps(parse("x"), "x", parse("(\\y. y) z"));
    CHECK(hit.length() == 1);
    CHECK(alpha_eq(hit.front(), parse("z")));

    auto miss = rhs_steps(parse("y"), "x", parse("(\\y. y) z"));
    CHECK(miss.length() == 1);
    CHECK(alpha_eq(miss.front(), parse("y")));

    auto dup = rhs_steps(parse("x x"), "x", parse(kI));
    CHECK(witness_ok(dup, parse("(\\x. x) (\\x. x)"), parse(kI)));
}

TEST_CASE("z_steps examples") {
    auto [a1, a2] = z_steps(parse("(\\x. x) y"), parse("y"));
    CHECK(a1.length() == 1);
    CHECK(a2.length() == 1);
    CHECK(alpha_eq(a1.front(), parse("y")));

    // s = (λx.x x)(I I) stepped in the argument
    auto [b1, b2] = z_steps(parse("(\\x. x x) ((\\y. y) (\\y. y))"),
                            parse("(\\x. x x) (\\y. y)"));
    CHECK(witness_ok(b1, parse("(\\x. x x) (\\y. y)"), parse("(\\y. y) (\\y. y)")));
    CHECK(b2.length() == 1);
    CHECK(alpha_eq(b2.front(), parse("(\\y. y) (\\y. y)")));

    auto [c1, c2] = z_steps(parse("\\z. (\\x. x) y"), parse("\\z. y"));
    CHECK(c1.length() == 1);
    CHECK(alpha_eq(c1.front(), parse("\\z. y")));
    CHECK(c2.length() == 1);

    CHECK_THROWS_AS(z_steps(parse("y"), parse("x")), std::invalid_argument);
    CHECK_THROWS_AS(z_steps(parse("(\\x. x) y"), parse("z")), std::invalid_argument);
}

TEST_CASE("Self, Rhs and Z hold exhaustively at small size") {
    auto terms = enumerate_terms({5, {"x", "y"}});
    auto subs = enumerate_terms({3, {"x", "y"}});
    for (const auto& t : terms) {
        CHECK(witness_ok(self_steps(t), t, bullet(t)));
        for (const auto& r : reducts(t)) {
            auto [w1, w2] = z_steps(t, r);
            CHECK(witness_ok(w1, r, bullet(t)));
            CHECK(witness_ok(w2, bullet(t), bullet(r)));
        }
    }
    for (const auto& t : enumerate_terms({4, {"x", "y"}}))
        for (const auto& s : subs) {
            CHECK(witness_ok(rhs_steps(t, "x", s), subst(bullet(t), "x", bullet(s)),
                             bullet(subst(t, "x", s))));
        }
}

TEST_CASE("self witness is consistent with bounded search") {
    for (const auto& t : enumerate_terms({5, {"x", "y"}})) {
        auto seq = self_steps(t);
        int depth = static_cast<int>(seq.length()) - 1;
        bool found = false;
        for (const auto& u : reachable(t, depth))
            if (alpha_eq(u, bullet(t))) found = true;
        CHECK(found);
    }
}
