#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "zlam/beta.hpp"
#include "zlam/syntax.hpp"
#include "zlam/testgen.hpp"

using namespace zlam;

namespace {

const char* kOmega = "(\\x. x x) (\\x. x x)";
const char* kI = "\\x. x";

// Brute-force redex oracle: contract the redex at every position, collect
// the α-classes. Independent of reducts' traversal order.
void oracle_reducts(const TermPtr& t, std::function<TermPtr(TermPtr)> ctx,
                    std::set<std::string>& out) {
    if (t->is_app() && t->fun()->is_abs())
        out.insert(alpha_key(ctx(subst(t->fun()->body(), t->fun()->name(), t->arg()))));
    if (t->is_app()) {
        oracle_reducts(t->fun(), [&](TermPtr r) { return ctx(Term::app(r, t->arg())); }, out);
        oracle_reducts(t->arg(), [&](TermPtr r) { return ctx(Term::app(t->fun(), r)); }, out);
    }
    if (t->is_abs())
        oracle_reducts(t->body(), [&](TermPtr r) { return ctx(Term::abs(t->name(), r)); }, out);
}

ReductionSeq seq_of(std::initializer_list<const char*> lines) {
    std::vector<TermPtr> ts;
    for (const char* l : lines) ts.push_back(parse(l));
    return ReductionSeq(std::move(ts));
}

}  // namespace

TEST_CASE("reducts examples") {
    CHECK(reducts(parse("y")).empty());
    auto r1 = reducts(parse("(\\x. x) y"));
    REQUIRE(r1.size() == 1);
    CHECK(alpha_eq(r1[0], parse("y")));
    auto r2 = reducts(parse("(\\x. x x) (\\y. y)"));
    REQUIRE(r2.size() == 1);
    CHECK(alpha_eq(r2[0], parse("(\\y. y) (\\y. y)")));
}

TEST_CASE("reducts matches the brute-force position oracle") {
    for (const auto& t : enumerate_terms({6, {"x", "y"}})) {
        std::set<std::string> expected;
        oracle_reducts(t, [](TermPtr r) { return r; }, expected);
        std::set<std::string> got;
        for (const auto& r : reducts(t)) CHECK(got.insert(alpha_key(r)).second);  // α-dedup
        CHECK(got == expected);
    }
}

TEST_CASE("reducts order is leftmost-outermost") {
    // root redex first, then the reduct arising in arg position
    auto r = reducts(parse("(\\x. x x) ((\\y. y) z)"));
    REQUIRE(r.size() == 2);
    CHECK(alpha_eq(r[0], parse("((\\y. y) z) ((\\y. y) z)")));
    CHECK(alpha_eq(r[1], parse("(\\x. x x) z")));
    // two positions yielding α-equivalent reducts collapse to one entry
    CHECK(reducts(parse("(\\x. x) ((\\y. y) z)")).size() == 1);
    // fun position before arg position
    auto r2 = reducts(parse("((\\x. x) y) ((\\w. w) z)"));
    REQUIRE(r2.size() == 2);
    CHECK(alpha_eq(r2[0], parse("y ((\\w. w) z)")));
    CHECK(alpha_eq(r2[1], parse("((\\x. x) y) z")));
}

TEST_CASE("is_step") {
    CHECK(is_step(parse("(\\x. x) y"), parse("y")));
    CHECK_FALSE(is_step(parse("y"), parse("y")));
    CHECK(is_step(parse(kOmega), parse(kOmega)));
    CHECK(is_step(parse("\\z. (\\x. x) y"), parse("\\w. y")));  // up to α
}

TEST_CASE("validate_seq") {
    CHECK(validate_seq(seq_of({"y"})));
    CHECK(validate_seq(seq_of({"(\\x. x) y", "y"})));
    CHECK_FALSE(validate_seq(seq_of({"y", "x"})));
    CHECK_FALSE(validate_seq(ReductionSeq()));
}

TEST_CASE("reachable") {
    auto r0 = reachable(parse("y"), 5);
    CHECK(r0.size() == 1);
    auto r1 = reachable(parse("(\\x. x) y"), 1);
    CHECK(r1.size() == 2);
    auto r2 = reachable(parse(kOmega), 3);
    REQUIRE(r2.size() == 1);
    CHECK(alpha_eq(r2[0], parse(kOmega)));
}

TEST_CASE("reachable is monotone in depth and consistent with reduces_to") {
    for (const auto& t : enumerate_terms({5, {"x", "y"}})) {
        auto r2 = reachable(t, 2);
        auto r3 = reachable(t, 3);
        std::set<std::string> k3;
        for (const auto& u : r3) k3.insert(alpha_key(u));
        for (const auto& u : r2) CHECK(k3.count(alpha_key(u)));
        for (const auto& u : r2) {
            auto seq = reduces_to(t, u, 2);
            REQUIRE(seq.has_value());
            CHECK(validate_seq(*seq));
            CHECK(alpha_eq(seq->front(), t));
            CHECK(alpha_eq(seq->back(), u));
        }
    }
}

TEST_CASE("reduces_to") {
    auto r0 = reduces_to(parse("y"), parse("y"), 0);
    REQUIRE(r0.has_value());
    CHECK(r0->length() == 1);
    auto r1 = reduces_to(parse("((\\x. x) (\\y. y)) z"), parse("z"), 3);
    REQUIRE(r1.has_value());
    CHECK(r1->length() == 3);  // 2 steps
    CHECK_FALSE(reduces_to(parse("(\\x. x) y"), parse("z"), 5).has_value());
}

TEST_CASE("congruence witnesses") {
    auto lifted = cong_app_left(seq_of({"(\\x. x) y", "y"}), parse("z"));
    CHECK(validate_seq(lifted));
    CHECK(alpha_eq(lifted.front(), parse("((\\x. x) y) z")));
    CHECK(alpha_eq(lifted.back(), parse("y z")));
    CHECK(cong_app_left(seq_of({"y"}), parse("z")).length() == 1);

    auto rightd = cong_app_right(parse("z"), seq_of({"(\\x. x) y", "y"}));
    CHECK(validate_seq(rightd));
    CHECK(alpha_eq(rightd.back(), parse("z y")));

    auto omega_lift = cong_app_left(seq_of({kOmega, kOmega}), parse(kI));
    CHECK(validate_seq(omega_lift));

    auto under = cong_abs("x", seq_of({"(\\y. y) x", "x"}));
    CHECK(validate_seq(under));
    CHECK(alpha_eq(under.front(), parse("\\x. (\\y. y) x")));
    CHECK(alpha_eq(under.back(), parse("\\x. x")));

    CHECK_THROWS_AS(cong_app_left(seq_of({"y", "x"}), parse("z")), std::invalid_argument);
}

TEST_CASE("subst_right_steps") {
    auto idseq = seq_of({"(\\z. z) w", "w"});
    auto none = subst_right_steps(parse("y"), "x", idseq);
    CHECK(none.length() == 1);
    CHECK(alpha_eq(none.front(), parse("y")));

    auto one = subst_right_steps(parse("x"), "x", idseq);
    CHECK(validate_seq(one));
    CHECK(alpha_eq(one.front(), parse("(\\z. z) w")));
    CHECK(alpha_eq(one.back(), parse("w")));

    auto two = subst_right_steps(parse("x x"), "x", idseq);
    CHECK(validate_seq(two));
    CHECK(two.length() == 3);
    CHECK(alpha_eq(two.front(), parse("((\\z. z) w) ((\\z. z) w)")));
    CHECK(alpha_eq(two.back(), parse("w w")));
    // leftmost occurrence first
    CHECK(alpha_eq(two.terms[1], parse("w ((\\z. z) w)")));
}

TEST_CASE("subst_right_steps under a capturing binder") {
    auto seq = seq_of({"(\\z. z) y", "y"});
    auto lifted = subst_right_steps(parse("\\y. x y"), "x", seq);
    CHECK(validate_seq(lifted));
    CHECK(alpha_eq(lifted.front(), subst(parse("\\y. x y"), "x", parse("(\\z. z) y"))));
    CHECK(alpha_eq(lifted.back(), subst(parse("\\y. x y"), "x", parse("y"))));
}

TEST_CASE("subst_left_step") {
    auto a = subst_left_step(parse("(\\y. y) x"), parse("x"), "x", parse("z"));
    CHECK(validate_seq(a));
    CHECK(alpha_eq(a.front(), parse("(\\y. y) z")));
    CHECK(alpha_eq(a.back(), parse("z")));

    auto b = subst_left_step(parse("(\\y. y) w"), parse("w"), "x", parse("z"));
    CHECK(alpha_eq(b.front(), parse("(\\y. y) w")));
    CHECK(alpha_eq(b.back(), parse("w")));

    auto c = subst_left_step(parse(kOmega), parse(kOmega), "x", parse("z"));
    CHECK(validate_seq(c));
    CHECK(alpha_eq(c.back(), parse(kOmega)));

    CHECK_THROWS_AS(subst_left_step(parse("y"), parse("x"), "x", parse("z")),
                    std::invalid_argument);
}

TEST_CASE("abs_coherence") {
    auto [end1, body1] =
        abs_coherence("x", parse("(\\y. y) x"), seq_of({"\\x. (\\y. y) x", "\\x. x"}));
    CHECK(alpha_eq(end1, parse("x")));
    CHECK(validate_seq(body1));
    CHECK(alpha_eq(body1.front(), parse("(\\y. y) x")));

    auto [end2, body2] = abs_coherence("x", parse("x"), seq_of({"\\x. x"}));
    CHECK(alpha_eq(end2, parse("x")));
    CHECK(body2.length() == 1);

    auto [end3, body3] = abs_coherence(
        "z", parse("(\\x. x) (\\x. x)"), seq_of({"\\z. (\\x. x) (\\x. x)", "\\z. \\x. x"}));
    CHECK(alpha_eq(end3, parse(kI)));
    CHECK(validate_seq(body3));

    // binder renamed along the way still peels
    auto [end4, body4] =
        abs_coherence("x", parse("(\\y. y) x"), seq_of({"\\x. (\\y. y) x", "\\w. w"}));
    CHECK(alpha_eq(end4, parse("x")));
    CHECK(validate_seq(body4));

    CHECK_THROWS_AS(abs_coherence("x", parse("x"), seq_of({"\\y. x"})),
                    std::invalid_argument);
}

TEST_CASE("every reduct of an abstraction is an abstraction") {
    for (const auto& t : enumerate_terms({6, {"x", "y"}})) {
        if (!t->is_abs()) continue;
        for (const auto& r : reducts(t)) CHECK(r->is_abs());
    }
}

TEST_CASE("compose and reanchor") {
    auto ab = seq_of({"(\\x. x) ((\\y. y) z)", "(\\y. y) z"});
    auto bc = seq_of({"(\\w. w) z", "z"});  // α-variant junction
    auto abc = compose_seqs(ab, bc);
    CHECK(validate_seq(abc));
    CHECK(abc.length() == 3);
    CHECK_THROWS_AS(compose_seqs(ab, seq_of({"y"})), std::invalid_argument);
    auto re = reanchor(ab, parse("(\\q. q) ((\\y. y) z)"), parse("(\\q. q) z"));
    CHECK(print(re.front()) == "(\\q. q) ((\\y. y) z)");
    CHECK_THROWS_AS(reanchor(ab, parse("z"), parse("z")), std::logic_error);
}
