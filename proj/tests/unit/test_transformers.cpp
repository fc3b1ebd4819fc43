#include "doctest.h"
#include "loud/cegis.hpp"
#include "loud/oracle.hpp"
#include "loud/printer.hpp"
#include "loud/report.hpp"
#include "loud/transformers.hpp"
#include "support.hpp"

using namespace loud;
using loudtest::Fixture;

namespace {

std::string succ(const std::string& kind, const std::string& cond, const std::string& grammar) {
    return "problem succ\nvars { x : int[0..3]; x' : int[0..4]; }\n"
           "transformer { kind " + kind + "; input x; output x'; relation x' == x + 1; " + cond + "; }\n" + grammar;
}

Bitset run_semantics(const Fixture& f, Mode m) {
    auto r = synthesize_report(*f.u, m, f.p->config);
    REQUIRE(r.status == Status::Best);
    return combined_semantics(r.properties, m, f.u->num_examples());
}

const char* kHashZero = R"(
problem hashzero
vars { a : int[-4..4]; M : int[1..4]; x : int[-4..4]; y' : int[-4..4]; }
functions { fn modhash(a: int, M: int, x: int) -> int { return mod(a * x, M); } }
transformer { kind wlp; params a, M; input x; output y'; relation y' == modhash(a, M, x); post POST; }
grammar over { S -> I == I; I -> 0 | a | x | M; }
)";

std::string with_post(const std::string& post) {
    std::string t = kHashZero;
    t.replace(t.find("POST"), 4, post);
    return t;
}

}  // namespace

TEST_CASE("negate_grammar") {
    auto p = parse_problem("problem t vars { a : int[0..1]; } query { a == 0; } grammar over { S -> true; }");
    auto neg = enumerate_properties(negate_grammar(*p.grammarOver), 10);
    REQUIRE(neg.size() == 1);
    CHECK(is_false_lit(*neg[0]));

    Fixture f(R"(
problem toy
vars { a, b, c : int[0..2]; }
query { a <= b; }
grammar over { D -> \/[AP, 0..2]; AP -> I < I | I == I; I -> a | b | c | 1; }
)");
    const Grammar& g = *f.p->grammarOver;
    auto base = enumerate_properties(g, 100000);
    auto twice = enumerate_properties(negate_grammar(negate_grammar(g)), 100000);
    auto once = enumerate_properties(negate_grammar(g), 100000);
    REQUIRE(base.size() == twice.size());
    REQUIRE(base.size() == once.size());
    for (size_t i = 0; i < base.size(); ++i) {
        const Bitset t = f.u->interp(*base[i]);
        CHECK(f.u->interp(*twice[i]) == t);
        CHECK(f.u->interp(*once[i]) == ~t);
    }
}

TEST_CASE("spo of a successor") {
    Fixture f(succ("spo", "pre x <= 1", "grammar over { S -> x' <= K; K -> 0 | 1 | 2 | 3 | 4; }"));
    CHECK(f.p->transformer == TransformerKind::Spo);
    CHECK(f.p->vars[f.p->free_vars()[0]].name == "x'");
    CHECK(run_semantics(f, Mode::Over) == f.truth("x' <= 2"));

    Fixture none(succ("spo", "pre false", "grammar over { S -> x' <= K; K -> 0 | 1 | 2 | 3 | 4; }"));
    CHECK(run_semantics(none, Mode::Over) == none.truth("x' <= 0"));
}

TEST_CASE("wlp of a successor") {
    Fixture f(succ("wlp", "post x' <= 2", "grammar over { S -> x <= K; K -> 0 | 1 | 2 | 3; }"));
    CHECK(f.p->transformer == TransformerKind::Wlp);
    auto r = synthesize_report(*f.u, Mode::Over, f.p->config);
    auto d = make_document(*f.p, r);
    REQUIRE(d.derived);
    CHECK(d.derived->text == "x <= 1");
}

TEST_CASE("wlp of modhash with y' == 0") {
    Fixture f(with_post("y' == 0"));
    const Bitset conj = run_semantics(f, Mode::Over);
    CHECK(conj == f.truth("a != 0 /\\ x != 0 /\\ a != M /\\ x != M"));
    auto d = make_document(*f.p, synthesize_report(*f.u, Mode::Over, f.p->config));
    REQUIRE(d.derived);
    CHECK(d.derived->disjuncts.size() == 4);
    // Every wlp disjunct is a valid precondition: all successors satisfy the postcondition.
    for (auto& text : d.derived->disjuncts) {
        const Bitset pre = f.truth(text);
        pre.for_each([&](size_t e) {
            const auto& ex = f.u->example(e);
            const int64_t a = ex[0].num, m = ex[1].num, x = ex[2].num;
            CHECK(floor_mod(a * x, m) == 0);
        });
    }

    Fixture t(with_post("true"));
    CHECK(run_semantics(t, Mode::Over).none());
}

TEST_CASE("wupo of a nondeterministic step") {
    Fixture f(R"(
problem coin
vars { x : int[0..1]; k : int[0..3]; x' : int[0..8]; }
transformer { kind wupo; input x, k; output x'; relation x' == x + 2 * k; pre x == 1; }
grammar under { C -> /\[AP, 0..2]; AP -> mod(x', 2) == K | x' <= L; K -> 0 | 1; L -> 3 | 7; }
)");
    CHECK(run_semantics(f, Mode::Under) == f.truth("mod(x', 2) == 1"));
}

TEST_CASE("wpp with a nondeterministic sign") {
    Fixture f(R"(
problem sign
vars { x : int[-4..4]; b' : bool; x' : int[-4..4]; }
transformer {
    kind wpp;
    input x;
    outputs b', x';
    relation (b' && x' == x) || (!b' && x' == -x);
    post 1 <= x' /\ x' <= 3;
}
grammar under { C -> /\[AP, 0..2]; AP -> K <= x | x <= K; K -> -3 | -1 | 1 | 3; }
)");
    CHECK(run_semantics(f, Mode::Under) == f.truth("(-3 <= x /\\ x <= -1) \\/ (1 <= x /\\ x <= 3)"));
}

TEST_CASE("spo and wupo encode the same query") {
    const std::string g = "grammar over { S -> x' <= K; K -> 0 | 1 | 2 | 3 | 4; }\n"
                          "grammar under { S -> x' <= K; K -> 0 | 1 | 2 | 3 | 4; }";
    auto spo = parse_problem(succ("spo", "pre x <= 1", g));
    auto wupo = parse_problem(succ("wupo", "pre x <= 1", g));
    CHECK(to_text(*spo.query) == to_text(*wupo.query));
    CHECK(spo.free_vars() == wupo.free_vars());
    CHECK(spo.hidden_vars() == wupo.hidden_vars());
    CHECK(spo.grammarOver.has_value());
    CHECK(wupo.grammarUnder.has_value());
}

TEST_CASE("malformed transformer specs") {
    const std::string g = "grammar over { S -> x' <= 1; }";
    CHECK_THROWS_AS(parse_problem(succ("spo", "post x' <= 1", g)), MalformedSpec);
    CHECK_THROWS_AS(parse_problem(succ("wlp", "pre x <= 1", g)), MalformedSpec);
    CHECK_THROWS_AS(parse_problem("problem p\nvars { x : int[0..3]; y : int[0..4]; }\n"
                                  "transformer { kind spo; input x; output y; relation y == x; pre true; }\n"
                                  "grammar over { S -> y <= 1; }"),
                    MalformedSpec);
    CHECK_THROWS_AS(parse_problem("problem p\nvars { x : int[0..3]; x' : int[0..4]; z : int[0..1]; }\n"
                                  "transformer { kind spo; input x; output x'; relation x' == x; pre true; }\n"
                                  "grammar over { S -> x' <= 1; }"),
                    MalformedSpec);
    CHECK_THROWS_AS(parse_problem("problem p\nvars { x : int[0..3]; x' : int[0..4]; }\n"
                                  "query { x' == x; }\n"
                                  "transformer { kind spo; input x; output x'; relation x' == x; pre true; }\n"
                                  "grammar over { S -> x' <= 1; }"),
                    ValidationError);
}

TEST_CASE("remhash transformers") {
    auto wpp = loudtest::bundled("remhash-wpp");
    CHECK(run_semantics(wpp, Mode::Under) ==
          reference_semantics(*wpp.u,
                              {"-M < x /\\ x < 0 /\\ 0 < a /\\ a < M /\\ isPrime(M)",
                               "0 < x /\\ x < M /\\ -M < a /\\ a < 0 /\\ isPrime(M)"},
                              Mode::Under));
    // Every wpp disjunct state can reach a negative output.
    const Bitset pos = oracle_positive_set(*wpp.u, 1u << 30);
    CHECK(run_semantics(wpp, Mode::Under).subset_of(pos));
}
