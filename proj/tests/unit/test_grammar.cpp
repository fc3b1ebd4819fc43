#include <random>

#include "doctest.h"
#include "loud/printer.hpp"
#include "support.hpp"

using namespace loud;
using loudtest::Fixture;

namespace {

std::vector<std::string> texts(const std::vector<ExprPtr>& ps) {
    std::vector<std::string> out;
    for (auto& p : ps) out.push_back(to_text(*p));
    return out;
}

const char* kPair = R"(
problem pair
vars { x, y : int[0..3]; }
query { x < y; }
grammar over { D -> \/[AP, 0..2]; AP -> x < y | y < x; }
grammar under { C -> x <= K | K <= y | x == y; K -> 0 | 1 | 2 | 3; }
)";

}  // namespace

TEST_CASE("normalization") {
    auto f = loudtest::bundled("modhash");
    auto n = [&](const char* t) { return to_text(*normalize(parse_property(t, *f.p))); };
    CHECK(n("a == 0 => y == 0") == n("y == 0 \\/ !(a == 0)"));
    CHECK(n("0 <= y /\\ 0 <= y") == "0 <= y");
    CHECK(n("!!(y < M)") == "y < M");
    CHECK(n("y < M /\\ true") == "y < M");
    CHECK(n("y < M \\/ true") == "true");
    CHECK(n("y < M /\\ false") == "false");
    CHECK(n("(y < M /\\ 0 <= y) /\\ a == 0") == n("a == 0 /\\ (0 <= y /\\ y < M)"));
}

TEST_CASE("enumeration of small grammars") {
    auto p = parse_problem(R"(
problem one
vars { a : int[0..1]; }
query { a == 0; }
grammar over { D -> \/[AP, 0..1]; AP -> a == 0; }
)");
    CHECK(texts(enumerate_properties(*p.grammarOver, 100)) == std::vector<std::string>{"false", "a == 0"});

    Fixture f(kPair);
    auto over = enumerate_properties(*f.p->grammarOver, 100);
    CHECK(over.size() == 4);
    CHECK(to_text(*over.front()) == "false");
    auto under = enumerate_properties(*f.p->grammarUnder, 100);
    CHECK(under.size() == 9);
    CHECK_THROWS_AS(enumerate_properties(*f.p->grammarUnder, 5), GrammarTooLarge);
}

TEST_CASE("modhash grammar derives the reported properties") {
    auto f = loudtest::bundled("modhash");
    auto space = expand_grammar(*f.p->grammarOver, f.p->config.enumerationCap);
    CHECK(space.kind == GrammarSpace::Kind::Macro);
    // Atoms are derived as written in the grammar, so operand order and != matter.
    for (const char* t : {"0 <= y", "y < M", "0 != a \\/ 0 == y", "M != a \\/ 0 == y", "-M != a \\/ 0 == y"})
        CHECK(derives(space, normalize(parse_property(t, *f.p))));
    CHECK_FALSE(derives(space, normalize(parse_property("y == a + 1", *f.p))));
    CHECK_FALSE(derives(space, normalize(parse_property("a == 0 => y == 0", *f.p))));
    CHECK_FALSE(derives(space, normalize(parse_property("0 <= y /\\ y < M", *f.p))));
}

TEST_CASE("synthesize on the modhash over grammar") {
    auto f = loudtest::bundled("modhash");
    PropertySpace space(expand_grammar(*f.p->grammarOver, f.p->config.enumerationCap), *f.u, f.p->config.enumerationCap);
    const uint64_t p165 = f.ex({1, 6, 5}), n326 = f.ex({3, 2, 6});

    auto r = space.synthesize({p165}, {n326});
    REQUIRE(r);
    CHECK(r->accepts(p165));
    CHECK_FALSE(r->accepts(n326));
    CHECK(*r->truth == f.u->interp(*r->ast));

    CHECK_FALSE(space.synthesize({p165, f.ex({1, 1, 5}), f.ex({1, -4, 5}), f.ex({6, 2, 8})}, {n326}));

    auto first = space.synthesize({}, {});
    REQUIRE(first);
    CHECK(to_text(*first->ast) == "false");
}

TEST_CASE("synthesize agrees with brute force on random example sets") {
    Fixture f(kPair);
    std::mt19937_64 rng(7);
    for (const auto* g : {&*f.p->grammarOver, &*f.p->grammarUnder}) {
        PropertySpace space(expand_grammar(*g, 1000), *f.u, 1000);
        auto all = enumerate_properties(*g, 1000);
        std::vector<Bitset> truths;
        for (auto& p : all) truths.push_back(f.u->interp(*p));
        for (int round = 0; round < 200; ++round) {
            std::vector<uint64_t> pos, neg;
            for (uint64_t e = 0; e < f.u->num_examples(); ++e) {
                const auto r = rng() % 8;
                if (r == 0) pos.push_back(e);
                if (r == 1) neg.push_back(e);
            }
            auto consistent = [&](const Bitset& t) {
                for (auto e : pos)
                    if (!t.test(e)) return false;
                for (auto e : neg)
                    if (t.test(e)) return false;
                return true;
            };
            std::optional<size_t> brute;
            for (size_t i = 0; i < all.size() && !brute; ++i)
                if (consistent(truths[i])) brute = i;
            auto got = space.synthesize(pos, neg);
            REQUIRE(got.has_value() == brute.has_value());
            if (!got) continue;
            CHECK(consistent(*got->truth));
            CHECK(derives(space.grammar(), got->ast));
            // Both spaces return the canonically first consistent property.
            CHECK(to_text(*got->ast) == to_text(*all[*brute]));
        }
    }
}
