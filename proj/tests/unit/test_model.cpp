#include "doctest.h"
#include "support.hpp"

using namespace loud;
using loudtest::Fixture;

TEST_CASE("domain sizes and enumeration order") {
    CHECK(Domain::range(-15, 15).size() == 31);
    CHECK(Domain::booleans().size() == 2);
    const Domain l = Domain::list_of(Domain::range(1, 3), 6, 6);
    CHECK(l.size() == 729);
    const Domain v = Domain::list_of(Domain::range(0, 1), 0, 2);
    CHECK(v.size() == 7);
    auto all = v.enumerate();
    REQUIRE(all.size() == 7);
    CHECK(all[0].items.empty());
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("example domain is the product of free domains") {
    Fixture f("problem p vars { a : {0, 1}; b : {0}; } query { a == b; } grammar over { S -> a == 0; }");
    CHECK(f.u->num_examples() == 2);
    CHECK(f.u->example_text(0) == "(a=0, b=0)");
    CHECK(f.u->example_text(1) == "(a=1, b=0)");
    CHECK(f.u->num_hidden() == 1);
}

TEST_CASE("modhash domains") {
    auto f = loudtest::bundled("modhash");
    CHECK(f.u->num_examples() == 15376);
    CHECK(f.u->num_hidden() == 31);
}

TEST_CASE("philo3 hidden domain") {
    auto f = loudtest::bundled("philo3");
    CHECK(f.u->num_examples() == 16);
    CHECK(f.u->num_hidden() == 729);
}

TEST_CASE("zero free variables give one empty example") {
    Fixture f("problem p vars { exist h : int[0..2]; } query { h == 1; } grammar over { S -> true | false; }");
    CHECK(f.u->num_examples() == 1);
    CHECK(f.u->num_hidden() == 3);
}

TEST_CASE("valuation space encode and decode are inverse") {
    auto f = loudtest::bundled("modhash");
    const auto& s = f.u->example_space();
    for (uint64_t i : {uint64_t{0}, uint64_t{1}, uint64_t{777}, uint64_t{15375}}) CHECK(s.encode(s.decode(i)) == i);
    // First variable most significant.
    CHECK(f.ex({-15, -15, 1}) == 0);
    CHECK(f.ex({-15, -15, 2}) == 1);
    CHECK(f.ex({-15, -14, 1}) == 16);
}

TEST_CASE("search config validation") {
    SearchConfig c;
    CHECK_NOTHROW(c.validate());
    c.timeoutMillis = -1;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = SearchConfig{};
    c.loopUnrollBound = 0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
}
