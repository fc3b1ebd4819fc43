#include "doctest.h"
#include "loud/eval.hpp"
#include "support.hpp"

using namespace loud;
using loudtest::Fixture;

namespace {

const char* kSmall = R"(
problem small
vars { a, b : int[-8..8]; exist x : int[0..3]; }
functions {
    fn loopy(n: int) -> int {
        var i: int = 0;
        while i < n { i = i + 1; }
        return i;
    }
    fn fact(n: int) -> int {
        if n <= 1 { return 1; }
        return n * fact(n - 1);
    }
}
query { a == b + x; }
grammar over { S -> a <= b | b <= a; }
)";

bool holds_at(const Fixture& f, const std::string& text, const std::vector<int64_t>& e) {
    return f.u->interp(*parse_property(text, *f.p)).test(f.ex(e));
}

FaultKind fault_at(const Fixture& f, const std::string& text, const std::vector<int64_t>& e) {
    try {
        const Example& ex = f.u->example(f.ex(e));
        eval_property(f.u->interpreter(), *parse_property(text, *f.p), ex);
    } catch (const PropertyFault& pf) {
        return pf.reason();
    }
    return FaultKind::None;
}

}  // namespace

TEST_CASE("truncated remainder against a direct table") {
    for (int64_t a = -8; a <= 8; ++a)
        for (int64_t m = -8; m <= 8; ++m) {
            if (m == 0) continue;
            // C semantics: quotient truncates toward zero.
            int64_t q = 0;
            while ((q + 1) * std::llabs(m) <= std::llabs(a)) ++q;
            const int64_t trunc = (a < 0) != (m < 0) ? -q : q;
            CHECK(trunc_rem(a, m) == a - trunc * m);
            const int64_t fm = floor_mod(a, m);
            CHECK((fm - a) % m == 0);
            if (m > 0) CHECK((fm >= 0 && fm < m));
        }
    CHECK(trunc_rem(2 * -1, 4) == -2);
    CHECK(floor_mod(-2, 4) == 2);
}

TEST_CASE("modhash arithmetic and query") {
    auto f = loudtest::bundled("modhash");
    CHECK(holds_at(f, "mod(6 * 1, 5) == 1", {1, 6, 5}));
    CHECK(holds_at(f, "(2 * -1) % 4 == -2", {1, 6, 5}));
    CHECK(f.u->psi(f.ex({1, 6, 5}), 16));  // x = 1 is the 17th of [-15..15]
    const uint64_t neg = f.ex({3, 2, 6});
    for (uint64_t h = 0; h < f.u->num_hidden(); ++h) CHECK_FALSE(f.u->psi(neg, h));
}

TEST_CASE("property evaluation") {
    auto f = loudtest::bundled("modhash");
    CHECK(holds_at(f, "0 <= y", {1, 6, 5}));
    CHECK(holds_at(f, "a == M => y == 0", {3, 2, 6}));
    for (int64_t m = 1; m <= 16; ++m) {
        bool prime = m >= 2;
        for (int64_t d = 2; d < m; ++d)
            if (m % d == 0) prime = false;
        CHECK(holds_at(f, "isPrime(M)", {0, 0, m}) == prime);
    }
}

TEST_CASE("evaluation faults") {
    Fixture f(kSmall);
    CHECK(fault_at(f, "mod(a, 0) == 0", {1, 1}) == FaultKind::DivByZero);
    CHECK(fault_at(f, "a / (b - b) == 0", {1, 1}) == FaultKind::DivByZero);
    CHECK(fault_at(f, "fact(20) > 0", {1, 1}) == FaultKind::Overflow);
    CHECK(fault_at(f, "loopy(1000) > 0", {1, 1}) == FaultKind::BoundExceeded);
    CHECK(fault_at(f, "loopy(5) == 5", {1, 1}) == FaultKind::None);
    CHECK(fault_at(f, "[1, 2][a] == 1", {2, 1}) == FaultKind::IndexOutOfRange);
    CHECK(fault_at(f, "a <= b", {2, 1}) == FaultKind::None);
}

TEST_CASE("query faults count as false") {
    Fixture f(R"(
problem q
vars { a : int[0..2]; exist x : int[0..2]; }
query { a / x == 1; }
grammar over { S -> a == 0 | a == 1 | a == 2; }
)");
    // x = 0 faults; x = a witnesses a / x == 1 for a > 0.
    CHECK_FALSE(f.u->psi(0, 0));
    CHECK(f.u->psi(1, 1));
    CHECK(f.u->psi(2, 2));
    bool any = false;
    for (uint64_t h = 0; h < 3; ++h) any |= f.u->psi(0, h);
    CHECK_FALSE(any);
}

TEST_CASE("recursion depth bound") {
    Fixture f(std::string(kSmall) + "config { recursion_depth = 3; }");
    CHECK(fault_at(f, "fact(2) == 2", {0, 0}) == FaultKind::None);
    CHECK(fault_at(f, "fact(6) == 720", {0, 0}) == FaultKind::BoundExceeded);
}
