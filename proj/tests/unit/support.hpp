#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loud/bench.hpp"
#include "loud/grammar.hpp"
#include "loud/parser.hpp"
#include "loud/universe.hpp"

namespace loudtest {

// A parsed problem and its universe; the universe keeps a pointer to the problem.
struct Fixture {
    explicit Fixture(const std::string& text)
        : p(std::make_unique<loud::LoudProblem>(loud::parse_problem(text))),
          u(std::make_unique<loud::Universe>(*p)) {}

    uint64_t ex(const std::vector<int64_t>& ints) const {
        std::vector<loud::Value> vs;
        for (int64_t i : ints) vs.push_back(loud::Value::integer(i));
        return *u->example_space().encode(vs);
    }

    loud::Property prop(const std::string& text) const {
        auto ast = loud::normalize(loud::parse_property(text, *p));
        return loud::Property{ast, std::make_shared<const loud::Bitset>(u->interp(*ast)), 0};
    }

    loud::Bitset truth(const std::string& text) const { return u->interp(*loud::parse_property(text, *p)); }

    std::unique_ptr<loud::LoudProblem> p;
    std::unique_ptr<loud::Universe> u;
};

inline Fixture bundled(const std::string& name) { return Fixture(*loud::embedded_problem(name)); }

}  // namespace loudtest
