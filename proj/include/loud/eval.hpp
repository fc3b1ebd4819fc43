#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "loud/ast.hpp"
#include "loud/model.hpp"

namespace loud {

enum class FaultKind : uint8_t { None, DivByZero, Overflow, BoundExceeded, IndexOutOfRange };

const char* fault_name(FaultKind k);

struct EvalOutcome {
    bool ok = true;
    Value value;
    FaultKind fault = FaultKind::None;

    static EvalOutcome success(Value v) { return {true, std::move(v), FaultKind::None}; }
    static EvalOutcome failure(FaultKind k) { return {false, Value{}, k}; }
};

// Variable lookup split across two arrays so that (example, hidden) pairs
// need no concatenation.
struct Env {
    const Value* first = nullptr;
    int nfirst = 0;
    const Value* second = nullptr;

    const Value& at(int slot) const { return slot < nfirst ? first[slot] : second[slot - nfirst]; }
};

class PropertyFault : public std::runtime_error {
public:
    PropertyFault(const std::string& prop, const std::string& example, FaultKind reason);
    FaultKind reason() const { return reason_; }

private:
    FaultKind reason_;
};

class Interpreter {
public:
    Interpreter(const std::vector<FuncDef>& funcs, const SearchConfig& cfg)
        : funcs_(&funcs), loopBound_(cfg.loopUnrollBound), depthBound_(cfg.recursionDepthBound) {}

    EvalOutcome eval_expr(const Expr& e, const std::vector<Value>& env) const;
    EvalOutcome eval_expr(const Expr& e, Env env) const;

    // Hot path: returns false and sets `fault` on failure.
    bool eval(const Expr& e, Env env, Value& out, FaultKind& fault, int depth) const;

    // Boolean evaluation with faults folded to false; counts faults.
    bool holds(const Expr& e, Env env) const;

    uint64_t fault_count() const { return faults_; }

private:
    enum class Flow : uint8_t { Normal, Returned, Faulted };

    bool call(const FuncDef& f, std::vector<Value>& frame, Value& out, FaultKind& fault,
              int depth) const;
    Flow exec(const std::vector<StmtPtr>& body, std::vector<Value>& frame, Value& ret,
              FaultKind& fault, int depth) const;
    bool builtin(const Expr& e, Env env, Value& out, FaultKind& fault, int depth) const;

    const std::vector<FuncDef>* funcs_;
    int loopBound_;
    int depthBound_;
    mutable uint64_t faults_ = 0;
};

// ψ(e, h): faults count as false.
bool eval_query(const LoudProblem& p, const Interpreter& in, const Example& e,
                const HiddenInstance& h);

// φ(e): faults raise PropertyFault.
bool eval_property(const Interpreter& in, const Expr& phi, const Example& e);

// Arithmetic helpers shared with tests.
int64_t trunc_rem(int64_t a, int64_t m);
int64_t floor_mod(int64_t a, int64_t m);

}  // namespace loud
