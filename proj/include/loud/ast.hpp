#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loud/value.hpp"

namespace loud {

struct SrcLoc {
    int line = 0;
    int col = 0;
};

enum class Op : uint8_t {
    Lit,
    Var,
    Neg,
    Not,
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,  // n-ary
    Or,   // n-ary
    Implies,
    Ite,
    Call,
    Index,
    ListLit,
    Hole,       // grammar only: reference to a nonterminal
    ConjMacro,  // grammar only: /\[N, lo..hi]
    DisjMacro,  // grammar only: \/[N, lo..hi]
};

enum class Builtin : uint8_t { None, Mod, Abs, Min, Max, Len, Sort };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    Op op = Op::Lit;
    Value lit;
    bool charLit = false;  // print an Int literal as 'c'
    std::string name;      // variable, callee or nonterminal
    int slot = -1;         // resolved variable slot
    int fn = -1;           // resolved user function index
    Builtin builtin = Builtin::None;
    int lo = 0, hi = 0;    // macro arity range
    std::vector<ExprPtr> args;
    Type type;
    SrcLoc loc;
};

ExprPtr mk_lit(Value v, bool charLit = false);
ExprPtr mk_bool(bool b);
ExprPtr mk_int(int64_t v);
ExprPtr mk_var(std::string name, int slot, Type t);
ExprPtr mk_unary(Op op, ExprPtr a);
ExprPtr mk_binary(Op op, ExprPtr a, ExprPtr b);
ExprPtr mk_nary(Op op, std::vector<ExprPtr> args);

bool is_true_lit(const Expr& e);
bool is_false_lit(const Expr& e);
bool is_comparison(Op op);

// Structural equality (ignores source locations).
bool same_expr(const Expr& a, const Expr& b);
size_t expr_size(const Expr& e);

enum class StmtKind : uint8_t { Decl, Assign, AssignIndex, If, While, For, Return };

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

struct Stmt {
    StmtKind kind = StmtKind::Return;
    std::string name;
    int slot = -1;
    Type type;
    ExprPtr value;  // rhs, condition, return value, or for-loop lower bound
    ExprPtr index;  // AssignIndex target index, or for-loop upper bound
    std::vector<StmtPtr> body;
    std::vector<StmtPtr> elseBody;
    SrcLoc loc;
};

struct Param {
    std::string name;
    Type type;
};

struct FuncDef {
    std::string name;
    std::vector<Param> params;
    Type ret;
    std::vector<StmtPtr> body;
    int frameSize = 0;
    SrcLoc loc;
};

}  // namespace loud
