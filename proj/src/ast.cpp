#include "loud/ast.hpp"

namespace loud {

ExprPtr mk_lit(Value v, bool charLit) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Lit;
    e->type = v.kind == TypeTag::Bool ? Type::boolean()
              : v.kind == TypeTag::Int ? Type::integer()
                                       : Type::list_of(v.items.empty() ? TypeTag::Int : v.items[0].kind);
    e->lit = std::move(v);
    e->charLit = charLit;
    return e;
}

ExprPtr mk_bool(bool b) { return mk_lit(Value::boolean(b)); }
ExprPtr mk_int(int64_t v) { return mk_lit(Value::integer(v)); }

ExprPtr mk_var(std::string name, int slot, Type t) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Var;
    e->name = std::move(name);
    e->slot = slot;
    e->type = t;
    return e;
}

static Type result_type(Op op, const std::vector<ExprPtr>& args) {
    switch (op) {
        case Op::Neg:
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
        case Op::Rem: return Type::integer();
        case Op::Ite: return args.size() > 1 ? args[1]->type : Type::integer();
        default: return Type::boolean();
    }
}

ExprPtr mk_unary(Op op, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = {std::move(a)};
    e->type = result_type(op, e->args);
    return e;
}

ExprPtr mk_binary(Op op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = {std::move(a), std::move(b)};
    e->type = result_type(op, e->args);
    return e;
}

ExprPtr mk_nary(Op op, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = std::move(args);
    e->type = result_type(op, e->args);
    return e;
}

bool is_true_lit(const Expr& e) { return e.op == Op::Lit && e.lit.kind == TypeTag::Bool && e.lit.num; }
bool is_false_lit(const Expr& e) { return e.op == Op::Lit && e.lit.kind == TypeTag::Bool && !e.lit.num; }

bool is_comparison(Op op) {
    return op == Op::Eq || op == Op::Ne || op == Op::Lt || op == Op::Le || op == Op::Gt || op == Op::Ge;
}

bool same_expr(const Expr& a, const Expr& b) {
    if (a.op != b.op || a.args.size() != b.args.size()) return false;
    switch (a.op) {
        case Op::Lit:
            if (!(a.lit == b.lit)) return false;
            break;
        case Op::Var:
        case Op::Hole:
        case Op::Call:
            if (a.name != b.name) return false;
            break;
        case Op::ConjMacro:
        case Op::DisjMacro:
            if (a.name != b.name || a.lo != b.lo || a.hi != b.hi) return false;
            break;
        default: break;
    }
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!same_expr(*a.args[i], *b.args[i])) return false;
    return true;
}

size_t expr_size(const Expr& e) {
    size_t n = 1;
    for (const auto& a : e.args) n += expr_size(*a);
    return n;
}

}  // namespace loud
