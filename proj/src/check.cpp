#include "loud/check.hpp"

#include <optional>
#include <set>
#include <tuple>

namespace loud {

namespace {

struct Scope {
    std::vector<std::tuple<std::string, int, Type>> vars;

    const std::tuple<std::string, int, Type>* lookup(const std::string& n) const {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            if (std::get<0>(*it) == n) return &*it;
        return nullptr;
    }
};

struct BuiltinSig {
    const char* name;
    Builtin id;
    size_t arity;
};

constexpr BuiltinSig kBuiltins[] = {
    {"mod", Builtin::Mod, 2}, {"abs", Builtin::Abs, 1}, {"min", Builtin::Min, 2},
    {"max", Builtin::Max, 2}, {"len", Builtin::Len, 1}, {"sort", Builtin::Sort, 1},
};

const BuiltinSig* find_builtin(const std::string& n) {
    for (const auto& b : kBuiltins)
        if (n == b.name) return &b;
    return nullptr;
}

[[noreturn]] void fail(const std::string& msg, SrcLoc loc) { throw ValidationError(msg, loc); }

class Resolver {
public:
    explicit Resolver(const LoudProblem& p) : p_(p) {}

    // Nonterminal types while resolving grammar templates.
    const Grammar* grammar = nullptr;
    std::vector<std::optional<Type>> holeTypes;

    ExprPtr expr(const ExprPtr& in, const Scope& s) {
        auto e = std::make_shared<Expr>(*in);
        for (auto& a : e->args) a = expr(a, s);
        auto argType = [&](size_t i) { return e->args[i]->type; };
        auto expect = [&](size_t i, Type t, const char* what) {
            if (argType(i) != t)
                fail(std::string(what) + " expects " + t.str() + " but got " + argType(i).str(), e->args[i]->loc);
        };
        switch (e->op) {
            case Op::Lit: break;
            case Op::Var: {
                const auto* v = s.lookup(e->name);
                if (!v) {
                    if (grammar && grammar->find(e->name) >= 0) {
                        e->op = Op::Hole;
                        return expr(e, s);
                    }
                    fail("unknown identifier '" + e->name + "'", e->loc);
                }
                e->slot = std::get<1>(*v);
                e->type = std::get<2>(*v);
                break;
            }
            case Op::Hole: {
                if (!grammar) fail("nonterminal '" + e->name + "' outside a grammar", e->loc);
                int r = grammar->find(e->name);
                if (r < 0) fail("unknown nonterminal '" + e->name + "'", e->loc);
                if (!holeTypes[r]) fail("cannot infer the type of nonterminal '" + e->name + "'", e->loc);
                e->type = *holeTypes[r];
                break;
            }
            case Op::ConjMacro:
            case Op::DisjMacro: {
                if (!grammar) fail("macro outside a grammar", e->loc);
                int r = grammar->find(e->name);
                if (r < 0) fail("unknown nonterminal '" + e->name + "'", e->loc);
                if (holeTypes[r] && *holeTypes[r] != Type::boolean())
                    fail("macro elements of '" + e->name + "' must be bool", e->loc);
                if (e->lo < 0 || e->lo > e->hi) fail("bad macro arity range", e->loc);
                e->type = Type::boolean();
                break;
            }
            case Op::Neg:
                expect(0, Type::integer(), "unary -");
                e->type = Type::integer();
                break;
            case Op::Not:
                expect(0, Type::boolean(), "!");
                e->type = Type::boolean();
                break;
            case Op::Add:
            case Op::Sub:
            case Op::Mul:
            case Op::Div:
            case Op::Rem:
                expect(0, Type::integer(), "arithmetic");
                expect(1, Type::integer(), "arithmetic");
                e->type = Type::integer();
                break;
            case Op::Lt:
            case Op::Le:
            case Op::Gt:
            case Op::Ge:
                expect(0, Type::integer(), "comparison");
                expect(1, Type::integer(), "comparison");
                e->type = Type::boolean();
                break;
            case Op::Eq:
            case Op::Ne:
                if (argType(0) != argType(1))
                    fail("cannot compare " + argType(0).str() + " with " + argType(1).str(), e->loc);
                e->type = Type::boolean();
                break;
            case Op::And:
            case Op::Or:
            case Op::Implies:
                for (size_t i = 0; i < e->args.size(); ++i) expect(i, Type::boolean(), "logical connective");
                e->type = Type::boolean();
                break;
            case Op::Ite:
                expect(0, Type::boolean(), "ite condition");
                if (argType(1) != argType(2)) fail("ite branches differ in type", e->loc);
                e->type = argType(1);
                break;
            case Op::Index:
                if (argType(0).tag != TypeTag::List) fail("indexing a non-list", e->loc);
                expect(1, Type::integer(), "index");
                e->type = argType(0).elem == TypeTag::Bool ? Type::boolean() : Type::integer();
                break;
            case Op::ListLit: {
                TypeTag elem = TypeTag::Int;
                for (size_t i = 0; i < e->args.size(); ++i) {
                    if (argType(i).tag == TypeTag::List) fail("nested lists are not supported", e->loc);
                    if (i == 0) elem = argType(0).tag;
                    if (argType(i).tag != elem) fail("list elements differ in type", e->args[i]->loc);
                }
                e->type = Type::list_of(elem);
                break;
            }
            case Op::Call: call(*e); break;
        }
        return e;
    }

    std::optional<Type> infer(const Expr& e) const {
        switch (e.op) {
            case Op::Lit: return e.lit.kind == TypeTag::Bool   ? Type::boolean()
                                 : e.lit.kind == TypeTag::Int ? Type::integer()
                                                              : Type::list_of(TypeTag::Int);
            case Op::Var: {
                int v = p_.find_var(e.name);
                if (v >= 0) return p_.vars[v].domain.type();
                if (grammar) {
                    int r = grammar->find(e.name);
                    if (r >= 0) return holeTypes[r];
                }
                return std::nullopt;
            }
            case Op::Hole: {
                int r = grammar ? grammar->find(e.name) : -1;
                return r >= 0 ? holeTypes[r] : std::nullopt;
            }
            case Op::Neg:
            case Op::Add:
            case Op::Sub:
            case Op::Mul:
            case Op::Div:
            case Op::Rem: return Type::integer();
            case Op::Ite: {
                auto t = infer(*e.args[1]);
                return t ? t : infer(*e.args[2]);
            }
            case Op::Index: {
                auto t = infer(*e.args[0]);
                if (!t || t->tag != TypeTag::List) return std::nullopt;
                return t->elem == TypeTag::Bool ? Type::boolean() : Type::integer();
            }
            case Op::ListLit: {
                if (e.args.empty()) return Type::list_of(TypeTag::Int);
                auto t = infer(*e.args[0]);
                if (!t) return std::nullopt;
                return Type::list_of(t->tag);
            }
            case Op::Call: {
                if (const auto* b = find_builtin(e.name)) {
                    if (b->id == Builtin::Sort) return Type::list_of(TypeTag::Int);
                    return Type::integer();
                }
                int f = p_.find_function(e.name);
                if (f >= 0) return p_.functions[f].ret;
                return std::nullopt;
            }
            default: return Type::boolean();
        }
    }

    void function(FuncDef& f, int index) {
        Scope s;
        int next = 0;
        std::set<std::string> seen;
        for (const auto& prm : f.params) {
            if (!seen.insert(prm.name).second) fail("duplicate parameter '" + prm.name + "'", f.loc);
            s.vars.emplace_back(prm.name, next++, prm.type);
        }
        frameNext_ = next;
        currentRet_ = f.ret;
        block(f.body, s);
        if (!returns(f.body)) fail("function '" + f.name + "' may finish without returning", f.loc);
        f.frameSize = frameNext_;
        (void)index;
    }

private:
    void call(Expr& e) {
        if (const auto* b = find_builtin(e.name)) {
            if (e.args.size() != b->arity)
                fail("builtin '" + e.name + "' takes " + std::to_string(b->arity) + " argument(s)", e.loc);
            e.builtin = b->id;
            switch (b->id) {
                case Builtin::Len:
                    if (e.args[0]->type.tag != TypeTag::List) fail("len expects a list", e.loc);
                    e.type = Type::integer();
                    return;
                case Builtin::Sort:
                    if (e.args[0]->type != Type::list_of(TypeTag::Int)) fail("sort expects [int]", e.loc);
                    e.type = e.args[0]->type;
                    return;
                default:
                    for (const auto& a : e.args)
                        if (a->type != Type::integer()) fail("builtin '" + e.name + "' expects int arguments", a->loc);
                    e.type = Type::integer();
                    return;
            }
        }
        int f = p_.find_function(e.name);
        if (f < 0) fail("unknown function '" + e.name + "'", e.loc);
        const FuncDef& fd = p_.functions[f];
        if (e.args.size() != fd.params.size())
            fail("function '" + e.name + "' takes " + std::to_string(fd.params.size()) + " argument(s)", e.loc);
        for (size_t i = 0; i < e.args.size(); ++i)
            if (e.args[i]->type != fd.params[i].type)
                fail("argument " + std::to_string(i + 1) + " of '" + e.name + "' expects " + fd.params[i].type.str(),
                     e.args[i]->loc);
        e.fn = f;
        e.type = fd.ret;
    }

    void block(std::vector<StmtPtr>& body, Scope s) {
        for (auto& st : body) stmt(*st, s);
    }

    void stmt(Stmt& st, Scope& s) {
        switch (st.kind) {
            case StmtKind::Decl: {
                st.value = expr(st.value, s);
                if (st.value->type != st.type) fail("initializer of '" + st.name + "' has the wrong type", st.loc);
                st.slot = frameNext_++;
                s.vars.emplace_back(st.name, st.slot, st.type);
                break;
            }
            case StmtKind::Assign:
            case StmtKind::AssignIndex: {
                const auto* v = s.lookup(st.name);
                if (!v) fail("assignment to undeclared '" + st.name + "'", st.loc);
                st.slot = std::get<1>(*v);
                st.value = expr(st.value, s);
                Type target = std::get<2>(*v);
                if (st.kind == StmtKind::AssignIndex) {
                    if (target.tag != TypeTag::List) fail("indexing a non-list", st.loc);
                    st.index = expr(st.index, s);
                    if (st.index->type != Type::integer()) fail("index must be int", st.loc);
                    target = target.elem == TypeTag::Bool ? Type::boolean() : Type::integer();
                }
                if (st.value->type != target) fail("assignment to '" + st.name + "' has the wrong type", st.loc);
                break;
            }
            case StmtKind::If:
                st.value = expr(st.value, s);
                if (st.value->type != Type::boolean()) fail("if condition must be bool", st.loc);
                block(st.body, s);
                block(st.elseBody, s);
                break;
            case StmtKind::While:
                st.value = expr(st.value, s);
                if (st.value->type != Type::boolean()) fail("while condition must be bool", st.loc);
                block(st.body, s);
                break;
            case StmtKind::For: {
                st.value = expr(st.value, s);
                st.index = expr(st.index, s);
                if (st.value->type != Type::integer() || st.index->type != Type::integer())
                    fail("for bounds must be int", st.loc);
                Scope inner = s;
                st.slot = frameNext_++;
                inner.vars.emplace_back(st.name, st.slot, Type::integer());
                block(st.body, inner);
                break;
            }
            case StmtKind::Return:
                st.value = expr(st.value, s);
                if (st.value->type != currentRet_) fail("return type mismatch", st.loc);
                break;
        }
    }

    static bool returns(const std::vector<StmtPtr>& body) {
        for (const auto& st : body) {
            if (st->kind == StmtKind::Return) return true;
            if (st->kind == StmtKind::If && returns(st->body) && returns(st->elseBody)) return true;
        }
        return false;
    }

    const LoudProblem& p_;
    int frameNext_ = 0;
    Type currentRet_;
};

Scope problem_scope(const LoudProblem& p, bool withHidden) {
    Scope s;
    for (size_t i = 0; i < p.vars.size(); ++i) {
        const auto& v = p.vars[i];
        if (v.kind == VarKind::Hidden && !withHidden) continue;
        s.vars.emplace_back(v.name, p.slot_of(static_cast<int>(i)), v.domain.type());
    }
    return s;
}

void resolve_grammar(const LoudProblem& p, Grammar& g, const char* which) {
    if (g.rules.empty()) fail(std::string("grammar ") + which + " has no rules", {});
    std::set<std::string> names;
    for (const auto& r : g.rules) {
        if (!names.insert(r.name).second) fail("duplicate nonterminal '" + r.name + "'", r.loc);
        if (p.find_var(r.name) >= 0) fail("nonterminal '" + r.name + "' shadows a variable", r.loc);
        if (r.alts.empty()) fail("nonterminal '" + r.name + "' has no alternatives", r.loc);
    }
    if (g.start < 0 || g.start >= static_cast<int>(g.rules.size())) fail("grammar start symbol is undefined", {});

    Resolver rs(p);
    rs.grammar = &g;
    rs.holeTypes.assign(g.rules.size(), std::nullopt);
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t r = 0; r < g.rules.size(); ++r) {
            if (rs.holeTypes[r]) continue;
            for (const auto& a : g.rules[r].alts) {
                if (auto t = rs.infer(*a)) {
                    rs.holeTypes[r] = t;
                    changed = true;
                    break;
                }
            }
        }
    }
    const Scope s = problem_scope(p, false);
    for (size_t r = 0; r < g.rules.size(); ++r) {
        if (!rs.holeTypes[r]) fail("cannot infer the type of nonterminal '" + g.rules[r].name + "'", g.rules[r].loc);
        for (auto& a : g.rules[r].alts) {
            a = rs.expr(a, s);
            if (a->type != *rs.holeTypes[r])
                fail("alternatives of '" + g.rules[r].name + "' differ in type", a->loc);
        }
    }
    if (*rs.holeTypes[g.start] != Type::boolean())
        fail("grammar start symbol '" + g.rules[g.start].name + "' must derive bool", g.rules[g.start].loc);
}

}  // namespace

void resolve_problem(LoudProblem& p) {
    p.config.validate();
    std::set<std::string> names;
    for (const auto& v : p.vars) {
        if (!names.insert(v.name).second) fail("duplicate variable '" + v.name + "'", v.loc);
        if (v.domain.size() == 0) fail("variable '" + v.name + "' has an empty domain", v.loc);
    }
    std::set<std::string> fnames;
    for (const auto& f : p.functions) {
        if (find_builtin(f.name)) fail("function '" + f.name + "' redefines a builtin", f.loc);
        if (!fnames.insert(f.name).second) fail("duplicate function '" + f.name + "'", f.loc);
    }
    if (!p.query) fail("problem '" + p.name + "' has no query", {});
    if (!p.grammarOver && !p.grammarUnder) fail("problem '" + p.name + "' declares no grammar", {});

    Resolver rs(p);
    for (size_t i = 0; i < p.functions.size(); ++i) rs.function(p.functions[i], static_cast<int>(i));
    p.query = rs.expr(p.query, problem_scope(p, true));
    if (p.query->type != Type::boolean()) fail("query must be bool", p.query->loc);
    if (p.grammarOver) {
        p.grammarOver->depthBound = p.config.propertyDepthBound;
        resolve_grammar(p, *p.grammarOver, "over");
    }
    if (p.grammarUnder) {
        p.grammarUnder->depthBound = p.config.propertyDepthBound;
        resolve_grammar(p, *p.grammarUnder, "under");
    }
}

ExprPtr resolve_property(const LoudProblem& p, const ExprPtr& e) {
    Resolver rs(p);
    ExprPtr r = rs.expr(e, problem_scope(p, false));
    if (r->type != Type::boolean()) fail("property must be bool", r->loc);
    return r;
}

ExprPtr resolve_query_expr(const LoudProblem& p, const ExprPtr& e) {
    Resolver rs(p);
    ExprPtr r = rs.expr(e, problem_scope(p, true));
    if (r->type != Type::boolean()) fail("expression must be bool", r->loc);
    return r;
}

}  // namespace loud
