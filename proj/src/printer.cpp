#include "loud/printer.hpp"

#include <optional>

namespace loud {

namespace {

int prec(const Expr& e) {
    switch (e.op) {
        case Op::Implies: return 1;
        case Op::Or: return e.args.empty() ? 10 : 2;
        case Op::And: return e.args.empty() ? 10 : 3;
        case Op::Not: return 8;
        case Op::Eq:
        case Op::Ne:
        case Op::Lt:
        case Op::Le:
        case Op::Gt:
        case Op::Ge: return 5;
        case Op::Add:
        case Op::Sub: return 6;
        case Op::Mul:
        case Op::Div:
        case Op::Rem: return 7;
        case Op::Neg: return 8;
        case Op::Lit: return (e.lit.kind == TypeTag::Int && e.lit.num < 0) ? 8 : 10;
        default: return 10;
    }
}

const char* op_text(Op op) {
    switch (op) {
        case Op::Add: return " + ";
        case Op::Sub: return " - ";
        case Op::Mul: return " * ";
        case Op::Div: return " / ";
        case Op::Rem: return " % ";
        case Op::Eq: return " == ";
        case Op::Ne: return " != ";
        case Op::Lt: return " < ";
        case Op::Le: return " <= ";
        case Op::Gt: return " > ";
        case Op::Ge: return " >= ";
        case Op::And: return " /\\ ";
        case Op::Or: return " \\/ ";
        case Op::Implies: return " => ";
        default: return " ? ";
    }
}

const char* builtin_name(Builtin b) {
    switch (b) {
        case Builtin::Mod: return "mod";
        case Builtin::Abs: return "abs";
        case Builtin::Min: return "min";
        case Builtin::Max: return "max";
        case Builtin::Len: return "len";
        case Builtin::Sort: return "sort";
        case Builtin::None: break;
    }
    return "";
}

bool is_atom(const Expr& e) {
    if (e.op == Op::Not) return is_atom(*e.args[0]);
    return e.op != Op::And && e.op != Op::Or && e.op != Op::Implies;
}

bool is_atom_conj(const Expr& e) {
    if (e.op != Op::And) return is_atom(e);
    for (const auto& a : e.args)
        if (!is_atom(*a)) return false;
    return !e.args.empty();
}

class Printer {
public:
    explicit Printer(bool sugar) : sugar_(sugar) {}

    std::string print(const Expr& e) {
        switch (e.op) {
            case Op::Lit:
                if (e.charLit && e.lit.kind == TypeTag::Int) return std::string("'") + char(e.lit.num) + "'";
                return e.lit.str();
            case Op::Var: return e.name;
            case Op::Hole: return e.name;
            case Op::ConjMacro:
            case Op::DisjMacro:
                return std::string(e.op == Op::ConjMacro ? "/\\[" : "\\/[") + e.name + ", " +
                       std::to_string(e.lo) + ".." + std::to_string(e.hi) + "]";
            case Op::Neg: return "-" + child(*e.args[0], 8, true);
            case Op::Not: return "!" + child(*e.args[0], 8, true);
            case Op::And:
            case Op::Or: {
                if (e.args.empty()) return e.op == Op::And ? "true" : "false";
                if (sugar_ && e.op == Op::Or)
                    if (auto imp = as_implication(e)) return *imp;
                std::string s;
                for (size_t i = 0; i < e.args.size(); ++i) {
                    if (i) s += op_text(e.op);
                    const Expr& a = *e.args[i];
                    const bool mixed = (a.op == Op::And || a.op == Op::Or || a.op == Op::Implies) && a.op != e.op;
                    s += mixed ? "(" + print(a) + ")" : child(a, prec(e), true);
                }
                return s;
            }
            case Op::Implies: return implication(*e.args[0], *e.args[1]);
            case Op::Ite:
                return "ite(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ", " + print(*e.args[2]) + ")";
            case Op::Call: {
                std::string s = e.builtin != Builtin::None ? builtin_name(e.builtin) : e.name;
                s += "(";
                for (size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print(*e.args[i]);
                return s + ")";
            }
            case Op::Index: return child(*e.args[0], 10, true) + "[" + print(*e.args[1]) + "]";
            case Op::ListLit: {
                std::string s = "[";
                for (size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print(*e.args[i]);
                return s + "]";
            }
            default: {
                const int p = prec(e);
                const bool cmp = p == 5;
                // Comparisons do not chain; arithmetic is left-associative.
                return child(*e.args[0], p, !cmp) + op_text(e.op) + child(*e.args[1], p, false);
            }
        }
    }

private:
    // `!p1 \/ .. \/ !pn \/ q` as `p1 /\ .. /\ pn => q`. A disequality counts
    // as a negated equality. When every disjunct is negated, the boolean
    // negation (if unique) becomes the conclusion.
    std::optional<std::string> as_implication(const Expr& e) {
        if (e.args.size() < 2) return std::nullopt;
        auto negated = [](const Expr& a) -> ExprPtr {
            if (a.op == Op::Not && is_atom_conj(*a.args[0])) return a.args[0];
            if (a.op == Op::Ne) {
                auto eq = std::make_shared<Expr>(a);
                eq->op = Op::Eq;
                return eq;
            }
            return nullptr;
        };
        int concl = -1, plain = 0, nots = 0, lastNot = -1;
        for (size_t i = 0; i < e.args.size(); ++i) {
            const Expr& a = *e.args[i];
            const bool neg = negated(a) != nullptr;
            if (!neg && !is_atom(a)) return std::nullopt;
            if (!neg) {
                ++plain;
                concl = static_cast<int>(i);
            } else if (a.op == Op::Not && is_atom(*a.args[0])) {
                ++nots;
                lastNot = static_cast<int>(i);
            }
        }
        if (plain > 1) return std::nullopt;
        if (plain == 0) {
            if (nots != 1) return std::nullopt;
            concl = lastNot;
        }
        std::vector<ExprPtr> prem;
        for (size_t i = 0; i < e.args.size(); ++i)
            if (static_cast<int>(i) != concl) {
                ExprPtr n = negated(*e.args[i]);
                if (n->op == Op::And)
                    prem.insert(prem.end(), n->args.begin(), n->args.end());
                else
                    prem.push_back(n);
            }
        const ExprPtr p = prem.size() == 1 ? prem[0] : mk_nary(Op::And, prem);
        return implication(*p, *e.args[concl]);
    }

    std::string implication(const Expr& p, const Expr& q) {
        std::string lhs = p.op == Op::And ? "(" + print(p) + ")" : child(p, 2, false);
        std::string rhs = q.op == Op::Implies ? print(q) : child(q, 1, false);
        return lhs + " => " + rhs;
    }

    // Parenthesize when the child binds looser than `p`, or equally when
    // associativity does not allow it on this side.
    std::string child(const Expr& c, int p, bool sameOk) {
        const int cp = prec(c);
        const bool paren = cp < p || (cp == p && !sameOk);
        return paren ? "(" + print(c) + ")" : print(c);
    }

    bool sugar_;
};

}  // namespace

std::string to_text(const Expr& e) { return Printer(false).print(e); }

std::string pretty(const Expr& e) { return Printer(true).print(e); }

}  // namespace loud
