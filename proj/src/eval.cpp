#include "loud/eval.hpp"

#include <algorithm>
#include <cstdlib>

namespace loud {

const char* fault_name(FaultKind k) {
    switch (k) {
        case FaultKind::None: return "None";
        case FaultKind::DivByZero: return "DivByZero";
        case FaultKind::Overflow: return "Overflow";
        case FaultKind::BoundExceeded: return "BoundExceeded";
        case FaultKind::IndexOutOfRange: return "IndexOutOfRange";
    }
    return "?";
}

PropertyFault::PropertyFault(const std::string& prop, const std::string& example, FaultKind reason)
    : std::runtime_error("property fault (" + std::string(fault_name(reason)) + ") evaluating " + prop +
                         " at " + example),
      reason_(reason) {}

int64_t trunc_rem(int64_t a, int64_t m) { return a % m; }

int64_t floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

inline bool in_bound(int64_t v) { return v >= -kIntBound && v <= kIntBound; }

inline bool set_int(Value& out, int64_t v, FaultKind& fault) {
    if (!in_bound(v)) {
        fault = FaultKind::Overflow;
        return false;
    }
    out.kind = TypeTag::Int;
    out.num = v;
    out.items.clear();
    return true;
}

inline void set_bool(Value& out, bool b) {
    out.kind = TypeTag::Bool;
    out.num = b ? 1 : 0;
    out.items.clear();
}

}  // namespace

EvalOutcome Interpreter::eval_expr(const Expr& e, const std::vector<Value>& env) const {
    return eval_expr(e, Env{env.data(), static_cast<int>(env.size()), nullptr});
}

EvalOutcome Interpreter::eval_expr(const Expr& e, Env env) const {
    Value out;
    FaultKind fault = FaultKind::None;
    if (!eval(e, env, out, fault, 0)) return EvalOutcome::failure(fault);
    return EvalOutcome::success(std::move(out));
}

bool Interpreter::holds(const Expr& e, Env env) const {
    Value out;
    FaultKind fault = FaultKind::None;
    if (!eval(e, env, out, fault, 0)) {
        ++faults_;
        return false;
    }
    return out.truthy();
}

bool Interpreter::eval(const Expr& e, Env env, Value& out, FaultKind& fault, int depth) const {
    switch (e.op) {
        case Op::Lit: out = e.lit; return true;
        case Op::Var: out = env.at(e.slot); return true;
        case Op::Neg:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            return set_int(out, -out.num, fault);
        case Op::Not:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            set_bool(out, !out.truthy());
            return true;
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
        case Op::Rem:
        case Op::Lt:
        case Op::Le:
        case Op::Gt:
        case Op::Ge: {
            Value r;
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            if (!eval(*e.args[1], env, r, fault, depth)) return false;
            const int64_t a = out.num, b = r.num;
            switch (e.op) {
                case Op::Add: return set_int(out, a + b, fault);
                case Op::Sub: return set_int(out, a - b, fault);
                case Op::Mul: return set_int(out, a * b, fault);
                case Op::Div:
                    if (b == 0) {
                        fault = FaultKind::DivByZero;
                        return false;
                    }
                    return set_int(out, a / b, fault);
                case Op::Rem:
                    if (b == 0) {
                        fault = FaultKind::DivByZero;
                        return false;
                    }
                    return set_int(out, trunc_rem(a, b), fault);
                case Op::Lt: set_bool(out, a < b); return true;
                case Op::Le: set_bool(out, a <= b); return true;
                case Op::Gt: set_bool(out, a > b); return true;
                default: set_bool(out, a >= b); return true;
            }
        }
        case Op::Eq:
        case Op::Ne: {
            Value r;
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            if (!eval(*e.args[1], env, r, fault, depth)) return false;
            const bool eq = out == r;
            set_bool(out, e.op == Op::Eq ? eq : !eq);
            return true;
        }
        case Op::And:
            for (const auto& a : e.args) {
                if (!eval(*a, env, out, fault, depth)) return false;
                if (!out.truthy()) return true;
            }
            set_bool(out, true);
            return true;
        case Op::Or:
            for (const auto& a : e.args) {
                if (!eval(*a, env, out, fault, depth)) return false;
                if (out.truthy()) return true;
            }
            set_bool(out, false);
            return true;
        case Op::Implies:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            if (!out.truthy()) {
                set_bool(out, true);
                return true;
            }
            return eval(*e.args[1], env, out, fault, depth);
        case Op::Ite:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            return eval(*e.args[out.truthy() ? 1 : 2], env, out, fault, depth);
        case Op::Call: {
            if (e.builtin != Builtin::None) return builtin(e, env, out, fault, depth);
            const FuncDef& f = (*funcs_)[e.fn];
            if (depth + 1 > depthBound_) {
                fault = FaultKind::BoundExceeded;
                return false;
            }
            std::vector<Value> frame(f.frameSize);
            for (size_t i = 0; i < e.args.size(); ++i)
                if (!eval(*e.args[i], env, frame[i], fault, depth)) return false;
            return call(f, frame, out, fault, depth + 1);
        }
        case Op::Index: {
            Value idx;
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            if (!eval(*e.args[1], env, idx, fault, depth)) return false;
            if (idx.num < 0 || idx.num >= static_cast<int64_t>(out.items.size())) {
                fault = FaultKind::IndexOutOfRange;
                return false;
            }
            Value v = std::move(out.items[idx.num]);
            out = std::move(v);
            return true;
        }
        case Op::ListLit: {
            std::vector<Value> xs(e.args.size());
            for (size_t i = 0; i < e.args.size(); ++i)
                if (!eval(*e.args[i], env, xs[i], fault, depth)) return false;
            out = Value::list(std::move(xs));
            return true;
        }
        case Op::Hole:
        case Op::ConjMacro:
        case Op::DisjMacro: break;
    }
    throw std::logic_error("grammar template node reached the evaluator");
}

bool Interpreter::builtin(const Expr& e, Env env, Value& out, FaultKind& fault, int depth) const {
    switch (e.builtin) {
        case Builtin::Mod: {
            Value m;
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            if (!eval(*e.args[1], env, m, fault, depth)) return false;
            if (m.num <= 0) {
                fault = FaultKind::DivByZero;
                return false;
            }
            return set_int(out, floor_mod(out.num, m.num), fault);
        }
        case Builtin::Abs:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            return set_int(out, std::llabs(out.num), fault);
        case Builtin::Min:
        case Builtin::Max: {
            Value r;
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            if (!eval(*e.args[1], env, r, fault, depth)) return false;
            const int64_t v = e.builtin == Builtin::Min ? std::min(out.num, r.num) : std::max(out.num, r.num);
            return set_int(out, v, fault);
        }
        case Builtin::Len:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            return set_int(out, static_cast<int64_t>(out.items.size()), fault);
        case Builtin::Sort:
            if (!eval(*e.args[0], env, out, fault, depth)) return false;
            std::sort(out.items.begin(), out.items.end());
            return true;
        case Builtin::None: break;
    }
    throw std::logic_error("unknown builtin");
}

bool Interpreter::call(const FuncDef& f, std::vector<Value>& frame, Value& out, FaultKind& fault,
                       int depth) const {
    Value ret;
    switch (exec(f.body, frame, ret, fault, depth)) {
        case Flow::Returned: out = std::move(ret); return true;
        case Flow::Faulted: return false;
        case Flow::Normal: break;
    }
    throw std::logic_error("function '" + f.name + "' finished without returning");
}

Interpreter::Flow Interpreter::exec(const std::vector<StmtPtr>& body, std::vector<Value>& frame,
                                    Value& ret, FaultKind& fault, int depth) const {
    const Env env{frame.data(), static_cast<int>(frame.size()), nullptr};
    for (const auto& sp : body) {
        const Stmt& s = *sp;
        switch (s.kind) {
            case StmtKind::Decl:
            case StmtKind::Assign: {
                Value v;
                if (!eval(*s.value, env, v, fault, depth)) return Flow::Faulted;
                frame[s.slot] = std::move(v);
                break;
            }
            case StmtKind::AssignIndex: {
                Value idx, v;
                if (!eval(*s.index, env, idx, fault, depth)) return Flow::Faulted;
                if (!eval(*s.value, env, v, fault, depth)) return Flow::Faulted;
                auto& items = frame[s.slot].items;
                if (idx.num < 0 || idx.num >= static_cast<int64_t>(items.size())) {
                    fault = FaultKind::IndexOutOfRange;
                    return Flow::Faulted;
                }
                items[idx.num] = std::move(v);
                break;
            }
            case StmtKind::If: {
                Value c;
                if (!eval(*s.value, env, c, fault, depth)) return Flow::Faulted;
                Flow fl = exec(c.truthy() ? s.body : s.elseBody, frame, ret, fault, depth);
                if (fl != Flow::Normal) return fl;
                break;
            }
            case StmtKind::While: {
                int iter = 0;
                while (true) {
                    Value c;
                    if (!eval(*s.value, env, c, fault, depth)) return Flow::Faulted;
                    if (!c.truthy()) break;
                    if (++iter > loopBound_) {
                        fault = FaultKind::BoundExceeded;
                        return Flow::Faulted;
                    }
                    Flow fl = exec(s.body, frame, ret, fault, depth);
                    if (fl != Flow::Normal) return fl;
                }
                break;
            }
            case StmtKind::For: {
                Value lo, hi;
                if (!eval(*s.value, env, lo, fault, depth)) return Flow::Faulted;
                if (!eval(*s.index, env, hi, fault, depth)) return Flow::Faulted;
                if (hi.num - lo.num + 1 > loopBound_) {
                    fault = FaultKind::BoundExceeded;
                    return Flow::Faulted;
                }
                for (int64_t i = lo.num; i <= hi.num; ++i) {
                    frame[s.slot] = Value::integer(i);
                    Flow fl = exec(s.body, frame, ret, fault, depth);
                    if (fl != Flow::Normal) return fl;
                }
                break;
            }
            case StmtKind::Return:
                if (!eval(*s.value, env, ret, fault, depth)) return Flow::Faulted;
                return Flow::Returned;
        }
    }
    return Flow::Normal;
}

bool eval_query(const LoudProblem& p, const Interpreter& in, const Example& e, const HiddenInstance& h) {
    return in.holds(*p.query, Env{e.data(), static_cast<int>(e.size()), h.data()});
}

bool eval_property(const Interpreter& in, const Expr& phi, const Example& e) {
    Value out;
    FaultKind fault = FaultKind::None;
    if (!in.eval(phi, Env{e.data(), static_cast<int>(e.size()), nullptr}, out, fault, 0)) {
        std::string ex = "(";
        for (size_t i = 0; i < e.size(); ++i) ex += (i ? ", " : "") + e[i].str();
        throw PropertyFault("property", ex + ")", fault);
    }
    return out.truthy();
}

}  // namespace loud
