#include "loud/parser.hpp"

#include <charconv>
#include <cstring>
#include <stdexcept>

#include "loud/check.hpp"
#include "loud/transformers.hpp"

namespace loud {

namespace {

enum class Tok : uint8_t { Ident, Int, Char, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int64_t num = 0;
    SrcLoc loc;
};

constexpr const char* kMultiSyms[] = {"/\\", "\\/", "=>", "==", "!=", "<=", ">=", "&&", "||", "..", "->"};
constexpr const char* kSingleSyms = "{}()[],;:=<>+-*/%!|";

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.loc = {line, col};
        if (ident_start(c)) {
            size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            while (j < src.size() && src[j] == '\'') ++j;
            t.kind = Tok::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            t.kind = Tok::Int;
            t.text = src.substr(i, j - i);
            auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, t.num);
            if (ec != std::errc() || t.num > kIntBound) throw ParseError("integer literal out of range", t.loc);
            (void)ptr;
            advance(j - i);
        } else if (c == '\'') {
            if (i + 2 >= src.size() || src[i + 2] != '\'' || static_cast<unsigned char>(src[i + 1]) < 32 ||
                static_cast<unsigned char>(src[i + 1]) > 126)
                throw ParseError("malformed character literal", t.loc);
            t.kind = Tok::Char;
            t.num = src[i + 1];
            t.text = src.substr(i, 3);
            advance(3);
        } else {
            t.kind = Tok::Sym;
            for (const char* m : kMultiSyms) {
                if (src.compare(i, 2, m) == 0) {
                    t.text = m;
                    break;
                }
            }
            if (t.text.empty()) {
                if (!std::strchr(kSingleSyms, c) || c == '\0') {
                    std::string shown = (static_cast<unsigned char>(c) >= 32 && static_cast<unsigned char>(c) < 127)
                                            ? std::string(1, c)
                                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
                    throw ParseError("unexpected character '" + shown + "'", t.loc);
                }
                t.text = std::string(1, c);
            }
            advance(t.text.size());
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.loc = {line, col};
    out.push_back(end);
    return out;
}

constexpr int kMaxNesting = 200;

struct RawFile {
    std::string name;
    std::vector<VarDecl> vars;
    std::vector<ExprPtr> query;
    bool hasQuery = false;
    std::vector<FuncDef> functions;
    std::optional<Grammar> over, under;
    SearchConfig config;
    bool hasTransformer = false;
    SrcLoc transformerLoc;
    TransformerSpec spec;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks, bool grammarMode = false)
        : toks_(std::move(toks)), grammarMode_(grammarMode) {}

    RawFile file() {
        RawFile f;
        expect_word("problem");
        f.name = problem_name();
        bool seenVars = false, seenFns = false, seenCfg = false;
        while (!at_end()) {
            const Token& t = peek();
            if (is_word("vars")) {
                if (seenVars) fail("duplicate vars block", t.loc);
                seenVars = true;
                next();
                vars(f.vars);
            } else if (is_word("query")) {
                if (f.hasQuery) fail("duplicate query block", t.loc);
                f.hasQuery = true;
                next();
                query(f.query);
            } else if (is_word("functions")) {
                if (seenFns) fail("duplicate functions block", t.loc);
                seenFns = true;
                next();
                functions(f.functions);
            } else if (is_word("grammar")) {
                next();
                SrcLoc loc = peek().loc;
                std::string which = expect_ident("'over' or 'under'");
                auto& slot = which == "over" ? f.over : which == "under" ? f.under : f.over;
                if (which != "over" && which != "under") fail("expected 'over' or 'under'", loc);
                if (slot) fail("duplicate grammar " + which + " block", loc);
                slot = grammar();
            } else if (is_word("config")) {
                if (seenCfg) fail("duplicate config block", t.loc);
                seenCfg = true;
                next();
                config(f.config);
            } else if (is_word("transformer")) {
                if (f.hasTransformer) fail("duplicate transformer block", t.loc);
                f.hasTransformer = true;
                f.transformerLoc = t.loc;
                next();
                transformer(f.spec);
            } else {
                fail("expected a block (vars, query, functions, grammar, config, transformer)", t.loc);
            }
        }
        return f;
    }

    ExprPtr whole_expr() {
        ExprPtr e = expr();
        if (!at_end()) fail("unexpected '" + peek().text + "' after expression", peek().loc);
        return e;
    }

private:
    // ---- token helpers ----
    const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is_sym(const char* s, size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool is_word(const char* s, size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == s; }
    bool accept_sym(const char* s) {
        if (!is_sym(s)) return false;
        next();
        return true;
    }
    [[noreturn]] static void fail(const std::string& msg, SrcLoc loc) { throw ParseError(msg, loc); }
    static std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }
    void expect_sym(const char* s) {
        if (!accept_sym(s)) fail(std::string("expected '") + s + "' but found " + describe(peek()), peek().loc);
    }
    void expect_word(const char* s) {
        if (!is_word(s)) fail(std::string("expected '") + s + "' but found " + describe(peek()), peek().loc);
        next();
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + " but found " + describe(peek()), peek().loc);
        return next().text;
    }
    int64_t signed_int() {
        bool neg = accept_sym("-");
        if (peek().kind != Tok::Int) fail("expected an integer but found " + describe(peek()), peek().loc);
        int64_t v = next().num;
        return neg ? -v : v;
    }

    struct Nest {
        explicit Nest(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxNesting) fail("nesting too deep", p_.peek().loc);
        }
        ~Nest() { --p_.depth_; }
        Parser& p_;
    };

    std::string problem_name() {
        if (peek().kind != Tok::Ident) fail("expected a problem name", peek().loc);
        std::string name = next().text;
        while (is_sym("-") && (peek(1).kind == Tok::Ident || peek(1).kind == Tok::Int)) {
            next();
            name += "-" + next().text;
        }
        return name;
    }

    // ---- vars ----
    void vars(std::vector<VarDecl>& out) {
        expect_sym("{");
        while (!accept_sym("}")) {
            VarKind kind = VarKind::Free;
            if (is_word("exist") || is_word("hidden")) {
                next();
                kind = VarKind::Hidden;
            }
            std::vector<std::pair<std::string, SrcLoc>> names;
            do {
                SrcLoc loc = peek().loc;
                names.emplace_back(expect_ident("a variable name"), loc);
            } while (accept_sym(","));
            expect_sym(":");
            Domain d = domain();
            for (auto& [n, loc] : names) out.push_back(VarDecl{n, kind, d, loc});
            accept_sym(";");
            if (at_end()) fail("unterminated vars block", peek().loc);
        }
    }

    Domain domain() {
        SrcLoc loc = peek().loc;
        try {
            if (is_word("int")) {
                next();
                expect_sym("[");
                int64_t lo = signed_int();
                expect_sym("..");
                int64_t hi = signed_int();
                expect_sym("]");
                if (lo > hi) fail("empty integer range", loc);
                return Domain::range(lo, hi);
            }
            if (is_word("bool")) {
                next();
                return Domain::booleans();
            }
            if (accept_sym("{")) {
                std::vector<Value> vs;
                bool chars = false;
                do {
                    if (peek().kind == Tok::Char) {
                        chars = true;
                        vs.push_back(Value::integer(next().num));
                    } else if (is_word("true") || is_word("false")) {
                        vs.push_back(Value::boolean(next().text == "true"));
                    } else {
                        vs.push_back(Value::integer(signed_int()));
                    }
                } while (accept_sym(","));
                expect_sym("}");
                Domain d = Domain::explicit_set(std::move(vs));
                d.chars = chars;
                return d;
            }
            if (is_word("list")) {
                next();
                expect_sym("(");
                Domain elem = domain();
                expect_sym(",");
                int64_t lo = signed_int(), hi = lo;
                if (accept_sym("..")) hi = signed_int();
                expect_sym(")");
                if (lo < 0 || lo > hi || hi > 64) fail("bad list length range", loc);
                return Domain::list_of(std::move(elem), static_cast<int>(lo), static_cast<int>(hi));
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what(), loc);
        }
        fail("expected a domain (int[lo..hi], bool, {...}, list(...)) but found " + describe(peek()), loc);
    }

    // ---- query ----
    void query(std::vector<ExprPtr>& out) {
        expect_sym("{");
        while (!accept_sym("}")) {
            out.push_back(expr());
            if (!accept_sym(";") && !is_sym("}")) fail("expected ';' or '}' after query expression", peek().loc);
        }
    }

    // ---- functions ----
    Type type() {
        if (accept_sym("[")) {
            SrcLoc loc = peek().loc;
            std::string e = expect_ident("an element type");
            expect_sym("]");
            if (e == "int") return Type::list_of(TypeTag::Int);
            if (e == "bool") return Type::list_of(TypeTag::Bool);
            fail("unknown element type '" + e + "'", loc);
        }
        SrcLoc loc = peek().loc;
        std::string t = expect_ident("a type");
        if (t == "int") return Type::integer();
        if (t == "bool") return Type::boolean();
        fail("unknown type '" + t + "'", loc);
    }

    void functions(std::vector<FuncDef>& out) {
        expect_sym("{");
        while (!accept_sym("}")) {
            FuncDef f;
            f.loc = peek().loc;
            expect_word("fn");
            f.name = expect_ident("a function name");
            expect_sym("(");
            if (!is_sym(")")) {
                do {
                    Param prm;
                    prm.name = expect_ident("a parameter name");
                    expect_sym(":");
                    prm.type = type();
                    f.params.push_back(prm);
                } while (accept_sym(","));
            }
            expect_sym(")");
            expect_sym("->");
            f.ret = type();
            f.body = block();
            out.push_back(std::move(f));
        }
    }

    std::vector<StmtPtr> block() {
        Nest guard(*this);
        expect_sym("{");
        std::vector<StmtPtr> out;
        while (!accept_sym("}")) {
            if (at_end()) fail("unterminated block", peek().loc);
            out.push_back(stmt());
        }
        return out;
    }

    StmtPtr stmt() {
        auto s = std::make_shared<Stmt>();
        s->loc = peek().loc;
        if (is_word("var")) {
            next();
            s->kind = StmtKind::Decl;
            s->name = expect_ident("a variable name");
            expect_sym(":");
            s->type = type();
            expect_sym("=");
            s->value = expr();
            expect_sym(";");
        } else if (is_word("if")) {
            next();
            s->kind = StmtKind::If;
            s->value = expr();
            s->body = block();
            if (is_word("else")) {
                next();
                if (is_word("if")) s->elseBody.push_back(stmt());
                else s->elseBody = block();
            }
        } else if (is_word("while")) {
            next();
            s->kind = StmtKind::While;
            s->value = expr();
            s->body = block();
        } else if (is_word("for")) {
            next();
            s->kind = StmtKind::For;
            s->name = expect_ident("a loop variable");
            expect_word("in");
            s->value = expr();
            expect_sym("..");
            s->index = expr();
            s->body = block();
        } else if (is_word("return")) {
            next();
            s->kind = StmtKind::Return;
            s->value = expr();
            expect_sym(";");
        } else {
            s->name = expect_ident("a statement");
            if (accept_sym("[")) {
                s->kind = StmtKind::AssignIndex;
                s->index = expr();
                expect_sym("]");
            } else {
                s->kind = StmtKind::Assign;
            }
            expect_sym("=");
            s->value = expr();
            expect_sym(";");
        }
        return s;
    }

    // ---- grammar ----
    Grammar grammar() {
        Grammar g;
        expect_sym("{");
        std::string startName;
        SrcLoc startLoc;
        if (is_word("start") && !is_sym("->", 1)) {
            next();
            startLoc = peek().loc;
            startName = expect_ident("a start symbol");
            accept_sym(";");
        }
        while (!accept_sym("}")) {
            Rule r;
            r.loc = peek().loc;
            r.name = expect_ident("a nonterminal");
            expect_sym("->");
            for (auto& alt : alternatives())
                for (auto& toks : expand_groups(alt)) {
                    Parser sub(std::move(toks), true);
                    r.alts.push_back(sub.whole_expr());
                }
            accept_sym(";");
            if (r.alts.empty()) fail("nonterminal '" + r.name + "' has no alternatives", r.loc);
            g.rules.push_back(std::move(r));
        }
        if (g.rules.empty()) fail("empty grammar", peek().loc);
        if (!startName.empty()) {
            g.start = g.find(startName);
            if (g.start < 0) fail("unknown start symbol '" + startName + "'", startLoc);
        }
        return g;
    }

    // Token spans of one rule's alternatives, split on top-level '|'.
    std::vector<std::vector<Token>> alternatives() {
        std::vector<std::vector<Token>> alts(1);
        int depth = 0;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::End) fail("unterminated grammar block", t.loc);
            if (depth == 0) {
                if (t.kind == Tok::Sym && (t.text == ";" || t.text == "}")) break;
                if (t.kind == Tok::Ident && is_sym("->", 1)) break;
                if (t.kind == Tok::Sym && t.text == "|") {
                    next();
                    alts.emplace_back();
                    continue;
                }
            }
            if (t.kind == Tok::Sym && (t.text == "(" || t.text == "[" || t.text == "{")) ++depth;
            if (t.kind == Tok::Sym && (t.text == ")" || t.text == "]" || t.text == "}")) --depth;
            alts.back().push_back(next());
        }
        for (const auto& a : alts)
            if (a.empty()) fail("empty grammar alternative", peek().loc);
        return alts;
    }

    // Expands `{op | op ...}` choice groups into one token list per choice.
    static std::vector<std::vector<Token>> expand_groups(const std::vector<Token>& toks) {
        for (size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].kind != Tok::Sym || toks[i].text != "{") continue;
            size_t j = i + 1;
            std::vector<std::vector<Token>> options(1);
            for (; j < toks.size(); ++j) {
                if (toks[j].kind == Tok::Sym && toks[j].text == "}") break;
                if (toks[j].kind == Tok::Sym && toks[j].text == "{") fail("nested choice groups", toks[j].loc);
                if (toks[j].kind == Tok::Sym && toks[j].text == "|") options.emplace_back();
                else options.back().push_back(toks[j]);
            }
            if (j == toks.size()) fail("unterminated choice group", toks[i].loc);
            std::vector<std::vector<Token>> out;
            for (const auto& opt : options) {
                if (opt.empty()) fail("empty choice in group", toks[i].loc);
                std::vector<Token> spliced(toks.begin(), toks.begin() + i);
                spliced.insert(spliced.end(), opt.begin(), opt.end());
                spliced.insert(spliced.end(), toks.begin() + j + 1, toks.end());
                for (auto& e : expand_groups(spliced)) out.push_back(std::move(e));
            }
            return out;
        }
        std::vector<Token> whole = toks;
        Token end;
        end.loc = toks.empty() ? SrcLoc{} : toks.back().loc;
        whole.push_back(end);
        return {whole};
    }

    // ---- config ----
    void config(SearchConfig& c) {
        expect_sym("{");
        while (!accept_sym("}")) {
            SrcLoc loc = peek().loc;
            std::string key = expect_ident("a config key");
            expect_sym("=");
            SrcLoc vloc = peek().loc;
            int64_t v = 0;
            bool isBool = false;
            if (is_word("true") || is_word("false")) {
                isBool = true;
                v = next().text == "true";
            } else {
                v = signed_int();
            }
            accept_sym(";");
            auto need_int = [&] {
                if (isBool) fail("config key '" + key + "' expects an integer", vloc);
            };
            auto need_bool = [&] {
                if (!isBool) fail("config key '" + key + "' expects true or false", vloc);
            };
            if (key == "property_depth") need_int(), c.propertyDepthBound = clamp_int(v, vloc);
            else if (key == "loop_unroll") need_int(), c.loopUnrollBound = clamp_int(v, vloc);
            else if (key == "recursion_depth") need_int(), c.recursionDepthBound = clamp_int(v, vloc);
            else if (key == "timeout_ms") need_int(), c.timeoutMillis = v;
            else if (key == "seed") need_int(), c.seed = static_cast<uint64_t>(v);
            else if (key == "h_cache") need_bool(), c.hCacheEnabled = v != 0;
            else if (key == "oracle_check") need_bool(), c.oracleCheckEnabled = v != 0;
            else if (key == "enumeration_cap") need_int(), c.enumerationCap = static_cast<uint64_t>(v);
            else if (key == "oracle_pair_cap") need_int(), c.oraclePairCap = static_cast<uint64_t>(v);
            else fail("unknown config key '" + key + "'", loc);
        }
        try {
            c.validate();
        } catch (const std::exception& e) {
            fail(e.what(), peek().loc);
        }
    }

    static int clamp_int(int64_t v, SrcLoc loc) {
        if (v < 1 || v > 1000000) fail("bound out of range", loc);
        return static_cast<int>(v);
    }

    // ---- transformer ----
    void transformer(TransformerSpec& s) {
        expect_sym("{");
        while (!accept_sym("}")) {
            SrcLoc loc = peek().loc;
            std::string key = expect_ident("a transformer field");
            if (key == "kind") {
                SrcLoc kloc = peek().loc;
                std::string k = expect_ident("spo, wlp, wupo or wpp");
                if (k == "spo") s.kind = TransformerKind::Spo;
                else if (k == "wlp") s.kind = TransformerKind::Wlp;
                else if (k == "wupo") s.kind = TransformerKind::Wupo;
                else if (k == "wpp") s.kind = TransformerKind::Wpp;
                else fail("unknown transformer kind '" + k + "'", kloc);
            } else if (key == "params" || key == "input" || key == "inputs" || key == "output" || key == "outputs") {
                auto& dst = key == "params" ? s.params : key[0] == 'i' ? s.inputs : s.outputs;
                do dst.push_back(expect_ident("a variable name"));
                while (accept_sym(","));
            } else if (key == "relation") {
                s.relation = expr();
            } else if (key == "pre") {
                s.pre = expr();
            } else if (key == "post") {
                s.post = expr();
            } else {
                fail("unknown transformer field '" + key + "'", loc);
            }
            accept_sym(";");
            if (at_end()) fail("unterminated transformer block", peek().loc);
        }
        if (s.kind == TransformerKind::None) fail("transformer block needs a kind", peek().loc);
    }

    // ---- expressions ----
    ExprPtr located(ExprPtr e, SrcLoc loc) {
        auto m = std::make_shared<Expr>(*e);
        m->loc = loc;
        return m;
    }

    ExprPtr expr() {
        Nest guard(*this);
        return implies();
    }

    ExprPtr implies() {
        ExprPtr lhs = disj();
        if (is_sym("=>")) {
            SrcLoc loc = next().loc;
            ExprPtr rhs = expr();
            return located(mk_binary(Op::Implies, lhs, rhs), loc);
        }
        return lhs;
    }

    bool macro_ahead() const { return grammarMode_ && (is_sym("/\\") || is_sym("\\/")) && is_sym("[", 1); }

    ExprPtr disj() {
        SrcLoc loc = peek().loc;
        std::vector<ExprPtr> xs{conj()};
        while ((is_sym("\\/") || is_sym("||")) && !macro_ahead()) {
            next();
            xs.push_back(conj());
        }
        return xs.size() == 1 ? xs[0] : located(mk_nary(Op::Or, std::move(xs)), loc);
    }

    ExprPtr conj() {
        SrcLoc loc = peek().loc;
        std::vector<ExprPtr> xs{cmp()};
        while ((is_sym("/\\") || is_sym("&&")) && !macro_ahead()) {
            next();
            xs.push_back(cmp());
        }
        return xs.size() == 1 ? xs[0] : located(mk_nary(Op::And, std::move(xs)), loc);
    }

    ExprPtr cmp() {
        ExprPtr lhs = additive();
        static const std::pair<const char*, Op> ops[] = {{"==", Op::Eq}, {"!=", Op::Ne}, {"<=", Op::Le},
                                                         {">=", Op::Ge}, {"<", Op::Lt},  {">", Op::Gt}};
        for (const auto& [s, op] : ops) {
            if (is_sym(s)) {
                SrcLoc loc = next().loc;
                ExprPtr rhs = additive();
                for (const auto& [s2, op2] : ops)
                    if (is_sym(s2)) fail("comparisons do not chain", peek().loc);
                return located(mk_binary(op, lhs, rhs), loc);
            }
        }
        return lhs;
    }

    ExprPtr additive() {
        ExprPtr lhs = multiplicative();
        while (is_sym("+") || is_sym("-")) {
            const Token& t = next();
            Op op = t.text == "+" ? Op::Add : Op::Sub;
            lhs = located(mk_binary(op, lhs, multiplicative()), t.loc);
        }
        return lhs;
    }

    ExprPtr multiplicative() {
        ExprPtr lhs = unary();
        while (is_sym("*") || is_sym("/") || is_sym("%")) {
            const Token& t = next();
            Op op = t.text == "*" ? Op::Mul : t.text == "/" ? Op::Div : Op::Rem;
            lhs = located(mk_binary(op, lhs, unary()), t.loc);
        }
        return lhs;
    }

    ExprPtr unary() {
        Nest guard(*this);
        if (is_sym("-")) {
            SrcLoc loc = next().loc;
            return located(mk_unary(Op::Neg, unary()), loc);
        }
        if (is_sym("!")) {
            SrcLoc loc = next().loc;
            return located(mk_unary(Op::Not, unary()), loc);
        }
        ExprPtr e = primary();
        while (is_sym("[")) {
            SrcLoc loc = next().loc;
            ExprPtr idx = expr();
            expect_sym("]");
            e = located(mk_binary(Op::Index, e, idx), loc);
        }
        return e;
    }

    std::vector<ExprPtr> call_args() {
        std::vector<ExprPtr> args;
        expect_sym("(");
        if (!is_sym(")")) {
            do args.push_back(expr());
            while (accept_sym(","));
        }
        expect_sym(")");
        return args;
    }

    ExprPtr primary() {
        const Token& t = peek();
        SrcLoc loc = t.loc;
        switch (t.kind) {
            case Tok::Int: return located(mk_int(next().num), loc);
            case Tok::Char: return located(mk_lit(Value::integer(next().num), true), loc);
            case Tok::End: fail("unexpected end of input in expression", loc);
            default: break;
        }
        if (macro_ahead()) {
            Op op = next().text == "/\\" ? Op::ConjMacro : Op::DisjMacro;
            expect_sym("[");
            auto e = std::make_shared<Expr>();
            e->op = op;
            e->loc = loc;
            e->name = expect_ident("a nonterminal");
            expect_sym(",");
            int64_t lo = signed_int();
            expect_sym("..");
            int64_t hi = signed_int();
            expect_sym("]");
            if (lo < 0 || lo > hi || hi > 64) fail("bad macro arity range", loc);
            e->lo = static_cast<int>(lo);
            e->hi = static_cast<int>(hi);
            e->type = Type::boolean();
            return e;
        }
        if (accept_sym("(")) {
            ExprPtr e = expr();
            expect_sym(")");
            return e;
        }
        if (accept_sym("[")) {
            std::vector<ExprPtr> xs;
            if (!is_sym("]")) {
                do xs.push_back(expr());
                while (accept_sym(","));
            }
            expect_sym("]");
            auto e = std::make_shared<Expr>();
            e->op = Op::ListLit;
            e->args = std::move(xs);
            e->loc = loc;
            return e;
        }
        if (t.kind == Tok::Ident) {
            std::string name = next().text;
            if (name == "true" || name == "false") return located(mk_bool(name == "true"), loc);
            if (name == "ite" && is_sym("(")) {
                auto args = call_args();
                if (args.size() != 3) fail("ite takes 3 arguments", loc);
                auto e = std::make_shared<Expr>();
                e->op = Op::Ite;
                e->args = std::move(args);
                e->loc = loc;
                return e;
            }
            if (is_sym("(")) {
                auto e = std::make_shared<Expr>();
                e->op = Op::Call;
                e->name = name;
                e->args = call_args();
                e->loc = loc;
                return e;
            }
            auto e = std::make_shared<Expr>();
            e->op = Op::Var;
            e->name = name;
            e->loc = loc;
            return e;
        }
        fail("unexpected " + describe(t) + " in expression", loc);
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    bool grammarMode_;
    int depth_ = 0;
};

ExprPtr conjoin(std::vector<ExprPtr> xs) {
    if (xs.empty()) return mk_bool(true);
    if (xs.size() == 1) return xs[0];
    SrcLoc loc = xs[0]->loc;
    auto e = std::make_shared<Expr>(*mk_nary(Op::And, std::move(xs)));
    e->loc = loc;
    return e;
}

}  // namespace

LoudProblem parse_problem(const std::string& text) {
    Parser parser(lex(text));
    RawFile f = parser.file();
    for (const auto& fn : f.functions)
        if (fn.name == "ite") throw ValidationError("'ite' is reserved", fn.loc);
    if (f.hasTransformer) {
        if (f.hasQuery) throw ValidationError("a transformer problem cannot also declare a query", f.transformerLoc);
        TransformerSpec& s = f.spec;
        s.name = f.name;
        s.vars = f.vars;
        s.functions = f.functions;
        s.config = f.config;
        bool over = transformer_is_over(s.kind);
        s.dsl = over ? (f.over ? f.over : f.under) : (f.under ? f.under : f.over);
        return encode(s);
    }
    LoudProblem p;
    p.name = f.name;
    p.vars = std::move(f.vars);
    if (f.hasQuery) p.query = conjoin(std::move(f.query));
    p.functions = std::move(f.functions);
    p.grammarOver = std::move(f.over);
    p.grammarUnder = std::move(f.under);
    p.config = f.config;
    resolve_problem(p);
    return p;
}

ExprPtr parse_expression(const std::string& text) {
    Parser parser(lex(text));
    return parser.whole_expr();
}

ExprPtr parse_property(const std::string& text, const LoudProblem& p) {
    return resolve_property(p, parse_expression(text));
}

}  // namespace loud
