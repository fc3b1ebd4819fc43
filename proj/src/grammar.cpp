#include "loud/grammar.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "loud/printer.hpp"

namespace loud {

// ---------------------------------------------------------------------------
// Normalization

namespace {

ExprPtr with_args(const ExprPtr& e, std::vector<ExprPtr> args) {
    auto n = std::make_shared<Expr>(*e);
    n->args = std::move(args);
    return n;
}

ExprPtr normalize_connective(Op op, const std::vector<ExprPtr>& raw) {
    const bool isAnd = op == Op::And;
    std::vector<std::pair<std::string, ExprPtr>> items;
    std::vector<ExprPtr> stack(raw.rbegin(), raw.rend());
    while (!stack.empty()) {
        ExprPtr c = normalize(stack.back());
        stack.pop_back();
        if (c->op == op) {
            for (auto it = c->args.rbegin(); it != c->args.rend(); ++it) stack.push_back(*it);
            continue;
        }
        if (is_true_lit(*c)) {
            if (isAnd) continue;
            return mk_bool(true);
        }
        if (is_false_lit(*c)) {
            if (!isAnd) continue;
            return mk_bool(false);
        }
        items.emplace_back(to_text(*c), c);
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    items.erase(std::unique(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                items.end());
    if (items.empty()) return mk_bool(isAnd);
    if (items.size() == 1) return items[0].second;
    std::vector<ExprPtr> args;
    args.reserve(items.size());
    for (auto& [t, c] : items) args.push_back(std::move(c));
    return mk_nary(op, std::move(args));
}

}  // namespace

ExprPtr normalize(const ExprPtr& e) {
    switch (e->op) {
        case Op::Implies:
            return normalize_connective(Op::Or, {mk_unary(Op::Not, e->args[0]), e->args[1]});
        case Op::And:
        case Op::Or: return normalize_connective(e->op, e->args);
        case Op::Not: {
            ExprPtr c = normalize(e->args[0]);
            if (c->op == Op::Lit && c->lit.kind == TypeTag::Bool) return mk_bool(!c->lit.truthy());
            if (c->op == Op::Not) return c->args[0];
            if (c == e->args[0]) return e;
            return with_args(e, {c});
        }
        case Op::Neg: {
            ExprPtr c = normalize(e->args[0]);
            if (c->op == Op::Lit && c->lit.kind == TypeTag::Int) return mk_int(-c->lit.num);
            if (c == e->args[0]) return e;
            return with_args(e, {c});
        }
        default: {
            if (e->args.empty()) return e;
            std::vector<ExprPtr> args;
            bool changed = false;
            for (const auto& a : e->args) {
                args.push_back(normalize(a));
                changed |= args.back() != a;
            }
            return changed ? with_args(e, std::move(args)) : e;
        }
    }
}

std::string Property::text() const { return to_text(*ast); }

// ---------------------------------------------------------------------------
// Grammar expansion

namespace {

uint64_t sat_add(uint64_t a, uint64_t b) { return a + b < a ? UINT64_MAX : a + b; }
uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

uint64_t choose(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Exact while it fits; saturates otherwise.
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<uint64_t>(r);
}

bool has_template(const Expr& e) {
    if (e.op == Op::Hole || e.op == Op::ConjMacro || e.op == Op::DisjMacro) return true;
    for (const auto& a : e.args)
        if (has_template(*a)) return true;
    return false;
}

bool canonical_less(const std::pair<size_t, std::string>& a, const std::pair<size_t, std::string>& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
}

// Normalizes, deduplicates and sorts by (size, text).
std::vector<ExprPtr> canonical_list(const std::vector<ExprPtr>& xs) {
    std::vector<std::pair<std::pair<size_t, std::string>, ExprPtr>> items;
    std::unordered_set<std::string> seen;
    for (const auto& x : xs) {
        ExprPtr n = normalize(x);
        std::string t = to_text(*n);
        if (!seen.insert(t).second) continue;
        items.push_back({{expr_size(*n), std::move(t)}, n});
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    std::vector<ExprPtr> out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(std::move(it.second));
    return out;
}

template <class F>
void for_each_combination(int n, int k, F&& f) {
    if (k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

class Expander {
public:
    Expander(const Grammar& g, uint64_t cap) : g_(g), cap_(cap) {}

    const std::vector<ExprPtr>& lang(int r, int d) {
        auto key = std::make_pair(r, d);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<ExprPtr> raw;
        if (d > 0) {
            for (const auto& alt : g_.rules[r].alts) {
                auto xs = expand(alt, d - 1);
                raw.insert(raw.end(), xs.begin(), xs.end());
                if (raw.size() > cap_) throw too_large(g_.rules[r].name);
            }
        }
        return memo_[key] = canonical_list(raw);
    }

    std::vector<ExprPtr> expand(const ExprPtr& node, int d) {
        if (!has_template(*node)) return {node};
        if (node->op == Op::Hole) return lang(rule(*node), d);
        if (node->op == Op::ConjMacro || node->op == Op::DisjMacro) {
            const auto& elems = lang(rule(*node), d);
            const Op conn = node->op == Op::ConjMacro ? Op::And : Op::Or;
            std::vector<ExprPtr> out;
            uint64_t total = 0;
            for (int k = node->lo; k <= node->hi; ++k) total = sat_add(total, choose(elems.size(), k));
            if (total > cap_) throw too_large(node->name);
            for (int k = node->lo; k <= node->hi; ++k) {
                for_each_combination(static_cast<int>(elems.size()), k, [&](const std::vector<int>& c) {
                    std::vector<ExprPtr> args;
                    for (int i : c) args.push_back(elems[i]);
                    out.push_back(mk_nary(conn, std::move(args)));
                    return true;
                });
            }
            return out;
        }
        std::vector<std::vector<ExprPtr>> parts;
        uint64_t total = 1;
        for (const auto& a : node->args) {
            parts.push_back(expand(a, d));
            total = sat_mul(total, parts.back().size());
        }
        if (total > cap_) throw too_large("production");
        std::vector<ExprPtr> out;
        std::vector<size_t> idx(parts.size(), 0);
        if (total == 0) return out;
        while (true) {
            std::vector<ExprPtr> args;
            for (size_t i = 0; i < parts.size(); ++i) args.push_back(parts[i][idx[i]]);
            auto n = std::make_shared<Expr>(*node);
            n->args = std::move(args);
            out.push_back(n);
            size_t i = parts.size();
            while (i > 0 && ++idx[i - 1] == parts[i - 1].size()) idx[--i] = 0;
            if (i == 0) break;
        }
        return out;
    }

    // Recognizes a start symbol that is exactly one (possibly negated)
    // macro, reachable through single-alternative rules.
    std::optional<GrammarSpace> structured(int r, int d, bool negated) {
        if (d <= 0) return std::nullopt;
        const Rule& rule_ = g_.rules[r];
        if (rule_.alts.size() != 1) return std::nullopt;
        const ExprPtr& a = rule_.alts[0];
        if (a->op == Op::Hole) return structured(rule(*a), d - 1, negated);
        if (a->op == Op::Not && a->args[0]->op == Op::Hole) return structured(rule(*a->args[0]), d - 1, !negated);
        if (a->op == Op::Not && is_macro(*a->args[0])) return macro(*a->args[0], d - 1, !negated);
        if (is_macro(*a)) return macro(*a, d - 1, negated);
        return std::nullopt;
    }

private:
    static bool is_macro(const Expr& e) { return e.op == Op::ConjMacro || e.op == Op::DisjMacro; }

    std::optional<GrammarSpace> macro(const Expr& m, int d, bool negated) {
        GrammarSpace s;
        s.kind = GrammarSpace::Kind::Macro;
        s.connective = m.op == Op::ConjMacro ? Op::And : Op::Or;
        s.atoms = lang(rule(m), d);
        s.lo = m.lo;
        s.hi = m.hi;
        s.negated = negated;
        for (const auto& a : s.atoms)
            if (a->op == s.connective || (a->op == Op::Lit && a->lit.kind == TypeTag::Bool)) return std::nullopt;
        return s;
    }

    int rule(const Expr& e) const {
        int r = g_.find(e.name);
        if (r < 0) throw ValidationError("unknown nonterminal '" + e.name + "'", e.loc);
        return r;
    }

    GrammarTooLarge too_large(const std::string& what) const {
        return GrammarTooLarge("grammar expansion of '" + what + "' exceeds the enumeration cap of " +
                               std::to_string(cap_) + " candidates");
    }

    const Grammar& g_;
    uint64_t cap_;
    std::map<std::pair<int, int>, std::vector<ExprPtr>> memo_;
};

}  // namespace

uint64_t GrammarSpace::count() const {
    if (kind == Kind::List) return props.size();
    uint64_t total = 0;
    for (int k = lo; k <= hi; ++k) total = sat_add(total, choose(atoms.size(), k));
    return total;
}

ExprPtr GrammarSpace::macro_property(const std::vector<int>& chosen) const {
    std::vector<ExprPtr> args;
    args.reserve(chosen.size());
    for (int i : chosen) args.push_back(atoms[i]);
    ExprPtr inner = normalize(mk_nary(connective, std::move(args)));
    return negated ? normalize(mk_unary(Op::Not, inner)) : inner;
}

uint64_t GrammarSpace::macro_rank(const std::vector<int>& chosen) const {
    const uint64_t n = atoms.size();
    const uint64_t k = chosen.size();
    uint64_t rank = 0;
    for (int j = lo; j < static_cast<int>(k); ++j) rank = sat_add(rank, choose(n, j));
    int64_t prev = -1;
    for (uint64_t i = 0; i < k; ++i) {
        for (int64_t v = prev + 1; v < chosen[i]; ++v) rank = sat_add(rank, choose(n - 1 - v, k - 1 - i));
        prev = chosen[i];
    }
    return rank;
}

GrammarSpace expand_grammar(const Grammar& g, uint64_t cap) {
    Expander ex(g, cap);
    if (auto s = ex.structured(g.start, g.depthBound, false)) return *s;
    GrammarSpace s;
    s.kind = GrammarSpace::Kind::List;
    s.props = ex.lang(g.start, g.depthBound);
    return s;
}

void enumerate_properties(const GrammarSpace& space, uint64_t cap, const std::function<bool(const ExprPtr&)>& f) {
    const uint64_t n = space.count();
    if (n > cap)
        throw GrammarTooLarge("grammar derives " + (n == UINT64_MAX ? std::string("too many") : std::to_string(n)) +
                              " properties, above the enumeration cap of " + std::to_string(cap));
    if (space.kind == GrammarSpace::Kind::List) {
        for (const auto& p : space.props)
            if (!f(p)) return;
        return;
    }
    bool go = true;
    for (int k = space.lo; k <= space.hi && go; ++k) {
        for_each_combination(static_cast<int>(space.atoms.size()), k, [&](const std::vector<int>& c) {
            go = f(space.macro_property(c));
            return go;
        });
    }
}

std::vector<ExprPtr> enumerate_properties(const Grammar& g, uint64_t cap) {
    std::vector<ExprPtr> out;
    enumerate_properties(expand_grammar(g, cap), cap, [&](const ExprPtr& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

bool derives(const GrammarSpace& space, const ExprPtr& phi) {
    ExprPtr n = normalize(phi);
    const std::string text = to_text(*n);
    if (space.kind == GrammarSpace::Kind::List) {
        for (const auto& p : space.props)
            if (to_text(*p) == text) return true;
        return false;
    }
    ExprPtr inner = space.negated ? normalize(mk_unary(Op::Not, n)) : n;
    std::vector<ExprPtr> parts;
    if (inner->op == space.connective)
        parts = inner->args;
    else if (!(inner->op == Op::Lit && inner->lit.kind == TypeTag::Bool && inner->lit.truthy() == (space.connective == Op::And)))
        parts = {inner};
    std::vector<int> chosen;
    for (const auto& p : parts) {
        const std::string t = to_text(*p);
        int found = -1;
        for (size_t i = 0; i < space.atoms.size(); ++i)
            if (to_text(*space.atoms[i]) == t) found = static_cast<int>(i);
        if (found < 0) return false;
        chosen.push_back(found);
    }
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) return false;
    const int k = static_cast<int>(chosen.size());
    if (k < space.lo || k > space.hi) return false;
    return to_text(*space.macro_property(chosen)) == text;
}

// ---------------------------------------------------------------------------
// Synthesis

namespace {

// Lexicographically first k-subset of candidates whose coverage sets cover
// a target, searched with an exact bounded set-cover feasibility oracle.
class CoverSolver {
public:
    CoverSolver(const std::vector<Bitset>& cov, const Deadline* dl, SynthCounters& ctr)
        : cov_(cov), n_(cov.size()), dl_(dl), ctr_(ctr) {}

    // Smallest k <= hi with a cover, if any.
    std::optional<int> min_cover(const Bitset& target, int hi) {
        for (int k = 0; k <= hi; ++k)
            if (cover(0, k, target)) return k;
        return std::nullopt;
    }

    std::optional<std::vector<int>> lex_first(int k, const Bitset& target) {
        if (!feasible(0, k, target)) return std::nullopt;
        std::vector<int> chosen;
        Bitset u = target;
        size_t j = 0;
        for (int s = k; s > 0; --s) {
            bool found = false;
            for (size_t i = j; i + s <= n_; ++i) {
                Bitset rest = u;
                rest.subtract(cov_[i]);
                if (feasible(i + 1, s - 1, rest)) {
                    chosen.push_back(static_cast<int>(i));
                    u = std::move(rest);
                    j = i + 1;
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        return chosen;
    }

private:
    struct Key {
        size_t j;
        int s;
        Bitset u;
        bool operator==(const Key& o) const { return j == o.j && s == o.s && u == o.u; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const { return k.u.hash() * 31 + k.j * 7 + static_cast<size_t>(k.s); }
    };

    bool feasible(size_t j, int s, const Bitset& u) { return n_ - std::min(j, n_) >= static_cast<size_t>(s) && cover(j, s, u); }

    // Can `u` be covered by at most `s` candidates with index >= j?
    bool cover(size_t j, int s, const Bitset& u) {
        if (u.none()) return true;
        if (s == 0) return false;
        if ((++ctr_.nodes & 1023) == 0 && dl_) dl_->check();
        Key key{j, s, u};
        if (failed_.count(key)) return false;
        const size_t usize = u.count();
        size_t bestU = 0, bestCount = SIZE_MAX, maxCov = 0;
        std::vector<size_t> counts(u.size(), 0);
        for (size_t i = j; i < n_; ++i) {
            Bitset hit = cov_[i] & u;
            maxCov = std::max(maxCov, hit.count());
            hit.for_each([&](size_t x) { ++counts[x]; });
        }
        u.for_each([&](size_t x) {
            if (counts[x] < bestCount) {
                bestCount = counts[x];
                bestU = x;
            }
        });
        bool ok = false;
        if (bestCount > 0 && maxCov * static_cast<size_t>(s) >= usize) {
            for (size_t i = j; i < n_ && !ok; ++i) {
                if (!cov_[i].test(bestU)) continue;
                Bitset rest = u;
                rest.subtract(cov_[i]);
                ok = cover(j, s - 1, rest);
            }
        }
        if (!ok) failed_.insert(std::move(key));
        return ok;
    }

    const std::vector<Bitset>& cov_;
    size_t n_;
    const Deadline* dl_;
    SynthCounters& ctr_;
    std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

PropertySpace::PropertySpace(GrammarSpace g, const Universe& u, uint64_t cap) : g_(std::move(g)), u_(&u) {
    const auto& items = g_.kind == GrammarSpace::Kind::List ? g_.props : g_.atoms;
    if (g_.kind == GrammarSpace::Kind::List && items.size() > cap)
        throw GrammarTooLarge("grammar derives " + std::to_string(items.size()) + " properties, above the cap");
    const double bits = static_cast<double>(items.size()) * static_cast<double>(u.num_examples());
    if (bits > 4e9) throw GrammarTooLarge("grammar too large to materialize over the example domain");
    truths_.reserve(items.size());
    for (const auto& p : items) truths_.push_back(std::make_shared<const Bitset>(u.interp(*p)));
}

Property PropertySpace::make(ExprPtr ast) const {
    ExprPtr n = normalize(ast);
    Property p;
    p.truth = std::make_shared<const Bitset>(u_->interp(*n));
    p.ast = std::move(n);
    return p;
}

Property PropertySpace::top() const {
    return Property{mk_bool(true), std::make_shared<const Bitset>(u_->num_examples(), true), 0};
}

Property PropertySpace::bottom() const {
    return Property{mk_bool(false), std::make_shared<const Bitset>(u_->num_examples(), false), 0};
}

std::optional<Property> PropertySpace::synthesize(const std::vector<uint64_t>& pos, const std::vector<uint64_t>& neg,
                                                  const Deadline* deadline) const {
    ++counters.calls;
    if (g_.kind == GrammarSpace::Kind::List) return synth_list(pos, neg, deadline);
    return synth_macro(pos, neg, deadline);
}

std::optional<Property> PropertySpace::synth_list(const std::vector<uint64_t>& pos, const std::vector<uint64_t>& neg,
                                                  const Deadline* deadline) const {
    for (size_t i = 0; i < g_.props.size(); ++i) {
        if ((++counters.nodes & 4095) == 0 && deadline) deadline->check();
        const Bitset& t = *truths_[i];
        bool ok = true;
        for (uint64_t e : pos)
            if (!t.test(e)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (uint64_t e : neg)
            if (t.test(e)) {
                ok = false;
                break;
            }
        if (ok) return Property{g_.props[i], truths_[i], i};
    }
    return std::nullopt;
}

std::optional<Property> PropertySpace::synth_macro(const std::vector<uint64_t>& pos0, const std::vector<uint64_t>& neg0,
                                                   const Deadline* deadline) const {
    // A negated macro accepts what the inner one rejects.
    const auto& pos = g_.negated ? neg0 : pos0;
    const auto& neg = g_.negated ? pos0 : neg0;
    const bool isAnd = g_.connective == Op::And;
    // Disjunction: atoms must reject every negative; cover the positives.
    // Conjunction: atoms must accept every positive; cover the negatives.
    const auto& mustHold = isAnd ? pos : neg;
    const auto& target = isAnd ? neg : pos;
    const bool holdValue = isAnd;

    std::vector<int> valid;
    for (size_t i = 0; i < g_.atoms.size(); ++i) {
        const Bitset& t = *truths_[i];
        bool ok = true;
        for (uint64_t e : mustHold)
            if (t.test(e) != holdValue) {
                ok = false;
                break;
            }
        if (ok) valid.push_back(static_cast<int>(i));
    }
    std::vector<Bitset> cov;
    cov.reserve(valid.size());
    for (int i : valid) {
        Bitset c(target.size());
        const Bitset& t = *truths_[i];
        for (size_t k = 0; k < target.size(); ++k)
            if (t.test(target[k]) != isAnd) c.set(k);
        cov.push_back(std::move(c));
    }
    const Bitset full(target.size(), true);

    // Observational equivalence: keep the lowest-ranked atom per coverage.
    std::vector<int> reps;
    std::vector<Bitset> repCov;
    {
        std::unordered_set<Bitset, BitsetHash> seen;
        for (size_t i = 0; i < valid.size(); ++i)
            if (seen.insert(cov[i]).second) {
                reps.push_back(valid[i]);
                repCov.push_back(cov[i]);
            }
    }
    CoverSolver repSolver(repCov, deadline, counters);
    auto c = repSolver.min_cover(full, g_.hi);
    if (!c) return std::nullopt;

    std::optional<std::vector<int>> pick;
    std::vector<int> chosen;
    if (*c >= g_.lo) {
        pick = repSolver.lex_first(*c, full);
        if (pick)
            for (int i : *pick) chosen.push_back(reps[i]);
    } else {
        // Padding is needed to reach the lower arity; search all valid atoms.
        CoverSolver all(cov, deadline, counters);
        pick = all.lex_first(g_.lo, full);
        if (pick)
            for (int i : *pick) chosen.push_back(valid[i]);
    }
    if (!pick) return std::nullopt;

    Bitset truth(u_->num_examples(), isAnd);
    for (int i : chosen) {
        if (isAnd)
            truth &= *truths_[i];
        else
            truth |= *truths_[i];
    }
    if (g_.negated) truth = ~truth;
    return Property{g_.macro_property(chosen), std::make_shared<const Bitset>(std::move(truth)), g_.macro_rank(chosen)};
}

}  // namespace loud
