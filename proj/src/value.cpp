#include "loud/value.hpp"

#include <algorithm>
#include <stdexcept>

namespace loud {

std::string Type::str() const {
    auto name = [](TypeTag t) {
        switch (t) {
            case TypeTag::Int: return "int";
            case TypeTag::Bool: return "bool";
            case TypeTag::List: return "list";
        }
        return "?";
    };
    if (tag == TypeTag::List) return std::string("[") + name(elem) + "]";
    return name(tag);
}

bool Value::operator==(const Value& o) const {
    if (kind != o.kind) return false;
    if (kind != TypeTag::List) return num == o.num;
    return items == o.items;
}

bool Value::operator<(const Value& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind != TypeTag::List) return num < o.num;
    if (items.size() != o.items.size()) return items.size() < o.items.size();
    return std::lexicographical_compare(items.begin(), items.end(), o.items.begin(), o.items.end());
}

std::string Value::str() const {
    switch (kind) {
        case TypeTag::Int: return std::to_string(num);
        case TypeTag::Bool: return num ? "true" : "false";
        case TypeTag::List: {
            std::string s = "[";
            for (size_t i = 0; i < items.size(); ++i) {
                if (i) s += ", ";
                s += items[i].str();
            }
            return s + "]";
        }
    }
    return "?";
}

Domain Domain::range(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    Domain d;
    d.kind = Kind::IntRange;
    d.lo = lo;
    d.hi = hi;
    return d;
}

Domain Domain::explicit_set(std::vector<Value> vs) {
    if (vs.empty()) throw std::invalid_argument("empty explicit domain");
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (const auto& v : vs)
        if (v.kind != vs.front().kind) throw std::invalid_argument("mixed-type explicit domain");
    Domain d;
    d.kind = Kind::Explicit;
    d.values = std::move(vs);
    return d;
}

Domain Domain::booleans() { return explicit_set({Value::boolean(false), Value::boolean(true)}); }

Domain Domain::list_of(Domain elem, int minLen, int maxLen) {
    if (minLen < 0 || minLen > maxLen) throw std::invalid_argument("bad list length range");
    if (elem.kind == Kind::List) throw std::invalid_argument("nested list domains are not supported");
    Domain d;
    d.kind = Kind::List;
    d.elem = std::make_shared<Domain>(std::move(elem));
    d.minLen = minLen;
    d.maxLen = maxLen;
    return d;
}

Type Domain::type() const {
    switch (kind) {
        case Kind::IntRange: return Type::integer();
        case Kind::Explicit: return values.front().kind == TypeTag::Bool ? Type::boolean() : Type::integer();
        case Kind::List: return Type::list_of(elem->type().tag);
    }
    return Type::integer();
}

uint64_t Domain::size() const {
    switch (kind) {
        case Kind::IntRange: return static_cast<uint64_t>(hi - lo + 1);
        case Kind::Explicit: return values.size();
        case Kind::List: {
            uint64_t n = elem->size(), total = 0, pw = 1;
            for (int len = 0; len <= maxLen; ++len) {
                if (len >= minLen) total += pw;
                pw *= n;
            }
            return total;
        }
    }
    return 0;
}

std::vector<Value> Domain::enumerate() const {
    std::vector<Value> out;
    switch (kind) {
        case Kind::IntRange:
            for (int64_t v = lo; v <= hi; ++v) out.push_back(Value::integer(v));
            break;
        case Kind::Explicit: out = values; break;
        case Kind::List: {
            auto base = elem->enumerate();
            for (int len = minLen; len <= maxLen; ++len) {
                std::vector<size_t> idx(len, 0);
                while (true) {
                    std::vector<Value> xs;
                    xs.reserve(len);
                    for (size_t i : idx) xs.push_back(base[i]);
                    out.push_back(Value::list(std::move(xs)));
                    int k = len - 1;
                    while (k >= 0 && ++idx[k] == base.size()) idx[k--] = 0;
                    if (k < 0) break;
                }
            }
            break;
        }
    }
    return out;
}

bool Domain::contains(const Value& v) const {
    switch (kind) {
        case Kind::IntRange: return v.kind == TypeTag::Int && v.num >= lo && v.num <= hi;
        case Kind::Explicit: return std::binary_search(values.begin(), values.end(), v);
        case Kind::List: {
            if (v.kind != TypeTag::List) return false;
            int n = static_cast<int>(v.items.size());
            if (n < minLen || n > maxLen) return false;
            return std::all_of(v.items.begin(), v.items.end(),
                               [&](const Value& x) { return elem->contains(x); });
        }
    }
    return false;
}

std::string Domain::str() const {
    switch (kind) {
        case Kind::IntRange: return "int[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
        case Kind::Explicit: {
            if (type().tag == TypeTag::Bool) return "bool";
            std::string s = "{";
            for (size_t i = 0; i < values.size(); ++i) {
                if (i) s += ", ";
                s += show(values[i]);
            }
            return s + "}";
        }
        case Kind::List:
            return "list(" + elem->str() + ", " + std::to_string(minLen) + ".." + std::to_string(maxLen) +
                   ")";
    }
    return "?";
}

std::string Domain::show(const Value& v) const {
    if (v.kind == TypeTag::List && elem) {
        std::string s = "[";
        for (size_t i = 0; i < v.items.size(); ++i) {
            if (i) s += ", ";
            s += elem->show(v.items[i]);
        }
        return s + "]";
    }
    if (chars && v.kind == TypeTag::Int && v.num > 32 && v.num < 127 && v.num != '\'' && v.num != '\\')
        return std::string("'") + static_cast<char>(v.num) + "'";
    return v.str();
}

}  // namespace loud
