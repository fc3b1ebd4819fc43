#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace loud {

// Largest magnitude an integer may take before evaluation faults.
inline constexpr int64_t kIntBound = 2147483647;

enum class TypeTag : uint8_t { Int, Bool, List };

struct Type {
    TypeTag tag = TypeTag::Int;
    TypeTag elem = TypeTag::Int;  // element type when tag == List

    static Type integer() { return {TypeTag::Int, TypeTag::Int}; }
    static Type boolean() { return {TypeTag::Bool, TypeTag::Int}; }
    static Type list_of(TypeTag e) { return {TypeTag::List, e}; }

    bool operator==(const Type& o) const {
        return tag == o.tag && (tag != TypeTag::List || elem == o.elem);
    }
    bool operator!=(const Type& o) const { return !(*this == o); }
    std::string str() const;
};

struct Value {
    TypeTag kind = TypeTag::Int;
    int64_t num = 0;           // integer payload, or 0/1 for booleans
    std::vector<Value> items;  // list payload

    static Value integer(int64_t v) { return Value{TypeTag::Int, v, {}}; }
    static Value boolean(bool b) { return Value{TypeTag::Bool, b ? 1 : 0, {}}; }
    static Value list(std::vector<Value> xs) { return Value{TypeTag::List, 0, std::move(xs)}; }

    bool truthy() const { return num != 0; }

    // Lists compare by length first, then lexicographically.
    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }
    bool operator<(const Value& o) const;

    std::string str() const;
};

struct Domain {
    enum class Kind : uint8_t { IntRange, Explicit, List };

    Kind kind = Kind::IntRange;
    int64_t lo = 0, hi = 0;
    std::vector<Value> values;     // Explicit: sorted, duplicate-free
    std::shared_ptr<Domain> elem;  // List element domain
    int minLen = 0, maxLen = 0;
    bool chars = false;            // integer members written as 'c'

    static Domain range(int64_t lo, int64_t hi);
    static Domain explicit_set(std::vector<Value> vs);
    static Domain booleans();
    static Domain list_of(Domain elem, int minLen, int maxLen);

    Type type() const;
    uint64_t size() const;
    // All members in ascending order; lists by length, then lexicographic.
    std::vector<Value> enumerate() const;
    bool contains(const Value& v) const;
    std::string str() const;
    // Renders a member, honoring `chars`.
    std::string show(const Value& v) const;
};

}  // namespace loud
