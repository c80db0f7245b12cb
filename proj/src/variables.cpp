#include "spinfactor/variables.hpp"

#include <array>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace spinfactor {
namespace {

constexpr std::size_t kCapacity = 1u << 16;

struct Entry {
    std::string name;
    Relation relation = Relation::none;
};

struct Table {
    std::mutex mutex;
    std::unordered_map<std::string, VarIndex> by_name;
    std::unique_ptr<std::array<Entry, kCapacity>> entries = std::make_unique<std::array<Entry, kCapacity>>();
    std::atomic<std::size_t> size{0};

    Table() {
        add(std::string(kNilpotentName), Relation::square_zero);
        add(std::string(kImaginaryName), Relation::square_minus_one);
    }

    // Caller holds the mutex (or is the constructor).
    VarIndex add(std::string name, Relation rel) {
        const std::size_t idx = size.load(std::memory_order_relaxed);
        if (idx >= kCapacity) {
            throw std::length_error("variable table exhausted");
        }
        (*entries)[idx] = Entry{name, rel};
        by_name.emplace(std::move(name), static_cast<VarIndex>(idx));
        size.store(idx + 1, std::memory_order_release);
        return static_cast<VarIndex>(idx);
    }
};

Table& table() {
    static Table t;
    return t;
}

}  // namespace

bool Variables::valid_name(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char ch : name) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

VarIndex Variables::intern(std::string_view name) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    if (auto it = t.by_name.find(std::string(name)); it != t.by_name.end()) {
        return it->second;
    }
    if (!valid_name(name)) {
        throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
    }
    return t.add(std::string(name), Relation::none);
}

VarIndex Variables::declare(std::string_view name, Relation rel) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    if (auto it = t.by_name.find(std::string(name)); it != t.by_name.end()) {
        if ((*t.entries)[it->second].relation != rel) {
            throw std::invalid_argument("variable '" + std::string(name) +
                                        "' already declared with a different relation");
        }
        return it->second;
    }
    if (!valid_name(name)) {
        throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
    }
    return t.add(std::string(name), rel);
}

std::optional<VarIndex> Variables::find(std::string_view name) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    if (auto it = t.by_name.find(std::string(name)); it != t.by_name.end()) {
        return it->second;
    }
    return std::nullopt;
}

const std::string& Variables::name(VarIndex v) {
    auto& t = table();
    if (v >= t.size.load(std::memory_order_acquire)) {
        throw std::out_of_range("unknown variable index");
    }
    return (*t.entries)[v].name;
}

Relation Variables::relation(VarIndex v) {
    return (*table().entries)[v].relation;
}

}  // namespace spinfactor
