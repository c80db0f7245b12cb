#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spinfactor {

/// Quotient rule attached to a generator: none, g^2 = 0, or g^2 = -1.
enum class Relation : std::uint8_t { none, square_zero, square_minus_one };

using VarIndex = std::uint32_t;

/// Process-wide, append-only table of named indeterminates.
///
/// Entries never change once published, so `name()` and `relation()` are
/// lock-free and safe to call from worker threads. The names `lambda`
/// (lambda^2 = 0) and `i` (i^2 = -1) are reserved at startup.
class Variables {
public:
    /// Returns the index of `name`, registering it as a free generator if new.
    static VarIndex intern(std::string_view name);

    /// Registers `name` with `rel`; throws std::invalid_argument if the name
    /// already exists with a different relation.
    static VarIndex declare(std::string_view name, Relation rel);

    static std::optional<VarIndex> find(std::string_view name);
    static const std::string& name(VarIndex v);
    static Relation relation(VarIndex v);

    static bool valid_name(std::string_view name);
};

inline constexpr std::string_view kNilpotentName = "lambda";
inline constexpr std::string_view kImaginaryName = "i";

}  // namespace spinfactor
