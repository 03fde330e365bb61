#pragma once

#include "pdbc/errors.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace pdbc {

enum class MethodKind { LLEM, EdmFull, EdmReduced, EdmI, EdmII, VHM };

inline constexpr std::array<MethodKind, 6> all_methods{
    MethodKind::LLEM, MethodKind::EdmFull, MethodKind::EdmReduced,
    MethodKind::EdmI, MethodKind::EdmII,   MethodKind::VHM,
};

/// Condition at x = 1. Neumann takes its traction from the problem.
struct RightBoundary {
    enum class Type { Neumann, Dirichlet };

    Type type = Type::Neumann;
    double value = 0.0;  ///< prescribed u(1) for Dirichlet

    static constexpr RightBoundary neumann() { return RightBoundary{Type::Neumann, 0.0}; }
    static constexpr RightBoundary dirichlet(double u1) { return RightBoundary{Type::Dirichlet, u1}; }

    [[nodiscard]] constexpr bool is_dirichlet() const noexcept { return type == Type::Dirichlet; }
};

struct MethodSpec {
    MethodKind kind = MethodKind::VHM;
    RightBoundary right_bc = RightBoundary::neumann();

    [[nodiscard]] constexpr bool is_edm() const noexcept
    {
        return kind == MethodKind::EdmFull || kind == MethodKind::EdmReduced || kind == MethodKind::EdmI ||
               kind == MethodKind::EdmII;
    }
};

/// Column label used in CSV headers.
inline std::string_view to_string(MethodKind kind)
{
    switch (kind) {
        case MethodKind::LLEM: return "LLEM";
        case MethodKind::EdmFull: return "EDM_full";
        case MethodKind::EdmReduced: return "EDM";
        case MethodKind::EdmI: return "EDM_I";
        case MethodKind::EdmII: return "EDM_II";
        case MethodKind::VHM: return "VHM";
    }
    return "unknown";
}

/// Accepts the CSV labels as well as lower-case CLI spellings (llem, edm, edm-full, edm-i, edm-ii, vhm).
inline std::optional<MethodKind> parse_method(std::string_view text)
{
    std::string s(text);
    for (auto& c : s) {
        c = (c == '_') ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (s == "llem") return MethodKind::LLEM;
    if (s == "edm-full") return MethodKind::EdmFull;
    if (s == "edm" || s == "edm-reduced") return MethodKind::EdmReduced;
    if (s == "edm-i" || s == "edm1") return MethodKind::EdmI;
    if (s == "edm-ii" || s == "edm2") return MethodKind::EdmII;
    if (s == "vhm") return MethodKind::VHM;
    return std::nullopt;
}

}  // namespace pdbc
