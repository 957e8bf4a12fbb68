#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chevlab {

enum class RootKind { A2, A3, C2, G2 };

inline constexpr std::array<RootKind, 4> all_root_kinds{RootKind::A2, RootKind::A3, RootKind::C2,
                                                        RootKind::G2};

inline std::string_view to_string(RootKind k)
{
    switch (k) {
    case RootKind::A2: return "A2";
    case RootKind::A3: return "A3";
    case RootKind::C2: return "C2";
    case RootKind::G2: return "G2";
    }
    return "?";
}

inline std::optional<RootKind> parse_root_kind(std::string_view s)
{
    for (auto k : all_root_kinds)
        if (to_string(k) == s)
            return k;
    if (s == "B2")
        return RootKind::C2;
    return std::nullopt;
}

inline int rank_of(RootKind k) { return k == RootKind::A3 ? 3 : 2; }

// Size of the faithful matrix representation used for each type.
inline int dim_of(RootKind k)
{
    switch (k) {
    case RootKind::A2: return 3;
    case RootKind::A3: return 4;
    case RootKind::C2: return 4;
    case RootKind::G2: return 7;
    }
    throw std::logic_error("dim_of: bad kind");
}

}  // namespace chevlab
