#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace obr {

/// One Braille cell as a 6-bit dot-presence mask. Bit i-1 carries dot i;
/// dots 1,2,3 run down the left column, 4,5,6 down the right.
struct BrailleCell {
    std::uint8_t mask = 0;

    constexpr bool has_dot(int dot) const { return ((mask >> (dot - 1)) & 1u) != 0; }
    constexpr bool empty() const { return mask == 0; }

    static constexpr BrailleCell from_dots(std::initializer_list<int> dots) {
        BrailleCell c;
        for (int d : dots) c.mask = static_cast<std::uint8_t>(c.mask | (1u << (d - 1)));
        return c;
    }

    /// Parses "101101"-style strings, leftmost character = dot 1.
    static constexpr std::optional<BrailleCell> from_dot_string(std::string_view s) {
        if (s.size() != 6) return std::nullopt;
        BrailleCell c;
        for (int i = 0; i < 6; ++i) {
            if (s[i] == '1')
                c.mask = static_cast<std::uint8_t>(c.mask | (1u << i));
            else if (s[i] != '0')
                return std::nullopt;
        }
        return c;
    }

    std::string dot_string() const {
        std::string s(6, '0');
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1u) s[i] = '1';
        return s;
    }

    auto operator<=>(const BrailleCell&) const = default;
};

inline constexpr BrailleCell kSpaceCell{0x00};
inline constexpr BrailleCell kErasureCell{0x3F};  // all six dots raised

}  // namespace obr
