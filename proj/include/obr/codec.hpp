#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "obr/cell.hpp"
#include "obr/errors.hpp"

namespace obr {

/// Lookup table from 6-bit cell codes to graphemes for one language.
/// A code seen more than once keeps its first grapheme as the primary entry;
/// later graphemes become aliases and surface as Ambiguous on lookup.
/// Code 000000 is structural space and never appears as an entry.
struct CodeTable {
    std::string language;
    std::map<std::uint8_t, std::string> entries;
    std::map<std::uint8_t, std::vector<std::string>> aliases;

    void add(BrailleCell cell, std::string grapheme);
    const std::string* find(BrailleCell cell) const;

    /// Reverse lookup over entries and aliases; used by the synthesizer.
    std::vector<std::pair<std::string, BrailleCell>> grapheme_codes() const;
};

/// The 26 standard Grade-1 letter codes, 'a'..'z'.
CodeTable english_grade1_table();

/// The Malayalam vowel codes as printed, including the duplicated code
/// shared by two vowels (kept as primary + alias).
CodeTable malayalam_vowel_table();

/// Parses the plain-text table format: one "<6 chars of 0/1><TAB><grapheme>"
/// entry per line, "#" comments, UTF-8. Duplicate codes become aliases.
/// Throws BadTableFile on malformed lines.
CodeTable parse_code_table(std::string_view text, std::string language);

struct LookupResult {
    enum class Kind { Grapheme, Space, Erasure, Unknown, Ambiguous };
    Kind kind = Kind::Unknown;
    std::string grapheme;                 // primary grapheme for Grapheme/Ambiguous
    std::vector<std::string> alternates;  // Ambiguous only
};

/// Total lookup: 000000 -> Space, 111111 -> Erasure (unless mapped),
/// aliased codes -> Ambiguous, unmapped -> Unknown.
LookupResult lookup(BrailleCell cell, const CodeTable& table);

/// Code point U+2800 + mask (the Braille Patterns block shares our bit order).
char32_t to_unicode_braille(BrailleCell cell);

std::string utf8_encode(char32_t cp);
std::u32string utf8_decode(std::string_view text);  // throws Error on invalid UTF-8

struct DecodeDiagnostic {
    enum class Kind { UnknownCode, Erasure, AmbiguousCode };
    std::size_t line = 0;  // indices into the decoded line list
    std::size_t col = 0;
    Kind kind = Kind::UnknownCode;
    std::string detail;
};

struct DecodedDocument {
    std::vector<std::string> lines;
    std::vector<DecodeDiagnostic> diagnostics;
};

/// Decodes cell lines to text: Space -> " ", Erasure -> U+283F, Unknown -> "?",
/// Ambiguous -> primary grapheme; all but plain graphemes and spaces also
/// produce a diagnostic.
DecodedDocument decode_lines(const std::vector<std::vector<BrailleCell>>& lines,
                             const CodeTable& table);

}  // namespace obr
