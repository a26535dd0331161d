#include "obr/codec.hpp"

#include <algorithm>

namespace obr {

void CodeTable::add(BrailleCell cell, std::string grapheme) {
    if (cell.empty())
        throw BadTableFile("code 000000 is structural space and cannot be mapped");
    if (entries.contains(cell.mask))
        aliases[cell.mask].push_back(std::move(grapheme));
    else
        entries.emplace(cell.mask, std::move(grapheme));
}

const std::string* CodeTable::find(BrailleCell cell) const {
    auto it = entries.find(cell.mask);
    return it == entries.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, BrailleCell>> CodeTable::grapheme_codes() const {
    std::vector<std::pair<std::string, BrailleCell>> out;
    for (const auto& [mask, g] : entries) out.emplace_back(g, BrailleCell{mask});
    for (const auto& [mask, gs] : aliases)
        for (const auto& g : gs) out.emplace_back(g, BrailleCell{mask});
    return out;
}

CodeTable english_grade1_table() {
    CodeTable t;
    t.language = "en";
    static constexpr struct {
        char letter;
        std::uint8_t mask;
    } kLetters[] = {
        {'a', 0x01}, {'b', 0x03}, {'c', 0x09}, {'d', 0x19}, {'e', 0x11}, {'f', 0x0B},
        {'g', 0x1B}, {'h', 0x13}, {'i', 0x0A}, {'j', 0x1A}, {'k', 0x05}, {'l', 0x07},
        {'m', 0x0D}, {'n', 0x1D}, {'o', 0x15}, {'p', 0x0F}, {'q', 0x1F}, {'r', 0x17},
        {'s', 0x0E}, {'t', 0x1E}, {'u', 0x25}, {'v', 0x27}, {'w', 0x3A}, {'x', 0x2D},
        {'y', 0x3D}, {'z', 0x35},
    };
    for (const auto& e : kLetters) t.add(BrailleCell{e.mask}, std::string(1, e.letter));
    return t;
}

CodeTable malayalam_vowel_table() {
    CodeTable t;
    t.language = "ml";
    // As printed, in column reading order; one code is shared by two vowels
    // and is preserved as primary + alias rather than silently dropped.
    static constexpr struct {
        const char* grapheme;
        const char* dots;
    } kVowels[] = {
        {"അ", "100000"}, {"ആ", "010110"}, {"ഇ", "011000"}, {"ഈ", "000110"},
        {"ഉ", "100011"}, {"ഊ", "101101"}, {"എ", "001001"}, {"ഏ", "100100"},
        {"ഒ", "010010"}, {"ഐ", "010010"}, {"ഓ", "100110"}, {"ഔ", "011001"},
    };
    for (const auto& e : kVowels) t.add(*BrailleCell::from_dot_string(e.dots), e.grapheme);
    return t;
}

CodeTable parse_code_table(std::string_view text, std::string language) {
    CodeTable t;
    t.language = std::move(language);
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool saw_entry = false;
    while (start <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::string_view trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
            trimmed.remove_prefix(1);
        if (trimmed.empty() || trimmed.front() == '#') {
            if (start > text.size()) break;
            continue;
        }

        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw BadTableFile("line " + std::to_string(line_no) + ": missing TAB separator");
        const auto cell = BrailleCell::from_dot_string(line.substr(0, tab));
        if (!cell)
            throw BadTableFile("line " + std::to_string(line_no) +
                               ": code must be six characters of 0/1");
        std::string_view grapheme = line.substr(tab + 1);
        if (grapheme.empty())
            throw BadTableFile("line " + std::to_string(line_no) + ": empty grapheme");
        if (cell->empty())
            throw BadTableFile("line " + std::to_string(line_no) +
                               ": code 000000 is reserved for space");
        utf8_decode(grapheme);  // validate encoding
        t.add(*cell, std::string(grapheme));
        saw_entry = true;
        if (start > text.size()) break;
    }
    if (!saw_entry) throw BadTableFile("no entries found");
    return t;
}

LookupResult lookup(BrailleCell cell, const CodeTable& table) {
    if (cell.empty()) return {LookupResult::Kind::Space, " ", {}};
    if (const std::string* g = table.find(cell)) {
        auto al = table.aliases.find(cell.mask);
        if (al != table.aliases.end() && !al->second.empty())
            return {LookupResult::Kind::Ambiguous, *g, al->second};
        return {LookupResult::Kind::Grapheme, *g, {}};
    }
    if (cell == kErasureCell) return {LookupResult::Kind::Erasure, {}, {}};
    return {LookupResult::Kind::Unknown, {}, {}};
}

char32_t to_unicode_braille(BrailleCell cell) {
    return static_cast<char32_t>(0x2800 + cell.mask);
}

std::string utf8_encode(char32_t cp) {
    std::string out;
    const auto c = static_cast<std::uint32_t>(cp);
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
    return out;
}

std::u32string utf8_decode(std::string_view text) {
    std::u32string out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b0 = static_cast<std::uint8_t>(text[i]);
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            throw Error("invalid UTF-8 byte at offset " + std::to_string(i));
        }
        if (i + len > text.size()) throw Error("truncated UTF-8 sequence");
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<std::uint8_t>(text[i + k]);
            if ((b & 0xC0) != 0x80) throw Error("invalid UTF-8 continuation byte");
            cp = (cp << 6) | (b & 0x3F);
        }
        // reject overlong encodings and surrogates
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
            throw Error("invalid UTF-8 encoding");
        out += cp;
        i += len;
    }
    return out;
}

DecodedDocument decode_lines(const std::vector<std::vector<BrailleCell>>& lines,
                             const CodeTable& table) {
    DecodedDocument doc;
    doc.lines.reserve(lines.size());
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string text;
        for (std::size_t ci = 0; ci < lines[li].size(); ++ci) {
            const BrailleCell cell = lines[li][ci];
            const LookupResult r = lookup(cell, table);
            switch (r.kind) {
                case LookupResult::Kind::Space:
                    text += ' ';
                    break;
                case LookupResult::Kind::Grapheme:
                    text += r.grapheme;
                    break;
                case LookupResult::Kind::Erasure:
                    text += utf8_encode(to_unicode_braille(kErasureCell));
                    doc.diagnostics.push_back(
                        {li, ci, DecodeDiagnostic::Kind::Erasure, "erasure cell (all six dots)"});
                    break;
                case LookupResult::Kind::Unknown:
                    text += '?';
                    doc.diagnostics.push_back({li, ci, DecodeDiagnostic::Kind::UnknownCode,
                                               "code " + cell.dot_string() + " not in table \"" +
                                                   table.language + "\""});
                    break;
                case LookupResult::Kind::Ambiguous: {
                    text += r.grapheme;
                    std::string alts;
                    for (const auto& a : r.alternates) {
                        if (!alts.empty()) alts += ", ";
                        alts += a;
                    }
                    doc.diagnostics.push_back({li, ci, DecodeDiagnostic::Kind::AmbiguousCode,
                                               "code " + cell.dot_string() + " maps to \"" +
                                                   r.grapheme + "\"; alternates: " + alts});
                    break;
                }
            }
        }
        doc.lines.push_back(std::move(text));
    }
    return doc;
}

}  // namespace obr
