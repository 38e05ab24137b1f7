#pragma once

// Shared tokenizer. The heuristics, the offline linker and the hash embedder
// all tokenize through this single definition so their overlap semantics stay
// consistent.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kgnav {

namespace detail {

// Decodes one UTF-8 codepoint starting at pos. Invalid bytes are consumed one
// at a time and reported as U+FFFD so tokenization never fails.
inline char32_t decode_utf8(std::string_view s, std::size_t& pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    auto cont = [&](std::size_t i) {
        return i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        char32_t cp = (b0 & 0x1Fu) << 6 |
                      (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu);
        pos += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        char32_t cp = (b0 & 0x0Fu) << 12 |
                      (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[pos + 2]) & 0x3Fu);
        pos += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        char32_t cp = (b0 & 0x07u) << 18 |
                      (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 12 |
                      (static_cast<unsigned char>(s[pos + 2]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[pos + 3]) & 0x3Fu);
        pos += 4;
        return cp;
    }
    ++pos;
    return 0xFFFD;
}

// Approximate "Unicode letter or ASCII digit" test. Exact for ASCII and
// Latin-1; codepoints above U+00FF are treated as letters except the general
// and CJK punctuation blocks. Good enough for question text; the full Unicode
// category tables are out of scope.
inline bool is_word_codepoint(char32_t cp) {
    if (cp >= U'0' && cp <= U'9') return true;
    if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
    if (cp < 0xC0) return false;
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false;
    if (cp >= 0x3000 && cp <= 0x303F) return false;
    return true;
}

// ASCII and Latin-1 lowercasing; everything else passes through.
inline char32_t lower_codepoint(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace detail

// Lowercases and splits on every character outside letters and ASCII digits.
// Empty tokens are dropped.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = detail::decode_utf8(text, pos);
        if (detail::is_word_codepoint(cp)) {
            detail::append_utf8(current, detail::lower_codepoint(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

// ASCII-only lowercase, used for substring checks against IRIs and keywords.
inline std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 0x20);
    return out;
}

// Substring after the last '/' or '#'; the whole string when neither occurs.
inline std::string local_name(std::string_view iri) {
    const auto pos = iri.find_last_of("/#");
    if (pos == std::string_view::npos) return std::string(iri);
    return std::string(iri.substr(pos + 1));
}

} // namespace kgnav
