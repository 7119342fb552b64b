#pragma once

#include <string>
#include <string_view>

namespace debunk::utf8 {

// Decodes UTF-8 into code points. Invalid sequences decode to U+FFFD, one per
// offending byte, so offsets stay well defined for any input.
std::u32string decode(std::string_view s);

std::string encode(std::u32string_view s);
std::string encode(char32_t c);

// Number of code points in s.
std::size_t length(std::string_view s);

// Code point substring [start, end).
std::string substr(std::string_view s, std::size_t start, std::size_t end);

bool is_space(char32_t c);

// Letters, digits and underscore, across Latin, Greek, Cyrillic and CJK
// ranges. Used for English word-boundary checks.
bool is_word_char(char32_t c);

// Simple case fold for Latin, Greek and Cyrillic, plus typographic apostrophe
// and quote unification. Leaves every other script untouched.
char32_t fold(char32_t c);
std::u32string fold(std::u32string_view s);

// ASCII/Latin lowercase of a UTF-8 string via fold().
std::string fold_utf8(std::string_view s);

}  // namespace debunk::utf8
