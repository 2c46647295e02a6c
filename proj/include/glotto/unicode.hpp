#pragma once

#include <string>
#include <string_view>

namespace glotto::unicode {

/// Strict UTF-8 decode. Rejects overlong forms, surrogates, codepoints
/// past U+10FFFF, and truncated sequences.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view cps);

/// True when cp has Unicode general category L* (letter).
bool is_letter(char32_t cp);

/// 1:1 lowercase mapping; identity for codepoints without one.
char32_t simple_lower(char32_t cp);

}  // namespace glotto::unicode
