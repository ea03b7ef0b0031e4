#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace cooc::utf8 {

// Decodes a UTF-8 string into code points. Throws CoocError(invalid_utf8)
// on malformed input (truncated sequences, overlong encodings, surrogates,
// values past U+10FFFF).
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);

// Number of code points in a valid UTF-8 string.
std::size_t count(std::string_view text);

// ASCII whitespace. '\n' is also the segment separator; tokenizers treat it
// as whitespace like the rest.
inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f';
}

// Simple lowercase fold covering ASCII and the Latin-1 supplement. Enough
// for type-identity folding on the European-language bitexts this tool is
// aimed at; folding never changes spans, only type identity.
char32_t fold(char32_t c);

std::string fold_string(std::string_view text);

}  // namespace cooc::utf8
