#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace zipfsignal::utf8 {

// Decodes the code point starting at byte offset i and advances i past it.
// Throws DataError on malformed input (truncated, overlong, surrogate,
// out-of-range).
char32_t decode(std::string_view s, std::size_t& i);

// True when s is well-formed UTF-8. error_pos (optional) receives the byte
// offset of the first offending sequence.
bool validate(std::string_view s, std::size_t* error_pos = nullptr);

// Number of Unicode scalar values in well-formed UTF-8.
std::size_t scalar_count(std::string_view s);

// The prefix holding at most n scalar values (never splits a sequence).
std::string_view prefix_scalars(std::string_view s, std::size_t n);

void append(std::string& out, char32_t cp);

}  // namespace zipfsignal::utf8
