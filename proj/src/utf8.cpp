#include "zipfsignal/utf8.hpp"

#include "zipfsignal/errors.hpp"

namespace zipfsignal::utf8 {

char32_t decode(std::string_view s, std::size_t& i) {
  const auto fail = [&](const char* what) -> char32_t {
    throw DataError("invalid UTF-8 at byte " + std::to_string(i) + ": " + what);
  };
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };

  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }

  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return fail("bad leading byte");
  }
  if (i + static_cast<std::size_t>(len) > s.size()) return fail("truncated sequence");
  for (int k = 1; k < len; ++k) {
    const unsigned char b = byte(i + static_cast<std::size_t>(k));
    if ((b & 0xC0) != 0x80) return fail("bad continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) return fail("overlong encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) return fail("surrogate code point");
  if (cp > 0x10FFFF) return fail("code point out of range");
  i += static_cast<std::size_t>(len);
  return cp;
}

bool validate(std::string_view s, std::size_t* error_pos) {
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t at = i;
    try {
      decode(s, i);
    } catch (const DataError&) {
      if (error_pos) *error_pos = at;
      return false;
    }
  }
  return true;
}

std::size_t scalar_count(std::string_view s) {
  std::size_t i = 0, n = 0;
  while (i < s.size()) {
    decode(s, i);
    ++n;
  }
  return n;
}

std::string_view prefix_scalars(std::string_view s, std::size_t n) {
  std::size_t i = 0, seen = 0;
  while (i < s.size() && seen < n) {
    decode(s, i);
    ++seen;
  }
  return s.substr(0, i);
}

void append(std::string& out, char32_t cp) {
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

}  // namespace zipfsignal::utf8
