#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>

#include "zipfsignal/corpus.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/utf8.hpp"

namespace zipfsignal::corpus {

namespace {

bool iequals_ascii(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

// Removes <tag ...> constructs, comments, and the contents of script/style
// elements. Each removed construct becomes a single space so adjacent text
// does not fuse.
std::string strip_markup(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] != '<') {
      out.push_back(in[i++]);
      continue;
    }
    if (in.compare(i, 4, "<!--") == 0) {
      const auto end = in.find("-->", i + 4);
      i = end == std::string_view::npos ? in.size() : end + 3;
      out.push_back(' ');
      continue;
    }
    auto close = in.find('>', i);
    if (close == std::string_view::npos) {
      // Dangling '<': not a tag, keep the literal character.
      out.push_back(in[i++]);
      continue;
    }
    std::string_view tag = in.substr(i + 1, close - i - 1);
    // Drop the element body of script and style entirely.
    for (std::string_view name : {"script", "style"}) {
      if (tag.size() >= name.size() &&
          iequals_ascii(tag.substr(0, name.size()), name) &&
          (tag.size() == name.size() || tag[name.size()] == ' ' ||
           tag[name.size()] == '\t')) {
        std::size_t search = close + 1;
        while (true) {
          const auto lt = in.find('<', search);
          if (lt == std::string_view::npos) {
            close = in.size() - 1;
            break;
          }
          std::string_view rest = in.substr(lt);
          if (rest.size() > name.size() + 2 && rest[1] == '/' &&
              iequals_ascii(rest.substr(2, name.size()), name)) {
            const auto gt = in.find('>', lt);
            close = gt == std::string_view::npos ? in.size() - 1 : gt;
            break;
          }
          search = lt + 1;
        }
        break;
      }
    }
    i = close + 1;
    out.push_back(' ');
  }
  return out;
}

const std::unordered_map<std::string, char32_t>& named_entities() {
  static const std::unordered_map<std::string, char32_t> kEntities = {
      {"amp", U'&'},     {"lt", U'<'},      {"gt", U'>'},      {"quot", U'"'},
      {"apos", U'\''},   {"nbsp", U' '}, {"ndash", U'–'},
      {"mdash", U'—'}, {"hellip", U'…'}, {"lsquo", U'‘'},
      {"rsquo", U'’'}, {"ldquo", U'“'},  {"rdquo", U'”'},
      {"pound", U'£'}, {"euro", U'€'},   {"cent", U'¢'},
      {"yen", U'¥'},   {"copy", U'©'},   {"reg", U'®'},
      {"trade", U'™'}, {"sect", U'§'},   {"para", U'¶'},
      {"middot", U'·'}, {"laquo", U'«'}, {"raquo", U'»'},
      {"deg", U'°'},   {"plusmn", U'±'}, {"frac12", U'½'},
      {"times", U'×'}, {"divide", U'÷'}, {"bull", U'•'},
  };
  return kEntities;
}

// One pass of entity decoding. Unknown entities pass through untouched.
// Returns whether anything was decoded.
bool decode_entities_once(const std::string& in, std::string& out) {
  bool changed = false;
  out.clear();
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] != '&') {
      out.push_back(in[i++]);
      continue;
    }
    const auto semi = in.find(';', i + 1);
    if (semi == std::string::npos || semi - i > 12 || semi == i + 1) {
      out.push_back(in[i++]);
      continue;
    }
    const std::string_view name = std::string_view(in).substr(i + 1, semi - i - 1);
    char32_t cp = 0;
    bool ok = false;
    if (name[0] == '#') {
      std::size_t k = 1;
      int base = 10;
      if (k < name.size() && (name[k] == 'x' || name[k] == 'X')) {
        base = 16;
        ++k;
      }
      if (k < name.size()) {
        ok = true;
        unsigned long v = 0;
        for (; k < name.size() && ok; ++k) {
          const char ch = name[k];
          int digit;
          if (ch >= '0' && ch <= '9') {
            digit = ch - '0';
          } else if (base == 16 && ch >= 'a' && ch <= 'f') {
            digit = ch - 'a' + 10;
          } else if (base == 16 && ch >= 'A' && ch <= 'F') {
            digit = ch - 'A' + 10;
          } else {
            ok = false;
            break;
          }
          v = v * static_cast<unsigned long>(base) + static_cast<unsigned long>(digit);
          if (v > 0x10FFFF) ok = false;
        }
        cp = static_cast<char32_t>(v);
        if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
      }
    } else {
      const auto it = named_entities().find(std::string(name));
      if (it != named_entities().end()) {
        cp = it->second;
        ok = true;
      }
    }
    if (!ok) {
      out.push_back(in[i++]);
      continue;
    }
    utf8::append(out, cp);
    i = semi + 1;
    changed = true;
  }
  return changed;
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case U' ':  // no-break space
    case U' ': case U' ':
    case U'​':  // zero-width space
      return true;
    default:
      return cp >= U' ' && cp <= U' ';  // en/em/thin spaces
  }
}

std::string collapse_whitespace(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < in.size()) {
    const char32_t cp = utf8::decode(in, i);
    if (is_space_cp(cp) || (cp < 0x20)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    utf8::append(out, cp);
  }
  return out;
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  std::size_t bad = 0;
  if (!utf8::validate(raw, &bad)) {
    throw DataError("cannot decode article text: invalid UTF-8 at byte " +
                    std::to_string(bad));
  }
  std::string text = strip_markup(raw);
  std::string decoded;
  for (int pass = 0; pass < 4; ++pass) {
    if (!decode_entities_once(text, decoded)) break;
    text.swap(decoded);
  }
  return collapse_whitespace(text);
}

}  // namespace zipfsignal::corpus
