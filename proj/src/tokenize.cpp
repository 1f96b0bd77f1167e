#include <cctype>
#include <set>
#include <string>

#include "zipfsignal/lingproc.hpp"
#include "zipfsignal/utf8.hpp"

namespace zipfsignal::lingproc {

namespace {

bool is_ascii_alpha(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’' || cp == U'‘'; }

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v' || cp == U' ';
}

// Unicode punctuation the tokenizer should not treat as a word character.
bool is_unicode_punct(char32_t cp) {
  switch (cp) {
    case U'“': case U'”':  // curly double quotes
    case U'–': case U'—':  // dashes
    case U'…':                  // ellipsis
    case U'«': case U'»':
    case U'·': case U'•':
      return true;
    default:
      return false;
  }
}

bool is_word_char(char32_t cp) {
  if (is_ascii_alpha(cp) || is_ascii_digit(cp)) return true;
  // Non-ASCII letters (accented names etc.) count as word characters.
  return cp >= 0x80 && !is_unicode_punct(cp) && !is_space(cp) && !is_apostrophe(cp);
}

// Abbreviations whose trailing period belongs to the token, so the sentence
// splitter does not break after them.
const std::set<std::string>& abbreviations() {
  static const std::set<std::string> kAbbrev = {
      "mr",  "mrs",  "ms",  "dr",   "prof", "sen",  "rep",  "gov", "gen",
      "st",  "ave",  "inc", "ltd",  "co",   "corp", "vs",   "etc", "jan",
      "feb", "mar",  "apr", "jun",  "jul",  "aug",  "sep",  "sept", "oct",
      "nov", "dec",  "fig", "no",   "vol",  "pp",   "est",  "approx",
      "dept", "univ", "assn", "bros", "mt",  "capt", "col",  "lt",
  };
  return kAbbrev;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

// "U.S." style: alternating single letters and periods.
bool looks_like_initialism(std::string_view token) {
  if (token.size() < 2) return false;
  bool expect_letter = true;
  for (char ch : token) {
    if (expect_letter) {
      if (!std::isalpha(static_cast<unsigned char>(ch))) return false;
    } else {
      if (ch != '.') return false;
    }
    expect_letter = !expect_letter;
  }
  return true;  // ends with either a letter or a period
}

}  // namespace

bool is_number_token(std::string_view token) {
  if (token.empty() || !is_ascii_digit(static_cast<unsigned char>(token[0]))) {
    return false;
  }
  std::size_t i = 0;
  bool last_was_digit = false;
  while (i < token.size()) {
    const char ch = token[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      last_was_digit = true;
      ++i;
    } else if ((ch == '.' || ch == ',') && last_was_digit && i + 1 < token.size() &&
               std::isdigit(static_cast<unsigned char>(token[i + 1]))) {
      last_was_digit = false;
      ++i;
    } else if (ch == '%' && i + 1 == token.size()) {
      return true;
    } else {
      return false;
    }
  }
  return last_was_digit;
}

std::vector<Token> tokenize(std::string_view body) {
  std::vector<Token> tokens;
  const auto emit = [&](std::string text, bool space_before) {
    tokens.push_back(Token{std::move(text), space_before});
  };

  std::size_t i = 0;
  bool pending_space = true;  // document start behaves like a boundary
  while (i < body.size()) {
    std::size_t start = i;
    char32_t cp = utf8::decode(body, i);

    if (is_space(cp)) {
      pending_space = true;
      continue;
    }

    if (is_ascii_digit(cp)) {
      // Numeric token: digits with internal . or , between digits, optional
      // trailing %.
      std::size_t end = i;
      while (end < body.size()) {
        const char ch = body[end];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          ++end;
        } else if ((ch == '.' || ch == ',') && end + 1 < body.size() &&
                   std::isdigit(static_cast<unsigned char>(body[end + 1]))) {
          end += 2;
        } else if (ch == '%') {
          ++end;
          break;
        } else {
          break;
        }
      }
      emit(std::string(body.substr(start, end - start)), pending_space);
      pending_space = false;
      i = end;
      continue;
    }

    if (is_word_char(cp)) {
      std::string word(body.substr(start, i - start));
      while (i < body.size()) {
        std::size_t peek = i;
        const char32_t next = utf8::decode(body, peek);
        if (is_word_char(next)) {
          word.append(body.substr(i, peek - i));
          i = peek;
          continue;
        }
        if (is_apostrophe(next) && peek < body.size()) {
          std::size_t after = peek;
          const char32_t following = utf8::decode(body, after);
          if (is_word_char(following)) {  // internal apostrophe: don't, O'Brien
            word.push_back('\'');
            word.append(body.substr(peek, after - peek));
            i = after;
            continue;
          }
        }
        if (next == U'-' && peek < body.size()) {
          std::size_t after = peek;
          const char32_t following = utf8::decode(body, after);
          if (is_word_char(following)) {  // hyphenated word: per-cent
            word.push_back('-');
            word.append(body.substr(peek, after - peek));
            i = after;
            continue;
          }
        }
        if (next == U'.') {
          // Attach the period to dotted initialisms and known abbreviations.
          if (looks_like_initialism(word + ".")) {
            word.push_back('.');
            i = peek;
            continue;
          }
          if (abbreviations().count(to_lower_ascii(word))) {
            word.push_back('.');
            i = peek;
          }
        }
        break;
      }
      // Split a trailing possessive/contraction "'s" into its own token.
      if (word.size() > 2 && word[word.size() - 2] == '\'' &&
          (word.back() == 's' || word.back() == 'S')) {
        emit(word.substr(0, word.size() - 2), pending_space);
        emit("'s", false);
      } else {
        emit(std::move(word), pending_space);
      }
      pending_space = false;
      continue;
    }

    if (is_apostrophe(cp)) {
      // Leading apostrophe: "'s" at token start (e.g. after tokenizing), or
      // a bare quote character.
      if (i < body.size()) {
        std::size_t peek = i;
        const char32_t next = utf8::decode(body, peek);
        if ((next == U's' || next == U'S') &&
            (peek >= body.size() || [&] {
              std::size_t q = peek;
              return !is_word_char(utf8::decode(body, q));
            }())) {
          emit("'s", pending_space);
          pending_space = false;
          i = peek;
          continue;
        }
      }
      emit("'", pending_space);
      pending_space = false;
      continue;
    }

    // Single punctuation code point.
    emit(std::string(body.substr(start, i - start)), pending_space);
    pending_space = false;
  }
  return tokens;
}

}  // namespace zipfsignal::lingproc
