#include <cctype>
#include <string>

#include "lexicon_data.hpp"
#include "zipfsignal/lingproc.hpp"

namespace zipfsignal::lingproc {

namespace {

bool is_vowel(char ch) {
  return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool ascii_lower_alpha(const std::string& w) {
  for (char ch : w) {
    if (ch < 'a' || ch > 'z') return false;
  }
  return !w.empty();
}

// "dropp" -> "drop". Doubled l/s/z stay (call, pass, buzz).
bool undoable_double(const std::string& stem) {
  if (stem.size() < 3) return false;
  const char last = stem[stem.size() - 1];
  if (last != stem[stem.size() - 2]) return false;
  if (is_vowel(last) || last == 'l' || last == 's' || last == 'z') return false;
  return true;
}

// Resolves the stem left after removing -ed/-ing: try the stem itself, the
// undoubled stem and stem+"e" against the lemma lexicons, falling back to
// heuristics when none is known.
std::string resolve_stem(const std::string& stem) {
  if (detail::known_lemma(stem)) return stem;
  if (undoable_double(stem)) {
    const std::string undoubled = stem.substr(0, stem.size() - 1);
    if (detail::known_lemma(undoubled)) return undoubled;
  }
  const std::string with_e = stem + "e";
  if (detail::known_lemma(with_e)) return with_e;
  if (undoable_double(stem)) return stem.substr(0, stem.size() - 1);
  return stem;
}

// One suffix-stripping pass over a lowercase word.
std::string strip_suffix_once(const std::string& w) {
  if (w.size() < 4 || !ascii_lower_alpha(w)) return w;

  if (ends_with(w, "ies") && w.size() >= 5) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (ends_with(w, "ied") && w.size() >= 5) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (ends_with(w, "sses")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends_with(w, "es")) {
    const std::string stem_es = w.substr(0, w.size() - 2);
    const std::string stem_s = w.substr(0, w.size() - 1);
    if (detail::known_lemma(stem_s)) return stem_s;    // rises -> rise
    if (detail::known_lemma(stem_es)) return stem_es;  // watches -> watch
    // boxes -> box, goes -> go; a bare s-stem like "ris" is never right.
    if (ends_with(stem_es, "ch") || ends_with(stem_es, "sh") ||
        ends_with(stem_es, "x") || ends_with(stem_es, "z") ||
        ends_with(stem_es, "ss") || ends_with(stem_es, "o")) {
      return stem_es;
    }
    return stem_s;  // trades -> trade
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  if (ends_with(w, "ing") && w.size() >= 6) {
    return resolve_stem(w.substr(0, w.size() - 3));
  }
  if (ends_with(w, "ed") && w.size() >= 5) {
    return resolve_stem(w.substr(0, w.size() - 2));
  }
  return w;
}

std::string to_lower(std::string_view word) {
  std::string out(word);
  for (char& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

}  // namespace

std::string lemmatize(std::string_view word, Pos hint) {
  std::string w = to_lower(word);
  if (w.empty()) return w;

  // Iterate to a fixpoint so repeated application cannot change the result.
  // Every rewrite strictly shortens the word, so the loop terminates.
  while (true) {
    if (hint != Pos::kNoun) {
      const auto& irregular = detail::irregular_verb_map();
      const auto it = irregular.find(w);
      if (it != irregular.end()) return it->second;
    }
    if (detail::known_lemma(w)) return w;
    std::string next = strip_suffix_once(w);
    if (next == w) return w;
    w = std::move(next);
  }
}

}  // namespace zipfsignal::lingproc
