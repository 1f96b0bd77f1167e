#include <cctype>
#include <fstream>
#include <string>

#include "lexicon_data.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/lingproc.hpp"

namespace zipfsignal::lingproc {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& ch : out) {
    ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  return out;
}

bool has_alnum(std::string_view s) {
  for (char ch : s) {
    if (std::isalnum(static_cast<unsigned char>(ch))) return true;
  }
  // Multibyte sequences count as letters.
  for (char ch : s) {
    if (static_cast<unsigned char>(ch) >= 0x80) return true;
  }
  return false;
}

bool starts_uppercase(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Nounish left context: determiners, numerals, adjectives, numbers.
bool noun_context(const TaggedToken* prev, const std::string& prev_lower) {
  if (!prev) return false;
  if (prev->pos == Pos::kNumber) return true;
  return detail::determiner_words().count(prev_lower) ||
         detail::numeral_words().count(prev_lower) ||
         detail::adjective_words().count(prev_lower);
}

TaggedToken tag_one(const std::string& surface, const TaggedToken* prev,
                    const std::string& prev_lower, const PronounList& pronouns) {
  TaggedToken tok;
  tok.surface = surface;
  const std::string lt = to_lower(surface);

  if (is_number_token(surface)) {
    tok.pos = Pos::kNumber;
    tok.lemma = lt;
    return tok;
  }
  if (pronouns.contains(lt)) {
    tok.pos = Pos::kPronoun;
    tok.lemma = lt;
    return tok;
  }
  if (lt == "'s") {
    tok.pos = Pos::kVerb;
    tok.lemma = "'s";
    return tok;
  }
  if (const auto aux = detail::aux_verb_map().find(lt);
      aux != detail::aux_verb_map().end()) {
    tok.pos = Pos::kVerb;
    tok.lemma = aux->second;
    return tok;
  }
  if (!has_alnum(surface)) {
    tok.pos = Pos::kOther;
    tok.lemma = lt;
    return tok;
  }
  if (detail::determiner_words().count(lt) || detail::numeral_words().count(lt) ||
      detail::function_words().count(lt) || detail::adjective_words().count(lt)) {
    tok.pos = Pos::kOther;
    tok.lemma = lt;
    return tok;
  }

  if (noun_context(prev, prev_lower)) {
    tok.pos = Pos::kNoun;
    tok.lemma = lemmatize(lt, Pos::kNoun);
    return tok;
  }
  if (const auto irr = detail::irregular_verb_map().find(lt);
      irr != detail::irregular_verb_map().end()) {
    tok.pos = Pos::kVerb;
    tok.lemma = irr->second;
    return tok;
  }
  if ((ends_with(lt, "ing") && lt.size() >= 6) ||
      (ends_with(lt, "ed") && lt.size() >= 5)) {
    tok.pos = Pos::kVerb;
    tok.lemma = lemmatize(lt, Pos::kVerb);
    return tok;
  }
  if (detail::verb_lexicon().count(lt)) {
    tok.pos = Pos::kVerb;
    tok.lemma = lt;
    return tok;
  }
  if (prev && (prev->pos == Pos::kNoun || prev->pos == Pos::kPronoun)) {
    const std::string vb = lemmatize(lt, Pos::kVerb);
    if (detail::verb_lexicon().count(vb)) {
      tok.pos = Pos::kVerb;
      tok.lemma = vb;
      return tok;
    }
  }
  tok.pos = Pos::kNoun;
  tok.lemma = lemmatize(lt, Pos::kNoun);
  return tok;
}

Pos coarse_pos(std::string_view fine_tag, const std::string& surface,
               const PronounList& pronouns) {
  if (is_number_token(surface)) return Pos::kNumber;
  if (pronouns.contains(to_lower(surface))) return Pos::kPronoun;
  const std::string t = to_upper(fine_tag);
  if (t.rfind("PP", 0) == 0 || t == "PRP" || t == "PRP$" || t == "WP" ||
      t == "WP$" || t == "PN" || t == "PNP") {
    return Pos::kPronoun;
  }
  if (!t.empty() && t[0] == 'V') return Pos::kVerb;
  if (t == "MD") return Pos::kVerb;
  if (!t.empty() && t[0] == 'N') return Pos::kNoun;
  return Pos::kOther;
}

}  // namespace

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word list: " + path.string());
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
    std::size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start]))) {
      ++start;
    }
    line.erase(0, start);
    if (!line.empty()) out.insert(to_lower(line));
  }
  return out;
}

ExclusionList ExclusionList::defaults() {
  return ExclusionList{{"are", "be", "been", "can", "could", "had", "has",
                        "have", "having", "is", "'s", "may", "might", "should",
                        "to", "was", "were", "will", "would"}};
}

ExclusionList ExclusionList::load(const std::filesystem::path& path) {
  return ExclusionList{load_word_list(path)};
}

bool ExclusionList::contains(std::string_view word) const {
  return entries_.count(to_lower(word)) > 0;
}

PronounList PronounList::defaults() {
  return PronounList{{"it", "its", "they", "them", "he", "she", "we", "us", "i",
                      "you", "this", "that", "these", "those", "one"}};
}

PronounList PronounList::load(const std::filesystem::path& path) {
  return PronounList{load_word_list(path)};
}

bool PronounList::contains(std::string_view word) const {
  return entries_.count(to_lower(word)) > 0;
}

TaggedDocument tag_and_lemmatize(const std::vector<Token>& tokens,
                                 const PronounList& pronouns) {
  TaggedDocument doc;
  Sentence current;
  std::string prev_lower;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const TaggedToken* prev = current.empty() ? nullptr : &current.back();
    TaggedToken tagged = tag_one(tokens[i].text, prev, prev_lower, pronouns);
    prev_lower = to_lower(tagged.surface);
    current.push_back(std::move(tagged));

    const std::string& text = tokens[i].text;
    const bool terminal = text == "." || text == "!" || text == "?";
    if (terminal && i + 1 < tokens.size() && tokens[i + 1].space_before &&
        starts_uppercase(tokens[i + 1].text)) {
      doc.sentences.push_back(std::move(current));
      current.clear();
      prev_lower.clear();
    }
  }
  if (!current.empty()) doc.sentences.push_back(std::move(current));
  return doc;
}

TaggedDocument parse_pretagged(std::string_view vertical_text,
                               const PronounList& pronouns) {
  TaggedDocument doc;
  Sentence current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= vertical_text.size()) {
    const auto nl = vertical_text.find('\n', pos);
    std::string_view line = vertical_text.substr(
        pos, nl == std::string_view::npos ? vertical_text.size() - pos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line.empty()) {
      if (!current.empty()) {
        doc.sentences.push_back(std::move(current));
        current.clear();
      }
    } else {
      const auto t1 = line.find('\t');
      const auto t2 = t1 == std::string_view::npos ? std::string_view::npos
                                                   : line.find('\t', t1 + 1);
      if (t1 == std::string_view::npos || t2 == std::string_view::npos ||
          line.find('\t', t2 + 1) != std::string_view::npos) {
        throw DataError("pre-tagged input line " + std::to_string(line_no) +
                        ": expected surface<TAB>lemma<TAB>tag");
      }
      TaggedToken tok;
      tok.surface = std::string(line.substr(0, t1));
      std::string lemma = to_lower(line.substr(t1 + 1, t2 - t1 - 1));
      tok.fine_tag = std::string(line.substr(t2 + 1));
      if (tok.surface.empty() || lemma.empty()) {
        throw DataError("pre-tagged input line " + std::to_string(line_no) +
                        ": empty surface or lemma");
      }
      // TreeTagger emits <unknown> / @card@ placeholders.
      if (lemma == "<unknown>" || lemma == "@card@") lemma = to_lower(tok.surface);
      tok.lemma = std::move(lemma);
      tok.pos = coarse_pos(tok.fine_tag, tok.surface, pronouns);
      current.push_back(std::move(tok));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!current.empty()) doc.sentences.push_back(std::move(current));
  return doc;
}

TaggedDocument document_from_article(const corpus::Article& article,
                                     const PronounList& pronouns) {
  if (article.format == corpus::Article::Format::kVert) {
    return parse_pretagged(article.body, pronouns);
  }
  return tag_and_lemmatize(tokenize(article.body), pronouns);
}

std::string plain_text_of(const corpus::Article& article) {
  if (article.format == corpus::Article::Format::kPlain) return article.body;
  std::string out;
  out.reserve(article.body.size() / 2);
  std::size_t pos = 0;
  while (pos <= article.body.size()) {
    const auto nl = article.body.find('\n', pos);
    std::string_view line = std::string_view(article.body)
                                .substr(pos, nl == std::string_view::npos
                                                 ? article.body.size() - pos
                                                 : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      const auto tab = line.find('\t');
      const std::string_view surface =
          tab == std::string_view::npos ? line : line.substr(0, tab);
      if (!surface.empty()) {
        if (!out.empty()) out.push_back(' ');
        out.append(surface);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

PhraseCounts extract_verb_lemmas(const TaggedDocument& doc,
                                 const ExclusionList& excl) {
  PhraseCounts counts;
  counts.kind = PhraseKind::kVerbLemma;
  for (const Sentence& sentence : doc.sentences) {
    for (const TaggedToken& tok : sentence) {
      if (tok.pos != Pos::kVerb) continue;
      if (excl.contains(tok.lemma) || excl.contains(tok.surface)) continue;
      counts.add(tok.lemma);
    }
  }
  return counts;
}

namespace {

struct NounPhrase {
  std::size_t start;  // index of the first NOUN of the run
  std::size_t head;   // index of the final NOUN of the run
};

std::vector<NounPhrase> noun_runs(const Sentence& sentence) {
  std::vector<NounPhrase> runs;
  std::size_t i = 0;
  while (i < sentence.size()) {
    if (sentence[i].pos != Pos::kNoun) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < sentence.size() && sentence[j + 1].pos == Pos::kNoun) ++j;
    runs.push_back(NounPhrase{i, j});
    i = j + 1;
  }
  return runs;
}

}  // namespace

PhraseCounts extract_noun_phrases(const TaggedDocument& doc) {
  PhraseCounts counts;
  counts.kind = PhraseKind::kNounPhrase;
  for (const Sentence& sentence : doc.sentences) {
    for (const NounPhrase& np : noun_runs(sentence)) {
      counts.add(sentence[np.head].lemma);
    }
  }
  return counts;
}

PhraseCounts extract_lops(const TaggedDocument& doc, const ExclusionList& excl) {
  PhraseCounts counts;
  counts.kind = PhraseKind::kLemmaObjectPair;
  for (const Sentence& sentence : doc.sentences) {
    const std::vector<NounPhrase> runs = noun_runs(sentence);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const TaggedToken& tok = sentence[i];
      if (tok.pos != Pos::kVerb) continue;
      if (excl.contains(tok.lemma) || excl.contains(tok.surface)) continue;
      // Nearest noun phrase starting after the verb.
      const NounPhrase* object = nullptr;
      for (const NounPhrase& np : runs) {
        if (np.start > i) {
          object = &np;
          break;
        }
      }
      if (!object) continue;
      counts.add(lop_key(tok.lemma, sentence[object->head].lemma));
    }
  }
  return counts;
}

}  // namespace zipfsignal::lingproc
