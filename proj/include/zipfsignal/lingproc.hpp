#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zipfsignal/corpus.hpp"
#include "zipfsignal/phrase_counts.hpp"

namespace zipfsignal::lingproc {

// Coarse part-of-speech classes. NUMBER is assigned exactly to the tokens
// the tokenizer's number rule matches, in both tagging modes.
enum class Pos { kVerb, kNoun, kPronoun, kNumber, kOther };

struct TaggedToken {
  std::string surface;
  std::string lemma;  // non-empty, lowercase
  Pos pos = Pos::kOther;
  std::string fine_tag;  // pass-through from external taggers; may be empty
};

using Sentence = std::vector<TaggedToken>;

struct TaggedDocument {
  std::vector<Sentence> sentences;
};

struct Token {
  std::string text;
  bool space_before = false;
};

// Splits on whitespace and punctuation. Contracted "'s" becomes its own
// token (normalized to an ASCII apostrophe), digit/percent/decimal strings
// stay whole, dotted abbreviations ("U.S.", "Mr.") keep their periods.
std::vector<Token> tokenize(std::string_view body);

// The tokenizer's number rule: digits with optional ./, groups and an
// optional trailing percent sign.
bool is_number_token(std::string_view token);

// A plain-text word list, one entry per line ('#' starts a comment).
std::set<std::string> load_word_list(const std::filesystem::path& path);

// The default list holds the 19 common verb forms excluded from all verb
// counts; tokens are skipped when either their surface or lemma matches.
class ExclusionList {
 public:
  static ExclusionList defaults();
  static ExclusionList load(const std::filesystem::path& path);
  explicit ExclusionList(std::set<std::string> entries)
      : entries_(std::move(entries)) {}

  bool contains(std::string_view word) const;
  const std::set<std::string>& entries() const { return entries_; }

 private:
  std::set<std::string> entries_;
};

// Closed pronoun list used for anaphora exclusion.
class PronounList {
 public:
  static PronounList defaults();
  static PronounList load(const std::filesystem::path& path);
  explicit PronounList(std::set<std::string> entries)
      : entries_(std::move(entries)) {}

  bool contains(std::string_view word) const;

 private:
  std::set<std::string> entries_;
};

// Heuristic lemmatizer: lowercases, consults an irregular-verb table, then
// strips -s/-es/-ies/-ed/-ing suffixes with consonant-doubling and e-restore
// candidates, preferring candidates found in the built-in lemma lexicon.
// Iterates to a fixpoint, so lemmatize(lemmatize(x)) == lemmatize(x).
std::string lemmatize(std::string_view word, Pos hint = Pos::kOther);

// Built-in heuristic tagger. Sentences are split after . ! ? tokens that
// are followed by a space and an uppercase letter.
TaggedDocument tag_and_lemmatize(const std::vector<Token>& tokens,
                                 const PronounList& pronouns = PronounList::defaults());

// Pass-through mode: parses vertical text (surface TAB lemma TAB fine_tag,
// blank line = sentence break). Throws DataError with the line number on
// malformed lines.
TaggedDocument parse_pretagged(std::string_view vertical_text,
                               const PronounList& pronouns = PronounList::defaults());

// Dispatches on the article's format: vertical bodies are parsed as
// pre-tagged input, plain bodies go through tokenize + tag_and_lemmatize.
TaggedDocument document_from_article(const corpus::Article& article,
                                     const PronounList& pronouns = PronounList::defaults());

// Plain text view of an article: the body itself, or for vertical articles
// the surfaces joined with single spaces (for the baseline segmentations).
std::string plain_text_of(const corpus::Article& article);

// Counts every VERB token's lemma, skipping tokens whose lemma or surface
// matches the exclusion list.
PhraseCounts extract_verb_lemmas(const TaggedDocument& doc, const ExclusionList& excl);

// Emits the head (final) lemma of each maximal contiguous NOUN run.
// Pronouns and numbers never head a phrase: they carry their own POS class.
PhraseCounts extract_noun_phrases(const TaggedDocument& doc);

// Pairs each non-excluded VERB token with the head lemma of the nearest
// following noun phrase in the same sentence; verbs with no following noun
// phrase yield nothing.
PhraseCounts extract_lops(const TaggedDocument& doc, const ExclusionList& excl);

}  // namespace zipfsignal::lingproc
