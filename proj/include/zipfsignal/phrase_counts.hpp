#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace zipfsignal::lingproc {

// The unit being counted. The first three come from linguistic extraction;
// the two baselines are arbitrary re-segmentations used as method controls.
enum class PhraseKind {
  kVerbLemma,
  kNounPhrase,
  kLemmaObjectPair,
  kBaselineEDelimited,
  kBaselineThirdWord,
};

const char* phrase_kind_name(PhraseKind kind);

// Parses "verb", "noun", "lop", "baseline_e" or "baseline_third".
PhraseKind parse_phrase_kind(std::string_view name);

// Separator between the verb lemma and the object head lemma in a
// lemma-object-pair key. U+001F cannot appear in any tokenized lemma.
inline constexpr char kLopSeparator = '\x1f';

std::string lop_key(std::string_view verb_lemma, std::string_view object_lemma);
std::pair<std::string, std::string> split_lop_key(std::string_view key);

// Multiset of phrase keys. Keys are canonical (lowercase lemmas;
// lemma-object pairs joined by kLopSeparator); counts are always >= 1.
struct PhraseCounts {
  PhraseKind kind = PhraseKind::kVerbLemma;
  std::map<std::string, std::uint64_t> counts;

  void add(std::string_view key, std::uint64_t n = 1);

  // Commutative merge; the other side must hold the same kind.
  void merge(const PhraseCounts& other);

  std::uint64_t total() const;
  bool empty() const { return counts.empty(); }
};

}  // namespace zipfsignal::lingproc
