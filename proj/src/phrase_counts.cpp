#include "zipfsignal/phrase_counts.hpp"

#include "zipfsignal/errors.hpp"

namespace zipfsignal::lingproc {

const char* phrase_kind_name(PhraseKind kind) {
  switch (kind) {
    case PhraseKind::kVerbLemma: return "verb";
    case PhraseKind::kNounPhrase: return "noun";
    case PhraseKind::kLemmaObjectPair: return "lop";
    case PhraseKind::kBaselineEDelimited: return "baseline_e";
    case PhraseKind::kBaselineThirdWord: return "baseline_third";
  }
  return "?";
}

PhraseKind parse_phrase_kind(std::string_view name) {
  if (name == "verb") return PhraseKind::kVerbLemma;
  if (name == "noun") return PhraseKind::kNounPhrase;
  if (name == "lop") return PhraseKind::kLemmaObjectPair;
  if (name == "baseline_e") return PhraseKind::kBaselineEDelimited;
  if (name == "baseline_third") return PhraseKind::kBaselineThirdWord;
  throw ConfigError("unknown phrase kind: '" + std::string(name) +
                    "' (expected verb|noun|lop|baseline_e|baseline_third)");
}

std::string lop_key(std::string_view verb_lemma, std::string_view object_lemma) {
  std::string key;
  key.reserve(verb_lemma.size() + 1 + object_lemma.size());
  key.append(verb_lemma);
  key.push_back(kLopSeparator);
  key.append(object_lemma);
  return key;
}

std::pair<std::string, std::string> split_lop_key(std::string_view key) {
  const auto pos = key.find(kLopSeparator);
  if (pos == std::string_view::npos) {
    throw DataError("not a lemma-object-pair key: '" + std::string(key) + "'");
  }
  return {std::string(key.substr(0, pos)), std::string(key.substr(pos + 1))};
}

void PhraseCounts::add(std::string_view key, std::uint64_t n) {
  if (n == 0) return;
  counts[std::string(key)] += n;
}

void PhraseCounts::merge(const PhraseCounts& other) {
  if (other.kind != kind) throw DataError("cannot merge counts of different kinds");
  for (const auto& [key, n] : other.counts) counts[key] += n;
}

std::uint64_t PhraseCounts::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, n] : counts) sum += n;
  return sum;
}

}  // namespace zipfsignal::lingproc
