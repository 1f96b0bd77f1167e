#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

// Internal word tables backing the built-in heuristic tagger/lemmatizer.
namespace zipfsignal::lingproc::detail {

// Irregular verb form -> base form (fell -> fall, rose -> rise, ...).
const std::unordered_map<std::string, std::string>& irregular_verb_map();

// Auxiliary/modal form -> lemma (is -> be, had -> have, could -> could).
const std::unordered_map<std::string, std::string>& aux_verb_map();

// Base-form lexicons used to resolve suffix-stripping candidates and to
// bias tagging of ambiguous tokens.
const std::unordered_set<std::string>& verb_lexicon();
const std::unordered_set<std::string>& noun_lexicon();

// Closed classes (all tagged OTHER by the built-in tagger).
const std::unordered_set<std::string>& determiner_words();
const std::unordered_set<std::string>& numeral_words();
const std::unordered_set<std::string>& function_words();
const std::unordered_set<std::string>& adjective_words();

// True when the word is already a known lemma and must not be stripped.
bool known_lemma(const std::string& word);

}  // namespace zipfsignal::lingproc::detail
