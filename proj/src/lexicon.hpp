#pragma once

#include <string>
#include <unordered_set>

namespace tablescout::features::lexicon {

// Closed-class function words (determiners, pronouns, prepositions,
// conjunctions, auxiliaries, particles). Lowercased.
const std::unordered_set<std::string>& function_words();

const std::unordered_set<std::string>& nouns();
const std::unordered_set<std::string>& verbs();
const std::unordered_set<std::string>& adjectives();
const std::unordered_set<std::string>& adverbs();

const std::unordered_set<std::string>& person_names();
const std::unordered_set<std::string>& location_names();
const std::unordered_set<std::string>& organization_names();

const std::unordered_set<std::string>& month_names();  // lowercased

}  // namespace tablescout::features::lexicon
