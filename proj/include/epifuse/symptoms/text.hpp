#pragma once

#include "epifuse/symptoms/tweet.hpp"

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace epifuse::symptoms {

/// Lowercases ASCII and splits on anything that is not a letter, digit, '#'
/// or '_'; bytes >= 0x80 (UTF-8 continuation and accented characters) count
/// as letters so non-English tokens survive intact.
std::vector<std::string> tokenize(std::string_view text);

/// Symptom keyword list for one language. Terms naming the disease itself
/// live in `excluded` and never count as symptom mentions.
struct Lexicon {
    std::unordered_set<std::string> symptoms;
    std::unordered_set<std::string> excluded;

    /// TSV rows: term<TAB>symptom|excluded (missing tag means symptom).
    static Lexicon load_tsv(const std::string& path);
};

/// True iff the text contains at least one symptom keyword as a whole token.
bool keyword_filter(std::string_view text, const Lexicon& lexicon);

/// Removes platform-flagged retweets and texts beginning with "#RT".
std::vector<Tweet> drop_retweets(std::vector<Tweet> tweets);

} // namespace epifuse::symptoms
