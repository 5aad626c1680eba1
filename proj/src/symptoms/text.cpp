#include "epifuse/symptoms/text.hpp"

#include "epifuse/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace epifuse::symptoms {

namespace {

bool is_token_char(unsigned char c)
{
    return std::isalnum(c) != 0 || c == '#' || c == '_' || c >= 0x80;
}

} // namespace

std::vector<std::string> tokenize(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string current;
    for (const char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (is_token_char(c)) {
            current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

Lexicon Lexicon::load_tsv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open lexicon: " + path);

    Lexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        const std::string term = line.substr(0, tab);
        const std::string tag = tab == std::string::npos ? "symptom" : line.substr(tab + 1);
        const auto tokens = tokenize(term);
        if (tokens.size() != 1) {
            throw DataError(path + ": lexicon term '" + term + "' must be a single token");
        }
        if (tag == "excluded") lex.excluded.insert(tokens.front());
        else if (tag == "symptom" || tag.empty()) lex.symptoms.insert(tokens.front());
        else throw DataError(path + ": unknown lexicon tag '" + tag + "'");
    }
    return lex;
}

bool keyword_filter(std::string_view text, const Lexicon& lexicon)
{
    for (const std::string& token : tokenize(text)) {
        if (lexicon.excluded.count(token) > 0) continue;
        if (lexicon.symptoms.count(token) > 0) return true;
    }
    return false;
}

std::vector<Tweet> drop_retweets(std::vector<Tweet> tweets)
{
    const auto is_rt = [](const Tweet& t) {
        return t.is_retweet || t.text.rfind("#RT", 0) == 0;
    };
    tweets.erase(std::remove_if(tweets.begin(), tweets.end(), is_rt), tweets.end());
    return tweets;
}

} // namespace epifuse::symptoms
