#include "talentrec/text.hpp"

#include <algorithm>
#include <cctype>

namespace talentrec {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> tokenize(std::string_view text, std::size_t min_len) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.size() >= min_len) tokens.push_back(current);
        current.clear();
    };
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

const std::vector<std::string>& stop_word_list() {
    static const std::vector<std::string> kStopWords = {
        "the",  "and",  "for",  "with", "that",  "this",  "from",  "are",
        "was",  "were", "has",  "have", "had",   "will",  "would", "can",
        "could", "should", "may", "might", "must", "shall", "into", "onto",
        "over", "under", "about", "between", "through", "during", "before",
        "after", "above", "below", "their", "there", "where", "which", "while",
        "when", "what", "who", "whom", "whose", "been", "being", "both",
        "each", "other", "such",
    };
    return kStopWords;
}

bool is_stop_word(std::string_view token) {
    const auto& words = stop_word_list();
    return std::find(words.begin(), words.end(), token) != words.end();
}

}  // namespace talentrec
