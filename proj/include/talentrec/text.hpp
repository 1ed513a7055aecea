#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace talentrec {

// Lowercase a copy (ASCII; ids/terms in this project are ASCII by contract,
// non-ASCII bytes pass through unchanged).
std::string to_lower(std::string_view s);

// Split into lowercase alphanumeric runs, keeping tokens of at least min_len
// characters. Stop words are NOT removed here; callers that need informative
// tokens filter with is_stop_word.
std::vector<std::string> tokenize(std::string_view text, std::size_t min_len = 3);

// Fixed 50-word English stop list.
const std::vector<std::string>& stop_word_list();
bool is_stop_word(std::string_view token);

}  // namespace talentrec
