#pragma once

#include "nilp/filler.hpp"

#include <vector>

namespace nilp {

/// Fills every word with one Filler per thread; result order follows `words`.
std::vector<FillResult> fill_corpus(int c, int m, const std::vector<Word> &words);
/// Single-threaded reference for fill_corpus.
std::vector<FillResult> fill_corpus_serial(int c, int m, const std::vector<Word> &words);

/// validate_null on each sequence; entry i is empty on success, else the reason.
std::vector<std::string> validate_all(const std::vector<PSequence> &sequences);
std::vector<std::string> validate_all_serial(const std::vector<PSequence> &sequences);

} // namespace nilp
